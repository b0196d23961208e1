"""
Command-line surface: exit codes, edge-list output and JSON reports.
"""
import orjson
import pytest
from click.testing import CliRunner

from src.configs import Config, LagrangianConfig
from src.infrastructure.core import edgelist
from src.infrastructure.core.constructions import make_g1, make_g26, make_k53_minus, make_kostochka
from src.infrastructure.core.hypergraph import complete
from src.presentation.cli import create_cli_app


@pytest.fixture
def app():
    return create_cli_app(Config(LAGRANGIAN=LagrangianConfig(RESTARTS=10)))


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def write_graph(tmp_path, name, graph):
    path = tmp_path / name
    edgelist.write(graph, path)
    return str(path)


def run_report(runner, app, tmp_path, *args):
    out = tmp_path / "report.json"
    result = runner.invoke(app, ["--out", str(out), *args])
    report = orjson.loads(out.read_text()) if out.exists() else None
    return result, report


def test_gen_writes_edge_list(runner, app, tmp_path):
    out = tmp_path / "g1.txt"
    result = runner.invoke(app, ["--out", str(out), "gen", "g1", "6"])
    assert result.exit_code == 0, result.output
    assert out.read_text() == edgelist.dumps(make_g1(6))

    result = runner.invoke(app, ["--out", str(out), "gen", "kostochka", "--n", "9", "--m", "1"])
    assert result.exit_code == 0, result.output
    assert edgelist.read(out) == make_kostochka(9, 1)


def test_gen_missing_parameter(runner, app):
    result = runner.invoke(app, ["gen", "g1"])
    assert result.exit_code == 2
    assert "needs parameter 'n'" in result.output


def test_check_m_free_graph(runner, app, tmp_path):
    source = write_graph(tmp_path, "g26.txt", make_g26())
    result, report = run_report(runner, app, tmp_path, "check", source)
    assert result.exit_code == 0, result.output
    assert report["command"] == "check"
    assert report["results"]["m_free"] is True
    assert report["results"]["embedding"]["kind"] == "g26-coloring"


def test_check_reports_violation(runner, app, tmp_path):
    source = write_graph(tmp_path, "k5.txt", complete(5, 3))
    result, report = run_report(runner, app, tmp_path, "check", source)
    assert result.exit_code == 1
    assert report["results"]["violation"]["kind"] == "M1"
    assert report["results"]["violation_valid"] is True


def test_malformed_input_exits_2(runner, app, tmp_path):
    source = tmp_path / "bad.txt"
    source.write_text("3 5\n0 1\n")
    result = runner.invoke(app, ["check", str(source)])
    assert result.exit_code == 2
    assert "line 2" in result.output


def test_lagrangian_command(runner, app, tmp_path):
    source = write_graph(tmp_path, "k4.txt", complete(4, 3))
    result, report = run_report(runner, app, tmp_path, "lagrangian", source, "--certify", "--resolution", "40")
    assert result.exit_code == 0, result.output
    bound = report["results"]["certified_upper_bound"]
    assert (bound["lattice_max"]["num"], bound["lattice_max"]["den"]) == (1, 16)
    assert report["results"]["lower_bound"] == pytest.approx(1 / 16)


def test_symmetrize_command_with_trace(runner, app, tmp_path):
    source = tmp_path / "two.txt"
    source.write_text("3 5\n0 1 2\n0 3 4\n")
    trace_path = tmp_path / "trace.json"
    result, report = run_report(runner, app, tmp_path, "symmetrize", str(source), "--trace", str(trace_path))
    assert result.exit_code == 0, result.output
    assert report["results"]["events"] == 2
    assert report["results"]["blowup_of_2_covered"] is True
    trace = orjson.loads(trace_path.read_text())
    assert [e["source"] for e in trace["events"]] == [1, 0]


def test_symmetrize_rejects_bad_alpha(runner, app, tmp_path):
    source = write_graph(tmp_path, "g26.txt", make_g26())
    result = runner.invoke(app, ["symmetrize", source, "--algorithm", "2", "--alpha", "x"])
    assert result.exit_code == 2


def test_search_command(runner, app, tmp_path):
    result, report = run_report(runner, app, tmp_path, "search", "--n", "4")
    assert result.exit_code == 0, result.output
    assert report["results"]["max_edges"] == 4
    assert report["results"]["optimal"] is True
    assert edgelist.loads(report["results"]["witness_edgelist"]) == complete(4, 3)


def test_region_commands(runner, app, tmp_path):
    k4_minus = write_graph(tmp_path, "k4m.txt", complete(4, 3).without_edges([(1, 2, 3)]))
    result, report = run_report(runner, app, tmp_path, "k43count", k4_minus)
    assert result.exit_code == 0, result.output
    assert report["results"]["count"] == 1

    first = write_graph(tmp_path, "g91.txt", make_kostochka(9, 1))
    second = write_graph(tmp_path, "g90.txt", make_kostochka(9, 0))
    result, report = run_report(runner, app, tmp_path, "edlb", first, second)
    assert result.exit_code == 0, result.output
    assert (report["results"]["bound"]["num"], report["results"]["bound"]["den"]) == (1, 2)
    assert report["results"]["at_least"] == 1

    result = runner.invoke(app, ["region"])
    assert result.exit_code == 2


def test_seed_is_reported(runner, app, tmp_path):
    result, report = run_report(runner, app, tmp_path, "--seed", "7", "search", "--n", "3")
    assert result.exit_code == 0, result.output
    assert report["seed"] == 7


def test_verify_region_suite(runner, app, tmp_path):
    result, report = run_report(runner, app, tmp_path, "verify-lemmas", "--suite", "region")
    assert result.exit_code == 0, result.output
    assert report["results"] and all(claim["passed"] for claim in report["results"])
    assert "PASS" in result.output


def test_gen_named_k53minus_with_command_out(runner, app, tmp_path):
    out = tmp_path / "k53minus.txt"
    result = runner.invoke(app, ["gen", "k53minus", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert edgelist.read(out) == make_k53_minus()


def test_check_mode_and_json_flags(runner, app, tmp_path):
    source = write_graph(tmp_path, "g26.txt", make_g26())
    result = runner.invoke(app, ["check", source, "--mode", "exact", "--json"])
    assert result.exit_code == 0, result.output
    report = orjson.loads(result.stdout)
    assert report["inputs"]["m3_mode"] == "exact"
    assert report["results"]["m_free"] is True

    result = runner.invoke(app, ["check", source, "--m3-mode", "fast", "--text"])
    assert result.exit_code == 0, result.output
    assert "m_free: true" in result.stdout.splitlines()


def test_lagrangian_command_seed(runner, app, tmp_path):
    source = write_graph(tmp_path, "k4.txt", complete(4, 3))
    result = runner.invoke(app, ["lagrangian", source, "--seed", "3", "--json"])
    assert result.exit_code == 0, result.output
    report = orjson.loads(result.stdout)
    assert report["seed"] == 3
    assert report["results"]["lower_bound"] == pytest.approx(1 / 16)


def test_search_and_region_json(runner, app, tmp_path):
    result = runner.invoke(app, ["search", "--n", "3", "--family", "m", "--json"])
    assert result.exit_code == 0, result.output
    assert orjson.loads(result.stdout)["results"]["max_edges"] == 1

    source = write_graph(tmp_path, "g1.txt", make_g1(30))
    result = runner.invoke(app, ["region", source, "--json"])
    assert result.exit_code == 0, result.output
    point = orjson.loads(result.stdout)["results"]["point"]
    assert point["shadow_density"]["den"] > 0


def test_rationals_in_verification_reports(runner, app, tmp_path):
    result, report = run_report(runner, app, tmp_path, "verify-lemmas", "--suite", "region")
    assert result.exit_code == 0, result.output
    measured = {claim["name"]: claim["measured"] for claim in report["results"]}
    distances = measured["edit distance lower bounds between Kostochka graphs"]
    assert (distances["n9"]["num"], distances["n9"]["den"]) == (1, 2)
    assert (distances["n12"]["num"], distances["n12"]["den"]) == (4, 3)
    targets = measured["G1 and G2 approach (8/9, 4/9) and (5/6, 4/9)"]["targets"]
    assert [(q["num"], q["den"]) for q in targets["g1"]] == [(8, 9), (4, 9)]
