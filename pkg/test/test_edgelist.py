"""
Edge-list codec: canonical output and line-numbered parse errors.
"""
import pytest

from src.application.exceptions import EdgeListFormatError, InvalidHypergraphError
from src.infrastructure.core import edgelist
from src.infrastructure.core.constructions import make_g26
from src.infrastructure.core.hypergraph import Hypergraph


def test_dumps_is_sorted():
    graph = Hypergraph(3, 5, [(3, 4, 0), (2, 1, 0)])
    assert edgelist.dumps(graph) == "3 5\n0 1 2\n0 3 4\n"


def test_loads_skips_comments_and_blank_lines():
    text = "# G26 fragment\n\n3 6\n0 1 3\n  # inline\n2 4 5\n"
    graph = edgelist.loads(text)
    assert (graph.r, graph.n) == (3, 6)
    assert graph.edges == ((0, 1, 3), (2, 4, 5))


def test_loads_reads_back_dumps():
    g26 = make_g26()
    assert edgelist.loads(edgelist.dumps(g26)) == g26


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 0),
        ("# only a comment\n", 0),
        ("3\n", 1),
        ("3 5\n0 1\n", 2),
        ("3 5\n0 1 2\n0 1 1\n", 3),
        ("3 5\n0 1 7\n", 2),
        ("3 5\n0 1 2\n2 1 0\n", 3),
        ("3 5\n0 x 2\n", 2),
        ("3 5\n0 2 1\n", 2),
        ("3 5\n0 3 4\n0 1 2\n", 3),
    ],
)
def test_loads_reports_line(text, line):
    with pytest.raises(EdgeListFormatError) as exc:
        edgelist.loads(text)
    assert exc.value.line == line, f"expected error on line {line}, got {exc.value}"
    assert str(exc.value).startswith(f"line {line}:")


def test_read_and_write_files(tmp_path):
    target = tmp_path / "g26.txt"
    edgelist.write(make_g26(), target)
    assert edgelist.read(target) == make_g26()


def test_read_missing_file(tmp_path):
    with pytest.raises(InvalidHypergraphError):
        edgelist.read(tmp_path / "absent.txt")


def test_lenient_loads_accepts_any_order():
    text = "3 5\n0 3 4\n2 1 0\n"
    graph = edgelist.loads(text, strict=False)
    assert graph.edges == ((0, 1, 2), (0, 3, 4))
    with pytest.raises(EdgeListFormatError, match="increasing order"):
        edgelist.loads(text.replace("0 3 4\n", ""))
