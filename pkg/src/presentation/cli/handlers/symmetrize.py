from fractions import Fraction
from pathlib import Path

import click

from src.application.exceptions import ParameterError
from src.infrastructure.core.symmetrize import (
    algorithm1,
    algorithm2,
    check_symmetrization_contracts,
    final_graph,
    stability_diagnostic,
)
from src.infrastructure.log import serialize_to_json

from .common import INPUT, CliState, json_option, pass_state


def _parse_alpha(value: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ParameterError(f"alpha must be a rational like 4/9, got {value!r}") from None


@click.command(name="symmetrize")
@click.argument("source", type=INPUT)
@click.option("--algorithm", type=click.Choice(["1", "2"]), default="1", show_default=True)
@click.option("--alpha", default="0", show_default=True, help="Threshold P/Q for cleaning.")
@click.option("--eps", type=float, default=None, help="Run the stability diagnostic at this eps.")
@click.option(
    "--trace",
    "trace_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the full event trace as JSON.",
)
@json_option
@pass_state
def symmetrize(
    state: CliState,
    source: str,
    algorithm: str,
    alpha: str,
    eps: float | None,
    trace_path: Path | None,
    as_json: bool,
) -> None:
    """Run symmetrization with or without cleaning."""
    graph = state.read(source)
    inputs = {"source": source, "algorithm": int(algorithm), "alpha": alpha, "eps": eps}

    if eps is not None:
        with state.timed("stability"):
            report = stability_diagnostic(graph, eps)
        state.report("symmetrize", inputs, report.model_dump(), as_json=as_json)
        return

    with state.timed("symmetrize"):
        trace = algorithm1(graph) if algorithm == "1" else algorithm2(graph, _parse_alpha(alpha))
    if trace_path is not None:
        trace_path.write_text(serialize_to_json(trace.model_dump()), encoding="utf-8")

    output = final_graph(trace)
    state.report(
        "symmetrize",
        inputs,
        {
            "steps": max((e.step for e in trace.events), default=0),
            "events": len(trace.events),
            "removed": sum(len(z) for z in trace.removed_snapshots),
            "final_vertices": trace.final_vertices,
            "final": {"r": output.r, "n": output.n, "edges": list(output.edges)},
            "min_degree_trajectory": trace.min_degree_trajectory,
            "blowup_of_2_covered": check_symmetrization_contracts(graph, trace) if algorithm == "1" else None,
        },
        as_json=as_json,
    )
