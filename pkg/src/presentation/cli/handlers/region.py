import math

import click

from src.application.dtos import RationalDTO
from src.application.exceptions import ParameterError
from src.infrastructure.core.region import (
    convergence_table,
    count_induced_k43_minus,
    edit_distance_lower_bound,
    region_point,
    shadow_regime,
)

from .common import INPUT, CliState, json_option, pass_state


@click.command(name="region")
@click.argument("source", type=INPUT, required=False)
@click.option("--table", "table", type=int, multiple=True, help="Add G1/G2 convergence rows for this n.")
@json_option
@pass_state
def region(state: CliState, source: str | None, table: tuple[int, ...], as_json: bool) -> None:
    """Shadow and edge density of a hypergraph."""
    if source is None and not table:
        raise ParameterError("give an input file or at least one --table n")
    results: dict = {}
    if source is not None:
        graph = state.read(source)
        with state.timed("region"):
            results["point"] = region_point(graph).model_dump()
            if graph.r == 3:
                results["regime"] = shadow_regime(graph).model_dump()
    if table:
        with state.timed("table"):
            results["convergence"] = [row.model_dump() for row in convergence_table(table)]
    state.report("region", {"source": source, "table": list(table)}, results, as_json=as_json)


@click.command(name="k43count")
@click.argument("source", type=INPUT)
@json_option
@pass_state
def k43count(state: CliState, source: str, as_json: bool) -> None:
    """Number of 4-sets spanning exactly three edges."""
    graph = state.read(source)
    with state.timed("count"):
        count = count_induced_k43_minus(graph)
    state.report("k43count", {"source": source}, {"count": count}, as_json=as_json)


@click.command(name="edlb")
@click.argument("first", type=INPUT)
@click.argument("second", type=INPUT)
@json_option
@pass_state
def edlb(state: CliState, first: str, second: str, as_json: bool) -> None:
    """Lower bound on the edit distance from induced K4- counts."""
    if first == second == "-":
        raise ParameterError("only one input can come from stdin")
    one, two = state.read(first), state.read(second)
    with state.timed("edlb"):
        bound = edit_distance_lower_bound(one, two)
    state.report(
        "edlb",
        {"first": first, "second": second},
        {"bound": RationalDTO.of(bound), "at_least": math.ceil(bound)},
        as_json=as_json,
    )
