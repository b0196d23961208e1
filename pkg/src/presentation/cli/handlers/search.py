import click

from src.application.interfaces.family import IForbiddenFamily
from src.infrastructure.core import edgelist
from src.infrastructure.core.constructions import make_k53_minus
from src.infrastructure.core.families import ExplicitFamily
from src.infrastructure.core.search import FreeEdgeSearch

from .common import CliState, json_option, pass_state


def _family(name: str, search: FreeEdgeSearch) -> IForbiddenFamily:
    if name == "m":
        return search.family_m()
    return ExplicitFamily([make_k53_minus()], name=name)


@click.command(name="search")
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--family", type=click.Choice(["m", "k53minus"]), default="m", show_default=True)
@click.option("--budget", type=click.IntRange(min=1), default=None, help="Node budget.")
@click.option("--symmetry/--no-symmetry", default=None, help="Force the first candidate edge in.")
@json_option
@pass_state
def search(
    state: CliState,
    n: int,
    family: str,
    budget: int | None,
    symmetry: bool | None,
    as_json: bool,
) -> None:
    """Maximum edge count of a family-free 3-graph on n vertices."""
    engine = state.get(FreeEdgeSearch)
    with state.timed("search"):
        result = engine.max_free_edges(n, _family(family, engine), budget=budget, symmetry_pruning=symmetry)
    state.report(
        "search",
        {"n": n, "family": family, "budget": budget, "symmetry": symmetry},
        {**result.model_dump(), "witness_edgelist": edgelist.dumps(result.witness.to_hypergraph())},
        as_json=as_json,
    )
