from collections.abc import Callable
from pathlib import Path

import click

from src.application.exceptions import ParameterError
from src.infrastructure.core import constructions, edgelist
from src.infrastructure.core.hypergraph import Hypergraph

from .common import OUTPUT, CliState, pass_state

# kind -> (parameter names, builder)
_KINDS: dict[str, tuple[tuple[str, ...], Callable[..., Hypergraph]]] = {
    "g1": (("n",), constructions.make_g1),
    "g2": (("n",), constructions.make_g2),
    "g26": ((), constructions.make_g26),
    "turan": (("r", "n", "parts"), constructions.make_turan),
    "kostochka": (("n", "m"), constructions.make_kostochka),
    "complete": (("n", "r"), constructions.make_complete),
    "k53minus": ((), constructions.make_k53_minus),
    "f32": ((), constructions.make_f32),
    "star": (("n",), constructions.make_full_star),
}


def _arguments(kind: str, names: tuple[str, ...], params: tuple[int, ...], options: dict[str, int | None]) -> list[int]:
    if len(params) > len(names):
        raise ParameterError(f"{kind} takes {len(names)} parameters, got {len(params)}")
    values = list(params)
    for name in names[len(params):]:
        value = options.get(name)
        if value is None:
            raise ParameterError(f"{kind} needs parameter {name!r}")
        values.append(value)
    return values


@click.command(name="gen")
@click.argument("kind", type=click.Choice([*_KINDS, "perturbed-g1", "perturbed-g2"]))
@click.argument("params", nargs=-1, type=int)
@click.option("--n", "n", type=int, default=None)
@click.option("--m", "m", type=int, default=None)
@click.option("--r", "r", type=int, default=None)
@click.option("--parts", type=int, default=None)
@click.option("--eps", type=float, default=0.01, show_default=True, help="Perturbation size for perturbed-*.")
@click.option("--out", "out", type=OUTPUT, default=None, help="Edge-list target; - for stdout.")
@pass_state
def generate(
    state: CliState,
    kind: str,
    params: tuple[int, ...],
    n: int | None,
    m: int | None,
    r: int | None,
    parts: int | None,
    eps: float,
    out: Path | None,
) -> None:
    """Write a named construction as an edge list."""
    options = {"n": n, "m": m, "r": r, "parts": parts}
    if kind.startswith("perturbed-"):
        (size,) = _arguments(kind, ("n",), params, options)
        graph = constructions.perturbed_near_extremal(kind.removeprefix("perturbed-"), size, eps, state.cfg.RUNTIME.SEED)
    else:
        names, builder = _KINDS[kind]
        graph = builder(*_arguments(kind, names, params, options))
    edgelist.write(graph, out or state.out or edgelist.STDIO)
