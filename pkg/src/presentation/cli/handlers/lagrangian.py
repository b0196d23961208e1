import click

from src.infrastructure.core.lagrangian import LagrangianSolver

from .common import INPUT, CliState, json_option, pass_state


@click.command(name="lagrangian")
@click.argument("source", type=INPUT)
@click.option("--certify/--no-certify", default=False, help="Also compute the lattice upper bound.")
@click.option("--seed", type=int, default=None, help="Seed of the random restarts; defaults to the global seed.")
@click.option("--resolution", type=click.IntRange(min=1), default=None, help="Lattice resolution D.")
@json_option
@pass_state
def lagrangian(
    state: CliState,
    source: str,
    certify: bool,
    seed: int | None,
    resolution: int | None,
    as_json: bool,
) -> None:
    """Maximize the weight polynomial over the simplex."""
    graph = state.read(source)
    solver = state.get(LagrangianSolver)
    with state.timed("lagrangian"):
        result = solver.solve(graph, certify=certify, seed=seed, resolution=resolution)
    state.report(
        "lagrangian",
        {"source": source, "certify": certify, "resolution": resolution},
        result.model_dump(),
        as_json=as_json,
        seed=seed,
    )
