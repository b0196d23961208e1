import click

from src.application.dtos import M3Mode
from src.infrastructure.core.coloring import is_embeddable
from src.infrastructure.core.family_m import is_m_free, validate_violation

from .common import INPUT, CliState, json_option, pass_state


@click.command(name="check")
@click.argument("source", type=INPUT)
@click.option(
    "--mode",
    "--m3-mode",
    "m3_mode",
    type=click.Choice([mode.value for mode in M3Mode]),
    default=M3Mode.EXACT.value,
    show_default=True,
    help="How M3 containment is decided.",
)
@json_option
@click.pass_context
@pass_state
def check(state: CliState, ctx: click.Context, source: str, m3_mode: str, as_json: bool) -> None:
    """Decide M-freeness; exits 1 when a violation is found."""
    graph = state.read(source)
    with state.timed("check"):
        violation = is_m_free(graph, M3Mode(m3_mode))
        witness = is_embeddable(graph)
    state.report(
        "check",
        {"source": source, "m3_mode": m3_mode, "n": graph.n, "edges": len(graph)},
        {
            "m_free": violation is None,
            "violation": violation.model_dump() if violation else None,
            "violation_valid": validate_violation(graph, violation) if violation else None,
            "embedding": witness.model_dump() if witness else None,
        },
        as_json=as_json,
    )
    click.echo(f"M-free: {str(violation is None).lower()}", err=True)
    if violation is not None:
        ctx.exit(1)
