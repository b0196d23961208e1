import click

from src.infrastructure.core.verification import SUITES, LemmaVerifier

from .common import CliState, json_option, pass_state


@click.command(name="verify-lemmas")
@click.option("--suite", type=click.Choice([*SUITES, "all"]), default="all", show_default=True)
@click.option("--samples", type=click.IntRange(min=1), default=None, help="Random instances per property claim.")
@json_option
@click.pass_context
@pass_state
def verify_lemmas(state: CliState, ctx: click.Context, suite: str, samples: int | None, as_json: bool) -> None:
    """Run a verification suite; exits 1 if any claim fails."""
    verifier = state.get(LemmaVerifier)
    if samples is not None:
        verifier.samples = samples
    with state.timed(suite):
        claims = verifier.run(suite)
    state.report(
        "verify-lemmas",
        {"suite": suite, "samples": verifier.samples},
        [claim.model_dump() for claim in claims],
        as_json=as_json,
    )
    for claim in claims:
        click.echo(f"{'PASS' if claim.passed else 'FAIL'}  {claim.name}", err=True)
    if not all(claim.passed for claim in claims):
        ctx.exit(1)
