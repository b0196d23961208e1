from pathlib import Path

import click

from src.application.exceptions import TuranError
from src.configs import Config
from src.infrastructure.log import bind_run_context, configure_logging
from src.presentation.cli.handlers import init_commands
from src.presentation.cli.handlers.common import CliState
from src.presentation.composition.di import create_container


class TuranGroup(click.Group):
    """Maps engine errors to exit code 2 with the message on stderr."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except TuranError as error:
            click.echo(f"error: {error}", err=True)
            ctx.exit(2)


def create_cli_app(cfg: Config) -> click.Group:
    @click.group(cls=TuranGroup, name="turan")
    @click.option("--log-level", default=None, help="Log level, e.g. INFO or DEBUG.")
    @click.option("--json-logs/--console-logs", default=None, help="Render logs as JSON.")
    @click.option("--seed", type=int, default=None, help="Seed for every randomized step.")
    @click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker threads.")
    @click.option(
        "--out",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="Write the report here instead of stdout.",
    )
    @click.pass_context
    def app(
        ctx: click.Context,
        log_level: str | None,
        json_logs: bool | None,
        seed: int | None,
        threads: int | None,
        out: Path | None,
    ) -> None:
        effective = cfg.model_copy(deep=True)
        if log_level is not None:
            effective.LOGGER.LEVEL = log_level.upper()
        if json_logs is not None:
            effective.LOGGER.RENDER_JSON_LOGS = json_logs
        if seed is not None:
            effective.RUNTIME.SEED = seed
            effective.LAGRANGIAN.SEED = seed
        if threads is not None:
            effective.RUNTIME.THREADS = threads

        configure_logging(effective.LOGGER)
        bind_run_context(command=ctx.invoked_subcommand, seed=effective.RUNTIME.SEED)

        container = create_container(effective)
        ctx.call_on_close(container.close)
        ctx.obj = CliState(cfg=effective, container=container, out=out)

    init_commands(app)
    return app


def main() -> None:
    create_cli_app(Config())()
