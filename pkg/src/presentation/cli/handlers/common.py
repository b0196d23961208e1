import time
from collections.abc import Iterator, Mapping
from contextlib import contextmanager
from pathlib import Path
from typing import Any, TypeVar

import click
from dishka import Container

from src.application.dtos import ReportDTO
from src.configs import Config
from src.infrastructure.core import edgelist
from src.infrastructure.core.hypergraph import Hypergraph
from src.infrastructure.log import serialize_to_json

T = TypeVar("T")

INPUT = click.Path(dir_okay=False, allow_dash=True)
OUTPUT = click.Path(dir_okay=False, allow_dash=True, path_type=Path)

json_option = click.option(
    "--json/--text",
    "as_json",
    default=True,
    show_default=True,
    help="Emit the JSON report or a one-line-per-result text summary.",
)


def _text_lines(results: Any) -> list[str]:
    if isinstance(results, dict):
        return [f"{key}: {serialize_to_json(value)}" for key, value in results.items()]
    if isinstance(results, list):
        return [serialize_to_json(item) for item in results]
    return [serialize_to_json(results)]


class CliState:
    def __init__(self, cfg: Config, container: Container, out: Path | None):
        self.cfg = cfg
        self.container = container
        self.out = out
        self.timings: dict[str, float] = {}

    def get(self, kind: type[T]) -> T:
        return self.container.get(kind)

    @contextmanager
    def timed(self, label: str) -> Iterator[None]:
        started = time.perf_counter()
        try:
            yield
        finally:
            self.timings[label] = time.perf_counter() - started

    def read(self, source: str) -> Hypergraph:
        with self.timed("read"):
            return edgelist.read(source)

    def emit_text(self, text: str) -> None:
        if self.out is None or str(self.out) == edgelist.STDIO:
            click.echo(text, nl=not text.endswith("\n"))
        else:
            self.out.write_text(text, encoding="utf-8")

    def report(
        self,
        command: str,
        inputs: Mapping[str, Any],
        results: Any,
        as_json: bool = True,
        seed: int | None = None,
    ) -> ReportDTO:
        report = ReportDTO(
            command=command,
            inputs={k: str(v) if isinstance(v, Path) else v for k, v in inputs.items()},
            results=results,
            timings=self.timings,
            tool_version=self.cfg.RUNTIME.TOOL_VERSION,
            seed=self.cfg.RUNTIME.SEED if seed is None else seed,
        )
        dumped = report.model_dump()
        if as_json:
            self.emit_text(serialize_to_json(dumped) + "\n")
        else:
            self.emit_text("\n".join(_text_lines(dumped["results"])) + "\n")
        return report


pass_state = click.make_pass_decorator(CliState)
