"""
Text edge-list codec.

    r n
    a b c
    ...

One edge per line with vertices in increasing order, lines sorted; lines
starting with ``#`` and blank lines are ignored on input. Non-canonical edge
lines are rejected unless ``strict=False``, which accepts any vertex and line
order.
"""

import sys
from pathlib import Path

import structlog

from src.application.exceptions import (
    EdgeListFormatError,
    InvalidHypergraphError,
    VertexOutOfRangeError,
)

from .hypergraph import Hypergraph, mask_of

logger = structlog.get_logger(__name__)

STDIO = "-"


def dumps(graph: Hypergraph) -> str:
    lines = [f"{graph.r} {graph.n}"]
    lines.extend(" ".join(map(str, edge)) for edge in graph.edges)
    return "\n".join(lines) + "\n"


def _ints(line_no: int, line: str) -> list[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError:
        raise EdgeListFormatError(line_no, f"expected integers, got {line.strip()!r}") from None


def loads(text: str, strict: bool = True) -> Hypergraph:
    header: tuple[int, int] | None = None
    masks: set[int] = set()
    previous: list[int] = []

    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        values = _ints(line_no, stripped)

        if header is None:
            if len(values) != 2:
                raise EdgeListFormatError(line_no, "header must be 'r n'")
            r, n = values
            if r < 1 or n < 0:
                raise EdgeListFormatError(line_no, f"invalid header r={r} n={n}")
            header = (r, n)
            continue

        r, n = header
        if len(values) != r:
            raise EdgeListFormatError(line_no, f"edge must list {r} vertices, got {len(values)}")
        if len(set(values)) != r:
            raise EdgeListFormatError(line_no, "edge repeats a vertex")
        for v in values:
            if not 0 <= v < n:
                raise EdgeListFormatError(line_no, str(VertexOutOfRangeError(v, n)))
        mask = mask_of(values)
        if mask in masks:
            raise EdgeListFormatError(line_no, f"duplicate edge {' '.join(map(str, sorted(values)))}")
        if strict and values != sorted(values):
            raise EdgeListFormatError(line_no, "vertices must be listed in increasing order")
        if strict and values < previous:
            raise EdgeListFormatError(line_no, "edges must be sorted lexicographically")
        previous = values
        masks.add(mask)

    if header is None:
        raise EdgeListFormatError(0, "missing 'r n' header")
    return Hypergraph.from_masks(header[0], header[1], masks)


def read(source: str | Path, strict: bool = True) -> Hypergraph:
    if str(source) == STDIO:
        text = sys.stdin.read()
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise InvalidHypergraphError(f"cannot read {source}: {exc.strerror}") from exc
    graph = loads(text, strict)
    logger.debug("edgelist.read", source=str(source), r=graph.r, n=graph.n, edges=len(graph))
    return graph


def write(graph: Hypergraph, target: str | Path) -> None:
    payload = dumps(graph)
    if str(target) == STDIO:
        sys.stdout.write(payload)
        sys.stdout.flush()
        return
    Path(target).write_text(payload, encoding="utf-8")
    logger.debug("edgelist.write", target=str(target), edges=len(graph))
