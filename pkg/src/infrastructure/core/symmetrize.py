"""
Symmetrization of 3-graphs, with and without cleaning.

A run keeps the original vertex labels throughout: duplicated vertices reuse
the labels of the class they replace, removed vertices simply become isolated
and leave the live set. Every decision is made with a fixed tie-break so
traces are reproducible and can be replayed event by event.
"""

import math
from collections.abc import Sequence
from fractions import Fraction

import structlog

from src.application.dtos import (
    EventKind,
    HypergraphDTO,
    RationalDTO,
    StabilityDiagnosticDTO,
    SymmetrizationEventDTO,
    SymmetrizationTraceDTO,
)
from src.application.exceptions import (
    InvariantViolationError,
    ParameterError,
    TraceMismatchError,
)

from .coloring import is_g26_colorable, is_semibipartite
from .hypergraph import Hypergraph, blowup, is_2_covered, mask_of, popcount, vertices_of

logger = structlog.get_logger(__name__)

EquivalenceClasses = list[tuple[int, ...]]


def equivalence_classes(graph: Hypergraph, live: int | None = None) -> EquivalenceClasses:
    """Maximal groups of live vertices with identical links, sorted by smallest member.

    Equal links imply non-adjacency, so these are exactly the classes of the
    equivalence "non-adjacent with the same link".
    """
    live = graph.vertex_mask if live is None else live
    groups: dict[frozenset[int], list[int]] = {}
    for v in vertices_of(live):
        groups.setdefault(graph.link_masks[v], []).append(v)
    return sorted(tuple(group) for group in groups.values())


def _class_index(classes: EquivalenceClasses) -> dict[int, int]:
    return {v: i for i, members in enumerate(classes) for v in members}


def select_pair(graph: Hypergraph, live: int, classes: EquivalenceClasses) -> tuple[int, int] | None:
    """(u, v) with u kept and the class of v replaced, or None if every
    non-adjacent pair is equivalent.

    The pair minimizes (-max(d(u), d(v)), smaller label, larger label); u has the
    larger degree, the smaller label on a tie.
    """
    index = _class_index(classes)
    degrees = graph.degrees
    best: tuple[int, int, int] | None = None
    for a in vertices_of(live):
        for b in vertices_of(live & ~graph.adjacency[a] & ~((2 << a) - 1)):
            if index[a] == index[b]:
                continue
            key = (-max(degrees[a], degrees[b]), a, b)
            if best is None or key < best:
                best = key
    if best is None:
        return None
    _, a, b = best
    return (a, b) if degrees[a] >= degrees[b] else (b, a)


def symmetrize_step(graph: Hypergraph, keep: int, replaced: Sequence[int]) -> Hypergraph:
    """Delete the vertices of ``replaced`` and re-add them as copies of ``keep``."""
    drop = mask_of(replaced)
    kept = {m for m in graph.masks if not m & drop}
    copies = {
        (m & ~(1 << keep)) | (1 << v)
        for m in kept
        if m >> keep & 1
        for v in replaced
    }
    return Hypergraph.from_masks(graph.r, graph.n, kept | copies)


def delete_vertex(graph: Hypergraph, v: int) -> Hypergraph:
    return Hypergraph.from_masks(graph.r, graph.n, (m for m in graph.masks if not m >> v & 1))


def _min_degree(graph: Hypergraph, live: int) -> int:
    return min((graph.degrees[v] for v in vertices_of(live)), default=0)


def is_dense(graph: Hypergraph, live: int, alpha: Fraction) -> bool:
    """delta >= alpha * C(v - 1, r - 1) over the live vertices, compared exactly."""
    size = popcount(live)
    return _min_degree(graph, live) >= alpha * math.comb(max(size - 1, 0), graph.r - 1)


class RemovalPoset:
    """Strict partial order on vertex labels, kept transitively closed."""

    def __init__(self, ground: int):
        self._below: dict[int, int] = {v: 0 for v in vertices_of(ground)}

    def precedes(self, a: int, b: int) -> bool:
        return bool(self._below.get(b, 0) >> a & 1)

    def add_relations(self, lower: Sequence[int], upper: Sequence[int]) -> None:
        """a < b for every a in lower and b in upper."""
        gained = mask_of(lower)
        for a in lower:
            gained |= self._below.get(a, 0)
        targets = mask_of(upper)
        for w, below in self._below.items():
            if below & targets or targets >> w & 1:
                self._below[w] = below | gained
        for w, below in self._below.items():
            if below >> w & 1:
                raise InvariantViolationError(f"removal order became cyclic at vertex {w}")

    def remove(self, v: int) -> None:
        self._below.pop(v, None)
        for w in self._below:
            self._below[w] &= ~(1 << v)

    def minimal(self, candidates: Sequence[int]) -> list[int]:
        pool = mask_of(candidates)
        return [c for c in candidates if not self._below.get(c, 0) & pool]


class _Run:
    def __init__(self, graph: Hypergraph, algorithm: int, alpha: Fraction | None):
        self.input = graph
        self.graph = graph
        self.live = graph.vertex_mask
        self.algorithm = algorithm
        self.alpha = alpha
        self.poset = RemovalPoset(self.live)
        self.events: list[SymmetrizationEventDTO] = []
        self.removed: list[list[int]] = []
        self.trajectory: list[int] = []
        self.step = 0

    def remove(self, kind: EventKind, v: int) -> None:
        self.graph = delete_vertex(self.graph, v)
        self.live &= ~(1 << v)
        self.poset.remove(v)
        self.events.append(SymmetrizationEventDTO(kind=kind, step=self.step, vertex=v))

    def clean(self, kind: EventKind) -> list[int]:
        assert self.alpha is not None
        removed = []
        while self.graph.masks and not is_dense(self.graph, self.live, self.alpha):
            low = _min_degree(self.graph, self.live)
            tied = [v for v in vertices_of(self.live) if self.graph.degrees[v] == low]
            z = min(self.poset.minimal(tied))
            self.remove(kind, z)
            removed.append(z)
        return removed

    def symmetrize(self, keep: int, drop: int, classes: EquivalenceClasses) -> None:
        index = _class_index(classes)
        replaced = classes[index[drop]]
        kept_class = classes[index[keep]]
        self.graph = symmetrize_step(self.graph, keep, replaced)
        self.poset.add_relations(replaced, kept_class)
        self.events.append(
            SymmetrizationEventDTO(
                kind=EventKind.SYMMETRIZE,
                step=self.step,
                source=keep,
                replaced_class=list(replaced),
            )
        )
        logger.debug(
            "symmetrize.step",
            step=self.step,
            keep=keep,
            replaced=replaced,
            edges=len(self.graph),
        )

    def snapshot(self, removed: list[int]) -> None:
        self.removed.append(sorted(removed))
        self.trajectory.append(_min_degree(self.graph, self.live))

    def trace(self) -> SymmetrizationTraceDTO:
        return SymmetrizationTraceDTO(
            algorithm=self.algorithm,
            alpha=RationalDTO.of(self.alpha) if self.alpha is not None else None,
            input=HypergraphDTO.of(self.input),
            events=self.events,
            removed_snapshots=self.removed,
            final=HypergraphDTO.of(self.graph),
            final_vertices=list(vertices_of(self.live)),
            min_degree_trajectory=self.trajectory,
        )


def algorithm1(graph: Hypergraph) -> SymmetrizationTraceDTO:
    """Symmetrize until every non-adjacent pair is equivalent."""
    run = _Run(graph, algorithm=1, alpha=None)
    run.snapshot([])
    while True:
        classes = equivalence_classes(run.graph, run.live)
        pair = select_pair(run.graph, run.live, classes)
        if pair is None:
            break
        run.step += 1
        run.symmetrize(*pair, classes)
        run.snapshot([])
    logger.info("symmetrize.finished", algorithm=1, steps=run.step, edges=len(run.graph))
    return run.trace()


def _parse_alpha(alpha: Fraction | float | str) -> Fraction:
    try:
        value = Fraction(alpha)
    except (ValueError, ZeroDivisionError):
        raise ParameterError(f"invalid threshold {alpha!r}") from None
    if not 0 <= value <= 1:
        raise ParameterError(f"threshold must lie in [0, 1], got {alpha}")
    return value


def algorithm2(graph: Hypergraph, alpha: Fraction | float | str) -> SymmetrizationTraceDTO:
    """Symmetrization and cleaning with threshold alpha."""
    run = _Run(graph, algorithm=2, alpha=_parse_alpha(alpha))
    run.snapshot(run.clean(EventKind.INITIAL_REMOVE))

    while run.graph.masks:
        classes = equivalence_classes(run.graph, run.live)
        pair = select_pair(run.graph, run.live, classes)
        if pair is None and is_dense(run.graph, run.live, run.alpha):
            break
        run.step += 1
        if pair is not None:
            run.symmetrize(*pair, classes)
        run.snapshot(run.clean(EventKind.CLEAN_REMOVE))

    logger.info(
        "symmetrize.finished",
        algorithm=2,
        alpha=run.alpha,
        steps=run.step,
        removed=sum(len(z) for z in run.removed),
        edges=len(run.graph),
    )
    return run.trace()


def replay(graph: Hypergraph, trace: SymmetrizationTraceDTO) -> list[Hypergraph]:
    """H_0, ..., H_t rebuilt from the event list."""
    snapshots = []
    current = graph
    step = 0
    for event in trace.events:
        while event.step > step:
            snapshots.append(current)
            step += 1
        match event.kind:
            case EventKind.SYMMETRIZE:
                assert event.source is not None
                current = symmetrize_step(current, event.source, event.replaced_class)
            case EventKind.CLEAN_REMOVE | EventKind.INITIAL_REMOVE:
                assert event.vertex is not None
                current = delete_vertex(current, event.vertex)
    snapshots.append(current)
    while len(snapshots) < len(trace.removed_snapshots):
        snapshots.append(current)
    return snapshots


def restrict_trace(
    graph: Hypergraph, trace: SymmetrizationTraceDTO, vertices: Sequence[int]
) -> list[Hypergraph]:
    """The induced restrictions H_i[W] for the final vertex set W."""
    if sorted(vertices) != trace.final_vertices:
        raise TraceMismatchError("restriction set differs from the final vertex set of the trace")
    return [snapshot.induced(vertices) for snapshot in replay(graph, trace)]


def is_class_replacement(before: Hypergraph, after: Hypergraph) -> bool:
    """Equal, or obtained by replacing one equivalence class with copies of a vertex of another."""
    if before == after:
        return True
    classes = equivalence_classes(before)
    for replaced in classes:
        for source in classes:
            if source is replaced:
                continue
            if symmetrize_step(before, source[0], replaced) == after:
                return True
    return False


def reindex(graph: Hypergraph, order: Sequence[int]) -> Hypergraph:
    """Subgraph on ``order`` with order[j] renamed to j."""
    position = {v: j for j, v in enumerate(order)}
    keep = mask_of(order)
    return Hypergraph.from_masks(
        graph.r,
        len(order),
        (mask_of(position[v] for v in vertices_of(m)) for m in graph.masks if m & keep == m),
    )


def as_blowup(
    graph: Hypergraph, live: int | None = None
) -> tuple[Hypergraph, tuple[int, ...], tuple[int, ...]]:
    """(pattern on class representatives, class sizes, vertex order by class)."""
    classes = equivalence_classes(graph, live)
    representatives = [members[0] for members in classes]
    order = tuple(v for members in classes for v in members)
    return reindex(graph, representatives), tuple(len(c) for c in classes), order


def final_graph(trace: SymmetrizationTraceDTO) -> Hypergraph:
    """The output H_t on its own vertex set W, relabeled to 0..|W|-1."""
    return trace.final.to_hypergraph().induced(trace.final_vertices)


def no_symmetrizable_pair(trace: SymmetrizationTraceDTO) -> bool:
    graph = trace.final.to_hypergraph()
    live = mask_of(trace.final_vertices)
    return select_pair(graph, live, equivalence_classes(graph, live)) is None


def stability_diagnostic(graph: Hypergraph, eps: float) -> StabilityDiagnosticDTO:
    """Run cleaning symmetrization at alpha = 4/9 - 3 sqrt(eps) and report the
    removed set, the degree trajectory and the structure of the output."""
    if not 0 < eps < 1:
        raise ParameterError(f"eps must lie in (0, 1), got {eps}")
    root = Fraction(math.sqrt(eps)).limit_denominator(10**9)
    alpha = max(Fraction(4, 9) - 3 * root, Fraction(0))
    trace = algorithm2(graph, alpha)

    output = final_graph(trace)
    size = len(trace.final_vertices)
    dense = (not output.masks) or is_dense(output, output.vertex_mask, alpha)
    contracts = dense and no_symmetrizable_pair(trace)

    threshold = (4 / 9 - 10 * math.sqrt(eps)) * math.comb(max(size - 1, 0), 2)
    restricted = restrict_trace(graph, trace, trace.final_vertices)
    failures = sum(1 for h in restricted if size and h.min_degree <= threshold)

    removed = sum(len(z) for z in trace.removed_snapshots)
    report = StabilityDiagnosticDTO(
        n=graph.n,
        edges=len(graph),
        eps=eps,
        alpha=RationalDTO.of(alpha),
        removed=removed,
        removed_bound=3 * math.sqrt(eps) * graph.n,
        min_degree_trajectory=trace.min_degree_trajectory,
        final_vertices=size,
        final_edges=len(output),
        final_semibipartite=is_semibipartite(output) is not None,
        final_g26_colorable=is_g26_colorable(output) is not None,
        contracts_hold=contracts,
        degree_bound_failures=failures,
    )
    logger.info("symmetrize.stability", **report.model_dump(exclude={"min_degree_trajectory"}))
    return report


def check_symmetrization_contracts(graph: Hypergraph, trace: SymmetrizationTraceDTO) -> bool:
    """Output has at least as many edges and is a blowup of a 2-covered pattern."""
    final = trace.final.to_hypergraph()
    live = mask_of(trace.final_vertices)
    pattern, sizes, order = as_blowup(final, live)
    return (
        len(final) >= len(graph)
        and is_2_covered(pattern)
        and blowup(pattern, sizes) == reindex(final, order)
    )
