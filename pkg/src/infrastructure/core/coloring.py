"""
Embeddability witnesses: semibipartite partitions and G26-colorings.

Both searches run on the twin quotient (one vertex per link class) and copy
the representative's part to its twins, which is valid because twins share no
edge and see the same link.
"""

from collections.abc import Callable

import structlog

from src.application.dtos import PartitionKind, PartitionWitnessDTO
from src.application.exceptions import ParameterError

from .constructions import make_g26
from .hypergraph import Hypergraph, popcount, vertices_of

logger = structlog.get_logger(__name__)

SIDE_A, SIDE_B = 0, 1
BRUTE_FORCE_MAX_N = 20

_G26 = make_g26()
_ALL_COLORS = (1 << 6) - 1
# _THIRD[c][d]: colors x with {c, d, x} an edge of G26
_THIRD = [
    [
        sum(1 << x for x in range(6) if len({c, d, x}) == 3 and (1 << c | 1 << d | 1 << x) in _G26.masks)
        for d in range(6)
    ]
    for c in range(6)
]


def _quotient_classes(graph: Hypergraph) -> tuple[Hypergraph, list[int]]:
    """Quotient graph and, per original vertex, the index of its representative."""
    index: dict[frozenset[int], int] = {}
    reps: list[int] = []
    class_of = []
    for v in range(graph.n):
        key = graph.link_masks[v]
        if key not in index:
            index[key] = len(reps)
            reps.append(v)
        class_of.append(index[key])
    return graph.induced(reps), class_of


def _lift(solver: Callable[[Hypergraph], list[int] | None], graph: Hypergraph) -> list[int] | None:
    quotient, class_of = _quotient_classes(graph)
    solution = solver(quotient)
    if solution is None:
        return None
    return [solution[c] for c in class_of]


def _incidence(graph: Hypergraph) -> list[list[tuple[int, ...]]]:
    incident: list[list[tuple[int, ...]]] = [[] for _ in range(graph.n)]
    for edge in graph.edges:
        for v in edge:
            incident[v].append(edge)
    return incident


def _solve_semibipartite(graph: Hypergraph) -> list[int] | None:
    incident = _incidence(graph)
    degrees = graph.degrees
    unset = -1

    def propagate(side: list[int], stack: list[int]) -> bool:
        while stack:
            v = stack.pop()
            for edge in incident[v]:
                in_a = sum(side[u] == SIDE_A for u in edge)
                free = [u for u in edge if side[u] == unset]
                if in_a > 1 or (in_a == 0 and not free):
                    return False
                if in_a == 1:
                    for u in free:
                        side[u] = SIDE_B
                        stack.append(u)
                elif len(free) == 1:
                    side[free[0]] = SIDE_A
                    stack.append(free[0])
        return True

    def solve(side: list[int]) -> list[int] | None:
        free = [v for v in range(graph.n) if side[v] == unset and degrees[v]]
        if not free:
            return [SIDE_B if s == unset else s for s in side]
        v = min(free, key=lambda u: (-degrees[u], u))
        for choice in (SIDE_A, SIDE_B):
            trial = side.copy()
            trial[v] = choice
            if propagate(trial, [v]):
                found = solve(trial)
                if found is not None:
                    return found
        return None

    return solve([unset] * graph.n)


def is_semibipartite(graph: Hypergraph) -> PartitionWitnessDTO | None:
    """Partition A/B with every edge meeting A in exactly one vertex."""
    sides = _lift(_solve_semibipartite, graph)
    if sides is None:
        return None
    return PartitionWitnessDTO(kind=PartitionKind.SEMIBIPARTITE, assignment=sides)


def semibipartite_bruteforce(graph: Hypergraph) -> PartitionWitnessDTO | None:
    """Exhaustive oracle over all 2^n choices of A."""
    if graph.n > BRUTE_FORCE_MAX_N:
        raise ParameterError(f"brute force is limited to {BRUTE_FORCE_MAX_N} vertices")
    for side_a in range(1 << graph.n):
        if all(popcount(mask & side_a) == 1 for mask in graph.masks):
            return PartitionWitnessDTO(
                kind=PartitionKind.SEMIBIPARTITE,
                assignment=[SIDE_B ^ (side_a >> v & 1) for v in range(graph.n)],
            )
    return None


def _solve_g26(graph: Hypergraph) -> list[int] | None:
    incident = _incidence(graph)
    degrees = graph.degrees
    unset = -1

    def restrict(color: list[int], domain: list[int], v: int) -> bool:
        c = color[v]
        for edge in incident[v]:
            others = [u for u in edge if u != v]
            fixed = [u for u in others if color[u] != unset]
            if len(fixed) == len(others):
                mask = sum(1 << color[u] for u in edge)
                if popcount(mask) != 3 or mask not in _G26.masks:
                    return False
            elif fixed:
                (u,) = fixed
                (w,) = (x for x in others if x != u)
                domain[w] &= _THIRD[c][color[u]]
                if not domain[w]:
                    return False
            else:
                for u in others:
                    domain[u] &= ~(1 << c)
                    if not domain[u]:
                        return False
        return True

    def solve(color: list[int], domain: list[int]) -> list[int] | None:
        free = [v for v in range(graph.n) if color[v] == unset and degrees[v]]
        if not free:
            return [0 if c == unset else c for c in color]
        v = min(free, key=lambda u: (popcount(domain[u]), -degrees[u], u))
        for c in vertices_of(domain[v]):
            trial_color = color.copy()
            trial_domain = domain.copy()
            trial_color[v] = c
            trial_domain[v] = 1 << c
            if restrict(trial_color, trial_domain, v):
                found = solve(trial_color, trial_domain)
                if found is not None:
                    return found
        return None

    return solve([unset] * graph.n, [_ALL_COLORS] * graph.n)


def is_g26_colorable(graph: Hypergraph) -> PartitionWitnessDTO | None:
    """Map to the six vertices of G26 sending every edge onto a G26 edge."""
    if graph.r != 3:
        return None
    colors = _lift(_solve_g26, graph)
    if colors is None:
        return None
    return PartitionWitnessDTO(kind=PartitionKind.G26_COLORING, assignment=colors)


def check_witness(graph: Hypergraph, witness: PartitionWitnessDTO) -> bool:
    if len(witness.assignment) != graph.n:
        return False
    part = witness.assignment
    match witness.kind:
        case PartitionKind.SEMIBIPARTITE:
            return all(sum(part[v] == SIDE_A for v in edge) == 1 for edge in graph.edges)
        case PartitionKind.G26_COLORING:
            return all(
                len({part[v] for v in edge}) == 3
                and sum(1 << part[v] for v in edge) in _G26.masks
                for edge in graph.edges
            )
    return False


def is_embeddable(graph: Hypergraph) -> PartitionWitnessDTO | None:
    """A witness that the graph lies in some G1_n or G2_n blowup, or None."""
    witness = is_semibipartite(graph)
    if witness is None:
        witness = is_g26_colorable(graph)
    logger.debug("coloring.embeddable", n=graph.n, edges=len(graph), found=witness is not None)
    return witness
