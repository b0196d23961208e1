"""
Containment of the forbidden family M = M1 + M2 + M3.

M1 is K5^3 minus an edge. M2 and M3 are never enumerated; both are decided
from cores, i.e. vertex sets whose pairs are all covered by edges:

* M2: some 7-set S is a core and H[S] has transversal number at least two,
  which for a 3-graph means H[S] is nonempty and its edges share no vertex.
* M3: some 6-set S is a core of a subgraph F on at most 21 vertices that is
  neither semibipartite nor G26-colorable. Embeddability is inherited by
  subgraphs, so F may be taken induced.
"""

import itertools
import math
from collections.abc import Iterator

import structlog

from src.application.dtos import M3Mode, MViolationDTO, ViolationKind
from src.application.exceptions import M3BudgetExceededError, ParameterError

from .coloring import is_embeddable, is_g26_colorable, is_semibipartite, semibipartite_bruteforce
from .constructions import g1_size, g2_size
from .hypergraph import (
    Hypergraph,
    blowup,
    is_2_covered,
    is_star,
    mask_of,
    popcount,
    transversal,
    vertices_of,
)

logger = structlog.get_logger(__name__)

M1_CORE = 5
M2_CORE = 7
M3_CORE = 6
VALIDATION_BRUTE_FORCE_MAX_N = 12
M3_GROWTH_BUDGET = 200_000


def core_vertex_bound(core: int, r: int = 3) -> int:
    """(l + 1) + (r - 2) * C(l + 1, 2) for a core of l + 1 vertices."""
    return core + (r - 2) * math.comb(core, 2)


def cores(graph: Hypergraph, size: int, required: int = 0) -> Iterator[int]:
    """Vertex sets (as masks) of the given size whose pairs are all covered.

    Sets are produced in lexicographic order; ``required`` vertices are forced in.
    """
    if popcount(required) > size:
        return
    adj = graph.adjacency
    candidates = graph.vertex_mask & ~required
    for v in vertices_of(required):
        if required & ~(1 << v) & ~adj[v]:
            return
        candidates &= adj[v]

    def grow(chosen: int, pool: int, left: int) -> Iterator[int]:
        if left == 0:
            yield chosen
            return
        while pool and popcount(pool) >= left:
            low = pool & -pool
            pool ^= low
            v = low.bit_length() - 1
            yield from grow(chosen | low, pool & adj[v], left - 1)

    yield from grow(required, candidates, size - popcount(required))


def covering_edge(graph: Hypergraph, u: int, v: int) -> tuple[int, ...] | None:
    """Lexicographically first edge through both u and v."""
    edges = (m | (1 << u) for m in graph.link_masks[u] if m >> v & 1)
    return min(map(vertices_of, edges), default=None)


def _edges_inside(graph: Hypergraph, subset: int) -> list[int]:
    return sorted(graph.edges_inside(subset), key=vertices_of)


def _sorted_edges(masks) -> list[tuple[int, ...]]:
    return sorted(vertices_of(m) for m in masks)


def _m1_at(graph: Hypergraph, core: int) -> MViolationDTO | None:
    inside = _edges_inside(graph, core)
    if len(inside) < 9:
        return None
    return MViolationDTO(
        kind=ViolationKind.M1,
        core=list(vertices_of(core)),
        witness_edges=[vertices_of(m) for m in inside[:9]],
    )


def contains_m1(graph: Hypergraph, required: int = 0) -> MViolationDTO | None:
    if graph.r != 3:
        return None
    for core in cores(graph, M1_CORE, required):
        found = _m1_at(graph, core)
        if found is not None:
            return found
    return None


def _is_spread(masks: list[int]) -> bool:
    """Transversal number at least two: nonempty with no common vertex."""
    if not masks:
        return False
    common = ~0
    for m in masks:
        common &= m
    return common == 0


def _m2_at(graph: Hypergraph, core: int) -> MViolationDTO | None:
    inside = _edges_inside(graph, core)
    if not _is_spread(inside):
        return None
    witness = set(inside)
    for u, v in itertools.combinations(vertices_of(core), 2):
        edge = covering_edge(graph, u, v)
        assert edge is not None
        witness.add(mask_of(edge))
    return MViolationDTO(
        kind=ViolationKind.M2,
        core=list(vertices_of(core)),
        witness_edges=_sorted_edges(witness),
    )


def contains_m2(graph: Hypergraph, required_pairs: list[int] | None = None) -> MViolationDTO | None:
    """First 7-core with a spread induced subgraph.

    ``required_pairs`` restricts the scan to cores containing one of the given
    vertex pairs (masks); the first hit in lexicographic order is reported.
    """
    if graph.r != 3 or graph.n < M2_CORE:
        return None
    if required_pairs is None:
        for core in cores(graph, M2_CORE):
            found = _m2_at(graph, core)
            if found is not None:
                return found
        return None
    seen: set[int] = set()
    hits = []
    for pair in required_pairs:
        for core in cores(graph, M2_CORE, pair):
            if core in seen:
                continue
            seen.add(core)
            found = _m2_at(graph, core)
            if found is not None:
                hits.append(found)
                break
    return min(hits, key=lambda v: v.core, default=None)


def _minimize_witness(graph: Hypergraph, core: int) -> list[int]:
    """Drop edges from H while the core stays covered and H stays non-embeddable."""
    kept = set(graph.masks)
    pairs = [1 << u | 1 << v for u, v in itertools.combinations(vertices_of(core), 2)]
    for mask in sorted(graph.masks, key=vertices_of, reverse=True):
        trial = kept - {mask}
        if not all(any(m & p == p for m in trial) for p in pairs):
            continue
        if is_embeddable(Hypergraph.from_masks(3, graph.n, trial)) is None:
            kept = trial
    return sorted(kept, key=vertices_of)


def _m3_small(graph: Hypergraph, minimize: bool) -> MViolationDTO | None:
    """Exact M3 test when all edges span at most 21 vertices."""
    core = next(cores(graph, M3_CORE), None)
    if core is None:
        return None
    witness = _minimize_witness(graph, core) if minimize else sorted(graph.masks)
    return MViolationDTO(
        kind=ViolationKind.M3,
        core=list(vertices_of(core)),
        witness_edges=[vertices_of(m) for m in witness],
    )


def _m3_large(graph: Hypergraph, bound: int, budget: int) -> MViolationDTO | None:
    """Per 6-core, grow U by H-edges until H[U] covers the core and is non-embeddable.

    While a core pair is open only its covering edges are tried; afterwards any
    edge reaching outside U may be added, fewest new vertices first, so pieces
    disjoint from the core are found as well; a minimal F is a union of its edges.
    """
    ordered = sorted(graph.masks, key=vertices_of)
    for core in cores(graph, M3_CORE):
        pairs = [1 << u | 1 << v for u, v in itertools.combinations(vertices_of(core), 2)]
        visited: set[int] = set()

        def extend(span: int) -> int | None:
            if span in visited:
                return None
            if len(visited) >= budget:
                raise M3BudgetExceededError(
                    f"M3 search around core {list(vertices_of(core))} exceeded {budget} states"
                )
            visited.add(span)
            inside = _edges_inside(graph, span)
            open_pair = next((p for p in pairs if not any(m & p == p for m in inside)), None)
            if open_pair is not None:
                options = [m for m in ordered if m & open_pair == open_pair]
            elif is_embeddable(Hypergraph.from_masks(3, graph.n, inside)) is None:
                return span
            else:
                options = sorted((m for m in ordered if m & ~span), key=lambda m: popcount(m & ~span))
            for m in options:
                grown = span | m
                if popcount(grown) <= bound:
                    found = extend(grown)
                    if found is not None:
                        return found
            return None

        span = extend(core)
        if span is not None:
            return MViolationDTO(
                kind=ViolationKind.M3,
                core=list(vertices_of(core)),
                witness_edges=[vertices_of(m) for m in _edges_inside(graph, span)],
            )
    return None


def _m3_fast(graph: Hypergraph, bound: int) -> MViolationDTO | None:
    for core in cores(graph, M3_CORE):
        chosen = [m for m in graph.masks if popcount(m & core) >= 2]
        superset = Hypergraph.from_masks(3, graph.n, chosen)
        if is_embeddable(superset) is None:
            spanned = popcount(superset.non_isolated_mask())
            return MViolationDTO(
                kind=ViolationKind.M3,
                core=list(vertices_of(core)),
                witness_edges=list(superset.edges),
                mode=M3Mode.FAST,
                exceeds_vertex_bound=spanned > bound,
            )
    return None


def contains_m3(
    graph: Hypergraph,
    mode: M3Mode | str = M3Mode.EXACT,
    minimize: bool = True,
    budget: int = M3_GROWTH_BUDGET,
) -> MViolationDTO | None:
    try:
        mode = M3Mode(mode)
    except ValueError:
        raise ParameterError(f"unknown M3 mode {mode!r}") from None
    if graph.r != 3 or graph.n < M3_CORE:
        return None
    if is_embeddable(graph) is not None:
        return None
    bound = core_vertex_bound(M3_CORE)
    if mode is M3Mode.FAST:
        return _m3_fast(graph, bound)
    if popcount(graph.non_isolated_mask()) <= bound:
        return _m3_small(graph, minimize)
    return _m3_large(graph, bound, budget)


def is_m_free(graph: Hypergraph, mode: M3Mode | str = M3Mode.EXACT) -> MViolationDTO | None:
    """First violation in the order M1, M2, M3, or None when H is M-free."""
    violation = contains_m1(graph)
    if violation is None:
        violation = contains_m2(graph)
    if violation is None:
        violation = contains_m3(graph, mode)
    logger.debug(
        "family_m.checked",
        n=graph.n,
        edges=len(graph),
        violation=violation.kind.value if violation else None,
    )
    return violation


def is_m_hom_free(graph: Hypergraph) -> bool:
    """M-free iff M-hom-free: test the blowup with every part of size 3."""
    if graph.n == 0:
        return True
    return is_m_free(blowup(graph, [3] * graph.n)) is None


def _covered(witness: list[int], core: int) -> bool:
    return all(
        any(m & p == p for m in witness)
        for p in (1 << u | 1 << v for u, v in itertools.combinations(vertices_of(core), 2))
    )


def validate_violation(graph: Hypergraph, violation: MViolationDTO) -> bool:
    """Recompute the certificate from scratch."""
    witness = [mask_of(e) for e in violation.witness_edges]
    core = mask_of(violation.core)
    if len(set(violation.core)) != len(violation.core) or not all(m in graph.masks for m in witness):
        return False
    spanned = 0
    for m in witness:
        spanned |= m

    match violation.kind:
        case ViolationKind.M1:
            return popcount(core) == M1_CORE and sum(m & core == m for m in witness) >= 9
        case ViolationKind.M2:
            inside = Hypergraph.from_masks(3, graph.n, [m for m in witness if m & core == m])
            return (
                popcount(core) == M2_CORE
                and popcount(spanned) <= core_vertex_bound(M2_CORE)
                and _covered(witness, core)
                and transversal(inside) >= 2
            )
        case ViolationKind.M3:
            sub = Hypergraph.from_masks(3, graph.n, witness).induced(vertices_of(spanned | core))
            within_bound = popcount(spanned) <= core_vertex_bound(M3_CORE)
            if not within_bound and not violation.exceeds_vertex_bound:
                return False
            semibipartite = (
                semibipartite_bruteforce(sub) if sub.n <= VALIDATION_BRUTE_FORCE_MAX_N else is_semibipartite(sub)
            )
            return (
                popcount(core) == M3_CORE
                and _covered(witness, core)
                and semibipartite is None
                and is_g26_colorable(sub) is None
            )
    return False


def check_star_lemma(graph: Hypergraph) -> bool:
    """A 2-covered T on at least 7 vertices with all 7-sets of transversal <= 1 is a star."""
    if graph.n < M2_CORE or not is_2_covered(graph):
        return True
    for subset in itertools.combinations(range(graph.n), M2_CORE):
        if _is_spread(_edges_inside(graph, mask_of(subset))):
            return True
    return is_star(graph) is not None


def g1_bound(n: int) -> int:
    return g1_size(n)


def g2_bound(n: int) -> int:
    return g2_size(n)
