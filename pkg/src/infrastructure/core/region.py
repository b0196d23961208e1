"""
Points of the feasible region and the induced K4^- counting behind the
edit-distance argument for Kostochka's constructions.
"""

import math
from collections.abc import Iterable, Sequence
from fractions import Fraction

import structlog

from src.application.dtos import (
    ConvergenceRowDTO,
    RationalDTO,
    RegionPointDTO,
    ShadowRegimeDTO,
)
from src.application.exceptions import InvariantViolationError, ParameterError

from .constructions import g1_pattern, g2_pattern, make_kostochka
from .containment import contains_subgraph
from .hypergraph import Hypergraph, blowup_counts, complete, vertices_of

logger = structlog.get_logger(__name__)

G1_TARGET = (Fraction(8, 9), Fraction(4, 9))
G2_TARGET = (Fraction(5, 6), Fraction(4, 9))


def _density(count: int, total: int) -> Fraction:
    return Fraction(count, total) if total else Fraction(0)


def _point(shadow: Fraction, edges: Fraction) -> RegionPointDTO:
    return RegionPointDTO(shadow_density=RationalDTO.of(shadow), edge_density=RationalDTO.of(edges))


def region_point(graph: Hypergraph) -> RegionPointDTO:
    """(|shadow| / C(n, r-1), |H| / C(n, r)) as exact rationals."""
    n, r = graph.n, graph.r
    return _point(
        _density(len(graph.shadow()), math.comb(n, r - 1)),
        _density(len(graph), math.comb(n, r)),
    )


def blowup_region_point(pattern: Hypergraph, part_sizes: Sequence[int]) -> RegionPointDTO:
    """Densities of T(t) computed from the pattern alone."""
    edges, shadow = blowup_counts(pattern, part_sizes)
    n = sum(part_sizes)
    return _point(
        _density(shadow, math.comb(n, pattern.r - 1)),
        _density(edges, math.comb(n, pattern.r)),
    )


def count_induced_k43_minus(graph: Hypergraph) -> int:
    """4-sets spanning exactly three edges.

    Each such 4-set is seen once from each of its three edges, extended by the
    remaining vertex.
    """
    if graph.r != 3:
        raise ParameterError("induced K4^- counts are defined for 3-graphs")
    masks = graph.masks
    hits = 0
    for edge in masks:
        a, b, c = vertices_of(edge)
        for w in vertices_of(graph.vertex_mask & ~edge):
            bit = 1 << w
            inside = 1 + sum(
                (pair | bit) in masks
                for pair in (1 << a | 1 << b, 1 << a | 1 << c, 1 << b | 1 << c)
            )
            hits += inside == 3
    return hits // 3


def phi_formula(n: int, m: int) -> int:
    """m^2 (n - 3m)(n - 3m - 3) / 6, the induced K4^- count of G(n, m)."""
    if n < 0 or n % 3:
        raise ParameterError(f"n must be a nonnegative multiple of 3, got {n}")
    if not 0 <= m <= n // 3:
        raise ParameterError(f"m must lie in [0, {n // 3}], got {m}")
    value = m * m * (n - 3 * m) * (n - 3 * m - 3) // 6
    if value != 3 * m * m * math.comb(n // 3 - m, 2):
        raise InvariantViolationError(f"closed forms disagree at n={n}, m={m}")
    return value


def edit_distance_lower_bound(first: Hypergraph, second: Hypergraph) -> Fraction:
    """|count(H1) - count(H2)| / (n - 3): one edge toggle moves the count by at most n - 3."""
    if first.n != second.n:
        raise ParameterError(f"vertex counts differ: {first.n} and {second.n}")
    if first.n < 4:
        raise ParameterError(f"edit distance bound needs n >= 4, got {first.n}")
    delta = abs(count_induced_k43_minus(first) - count_induced_k43_minus(second))
    return Fraction(delta, first.n - 3)


def kostochka_complement_family(n: int, ms: Iterable[int]) -> list[Hypergraph]:
    """Complements of G(n, m); every member is checked to be K4-free."""
    k4 = complete(4, 3)
    family = []
    for m in ms:
        graph = make_kostochka(n, m).complement()
        if contains_subgraph(k4, graph) is not None:
            raise InvariantViolationError(f"complement of G({n}, {m}) contains K4")
        family.append(graph)
    return family


def shadow_regime(graph: Hypergraph) -> ShadowRegimeDTO:
    """Compare |shadow| with 4n^2/9 (semibipartite) and 5n^2/12 (G26 blowups)."""
    n = graph.n
    size = len(graph.shadow())
    semibipartite_gap = size - Fraction(4 * n * n, 9)
    g26_gap = size - Fraction(5 * n * n, 12)
    regime = "semibipartite" if abs(semibipartite_gap) <= abs(g26_gap) else "g26"
    return ShadowRegimeDTO(
        regime=regime,
        shadow_size=size,
        semibipartite_gap=RationalDTO.of(semibipartite_gap),
        g26_gap=RationalDTO.of(g26_gap),
    )


def _row(name: str, n: int, point: RegionPointDTO, target: tuple[Fraction, Fraction]) -> ConvergenceRowDTO:
    distance = math.hypot(
        point.shadow_density.value - float(target[0]),
        point.edge_density.value - float(target[1]),
    )
    return ConvergenceRowDTO(
        construction=name,
        n=n,
        point=point,
        target_shadow=RationalDTO.of(target[0]),
        target_edge=RationalDTO.of(target[1]),
        distance=distance,
    )


def convergence_table(ns: Iterable[int]) -> list[ConvergenceRowDTO]:
    """Region points of G1 and G2 with their distance to the two maximizers of g(M, x)."""
    rows = []
    for n in ns:
        rows.append(_row("g1", n, blowup_region_point(*g1_pattern(n)), G1_TARGET))
        rows.append(_row("g2", n, blowup_region_point(*g2_pattern(n)), G2_TARGET))
    logger.debug("region.convergence", rows=len(rows))
    return rows
