"""
Lagrangians of uniform hypergraphs.

Lower bounds come from projected gradient ascent on the simplex, run on all
starting points at once as rows of one matrix. Upper bounds are certified by
the exact maximum of p over the lattice {k / D : sum k = D} plus a correction:
rounding a maximizer x* to the lattice moves every coordinate by less than
1 / D without leaving the support of x*, the gradient of p is constant on that
support, so the first order term vanishes and the higher order terms are
bounded by

    sum_{s=2}^{r-1} maxdeg * C(r-1, s) / ((r - s) * D^s)  +  |H| / D^r.
"""

import itertools
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
import structlog
from tqdm import tqdm  # type: ignore[import-untyped]

from src.application.dtos import (
    FiveVertexSweepDTO,
    LagrangianResultDTO,
    LatticeBoundDTO,
    RationalDTO,
    SimplexPointDTO,
)
from src.application.exceptions import ParameterError, ResolutionTooCoarseError
from src.configs import LagrangianConfig

from .constructions import make_g26
from .containment import contains_subgraph
from .hypergraph import (
    Hypergraph,
    blowup_counts,
    canonical_form,
    complete,
    vertices_of,
    weight_polynomial,
)

logger = structlog.get_logger(__name__)

LATTICE_MAX_N = 8
MAX_STEP = 1e6
MIN_STEP = 1e-15
_TAIL = 4
_CHUNK_CELLS = 1 << 22

CORRECTION_FORMULA = "sum_{s=2}^{r-1} maxdeg*C(r-1,s)/((r-s)*D^s) + |H|/D^r"


def project_rows_to_simplex(points: np.ndarray) -> np.ndarray:
    """Euclidean projection of every row onto the probability simplex."""
    k, n = points.shape
    ordered = -np.sort(-points, axis=1)
    cumulative = np.cumsum(ordered, axis=1) - 1.0
    ranks = np.arange(1, n + 1)
    support = ordered - cumulative / ranks > 0
    rho = n - 1 - np.argmax(support[:, ::-1], axis=1)
    theta = cumulative[np.arange(k), rho] / (rho + 1)
    return np.maximum(points - theta[:, None], 0.0)


class _Polynomial:
    """Batched evaluation of p_H and its gradient for row-stacked points."""

    def __init__(self, graph: Hypergraph):
        self.n = graph.n
        self.edges = np.array(graph.edges, dtype=np.intp).reshape(len(graph), graph.r)
        # one incidence matrix per edge position
        self.incidence = []
        for c in range(graph.r):
            onehot = np.zeros((len(graph), graph.n))
            onehot[np.arange(len(graph)), self.edges[:, c]] = 1.0
            self.incidence.append(onehot)

    def value(self, points: np.ndarray) -> np.ndarray:
        if not len(self.edges):
            return np.zeros(points.shape[0])
        return points[:, self.edges].prod(axis=2).sum(axis=1)

    def gradient(self, points: np.ndarray) -> np.ndarray:
        grad = np.zeros_like(points)
        if not len(self.edges):
            return grad
        gathered = points[:, self.edges]
        for c, onehot in enumerate(self.incidence):
            others = np.delete(gathered, c, axis=2).prod(axis=2)
            grad += others @ onehot
        return grad


def _support_starts(n: int, r: int) -> np.ndarray:
    rows = []
    for size in range(min(r, n), n + 1):
        for support in itertools.combinations(range(n), size):
            row = np.zeros(n)
            row[list(support)] = 1.0 / size
            rows.append(row)
    return np.array(rows).reshape(-1, n)


def _lexicographic_argmax(values: np.ndarray, points: np.ndarray) -> int:
    best = np.flatnonzero(values == values.max())
    if len(best) == 1:
        return int(best[0])
    tied = points[best]
    order = np.lexsort(tied.T[::-1])
    return int(best[order[0]])


@lru_cache(maxsize=None)
def _compositions(total: int, parts: int) -> np.ndarray:
    """All nonnegative integer vectors of the given length summing to total."""
    if parts == 0:
        return np.zeros((1 if total == 0 else 0, 0), dtype=np.int64)
    if parts == 1:
        return np.array([[total]], dtype=np.int64)
    blocks = []
    for first in range(total, -1, -1):
        rest = _compositions(total - first, parts - 1)
        blocks.append(np.column_stack((np.full(len(rest), first, dtype=np.int64), rest)))
    return np.concatenate(blocks)


def _tail_block(total: int, parts: int) -> np.ndarray:
    # not cached: at D = 120 the blocks for all totals add up to millions of rows
    if parts < _TAIL:
        return _compositions(total, parts)
    blocks = []
    for first in range(total, -1, -1):
        rest = _compositions(total - first, parts - 1)
        blocks.append(np.column_stack((np.full(len(rest), first, dtype=np.int64), rest)))
    return np.concatenate(blocks)


def lattice_maximum(graph: Hypergraph, resolution: int) -> int:
    """max of sum_E prod_{i in E} k_i over integer k >= 0 with sum k = D.

    The first n - 4 coordinates are enumerated, the last four are a block; each
    edge splits into a leading factor and a block factor, so one matrix product
    evaluates every (prefix, block row) pair. All values stay integers below
    2^53 and are therefore exact in float64.
    """
    if not graph.masks:
        return 0
    if len(graph) * resolution**graph.r >= 2**53:
        raise ParameterError(f"resolution {resolution} is too large for exact evaluation")
    n = graph.n
    tail = min(n, _TAIL)
    lead = n - tail
    best = 0
    for lead_sum in range(resolution + 1):
        leading = _compositions(lead_sum, lead)
        if not len(leading):
            continue
        block = _tail_block(resolution - lead_sum, tail)
        scales = np.ones((len(leading), len(graph)))
        factors = np.ones((len(block), len(graph)))
        for j, edge in enumerate(graph.edges):
            for v in edge:
                if v < lead:
                    scales[:, j] *= leading[:, v]
                else:
                    factors[:, j] *= block[:, v - lead]
        chunk = max(1, _CHUNK_CELLS // len(block))
        for start in range(0, len(scales), chunk):
            best = max(best, int((scales[start : start + chunk] @ factors.T).max()))
    return best


def lattice_correction(graph: Hypergraph, resolution: int) -> Fraction:
    r, d = graph.r, resolution
    correction = Fraction(len(graph), d**r)
    for s in range(2, r):
        correction += Fraction(graph.max_degree * math.comb(r - 1, s), (r - s) * d**s)
    return correction


class LagrangianSolver:
    def __init__(self, cfg: LagrangianConfig):
        self.cfg = cfg

    def _starts(self, graph: Hypergraph, seed: int, warm_starts: np.ndarray | None) -> np.ndarray:
        n = graph.n
        rng = np.random.default_rng(seed)
        parts = [np.full((1, n), 1.0 / n)]
        if self.cfg.RESTARTS:
            parts.append(rng.dirichlet(np.ones(n), size=self.cfg.RESTARTS))
        if n <= self.cfg.SUPPORT_ENUMERATION_MAX_N:
            parts.append(_support_starts(n, graph.r))
        if warm_starts is not None and len(warm_starts):
            parts.append(project_rows_to_simplex(np.asarray(warm_starts, dtype=float).reshape(-1, n)))
        return np.concatenate(parts)

    def ascend(self, graph: Hypergraph, points: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
        """Monotone projected gradient ascent from every row; returns (points, values, iterations)."""
        poly = _Polynomial(graph)
        points = points.copy()
        values = poly.value(points)
        steps = np.ones(len(points))
        active = np.ones(len(points), dtype=bool)
        iterations = 0

        for iterations in range(1, self.cfg.MAX_ITERATIONS + 1):
            rows = np.flatnonzero(active)
            if not len(rows):
                break
            current = points[rows]
            candidate = project_rows_to_simplex(current + steps[rows, None] * poly.gradient(current))
            candidate_values = poly.value(candidate)
            gain = candidate_values - values[rows]
            improved = gain > 0

            accepted = rows[improved]
            points[accepted] = candidate[improved]
            values[accepted] = candidate_values[improved]
            steps[accepted] = np.minimum(steps[accepted] * 2.0, MAX_STEP)
            steps[rows[~improved]] *= 0.5

            converged = (improved & (gain < self.cfg.TOLERANCE)) | (steps[rows] < MIN_STEP)
            active[rows[converged]] = False

        return points, values, iterations

    def lower(
        self,
        graph: Hypergraph,
        seed: int | None = None,
        warm_starts: np.ndarray | None = None,
    ) -> LagrangianResultDTO:
        if graph.n < 1:
            raise ParameterError("the Lagrangian needs at least one vertex")
        seed = self.cfg.SEED if seed is None else seed
        starts = self._starts(graph, seed, warm_starts)

        if not graph.masks:
            points, values, iterations = starts[:1], np.zeros(1), 0
        else:
            points, values, iterations = self.ascend(graph, starts)

        best = _lexicographic_argmax(values, points)
        maximizer = np.maximum(points[best], 0.0)
        maximizer = maximizer / maximizer.sum()
        weights = [float(w) for w in maximizer]
        lower = float(weight_polynomial(graph, weights))

        logger.info(
            "lagrangian.converged",
            n=graph.n,
            edges=len(graph),
            value=lower,
            iterations=iterations,
            starts=len(starts),
        )
        return LagrangianResultDTO(
            lower_bound=lower,
            maximizer=SimplexPointDTO(weights=weights),
            iterations=iterations,
            restarts=len(starts),
            seed=seed,
        )

    def upper(self, graph: Hypergraph, resolution: int | None = None) -> LatticeBoundDTO:
        resolution = self.cfg.RESOLUTION if resolution is None else resolution
        if graph.n > LATTICE_MAX_N:
            raise ParameterError(f"lattice certification is limited to {LATTICE_MAX_N} vertices")
        if resolution < 1:
            raise ParameterError(f"resolution must be positive, got {resolution}")

        d = resolution
        lattice = Fraction(lattice_maximum(graph, d), d**graph.r)
        correction = lattice_correction(graph, d) if graph.masks else Fraction(0)
        if graph.masks and correction > lattice:
            raise ResolutionTooCoarseError(
                f"correction {float(correction):.3g} exceeds lattice maximum {float(lattice):.3g} at D={d}"
            )

        logger.info(
            "lagrangian.certified",
            n=graph.n,
            edges=len(graph),
            resolution=d,
            lattice_max=lattice,
            correction=correction,
        )
        return LatticeBoundDTO(
            bound=RationalDTO.of(lattice + correction),
            lattice_max=RationalDTO.of(lattice),
            correction=RationalDTO.of(correction),
            resolution=d,
            formula=CORRECTION_FORMULA,
        )

    def solve(
        self,
        graph: Hypergraph,
        certify: bool = False,
        seed: int | None = None,
        resolution: int | None = None,
    ) -> LagrangianResultDTO:
        result = self.lower(graph, seed=seed)
        if certify:
            result.certified_upper_bound = self.upper(graph, resolution)
        return result

    def check_blowup_bound(self, pattern: Hypergraph, part_sizes: list[int]) -> bool:
        """|T(t)| = p_T(t/N) N^r exactly, and p_T(t/N) does not exceed lambda(T)."""
        total = sum(part_sizes)
        point = [Fraction(t, total) for t in part_sizes]
        exact = weight_polynomial(pattern, point)
        edges, _ = blowup_counts(pattern, part_sizes)
        if exact * total**pattern.r != edges:
            return False
        lam = self.lower(pattern, warm_starts=np.array([[float(x) for x in point]]))
        if exact <= Fraction(lam.lower_bound) + Fraction(1, 10**9):
            return True
        if pattern.n <= LATTICE_MAX_N:
            return exact <= self.upper(pattern).bound.to_fraction()
        return False


def star_lagrangian_bound(s: int) -> Fraction:
    """(s - 2) / (2 (s - 1)) * 4/27: the maximum of the star bound at x1 = 1/3."""
    if s < 3:
        raise ParameterError(f"star bound needs s >= 3, got {s}")
    return Fraction(s - 2, 2 * (s - 1)) * Fraction(4, 27)


G26_LAGRANGIAN = Fraction(2, 27)


def _pad_to(graph: Hypergraph, size: int, pool: list[int]) -> Hypergraph:
    masks = set(graph.masks)
    for mask in pool:
        if len(masks) >= size:
            break
        masks.add(mask)
    return Hypergraph.from_masks(graph.r, graph.n, masks)


def verify_five_vertex_family(
    solver: LagrangianSolver,
    resolution: int | None = None,
    margin: float | None = None,
    max_edges: int = 8,
    progress: bool = False,
) -> FiveVertexSweepDTO:
    """Every 3-graph on five vertices with at most max_edges edges has lambda < 2/27 - margin.

    Instances are grouped by isomorphism class; each class is bounded through the
    certificate of a max_edges supergraph, and every max_edges class must embed
    into G26.
    """
    resolution = solver.cfg.RESOLUTION if resolution is None else resolution
    margin = solver.cfg.LEMMA_MARGIN if margin is None else margin
    pool = sorted(complete(5, 3).masks, key=vertices_of)
    g26 = make_g26()

    classes: dict[tuple[int, ...], Hypergraph] = {}
    instances = 0
    for size in range(max_edges + 1):
        for combo in itertools.combinations(pool, size):
            instances += 1
            graph = Hypergraph.from_masks(3, 5, combo)
            classes.setdefault(canonical_form(graph), graph)

    top = {key: g for key, g in classes.items() if len(g) == max_edges}
    certificates = {key: solver.upper(g, resolution) for key, g in top.items()}
    all_embed = all(contains_subgraph(g, g26) is not None for g in top.values())

    max_lower = 0.0
    max_bound = Fraction(0)
    for graph in tqdm(classes.values(), desc="five-vertex classes", disable=not progress):
        max_lower = max(max_lower, solver.lower(graph).lower_bound)
        cover = canonical_form(_pad_to(graph, max_edges, pool))
        max_bound = max(max_bound, certificates[cover].bound.to_fraction())

    gap = G26_LAGRANGIAN - max_bound
    passed = all_embed and gap > Fraction(margin) and max_lower < float(G26_LAGRANGIAN)
    logger.info(
        "lagrangian.five_vertex_sweep",
        instances=instances,
        classes=len(classes),
        max_lower=max_lower,
        min_gap=gap,
        passed=passed,
    )
    return FiveVertexSweepDTO(
        instances=instances,
        classes=len(classes),
        eight_edge_classes=len(top),
        all_eight_edge_embed=all_embed,
        max_lower_bound=max_lower,
        max_certified_bound=RationalDTO.of(max_bound),
        min_gap=RationalDTO.of(gap),
        resolution=resolution,
        margin=margin,
        passed=passed,
    )
