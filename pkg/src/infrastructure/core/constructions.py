"""
Generators for the named 3-graphs.

Vertex layout is fixed so serialized output is reproducible: for G1 the
side A is {0, ..., n//3 - 1}; blowups use consecutive blocks in pattern
vertex order; Kostochka's V_j is the j-th block of n/3 vertices whose first m
vertices form V_{1,j}.
"""

import itertools
import math
import random
from collections.abc import Iterable, Iterator

import structlog

from src.application.exceptions import ParameterError

from .hypergraph import Hypergraph, blowup, blowup_counts, complete, mask_of

logger = structlog.get_logger(__name__)

# complement of G26 with labels shifted to start at 0
G26_COMPLEMENT: tuple[tuple[int, int, int], ...] = ((0, 1, 2), (0, 1, 5), (2, 3, 4), (3, 4, 5))
F32_EDGES: tuple[tuple[int, int, int], ...] = ((0, 1, 2), (0, 1, 3), (0, 1, 4), (2, 3, 4))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


def g1_sides(n: int) -> tuple[range, range]:
    a = n // 3
    return range(a), range(a, n)


def make_g1(n: int) -> Hypergraph:
    _require(n >= 3, f"G1 needs n >= 3, got {n}")
    side_a, side_b = g1_sides(n)
    return Hypergraph.from_masks(
        3,
        n,
        (mask_of((a, *pair)) for a in side_a for pair in itertools.combinations(side_b, 2)),
    )


def make_g26() -> Hypergraph:
    return complete(6, 3).without_edges(G26_COMPLEMENT)


def g2_part_sizes(n: int) -> tuple[int, ...]:
    """Balanced part sizes for the G26 blowup on n vertices.

    Which n mod 6 parts get the extra vertex is decided by trying every
    placement in combinations order and keeping the first with most edges.
    """
    _require(n >= 6, f"G2 needs n >= 6, got {n}")
    base, extra = divmod(n, 6)
    pattern = make_g26()
    best: tuple[int, ...] | None = None
    best_edges = -1
    for bigger in itertools.combinations(range(6), extra):
        sizes = tuple(base + (i in bigger) for i in range(6))
        edges, _ = blowup_counts(pattern, sizes)
        if edges > best_edges:
            best, best_edges = sizes, edges
    assert best is not None
    return best


def make_g2(n: int) -> Hypergraph:
    return blowup(make_g26(), g2_part_sizes(n))


def g1_pattern(n: int) -> tuple[Hypergraph, tuple[int, ...]]:
    """G1 as a blowup: the full star on |B| + 1 vertices with the center blown up to |A|."""
    side_a, side_b = g1_sides(n)
    _require(len(side_a) >= 1, f"G1 needs n >= 3, got {n}")
    star = make_full_star(len(side_b) + 1)
    return star, (len(side_a),) + (1,) * len(side_b)


def g2_pattern(n: int) -> tuple[Hypergraph, tuple[int, ...]]:
    return make_g26(), g2_part_sizes(n)


def make_turan(r: int, n: int, parts: int) -> Hypergraph:
    """T_r(n, l): at most one vertex in each of l balanced parts."""
    _require(r >= 2, f"uniformity must be at least 2, got {r}")
    _require(parts >= r, f"need at least r={r} parts, got {parts}")
    _require(n >= parts, f"need n >= {parts} vertices, got {n}")
    base, extra = divmod(n, parts)
    sizes = tuple(base + 1 if i < extra else base for i in range(parts))
    return blowup(complete(parts, r), sizes)


def turan_size(r: int, n: int, parts: int) -> int:
    base, extra = divmod(n, parts)
    sizes = tuple(base + 1 if i < extra else base for i in range(parts))
    return blowup_counts(complete(parts, r), sizes)[0]


def kostochka_blocks(n: int, m: int) -> list[tuple[range, range]]:
    """Per j in {0, 1, 2}: (V_{1,j}, V_{2,j})."""
    _require(n % 3 == 0, f"n must be a multiple of 3, got {n}")
    _require(0 <= m <= n // 3, f"m must lie in [0, {n // 3}], got {m}")
    k = n // 3
    return [(range(j * k, j * k + m), range(j * k + m, (j + 1) * k)) for j in range(3)]


def _kostochka_triples(n: int, m: int) -> Iterator[Iterable[int]]:
    blocks = kostochka_blocks(n, m)
    whole = [range(first.start, rest.stop) for first, rest in blocks]

    for j in range(3):
        ones, twos = blocks[j]
        nxt, prv = (j + 1) % 3, (j - 1) % 3
        for part in (ones, twos):
            yield from itertools.combinations(part, 3)
        for pair in itertools.combinations(ones, 2):
            for c in twos:
                yield (*pair, c)
            for c in whole[nxt]:
                yield (*pair, c)
        for pair in itertools.combinations(twos, 2):
            for c in blocks[nxt][0]:
                yield (*pair, c)
            for c in whole[prv]:
                yield (*pair, c)
        for a, b, c in itertools.product(ones, twos, whole[nxt]):
            yield (a, b, c)


def make_kostochka(n: int, m: int) -> Hypergraph:
    graph = Hypergraph.from_masks(3, n, {mask_of(t) for t in _kostochka_triples(n, m)})
    expected = kostochka_size(n)
    if len(graph) != expected:
        logger.warning("kostochka.size_mismatch", n=n, m=m, edges=len(graph), expected=expected)
    return graph


def kostochka_size(n: int) -> int:
    return n * (n - 3) * (2 * n - 3) // 27


def make_complete(n: int, r: int) -> Hypergraph:
    _require(r >= 1, f"uniformity must be positive, got {r}")
    _require(n >= 0, f"vertex count must be nonnegative, got {n}")
    return complete(n, r)


def make_k53_minus() -> Hypergraph:
    return complete(5, 3).without_edges([(2, 3, 4)])


def make_f32() -> Hypergraph:
    return Hypergraph(3, 5, F32_EDGES)


def make_full_star(n: int) -> Hypergraph:
    """S_n: every triple through vertex 0."""
    _require(n >= 1, f"star needs n >= 1, got {n}")
    return Hypergraph.from_masks(
        3, n, (1 | mask_of(pair) for pair in itertools.combinations(range(1, n), 2))
    )


def g1_size(n: int) -> int:
    _require(n >= 3, f"G1 needs n >= 3, got {n}")
    a = n // 3
    return a * math.comb(n - a, 2)


def g2_size(n: int) -> int:
    return blowup_counts(make_g26(), g2_part_sizes(n))[0]


def perturbed_near_extremal(kind: str, n: int, eps: float, seed: int) -> Hypergraph:
    """G1 or G2 on n vertices with random edges removed down to 2n^3/27 - eps n^3."""
    match kind:
        case "g1":
            graph = make_g1(n)
        case "g2":
            graph = make_g2(n)
        case _:
            raise ParameterError(f"unknown near-extremal construction {kind!r}")
    _require(eps >= 0, f"eps must be nonnegative, got {eps}")
    floor = math.ceil(2 * n**3 / 27 - eps * n**3)
    removable = max(0, len(graph) - max(floor, 0))
    rng = random.Random(seed)
    dropped = rng.sample(sorted(graph.masks), removable)
    return Hypergraph.from_masks(3, n, graph.masks.difference(dropped))


def random_hypergraph(n: int, p: float, rng: random.Random, r: int = 3) -> Hypergraph:
    """Each r-subset independently with probability p."""
    _require(0 <= p <= 1, f"edge probability must lie in [0, 1], got {p}")
    return Hypergraph.from_masks(
        r, n, (mask_of(c) for c in itertools.combinations(range(n), r) if rng.random() < p)
    )


def random_semibipartite(n: int, p: float, rng: random.Random) -> Hypergraph:
    """Random subgraph of G1 over a random side A."""
    side_a = {v for v in range(n) if rng.random() < 1 / 3}
    return Hypergraph.from_masks(
        3,
        n,
        (
            mask_of(c)
            for c in itertools.combinations(range(n), 3)
            if sum(v in side_a for v in c) == 1 and rng.random() < p
        ),
    )


def random_g26_colorable(n: int, p: float, rng: random.Random) -> Hypergraph:
    """Random subgraph of a G26 blowup over a uniformly random coloring."""
    g26 = make_g26()
    color = [rng.randrange(6) for _ in range(n)]
    return Hypergraph.from_masks(
        3,
        n,
        (
            mask_of(c)
            for c in itertools.combinations(range(n), 3)
            if mask_of(color[v] for v in c) in g26.masks
            and len({color[v] for v in c}) == 3
            and rng.random() < p
        ),
    )
