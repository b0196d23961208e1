"""
Uniform hypergraph kernel.

Edges are stored twice: as sorted vertex tuples in lexicographic order (the
canonical order used for every emitted set) and as integer bit masks over the
vertex labels, which is what containment, link and shadow work on.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator, Sequence
from fractions import Fraction
from functools import cached_property
from typing import TypeAlias

import networkx as nx
import numpy as np

from src.application.exceptions import (
    InvalidHypergraphError,
    ParameterError,
    SimplexPointError,
    VertexOutOfRangeError,
)

Edge: TypeAlias = tuple[int, ...]
VertexMap: TypeAlias = dict[int, int]

SIMPLEX_TOLERANCE = 1e-12


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> Edge:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Hypergraph:
    """An r-uniform hypergraph on the labeled ground set {0, ..., n-1}.

    Values are immutable; every operation returns a new hypergraph.
    """

    def __init__(self, r: int, n: int, edges: Iterable[Iterable[int]] = ()):
        if r < 0:
            raise InvalidHypergraphError(f"uniformity must be nonnegative, got {r}")
        if n < 0:
            raise InvalidHypergraphError(f"vertex count must be nonnegative, got {n}")
        masks: set[int] = set()
        for raw in edges:
            edge = tuple(raw)
            if len(set(edge)) != len(edge) or len(edge) != r:
                raise InvalidHypergraphError(
                    f"edge {edge} must have exactly {r} distinct vertices"
                )
            for v in edge:
                if not 0 <= v < n:
                    raise VertexOutOfRangeError(v, n)
            mask = mask_of(edge)
            if mask in masks:
                raise InvalidHypergraphError(f"duplicate edge {tuple(sorted(edge))}")
            masks.add(mask)
        self._init(r, n, frozenset(masks))

    @classmethod
    def from_masks(cls, r: int, n: int, masks: Iterable[int]) -> Hypergraph:
        """Trusted constructor for masks already known to be valid r-sets below n."""
        graph = cls.__new__(cls)
        graph._init(r, n, frozenset(masks))
        return graph

    def _init(self, r: int, n: int, masks: frozenset[int]) -> None:
        self._r = r
        self._n = n
        self._masks = masks

    @property
    def r(self) -> int:
        return self._r

    @property
    def n(self) -> int:
        return self._n

    @property
    def masks(self) -> frozenset[int]:
        return self._masks

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(vertices_of(m) for m in self._masks))

    def __len__(self) -> int:
        return len(self._masks)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, edge: object) -> bool:
        if isinstance(edge, int):
            return edge in self._masks
        if isinstance(edge, Iterable):
            return mask_of(edge) in self._masks
        return False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self._r, self._n, self._masks) == (other._r, other._n, other._masks)

    def __hash__(self) -> int:
        return hash((self._r, self._n, self._masks))

    def __repr__(self) -> str:
        return f"Hypergraph(r={self._r}, n={self._n}, edges={len(self._masks)})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise VertexOutOfRangeError(v, self._n)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        counts = [0] * self._n
        for mask in self._masks:
            for v in vertices_of(mask):
                counts[v] += 1
        return tuple(counts)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Per vertex, the mask of vertices sharing at least one edge with it."""
        adj = [0] * self._n
        for mask in self._masks:
            for v in vertices_of(mask):
                adj[v] |= mask
        return tuple(a & ~(1 << v) for v, a in enumerate(adj))

    @cached_property
    def link_masks(self) -> tuple[frozenset[int], ...]:
        links: list[set[int]] = [set() for _ in range(self._n)]
        for mask in self._masks:
            for v in vertices_of(mask):
                links[v].add(mask ^ (1 << v))
        return tuple(frozenset(link) for link in links)

    def link(self, v: int) -> Hypergraph:
        self._check_vertex(v)
        return Hypergraph.from_masks(self._r - 1, self._n, self.link_masks[v])

    def shadow(self) -> Hypergraph:
        if self._r == 0:
            return Hypergraph.from_masks(0, self._n, ())
        shadow: set[int] = set()
        for mask in self._masks:
            for v in vertices_of(mask):
                shadow.add(mask ^ (1 << v))
        return Hypergraph.from_masks(self._r - 1, self._n, shadow)

    def neighborhood(self, vertices: Iterable[int]) -> frozenset[int]:
        subset = mask_of(vertices)
        if subset & ~self.vertex_mask:
            raise VertexOutOfRangeError(vertices_of(subset & ~self.vertex_mask)[0], self._n)
        found = 0
        for mask in self._masks:
            if mask & subset == subset:
                found |= mask
        return frozenset(vertices_of(found & ~subset))

    def induced(self, vertices: Iterable[int]) -> Hypergraph:
        """H[S] relabeled onto {0, ..., |S|-1} preserving the order of S."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        subset = mask_of(keep)
        position = {v: i for i, v in enumerate(keep)}
        masks = (
            mask_of(position[v] for v in vertices_of(mask))
            for mask in self._masks
            if mask & subset == mask
        )
        return Hypergraph.from_masks(self._r, len(keep), masks)

    def complement(self) -> Hypergraph:
        return Hypergraph.from_masks(
            self._r,
            self._n,
            (
                mask
                for mask in (mask_of(c) for c in itertools.combinations(range(self._n), self._r))
                if mask not in self._masks
            ),
        )

    def relabel(self, permutation: Sequence[int]) -> Hypergraph:
        """Image of H under vertex v -> permutation[v]."""
        if sorted(permutation) != list(range(self._n)):
            raise ParameterError("relabeling must be a permutation of the ground set")
        return Hypergraph.from_masks(
            self._r,
            self._n,
            (mask_of(permutation[v] for v in vertices_of(mask)) for mask in self._masks),
        )

    def with_edges(self, edges: Iterable[Iterable[int]]) -> Hypergraph:
        extra = Hypergraph(self._r, self._n, edges)
        return Hypergraph.from_masks(self._r, self._n, self._masks | extra.masks)

    def without_edges(self, edges: Iterable[Iterable[int]]) -> Hypergraph:
        drop = {mask_of(e) for e in edges}
        return Hypergraph.from_masks(self._r, self._n, self._masks - drop)

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, d in enumerate(self.degrees) if d == 0)

    def non_isolated_mask(self) -> int:
        covered = 0
        for mask in self._masks:
            covered |= mask
        return covered

    def edges_inside(self, subset: int) -> list[int]:
        return [mask for mask in self._masks if mask & subset == mask]


def complete(n: int, r: int) -> Hypergraph:
    return Hypergraph.from_masks(
        r, n, (mask_of(c) for c in itertools.combinations(range(n), r))
    )


def is_2_covered(graph: Hypergraph) -> bool:
    full = graph.vertex_mask
    return all(adj | (1 << v) == full for v, adj in enumerate(graph.adjacency))


def is_star(graph: Hypergraph) -> int | None:
    """A vertex common to all edges; the smallest label for an edgeless graph."""
    if not graph.masks:
        return 0 if graph.n >= 1 else None
    common = graph.vertex_mask
    for mask in graph.masks:
        common &= mask
    if not common:
        return None
    return (common & -common).bit_length() - 1


def transversal(graph: Hypergraph) -> int:
    """Exact transversal number by bounded branching on an unhit edge."""
    edges = sorted(graph.masks)

    def coverable(hit: int, budget: int) -> bool:
        for mask in edges:
            if not mask & hit:
                if budget == 0:
                    return False
                return any(coverable(hit | (1 << v), budget - 1) for v in vertices_of(mask))
        return True

    for size in range(graph.n + 1):
        if coverable(0, size):
            return size
    return graph.n


def transversal_bruteforce(graph: Hypergraph) -> int:
    for size in range(graph.n + 1):
        for combo in itertools.combinations(range(graph.n), size):
            hit = mask_of(combo)
            if all(mask & hit for mask in graph.masks):
                return size
    return graph.n


def blowup(pattern: Hypergraph, part_sizes: Sequence[int]) -> Hypergraph:
    """T(t): vertex i becomes a consecutive block of t_i vertices."""
    _check_part_sizes(pattern, part_sizes)
    offsets = [0, *itertools.accumulate(part_sizes)]
    blocks = [range(offsets[i], offsets[i + 1]) for i in range(pattern.n)]
    masks = (
        mask_of(choice)
        for edge in pattern.edges
        for choice in itertools.product(*(blocks[i] for i in edge))
    )
    return Hypergraph.from_masks(pattern.r, offsets[-1], masks)


def blowup_counts(pattern: Hypergraph, part_sizes: Sequence[int]) -> tuple[int, int]:
    """Edge count and shadow size of T(t) without materializing it.

    Shadow members of a blowup are exactly the (r-1)-sets taking one vertex from
    each of the parts of a pattern shadow member, so both counts are sums of
    products of part sizes.
    """
    _check_part_sizes(pattern, part_sizes)
    edges = sum(math.prod(part_sizes[i] for i in e) for e in pattern.edges)
    shadow = sum(math.prod(part_sizes[i] for i in s) for s in pattern.shadow().edges)
    return edges, shadow


def _check_part_sizes(pattern: Hypergraph, part_sizes: Sequence[int]) -> None:
    if len(part_sizes) != pattern.n:
        raise ParameterError(
            f"blowup needs {pattern.n} part sizes, got {len(part_sizes)}"
        )
    if any(t < 1 for t in part_sizes):
        raise ParameterError("blowup part sizes must be positive")


def twin_quotient(graph: Hypergraph) -> tuple[Hypergraph, tuple[int, ...]]:
    """Induced subgraph on one representative (smallest label) per link class.

    Vertices with equal links are never adjacent, so any edge-preserving
    coloring of the quotient extends to the full graph by copying colors.
    """
    seen: dict[frozenset[int], int] = {}
    for v in range(graph.n):
        seen.setdefault(graph.link_masks[v], v)
    representatives = tuple(sorted(seen.values()))
    return graph.induced(representatives), representatives


def shadow_clique_number(graph: Hypergraph) -> int:
    """Clique number of the 2-shadow (pairs lying in a common edge)."""
    if graph.n == 0:
        return 0
    pairs = nx.Graph()
    pairs.add_nodes_from(range(graph.n))
    pairs.add_edges_from(
        (u, v) for u in range(graph.n) for v in vertices_of(graph.adjacency[u]) if u < v
    )
    return max(len(clique) for clique in nx.find_cliques(pairs))


def check_simplex_point(n: int, weights: Sequence[float | Fraction] | np.ndarray) -> None:
    if len(weights) != n:
        raise SimplexPointError(f"point has dimension {len(weights)}, expected {n}")
    if any(w < 0 for w in weights):
        raise SimplexPointError("simplex point has a negative entry")
    total = sum(weights)
    if abs(total - 1) > SIMPLEX_TOLERANCE:
        raise SimplexPointError(f"simplex point sums to {float(total)!r}, not 1")


def weight_polynomial(
    graph: Hypergraph, weights: Sequence[float | Fraction] | np.ndarray
) -> float | Fraction:
    """p_H(x) = sum over edges of the product of their weights.

    Fractions in give an exact Fraction out.
    """
    check_simplex_point(graph.n, weights)
    exact = all(isinstance(w, (int, Fraction)) for w in weights)
    zero: float | Fraction = Fraction(0) if exact else 0.0
    values = list(weights) if exact else [float(w) for w in weights]
    return sum((math.prod(values[i] for i in edge) for edge in graph.edges), zero)


def canonical_form(graph: Hypergraph) -> tuple[int, ...]:
    """Smallest sorted mask tuple over all relabelings; for tiny ground sets only."""
    return min(
        tuple(sorted(mask_of(perm[v] for v in vertices_of(mask)) for mask in graph.masks))
        for perm in itertools.permutations(range(graph.n))
    )
