"""
Backtracking search for subgraph embeddings and homomorphisms.

Pattern vertices are mapped in order of descending degree (ties: smaller
label). Candidates for a pattern vertex are intersected from the host
adjacency masks of its already mapped neighbours, and every pattern edge is
checked as soon as its last vertex is mapped.
"""

import itertools

from .hypergraph import Hypergraph, VertexMap, mask_of, vertices_of


def _vertex_order(pattern: Hypergraph, fixed: VertexMap) -> list[int]:
    degrees = pattern.degrees
    free = (v for v in range(pattern.n) if v not in fixed)
    return sorted(free, key=lambda v: (-degrees[v], v))


def _search(
    pattern: Hypergraph,
    host: Hypergraph,
    injective: bool,
    fixed: VertexMap,
) -> VertexMap | None:
    if injective and pattern.n > host.n:
        return None
    for p, h in fixed.items():
        if not 0 <= h < host.n:
            return None

    order = _vertex_order(pattern, fixed)
    rank = {v: -1 for v in fixed}
    rank.update({v: i for i, v in enumerate(order)})

    completed_at: list[list[tuple[int, ...]]] = [[] for _ in order]
    for edge in pattern.edges:
        last = max(rank[v] for v in edge)
        if last < 0:
            if mask_of(fixed[v] for v in edge) not in host.masks:
                return None
            continue
        completed_at[last].append(edge)

    p_adj = pattern.adjacency
    h_adj = host.adjacency
    p_deg = pattern.degrees
    h_deg = host.degrees
    mapping: VertexMap = dict(fixed)
    everything = host.vertex_mask

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        candidates = everything
        for q in vertices_of(p_adj[p]):
            image = mapping.get(q)
            if image is not None:
                candidates &= h_adj[image]
        if injective:
            candidates &= ~used
        for h in vertices_of(candidates):
            if injective and h_deg[h] < p_deg[p]:
                continue
            mapping[p] = h
            if all(
                mask_of(mapping[v] for v in edge) in host.masks for edge in completed_at[i]
            ) and extend(i + 1, used | (1 << h)):
                return True
        mapping.pop(p, None)
        return False

    used = mask_of(fixed.values())
    if injective and len(set(fixed.values())) != len(fixed):
        return None
    if extend(0, used):
        return dict(sorted(mapping.items()))
    return None


def contains_subgraph(
    pattern: Hypergraph,
    host: Hypergraph,
    anchor: int | None = None,
) -> VertexMap | None:
    """Injective edge-preserving map from pattern into host, or None.

    With ``anchor`` (a host edge mask) only embeddings whose image uses that
    edge are considered.
    """
    if pattern.r != host.r:
        return None
    if anchor is None:
        return _search(pattern, host, injective=True, fixed={})
    if anchor not in host.masks:
        return None
    targets = vertices_of(anchor)
    for edge in pattern.edges:
        for image in itertools.permutations(targets):
            found = _search(pattern, host, injective=True, fixed=dict(zip(edge, image)))
            if found is not None:
                return found
    return None


def homomorphism_exists(pattern: Hypergraph, host: Hypergraph) -> VertexMap | None:
    """Edge-preserving, not necessarily injective, map from pattern into host."""
    if pattern.r != host.r:
        return None
    if not pattern.masks:
        return {v: 0 for v in range(pattern.n)} if host.n or not pattern.n else None
    return _search(pattern, host, injective=False, fixed={})


def is_isomorphic(first: Hypergraph, second: Hypergraph) -> bool:
    if (first.r, first.n, len(first)) != (second.r, second.n, len(second)):
        return False
    return contains_subgraph(first, second) is not None
