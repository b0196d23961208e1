from collections.abc import Sequence

from src.application.dtos import MViolationDTO, ViolationKind
from src.application.interfaces.family import IForbiddenFamily

from .coloring import is_embeddable
from .containment import contains_subgraph
from .family_m import (
    M3_CORE,
    contains_m1,
    contains_m2,
    contains_m3,
    core_vertex_bound,
    cores,
    is_m_free,
)
from .hypergraph import Hypergraph, popcount, vertices_of


class MFamily(IForbiddenFamily):
    name = "m"

    def __init__(self, max_n: int = 10):
        self._max_n = max_n

    def max_vertices(self) -> int | None:
        return self._max_n

    def find_violation(self, graph: Hypergraph) -> MViolationDTO | None:
        return is_m_free(graph)

    def violation_with(self, graph: Hypergraph, edge: int) -> bool:
        if contains_m1(graph, required=edge) is not None:
            return True
        pairs = [1 << u | 1 << v for u in vertices_of(edge) for v in vertices_of(edge) if u < v]
        if contains_m2(graph, required_pairs=pairs) is not None:
            return True
        if popcount(graph.non_isolated_mask()) > core_vertex_bound(M3_CORE):
            return contains_m3(graph, minimize=False) is not None
        if next(cores(graph, M3_CORE), None) is None:
            return False
        return is_embeddable(graph) is None


class ExplicitFamily(IForbiddenFamily):
    """A finite list of forbidden subgraphs tested by direct containment."""

    def __init__(self, members: Sequence[Hypergraph], name: str = "custom"):
        self.members = tuple(members)
        self.name = name

    def _violation(self, member: Hypergraph, graph: Hypergraph, anchor: int | None) -> MViolationDTO | None:
        image = contains_subgraph(member, graph, anchor=anchor)
        if image is None:
            return None
        return MViolationDTO(
            kind=ViolationKind.MEMBER,
            core=sorted(image.values()),
            witness_edges=sorted(
                tuple(sorted(image[v] for v in edge)) for edge in member.edges
            ),
        )

    def find_violation(self, graph: Hypergraph) -> MViolationDTO | None:
        for member in self.members:
            found = self._violation(member, graph, anchor=None)
            if found is not None:
                return found
        return None

    def violation_with(self, graph: Hypergraph, edge: int) -> bool:
        return any(
            self._violation(member, graph, anchor=edge) is not None
            for member in self.members
            if member.masks
        )
