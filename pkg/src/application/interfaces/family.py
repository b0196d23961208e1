from abc import ABC, abstractmethod

from src.application.dtos import MViolationDTO
from src.infrastructure.core.hypergraph import Hypergraph


class IForbiddenFamily(ABC):
    """A forbidden family the edge-maximizing search can test against."""

    name: str

    @abstractmethod
    def find_violation(self, graph: Hypergraph) -> MViolationDTO | None:
        """
        First forbidden configuration contained in the whole graph.

        :param graph:
        :return: certificate, or None when the graph is free
        """

        raise NotImplementedError()

    @abstractmethod
    def violation_with(self, graph: Hypergraph, edge: int) -> bool:
        """
        Whether some forbidden configuration of the graph uses the given edge.

        The graph already contains the edge (bit mask); configurations avoiding
        it are assumed ruled out by earlier calls.

        :param graph:
        :param edge:
        :return:
        """

        raise NotImplementedError()

    def max_vertices(self) -> int | None:
        """Largest n the family supports in exact search, None when unbounded."""

        return None
