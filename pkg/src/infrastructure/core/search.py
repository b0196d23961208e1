import itertools
from collections.abc import Sequence
from fractions import Fraction

import structlog

from src.application.dtos import HypergraphDTO, RationalDTO, SearchResultDTO
from src.application.exceptions import ParameterError
from src.application.interfaces.family import IForbiddenFamily
from src.configs import SearchConfig

from .families import MFamily
from .hypergraph import Hypergraph, mask_of

logger = structlog.get_logger(__name__)


def upper_bound_m_free(n: int) -> Fraction:
    """2 n^3 / 27, the upper bound on ex(n, M)."""
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    return Fraction(2 * n**3, 27)


class _Incumbent:
    def __init__(self, r: int, n: int, budget: int):
        self.best = Hypergraph.from_masks(r, n, ())
        self.nodes = 0
        self.budget = budget
        self.exhausted = False

    def offer(self, graph: Hypergraph) -> None:
        if len(graph) > len(self.best):
            self.best = graph
            logger.info("search.incumbent", edges=len(graph), nodes=self.nodes)

    def tick(self) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            self.exhausted = True
        return not self.exhausted


class FreeEdgeSearch:
    """Branch and bound over candidate triples, include branch first."""

    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg

    def family_m(self) -> MFamily:
        return MFamily(max_n=self.cfg.MAX_N_FAMILY_M)

    def max_free_edges(
        self,
        n: int,
        family: IForbiddenFamily,
        r: int = 3,
        budget: int | None = None,
        symmetry_pruning: bool | None = None,
        order: Sequence[Sequence[int]] | None = None,
    ) -> SearchResultDTO:
        """ex(n, family) when the result is optimal, best found so far otherwise.

        :param order: candidate edges in the order to branch on; lexicographic by default
        """
        if n < 0:
            raise ParameterError(f"n must be nonnegative, got {n}")
        limit = family.max_vertices()
        if limit is not None and n > limit:
            raise ParameterError(f"family {family.name!r} is searched up to n = {limit}")
        budget = self.cfg.NODE_BUDGET if budget is None else budget
        symmetry = self.cfg.SYMMETRY_PRUNING if symmetry_pruning is None else symmetry_pruning

        if order is None:
            candidates = [mask_of(c) for c in itertools.combinations(range(n), r)]
        else:
            candidates = [mask_of(c) for c in order]
            if sorted(candidates) != sorted(mask_of(c) for c in itertools.combinations(range(n), r)):
                raise ParameterError("candidate order must list every r-subset exactly once")

        state = _Incumbent(r, n, budget)
        total = len(candidates)

        def descend(i: int, graph: Hypergraph) -> None:
            if not state.tick():
                return
            state.offer(graph)
            if i == total or len(graph) + total - i <= len(state.best):
                return
            edge = candidates[i]
            grown = Hypergraph.from_masks(r, n, graph.masks | {edge})
            if not family.violation_with(grown, edge):
                descend(i + 1, grown)
            if symmetry and i == 0:
                # any nonempty graph can be relabeled to contain the first candidate
                return
            descend(i + 1, graph)

        descend(0, state.best)

        result = SearchResultDTO(
            n=n,
            family=family.name,
            max_edges=len(state.best),
            witness=HypergraphDTO.of(state.best),
            nodes_expanded=state.nodes,
            optimal=not state.exhausted,
            upper_bound=RationalDTO.of(upper_bound_m_free(n)) if isinstance(family, MFamily) and n else None,
        )
        logger.info(
            "search.finished",
            n=n,
            family=family.name,
            max_edges=result.max_edges,
            nodes=result.nodes_expanded,
            optimal=result.optimal,
        )
        return result
