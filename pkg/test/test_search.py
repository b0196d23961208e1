"""
Exhaustive search for ex(n, family) on small ground sets.
"""
import itertools
import random
from fractions import Fraction

import pytest

from src.application.exceptions import ParameterError
from src.configs import SearchConfig
from src.infrastructure.core.constructions import make_g26, make_k53_minus
from src.infrastructure.core.containment import is_isomorphic
from src.infrastructure.core.families import ExplicitFamily, MFamily
from src.infrastructure.core.family_m import is_m_free
from src.infrastructure.core.hypergraph import Hypergraph, complete, mask_of
from src.infrastructure.core.search import FreeEdgeSearch, upper_bound_m_free


@pytest.mark.parametrize("n, expected", [(0, 0), (3, 1), (4, 4), (5, 8)])
def test_small_values(search, n, expected):
    result = search.max_free_edges(n, search.family_m())
    assert result.optimal
    assert result.max_edges == expected
    witness = result.witness.to_hypergraph()
    assert len(witness) == expected
    assert is_m_free(witness) is None


def test_k5_minus_family_matches_m_on_five_vertices(search):
    result = search.max_free_edges(5, ExplicitFamily([make_k53_minus()], name="k53minus"))
    assert result.optimal and result.max_edges == 8
    assert result.upper_bound is None


def test_single_member_family(search):
    assert search.max_free_edges(4, ExplicitFamily([complete(4, 3)])).max_edges == 3
    assert search.max_free_edges(4, ExplicitFamily([Hypergraph(3, 3, [(0, 1, 2)])])).max_edges == 0


def test_order_and_symmetry_do_not_change_the_value(search):
    order = list(itertools.combinations(range(5), 3))
    random.Random(2).shuffle(order)
    shuffled = search.max_free_edges(5, search.family_m(), order=order)
    plain = search.max_free_edges(5, search.family_m(), symmetry_pruning=False)
    assert shuffled.max_edges == plain.max_edges == 8


def test_budget_exhaustion_is_reported(search):
    result = search.max_free_edges(5, search.family_m(), budget=5)
    assert not result.optimal
    assert result.nodes_expanded > 5
    assert result.max_edges < 8


def test_parameter_checks():
    search = FreeEdgeSearch(SearchConfig(MAX_N_FAMILY_M=6))
    with pytest.raises(ParameterError):
        search.max_free_edges(7, search.family_m())
    with pytest.raises(ParameterError):
        search.max_free_edges(4, search.family_m(), order=[(0, 1, 2)])
    with pytest.raises(ParameterError):
        search.max_free_edges(-1, search.family_m())


def test_upper_bound():
    assert upper_bound_m_free(6) == 16
    assert upper_bound_m_free(4) == Fraction(128, 27)
    with pytest.raises(ParameterError):
        upper_bound_m_free(0)


def test_incremental_violation_detection():
    family = MFamily()
    k5 = complete(5, 3)
    assert family.violation_with(k5, mask_of((0, 1, 2)))
    assert not family.violation_with(make_g26(), mask_of((0, 1, 3)))


@pytest.mark.slow
def test_six_vertices_gives_g26(search):
    result = search.max_free_edges(6, search.family_m())
    assert result.optimal
    assert result.max_edges == 16
    assert result.upper_bound is not None and result.upper_bound.to_fraction() == 16
    assert is_isomorphic(result.witness.to_hypergraph(), make_g26())
