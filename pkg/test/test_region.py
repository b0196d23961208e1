"""
Feasible-region points, induced K4^- counts and the edit-distance bound.
"""
import itertools
import math
from fractions import Fraction

import pytest

from src.application.exceptions import ParameterError
from src.infrastructure.core.constructions import (
    g1_pattern,
    make_g1,
    make_g2,
    make_g26,
    make_k53_minus,
    make_kostochka,
)
from src.infrastructure.core.hypergraph import Hypergraph, blowup, complete
from src.infrastructure.core.region import (
    G1_TARGET,
    G2_TARGET,
    blowup_region_point,
    convergence_table,
    count_induced_k43_minus,
    edit_distance_lower_bound,
    kostochka_complement_family,
    phi_formula,
    region_point,
    shadow_regime,
)


def test_region_point_of_g26():
    point = region_point(make_g26())
    assert point.shadow_density.to_fraction() == 1
    assert point.edge_density.to_fraction() == Fraction(4, 5)


def test_blowup_point_matches_materialized_graph():
    for sizes in [(1, 2, 3, 1, 2, 3), (2, 2, 2, 2, 2, 2)]:
        assert blowup_region_point(make_g26(), sizes) == region_point(blowup(make_g26(), sizes))
    pattern, sizes = g1_pattern(12)
    assert blowup_region_point(pattern, sizes) == region_point(make_g1(12))


def test_g1_point_at_sixty():
    point = blowup_region_point(*g1_pattern(60))
    assert point.shadow_density.to_fraction() == Fraction(1580, 1770)
    assert point.edge_density.to_fraction() == Fraction(20 * math.comb(40, 2), math.comb(60, 3))


@pytest.mark.parametrize(
    "graph, expected",
    [
        (complete(4, 3).without_edges([(1, 2, 3)]), 1),
        (complete(4, 3), 0),
        (make_k53_minus(), 2),
        (Hypergraph(3, 6), 0),
    ],
)
def test_count_induced_k43_minus(graph, expected):
    assert count_induced_k43_minus(graph) == expected


def test_count_rejects_other_uniformities():
    with pytest.raises(ParameterError):
        count_induced_k43_minus(complete(4, 2))


@pytest.mark.parametrize("n", [6, 9, 12])
def test_phi_matches_kostochka_counts(n):
    for m in range(n // 3 + 1):
        assert count_induced_k43_minus(make_kostochka(n, m)) == phi_formula(n, m), f"G({n}, {m})"


def test_phi_values_and_errors():
    assert phi_formula(6, 0) == phi_formula(6, 1) == 0
    assert phi_formula(9, 1) == 3
    assert phi_formula(12, 2) == 12
    for n, m in [(10, 1), (9, 4), (9, -1)]:
        with pytest.raises(ParameterError):
            phi_formula(n, m)


def test_edit_distance_lower_bound():
    assert edit_distance_lower_bound(make_kostochka(9, 1), make_kostochka(9, 0)) == Fraction(1, 2)
    assert edit_distance_lower_bound(make_kostochka(12, 2), make_kostochka(12, 0)) == Fraction(4, 3)
    with pytest.raises(ParameterError):
        edit_distance_lower_bound(make_kostochka(9, 1), make_kostochka(12, 1))
    with pytest.raises(ParameterError):
        edit_distance_lower_bound(Hypergraph(3, 3), Hypergraph(3, 3))


def test_kostochka_complements():
    family = kostochka_complement_family(9, range(4))
    assert len(family) == 4
    assert all(len(g) == math.comb(9, 3) - 30 for g in family)


def test_shadow_regime():
    semi = shadow_regime(make_g1(30))
    assert semi.regime == "semibipartite"
    assert semi.shadow_size == 390
    g26 = shadow_regime(make_g2(30))
    assert g26.regime == "g26"
    assert g26.shadow_size == 375
    assert g26.g26_gap.to_fraction() == 0


def test_convergence_towards_targets():
    rows = convergence_table([60, 120, 240])
    assert [(row.construction, row.n) for row in rows] == [
        ("g1", 60), ("g2", 60), ("g1", 120), ("g2", 120), ("g1", 240), ("g2", 240),
    ]
    for name, target in [("g1", G1_TARGET), ("g2", G2_TARGET)]:
        distances = [row.distance for row in rows if row.construction == name]
        assert all(a >= b for a, b in itertools.pairwise(distances)), name
        assert distances[-1] < 0.01
        assert rows[0 if name == "g1" else 1].target_shadow.to_fraction() == target[0]
