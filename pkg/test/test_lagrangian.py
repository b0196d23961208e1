"""
Numeric Lagrangian lower bounds and exact lattice certificates.
"""
from fractions import Fraction

import numpy as np
import pytest

from src.application.exceptions import ParameterError, ResolutionTooCoarseError
from src.infrastructure.core.constructions import make_g26
from src.infrastructure.core.hypergraph import Hypergraph, complete
from src.infrastructure.core.lagrangian import (
    G26_LAGRANGIAN,
    lattice_correction,
    lattice_maximum,
    project_rows_to_simplex,
    star_lagrangian_bound,
    verify_five_vertex_family,
)


@pytest.mark.parametrize(
    "graph, expected",
    [
        (Hypergraph(3, 3, [(0, 1, 2)]), 1 / 27),
        (complete(4, 3), 1 / 16),
        (make_g26(), 2 / 27),
    ],
)
def test_lower_bound_values(solver, graph, expected):
    result = solver.lower(graph)
    assert result.lower_bound == pytest.approx(expected, abs=1e-9)
    assert sum(result.maximizer.weights) == pytest.approx(1.0)


def test_empty_graph_has_zero_lagrangian(solver):
    assert solver.lower(Hypergraph(3, 4)).lower_bound == 0.0
    with pytest.raises(ParameterError):
        solver.lower(Hypergraph(3, 0))


def test_lower_bound_is_deterministic(solver):
    first = solver.lower(make_g26(), seed=9)
    second = solver.lower(make_g26(), seed=9)
    assert first.maximizer.weights == second.maximizer.weights


def test_k4_certificate(solver):
    bound = solver.upper(complete(4, 3), resolution=40)
    assert bound.lattice_max.to_fraction() == Fraction(1, 16)
    assert bound.correction.to_fraction() == Fraction(3, 1600) + Fraction(4, 64000)
    assert bound.bound.to_fraction() >= Fraction(1, 16)
    assert solver.lower(complete(4, 3)).lower_bound <= bound.bound.value


def test_g26_certificate(solver):
    bound = solver.upper(make_g26(), resolution=30)
    assert bound.lattice_max.to_fraction() == G26_LAGRANGIAN
    assert lattice_maximum(make_g26(), 30) == 16 * 5**3


def test_certificate_errors(solver):
    with pytest.raises(ResolutionTooCoarseError):
        solver.upper(Hypergraph(3, 3, [(0, 1, 2)]), resolution=1)
    with pytest.raises(ParameterError):
        solver.upper(complete(9, 3), resolution=10)
    with pytest.raises(ParameterError):
        solver.upper(complete(4, 3), resolution=0)


def test_lattice_correction_closed_form():
    single = Hypergraph(3, 3, [(0, 1, 2)])
    assert lattice_correction(single, 10) == Fraction(1, 100) + Fraction(1, 1000)


def test_solve_with_certificate(solver):
    result = solver.solve(complete(4, 3), certify=True, resolution=40)
    assert result.certified_upper_bound is not None
    assert result.certified_upper_bound.resolution == 40


def test_blowup_bound(solver):
    assert solver.check_blowup_bound(make_g26(), [1, 2, 3, 1, 2, 3])
    assert solver.check_blowup_bound(complete(4, 3), [2, 2, 2, 2])


def test_star_bound():
    assert star_lagrangian_bound(3) == Fraction(1, 27)
    assert star_lagrangian_bound(10) < Fraction(2, 27)
    with pytest.raises(ParameterError):
        star_lagrangian_bound(2)


def test_projection_onto_simplex():
    points = np.array([[0.5, 0.5, 0.5], [2.0, -1.0, 0.0], [0.1, 0.2, 0.3]])
    projected = project_rows_to_simplex(points)
    assert np.allclose(projected.sum(axis=1), 1.0)
    assert (projected >= 0).all()
    assert np.allclose(projected[0], [1 / 3, 1 / 3, 1 / 3])


@pytest.mark.slow
def test_five_vertex_family(solver):
    sweep = verify_five_vertex_family(solver)
    assert sweep.instances == 1013
    assert sweep.eight_edge_classes == 2
    assert sweep.all_eight_edge_embed
    assert sweep.max_certified_bound.to_fraction() < G26_LAGRANGIAN
    assert sweep.passed, f"gap {sweep.min_gap.value} is below the margin"
