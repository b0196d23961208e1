"""
Symmetrization with and without cleaning on small hand-checked inputs.
"""
from fractions import Fraction

import pytest

from src.application.dtos import EventKind
from src.application.exceptions import (
    InvariantViolationError,
    ParameterError,
    TraceMismatchError,
)
from src.infrastructure.core.constructions import make_g1, make_g26, perturbed_near_extremal
from src.infrastructure.core.hypergraph import Hypergraph, complete
from src.infrastructure.core.symmetrize import (
    RemovalPoset,
    algorithm1,
    algorithm2,
    as_blowup,
    check_symmetrization_contracts,
    equivalence_classes,
    final_graph,
    is_class_replacement,
    replay,
    restrict_trace,
    select_pair,
    stability_diagnostic,
    symmetrize_step,
)

TWO_EDGES = Hypergraph(3, 5, [(0, 1, 2), (0, 3, 4)])
K4_MINUS = complete(4, 3).without_edges([(1, 2, 3)])


def test_equivalence_classes():
    assert equivalence_classes(TWO_EDGES) == [(0,), (1,), (2,), (3,), (4,)]
    step = Hypergraph(3, 5, [(0, 1, 2), (0, 2, 3)])
    assert equivalence_classes(step) == [(0,), (1, 3), (2,), (4,)]


def test_select_pair_prefers_high_degree_then_small_labels():
    classes = equivalence_classes(TWO_EDGES)
    assert select_pair(TWO_EDGES, TWO_EDGES.vertex_mask, classes) == (1, 3)
    step = Hypergraph(3, 5, [(0, 1, 2), (0, 2, 3)])
    assert select_pair(step, step.vertex_mask, equivalence_classes(step)) == (0, 4)
    g26 = make_g26()
    assert select_pair(g26, g26.vertex_mask, equivalence_classes(g26)) is None


def test_symmetrize_step_copies_links():
    assert symmetrize_step(TWO_EDGES, 1, [3]).edges == ((0, 1, 2), (0, 2, 3))


def test_algorithm1_worked_example():
    trace = algorithm1(TWO_EDGES)
    symmetrize_events = [(e.source, e.replaced_class) for e in trace.events]
    assert symmetrize_events == [(1, [3]), (0, [4])]
    assert all(e.kind is EventKind.SYMMETRIZE for e in trace.events)
    assert trace.final.edges == [(0, 1, 2), (0, 2, 3), (1, 2, 4), (2, 3, 4)]
    assert trace.min_degree_trajectory == [1, 0, 2]
    assert trace.final_vertices == [0, 1, 2, 3, 4]

    final = trace.final.to_hypergraph()
    assert equivalence_classes(final) == [(0, 4), (1, 3), (2,)]
    pattern, sizes, order = as_blowup(final)
    assert pattern.edges == ((0, 1, 2),)
    assert sizes == (2, 2, 1)
    assert order == (0, 4, 1, 3, 2)
    assert check_symmetrization_contracts(TWO_EDGES, trace)


def test_algorithm1_leaves_2_covered_graphs_alone():
    trace = algorithm1(make_g26())
    assert trace.events == []
    assert trace.final.to_hypergraph() == make_g26()


def test_algorithm1_is_deterministic():
    assert algorithm1(TWO_EDGES) == algorithm1(TWO_EDGES)


def test_replay_rebuilds_every_step():
    trace = algorithm1(TWO_EDGES)
    steps = replay(TWO_EDGES, trace)
    assert len(steps) == len(trace.removed_snapshots) == 3
    assert steps[0] == TWO_EDGES
    assert steps[1].edges == ((0, 1, 2), (0, 2, 3))
    assert steps[-1] == trace.final.to_hypergraph()
    assert all(is_class_replacement(a, b) for a, b in zip(steps, steps[1:]))
    assert not is_class_replacement(steps[0], steps[2])


def test_algorithm2_initial_cleaning():
    trace = algorithm2(K4_MINUS, 1)
    assert [(e.kind, e.vertex) for e in trace.events] == [(EventKind.INITIAL_REMOVE, 1)]
    assert trace.final_vertices == [0, 2, 3]
    assert trace.final.edges == [(0, 2, 3)]
    assert trace.removed_snapshots == [[1]]
    assert trace.min_degree_trajectory == [1]
    assert final_graph(trace).edges == ((0, 1, 2),)
    assert trace.alpha is not None and trace.alpha.to_fraction() == 1


def test_algorithm2_without_threshold_matches_algorithm1():
    plain = algorithm1(TWO_EDGES)
    cleaned = algorithm2(TWO_EDGES, 0)
    assert cleaned.events == plain.events
    assert cleaned.final == plain.final
    assert cleaned.min_degree_trajectory == plain.min_degree_trajectory


@pytest.mark.parametrize("alpha", [2, -0.1, "abc", "1/0"])
def test_algorithm2_rejects_bad_threshold(alpha):
    with pytest.raises(ParameterError):
        algorithm2(TWO_EDGES, alpha)


def test_algorithm2_accepts_rational_strings():
    assert algorithm2(K4_MINUS, "1/3").alpha.to_fraction() == Fraction(1, 3)


def test_restrict_trace():
    trace = algorithm2(K4_MINUS, 1)
    restricted = restrict_trace(K4_MINUS, trace, [0, 2, 3])
    assert [h.edges for h in restricted] == [((0, 1, 2),)]
    with pytest.raises(TraceMismatchError):
        restrict_trace(K4_MINUS, trace, [0, 1])


def test_removal_poset():
    poset = RemovalPoset(0b1111)
    poset.add_relations([1], [2])
    poset.add_relations([2], [3])
    assert poset.precedes(1, 2) and poset.precedes(1, 3)
    assert not poset.precedes(3, 1)
    assert poset.minimal([1, 2, 3]) == [1]
    poset.remove(1)
    assert poset.minimal([2, 3]) == [2]
    with pytest.raises(InvariantViolationError):
        poset.add_relations([3], [2])


def test_stability_diagnostic_on_g1():
    report = stability_diagnostic(make_g1(9), 0.01)
    assert report.removed == 0
    assert report.final_vertices == 9
    assert report.final_edges == 45
    assert report.final_semibipartite
    assert report.contracts_hold


def test_stability_diagnostic_on_perturbed_g1():
    graph = perturbed_near_extremal("g1", 12, 0.01, seed=1)
    report = stability_diagnostic(graph, 0.01)
    assert report.edges == 111
    assert report.contracts_hold
    assert report.removed == report.n - report.final_vertices


@pytest.mark.parametrize("eps", [0, 1, -0.5])
def test_stability_diagnostic_rejects_eps(eps):
    with pytest.raises(ParameterError):
        stability_diagnostic(make_g1(9), eps)
