import pytest
from hypothesis import given, settings

from app.domain.exceptions import DigraphError, InvalidDigraphError, VertexError
from app.domain.services.connectivity import (
    is_k_strong,
    is_strong,
    is_strong_after_removal,
    is_unilateral,
    max_internally_disjoint_paths,
    minimum_separator,
    reachable_from,
    strong_components,
    vertex_connectivity,
)
from app.domain.services.constructions import darbinyan_counterexample, thomassen_refutation
from app.domain.services.digraph_ops import (
    complete_digraph,
    directed_cycle,
    directed_path,
    empty_digraph,
    make_digraph,
)

from .oracles import connectivity_by_separators, strong_component_sets
from .strategies import digraphs


def test_triangle_is_strong(triangle):
    assert is_strong(triangle)
    assert strong_components(triangle).components == ((0, 1, 2),)


def test_path_components_in_topological_order():
    report = strong_components(directed_path(3))
    assert not report.is_strong
    assert report.components == ((0,), (1,), (2,))
    assert report.component_count == 3
    assert report.is_unilateral


def test_condensation_order_follows_arcs_not_ids():
    d = make_digraph(4, [(3, 2), (2, 1), (1, 0)])
    assert strong_components(d).components == ((3,), (2,), (1,), (0,))


def test_two_isolated_vertices_are_not_unilateral():
    assert not is_unilateral(empty_digraph(2))


def test_single_vertex_is_strong():
    assert is_strong(empty_digraph(1))


@given(digraphs())
def test_components_match_networkx(d):
    report = strong_components(d)
    assert {frozenset(c) for c in report.components} == strong_component_sets(d)


@given(digraphs())
def test_no_arc_goes_back_in_the_condensation(d):
    report = strong_components(d)
    for u, v in d.arcs():
        assert report.component_of(u) <= report.component_of(v)


@given(digraphs(min_order=1, max_order=5))
def test_unilateral_means_every_pair_joined_one_way(d):
    joined = all(
        reachable_from(d, x) >> y & 1 or reachable_from(d, y) >> x & 1
        for x in d.vertices for y in d.vertices
    )
    assert is_unilateral(d) == bool(joined)


def test_reachability_respects_restriction():
    d = directed_path(4)
    assert reachable_from(d, 0) == 0b1111
    assert reachable_from(d, 0, within=0b0011) == 0b0011
    assert reachable_from(d, 3, reverse=True) == 0b1111


def test_disjoint_paths_in_complete_digraph():
    d = complete_digraph(4)
    assert max_internally_disjoint_paths(d, 0, 1) == 3
    assert max_internally_disjoint_paths(d, 0, 1, limit=1) == 1


def test_disjoint_paths_rejects_equal_ends(triangle):
    with pytest.raises(VertexError):
        max_internally_disjoint_paths(triangle, 1, 1)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_complete_digraph_connectivity(n):
    assert vertex_connectivity(complete_digraph(n)) == n - 1


def test_cycle_and_path_connectivity():
    assert vertex_connectivity(directed_cycle(5)) == 1
    assert vertex_connectivity(directed_path(3)) == 0


def test_connectivity_needs_two_vertices():
    with pytest.raises(InvalidDigraphError):
        vertex_connectivity(empty_digraph(1))


@pytest.mark.parametrize("n", [8, 9, 10])
def test_counterexample_is_exactly_2_strong(n):
    d = darbinyan_counterexample(n)
    assert vertex_connectivity(d) == 2
    assert is_k_strong(d, 2)
    assert not is_k_strong(d, 3)


def test_refutation_is_3_strong():
    assert is_k_strong(thomassen_refutation(9).digraph, 3)


def test_k_strong_needs_enough_vertices():
    assert is_k_strong(complete_digraph(4), 3)
    assert not is_k_strong(complete_digraph(4), 4)
    with pytest.raises(DigraphError):
        is_k_strong(complete_digraph(4), 0)


@settings(max_examples=60, deadline=None)
@given(digraphs(min_order=2, max_order=6))
def test_connectivity_matches_separator_definition(d):
    assert vertex_connectivity(d) == connectivity_by_separators(d)


@settings(max_examples=40, deadline=None)
@given(digraphs(min_order=2, max_order=5))
def test_k_strong_agrees_with_connectivity(d):
    kappa = vertex_connectivity(d)
    for k in range(1, d.n):
        assert is_k_strong(d, k) == (k <= kappa)


def test_minimum_separator():
    assert minimum_separator(directed_path(3)) == ()
    assert minimum_separator(directed_cycle(4)) == (0,)
    assert minimum_separator(complete_digraph(4)) is None
    assert not is_strong_after_removal(directed_cycle(4), [0])
    assert is_strong_after_removal(complete_digraph(4), [0, 1])


def test_connectivity_report_can_carry_kappa(triangle):
    assert strong_components(triangle, with_connectivity=True).vertex_connectivity == 1
