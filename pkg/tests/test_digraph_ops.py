import pytest
from hypothesis import given

from app.domain.exceptions import InvalidDigraphError, VertexError
from app.domain.models.digraph import Cycle, Path
from app.domain.services.constructions import darbinyan_counterexample
from app.domain.services.digraph_ops import (
    add_arcs,
    all_tournaments,
    are_adjacent,
    complete_digraph,
    converse,
    degree,
    degree_sequence,
    directed_cycle,
    directed_path,
    empty_digraph,
    induced,
    make_digraph,
    minimum_degree,
    missing_arcs,
    remove_vertices,
)

from .strategies import digraphs, digraphs_with_vertex


def test_make_digraph_triangle(triangle):
    assert triangle.n == 3
    assert triangle.arc_count == 3
    assert list(triangle.arcs()) == [(0, 1), (1, 2), (2, 0)]


def test_two_cycles_are_allowed(two_cycle):
    assert two_cycle.arc_count == 2
    assert two_cycle.has_arc(0, 1) and two_cycle.has_arc(1, 0)


def test_duplicate_arcs_collapse():
    assert make_digraph(2, [(0, 1), (0, 1)]).arc_count == 1


def test_loop_is_rejected_with_the_pair():
    with pytest.raises(InvalidDigraphError, match=r"\(0, 0\)"):
        make_digraph(3, [(0, 0)])


@pytest.mark.parametrize("arcs", [[(0, 3)], [(-1, 0)]])
def test_out_of_range_vertex_is_rejected(arcs):
    with pytest.raises(InvalidDigraphError):
        make_digraph(3, arcs)


def test_order_must_be_positive():
    with pytest.raises(InvalidDigraphError):
        make_digraph(0, [])


def test_label_count_must_match():
    with pytest.raises(InvalidDigraphError):
        make_digraph(2, [], labels=["a"])


def test_neighbours_ascending():
    d = make_digraph(4, [(0, 3), (0, 1), (2, 0), (3, 0)])
    assert d.out_neighbors(0) == [1, 3]
    assert d.in_neighbors(0) == [2, 3]


def test_degree_in_complete_digraph():
    report = degree(complete_digraph(4), 2)
    assert (report.out_deg, report.in_deg, report.total) == (3, 3, 6)


def test_degree_in_counterexample():
    d = darbinyan_counterexample(8)
    assert degree(d, 5).total == 8  # y1
    assert degree(d, 0).total == 4  # x0


def test_restricted_degree():
    d = complete_digraph(5)
    report = degree(d, 0, [1, 2])
    assert (report.out_deg, report.in_deg, report.total) == (2, 2, 4)
    assert report.restricted_to == (1, 2)


def test_degree_rejects_unknown_vertex(triangle):
    with pytest.raises(VertexError):
        degree(triangle, 3)
    with pytest.raises(VertexError):
        degree(triangle, 0, [5])


@given(digraphs_with_vertex())
def test_restricted_degree_never_exceeds_total(case):
    d, x = case
    full = degree(d, x)
    part = degree(d, x, [v for v in d.vertices if v % 2 == 0])
    assert full.total == full.out_deg + full.in_deg
    assert part.out_deg <= full.out_deg and part.in_deg <= full.in_deg


def test_induced_pair_of_triangle(triangle):
    sub, mapping = induced(triangle, [0, 1])
    assert list(sub.arcs()) == [(0, 1)]
    assert mapping == {0: 0, 1: 1}


@given(digraphs())
def test_induced_on_everything_is_identity(d):
    sub, mapping = induced(d, d.vertices)
    assert sub == d
    assert mapping == {v: v for v in d.vertices}


def test_removing_the_y_vertices_of_the_counterexample():
    d = darbinyan_counterexample(8)
    rest, mapping = remove_vertices(d, [5, 6, 7])
    assert rest.n == 5
    assert rest.arc_count == 15
    assert sorted(mapping) == [0, 1, 2, 3, 4]
    assert rest.label(0) == "x0"


def test_induced_rejects_foreign_or_empty_sets(triangle):
    with pytest.raises(VertexError):
        induced(triangle, [0, 7])
    with pytest.raises(VertexError):
        induced(triangle, [])


def test_converse_of_triangle(triangle):
    assert set(converse(triangle).arcs()) == {(0, 2), (2, 1), (1, 0)}


@given(digraphs())
def test_converse_is_an_involution(d):
    assert converse(converse(d)) == d


@given(digraphs())
def test_converse_keeps_total_degrees(d):
    assert degree_sequence(converse(d)) == degree_sequence(d)


def test_are_adjacent():
    d = directed_path(3)
    assert are_adjacent(d, 0, 1)
    assert are_adjacent(d, 1, 0)
    assert not are_adjacent(d, 0, 2)
    with pytest.raises(VertexError):
        are_adjacent(d, 1, 1)


def test_standard_families():
    assert complete_digraph(4).arc_count == 12
    assert directed_cycle(5).arc_count == 5
    assert directed_path(1).arc_count == 0
    assert empty_digraph(3).arc_count == 0
    with pytest.raises(InvalidDigraphError):
        directed_cycle(1)


def test_counterexample_missing_arcs():
    d = darbinyan_counterexample(8)
    assert d.arc_count == 33
    assert len(missing_arcs(d)) == 8 * 7 - 33 == 23


def test_add_arcs_returns_a_new_digraph(triangle):
    bigger = add_arcs(triangle, [(0, 2)])
    assert bigger.arc_count == 4
    assert triangle.arc_count == 3


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 8), (4, 64)])
def test_all_tournaments(n, count):
    tournaments = list(all_tournaments(n))
    assert len(tournaments) == count
    assert len(set(tournaments)) == count
    assert all(t.arc_count == n * (n - 1) // 2 for t in tournaments)


def test_minimum_degree():
    assert minimum_degree(directed_path(3)) == 1


def test_cycle_is_rotated_to_smallest_vertex():
    assert Cycle((2, 0, 1)).vertices == (0, 1, 2)
    assert Cycle((2, 0, 1)) == Cycle((1, 2, 0))


def test_path_and_cycle_reject_repeats():
    with pytest.raises(ValueError):
        Path((0, 1, 0))
    with pytest.raises(ValueError):
        Cycle((0,))


def test_path_validity(triangle):
    assert Path((0, 1, 2)).is_valid_in(triangle)
    assert not Path((0, 2)).is_valid_in(triangle)
    assert Path((0, 1, 2)).length == 2
