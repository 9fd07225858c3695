import pytest
from hypothesis import given, settings

from app.domain.exceptions import SolverLimitError, VertexError
from app.domain.models.digraph import Cycle, Path
from app.domain.services.constructions import darbinyan_counterexample, thomassen_refutation
from app.domain.services.digraph_ops import (
    all_tournaments,
    complete_digraph,
    directed_cycle,
    directed_path,
    empty_digraph,
    make_digraph,
)
from app.domain.services.ham_solver import (
    HamiltonianMode,
    count_hamiltonian,
    cycle_of_length_through,
    cycle_through,
    extend_path_max,
    hamiltonian_cycle,
    hamiltonian_path_between,
    hamiltonian_path_ends,
    insert_vertex,
    longest_cycle,
    strongly_hamiltonian_connected,
    weakly_hamiltonian_connected,
)
from app.domain.services.sampling import draw_digraph, make_rng

from . import oracles
from .strategies import digraphs


def test_triangle_is_hamiltonian(triangle):
    answer = hamiltonian_cycle(triangle)
    assert answer.found
    assert answer.witness == Cycle((0, 1, 2))
    assert answer.method == "subset-dp"


def test_two_cycle_is_hamiltonian(two_cycle):
    assert hamiltonian_cycle(two_cycle).witness == Cycle((0, 1))


def test_single_vertex_has_no_hamiltonian_cycle():
    answer = hamiltonian_cycle(empty_digraph(1))
    assert not answer.found and answer.witness is None


@pytest.mark.parametrize("n", [8, 9, 10])
def test_counterexample_is_not_hamiltonian(n):
    d = darbinyan_counterexample(n)
    assert not hamiltonian_cycle(d).found
    assert not hamiltonian_cycle(d, dp_limit=0).found


@settings(max_examples=80, deadline=None)
@given(digraphs(min_order=1, max_order=6))
def test_cycle_solvers_agree_with_enumeration(d):
    expected = oracles.count_cycles(d) > 0
    dp = hamiltonian_cycle(d)
    search = hamiltonian_cycle(d, dp_limit=0)
    assert dp.found == search.found == expected
    for answer in (dp, search):
        if answer.found:
            assert answer.witness.length == d.n
            assert answer.witness.is_valid_in(d)


@settings(max_examples=60, deadline=None)
@given(digraphs(min_order=2, max_order=6))
def test_path_solvers_agree_with_enumeration(d):
    for u in d.vertices:
        ends = hamiltonian_path_ends(d, u)
        for v in d.vertices:
            if u == v:
                continue
            expected = oracles.count_paths(d, u, v) > 0
            assert (v in ends) == expected
            search = hamiltonian_path_between(d, u, v, dp_limit=0)
            assert search.found == expected
            if search.found:
                path = search.witness
                assert (path.start, path.end, len(path)) == (u, v, d.n)
                assert path.is_valid_in(d)


@settings(max_examples=60, deadline=None)
@given(digraphs(min_order=2, max_order=6))
def test_counts_agree_with_enumeration(d):
    assert count_hamiltonian(d) == oracles.count_cycles(d)
    assert count_hamiltonian(d, HamiltonianMode.PATH, (0, d.n - 1)) == oracles.count_paths(d, 0, d.n - 1)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_tournaments_against_enumeration(n):
    for t in all_tournaments(n):
        cycles = oracles.count_cycles(t)
        assert count_hamiltonian(t) == cycles
        assert hamiltonian_cycle(t).found == (cycles > 0)
        assert hamiltonian_cycle(t, dp_limit=0).found == (cycles > 0)
        for u in t.vertices:
            ends = hamiltonian_path_ends(t, u)
            for v in t.vertices:
                if u == v:
                    continue
                expected = oracles.count_paths(t, u, v) > 0
                assert (v in ends) == expected
                assert hamiltonian_path_between(t, u, v, dp_limit=0).found == expected


@pytest.mark.slow
def test_solvers_agree_with_enumeration_on_seeded_digraphs():
    rng = make_rng(2024)
    for i in range(500):
        n = int(rng.integers(2, 8))
        d = draw_digraph(rng, n, float(rng.choice([0.3, 0.5, 0.7])))
        expected = oracles.count_cycles(d) > 0
        assert hamiltonian_cycle(d).found == expected, i
        assert hamiltonian_cycle(d, dp_limit=0).found == expected, i
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        expected = oracles.count_paths(d, u, v) > 0
        assert hamiltonian_path_between(d, u, v).found == expected, i
        assert hamiltonian_path_between(d, u, v, dp_limit=0).found == expected, i


def test_solvers_write_nothing_to_stdout(capsys):
    assert hamiltonian_cycle(directed_cycle(3)).found
    assert hamiltonian_cycle(directed_cycle(3), dp_limit=0).found
    assert capsys.readouterr().out == ""


def test_path_between():
    answer = hamiltonian_path_between(directed_path(3), 0, 2)
    assert answer.found and answer.witness == Path((0, 1, 2))
    assert not hamiltonian_path_between(directed_path(3), 2, 0).found
    with pytest.raises(VertexError):
        hamiltonian_path_between(directed_path(3), 1, 1)


def test_counts_in_complete_digraph():
    d = complete_digraph(4)
    assert count_hamiltonian(d) == 6
    assert count_hamiltonian(d, HamiltonianMode.PATH, (0, 1)) == 2
    assert count_hamiltonian(directed_cycle(5)) == 1


def test_count_limit_names_the_setting():
    with pytest.raises(SolverLimitError, match="DIGRAPH_COUNT_LIMIT"):
        count_hamiltonian(complete_digraph(6), count_limit=5)


def test_path_count_needs_endpoints(triangle):
    with pytest.raises(VertexError):
        count_hamiltonian(triangle, HamiltonianMode.PATH)


def test_hamiltonian_path_ends():
    assert hamiltonian_path_ends(directed_path(4), 0) == {3}
    assert hamiltonian_path_ends(directed_cycle(3), 0) == {2}
    assert hamiltonian_path_ends(empty_digraph(1), 0) == set()


def test_hamiltonian_connectedness():
    assert strongly_hamiltonian_connected(complete_digraph(4)) == (True, None)
    assert strongly_hamiltonian_connected(directed_cycle(3)) == (False, (0, 1))
    assert weakly_hamiltonian_connected(directed_cycle(4)) == (False, (0, 2))
    assert weakly_hamiltonian_connected(directed_cycle(3)) == (True, None)


def test_refutation_is_not_strongly_hamiltonian_connected():
    result = thomassen_refutation(9)
    assert not hamiltonian_path_between(result.digraph, result.u, result.v).found
    connected, pair = strongly_hamiltonian_connected(result.digraph)
    assert not connected and pair is not None


def test_longest_cycle_simple_cases(triangle):
    assert longest_cycle(triangle) == Cycle((0, 1, 2))
    assert longest_cycle(directed_path(4)) is None
    assert longest_cycle(empty_digraph(1)) is None


@settings(max_examples=60, deadline=None)
@given(digraphs(min_order=1, max_order=6))
def test_longest_cycle_matches_networkx(d):
    expected = oracles.longest_cycle_length(d)
    for limit in (None, 0):
        cycle = longest_cycle(d, dp_limit=limit)
        assert (0 if cycle is None else cycle.length) == expected
        if cycle is not None:
            assert cycle.is_valid_in(d)


@settings(max_examples=60, deadline=None)
@given(digraphs(min_order=2, max_order=6))
def test_cycle_through_matches_networkx(d):
    required = [0, d.n - 1]
    expected = oracles.has_cycle_through(d, required)
    for limit in (None, 0):
        cycle = cycle_through(d, required, dp_limit=limit)
        assert (cycle is not None) == expected
        if cycle is not None:
            assert cycle.is_valid_in(d)
            assert set(required) <= set(cycle.vertices)


def test_cycle_through_rejects_bad_sets(triangle):
    with pytest.raises(VertexError):
        cycle_through(triangle, [])
    with pytest.raises(VertexError):
        cycle_through(triangle, [0, 3])


def test_cycle_of_length_through():
    d = complete_digraph(4)
    for k in (2, 3, 4):
        cycle = cycle_of_length_through(d, 0, k)
        assert cycle.length == k and 0 in cycle
    assert cycle_of_length_through(d, 0, 5) is None
    assert cycle_of_length_through(directed_cycle(4), 1, 3) is None


def test_insert_vertex():
    d = make_digraph(4, [(0, 1), (1, 2), (1, 3), (3, 2)])
    assert insert_vertex(d, Path((0, 1, 2)), 3) == Path((0, 1, 3, 2))
    assert insert_vertex(directed_path(4), Path((0, 1)), 3) is None


def test_insert_vertex_rejects_bad_input(triangle):
    with pytest.raises(VertexError):
        insert_vertex(triangle, Path((0, 1)), 1)
    with pytest.raises(VertexError):
        insert_vertex(triangle, Path((0, 2)), 1)


def test_extend_path_max_rescans_after_each_insertion():
    d = make_digraph(4, [(0, 3), (0, 1), (1, 3), (1, 2), (2, 3)])
    outcome = extend_path_max(d, Path((0, 3)), [2, 1])
    assert outcome.path == Path((0, 1, 2, 3))
    assert outcome.absorbed == frozenset({1, 2})
    assert outcome.leftover == frozenset()
    assert [p.vertices for p in outcome.steps] == [(0, 3), (0, 1, 3), (0, 1, 2, 3)]


def test_extend_path_max_keeps_leftovers():
    d = make_digraph(4, [(0, 1), (2, 3)])
    outcome = extend_path_max(d, Path((0, 1)), [2, 3])
    assert outcome.path == Path((0, 1))
    assert outcome.leftover == frozenset({2, 3})
    with pytest.raises(VertexError):
        extend_path_max(d, Path((0, 1)), [1])
