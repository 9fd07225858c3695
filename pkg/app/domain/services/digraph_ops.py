"""
Digraph construction and subdigraph primitives
"""
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..exceptions import InvalidDigraphError, VertexError
from ..models.digraph import DegreeReport, Digraph, bits_of, iter_bits


def make_digraph(n: int, arcs: Iterable[Tuple[int, int]], labels: Sequence[str] = ()) -> Digraph:
    """Build a digraph on 0..n-1. Duplicate arcs collapse; loops are rejected."""
    if not isinstance(n, int) or n < 1:
        raise InvalidDigraphError(f"order must be a positive integer, got {n!r}")
    out_bits = [0] * n
    in_bits = [0] * n
    for pair in arcs:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidDigraphError(f"arc {(u, v)} has a vertex outside 0..{n - 1}")
        if u == v:
            raise InvalidDigraphError(f"loop arc {(u, v)} is not allowed")
        out_bits[u] |= 1 << v
        in_bits[v] |= 1 << u
    if labels and len(labels) != n:
        raise InvalidDigraphError(f"expected {n} labels, got {len(labels)}")
    return Digraph(n, tuple(out_bits), tuple(in_bits), tuple(labels))


def _check_vertex(digraph: Digraph, x: int) -> None:
    if not digraph.has_vertex(x):
        raise VertexError(f"vertex {x!r} is not in V(D) = 0..{digraph.n - 1}")


def _check_subset(digraph: Digraph, vertices: Iterable[int]) -> List[int]:
    chosen = sorted(set(vertices))
    outside = [v for v in chosen if not digraph.has_vertex(v)]
    if outside:
        raise VertexError(f"vertices {outside} are not in V(D) = 0..{digraph.n - 1}")
    return chosen


def degree(digraph: Digraph, x: int, within: Optional[Iterable[int]] = None) -> DegreeReport:
    """d+(x,A), d-(x,A) and d(x,A); A defaults to the whole vertex set"""
    _check_vertex(digraph, x)
    if within is None:
        out_deg = digraph.out_degree(x)
        in_deg = digraph.in_degree(x)
        return DegreeReport(x, out_deg, in_deg, out_deg + in_deg)
    chosen = _check_subset(digraph, within)
    mask = bits_of(chosen)
    out_deg = bin(digraph.out_bits[x] & mask).count("1")
    in_deg = bin(digraph.in_bits[x] & mask).count("1")
    return DegreeReport(x, out_deg, in_deg, out_deg + in_deg, tuple(chosen))


def degree_sequence(digraph: Digraph) -> List[int]:
    return [digraph.total_degree(v) for v in digraph.vertices]


def minimum_degree(digraph: Digraph) -> int:
    return min(degree_sequence(digraph))


def vertices_with_degree_at_least(digraph: Digraph, threshold: int) -> List[int]:
    return [v for v in digraph.vertices if digraph.total_degree(v) >= threshold]


def induced(digraph: Digraph, vertices: Iterable[int]) -> Tuple[Digraph, Dict[int, int]]:
    """Subdigraph induced by a vertex set, relabelled densely in ascending order.

    Returns the subdigraph and the old->new vertex map.
    """
    chosen = _check_subset(digraph, vertices)
    if not chosen:
        raise VertexError("cannot induce a subdigraph on an empty vertex set")
    mapping = {old: new for new, old in enumerate(chosen)}
    arcs = [
        (mapping[u], mapping[v])
        for u in chosen
        for v in iter_bits(digraph.out_bits[u])
        if v in mapping
    ]
    labels = tuple(digraph.label(v) for v in chosen) if digraph.labels else ()
    return make_digraph(len(chosen), arcs, labels), mapping


def remove_vertices(digraph: Digraph, vertices: Iterable[int]) -> Tuple[Digraph, Dict[int, int]]:
    """D - A"""
    removed = set(_check_subset(digraph, vertices))
    return induced(digraph, [v for v in digraph.vertices if v not in removed])


def converse(digraph: Digraph) -> Digraph:
    """Reverse every arc"""
    return Digraph(digraph.n, digraph.in_bits, digraph.out_bits, digraph.labels)


def are_adjacent(digraph: Digraph, x: int, y: int) -> bool:
    _check_vertex(digraph, x)
    _check_vertex(digraph, y)
    if x == y:
        raise VertexError(f"adjacency needs two distinct vertices, got {x} twice")
    return digraph.has_arc(x, y) or digraph.has_arc(y, x)


def add_arcs(digraph: Digraph, arcs: Iterable[Tuple[int, int]]) -> Digraph:
    """Copy of the digraph with extra arcs"""
    return make_digraph(digraph.n, list(digraph.arcs()) + list(arcs), digraph.labels)


def missing_arcs(digraph: Digraph) -> List[Tuple[int, int]]:
    """Ordered non-loop pairs that are not arcs, ascending"""
    return [
        (u, v)
        for u, v in product(digraph.vertices, repeat=2)
        if u != v and not digraph.has_arc(u, v)
    ]


# Standard families

def empty_digraph(n: int) -> Digraph:
    return make_digraph(n, [])


def complete_digraph(n: int) -> Digraph:
    """K_n*: every ordered pair of distinct vertices is an arc"""
    return make_digraph(n, [(u, v) for u, v in product(range(n), repeat=2) if u != v])


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise InvalidDigraphError(f"a directed cycle needs at least 2 vertices, got {n}")
    return make_digraph(n, [(i, (i + 1) % n) for i in range(n)])


def directed_path(n: int) -> Digraph:
    return make_digraph(n, [(i, i + 1) for i in range(n - 1)])


def all_tournaments(n: int) -> Iterator[Digraph]:
    """Every orientation of the complete graph on n vertices"""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        arcs = [
            (u, v) if mask >> index & 1 else (v, u)
            for index, (u, v) in enumerate(pairs)
        ]
        yield make_digraph(n, arcs)
