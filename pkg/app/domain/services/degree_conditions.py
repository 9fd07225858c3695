"""
Checkers for the classical degree conditions, conditions (M) and (N), and Meyniel sets.

Thresholds always come from the order of the digraph handed in. Violators
are reported as the lexicographically first offending vertex or pair.
"""
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from ..exceptions import InvalidDigraphError, VertexError
from ..models.digraph import Digraph
from ..models.reports import ConditionVerdict
from .connectivity import reachable_from
from .digraph_ops import vertices_with_degree_at_least


def _require_order(digraph: Digraph, minimum: int = 2) -> None:
    if digraph.n < minimum:
        raise InvalidDigraphError(f"degree conditions need order >= {minimum}, got {digraph.n}")


def _subset(digraph: Digraph, vertices: Iterable[int]) -> List[int]:
    chosen = sorted(set(vertices))
    outside = [v for v in chosen if not digraph.has_vertex(v)]
    if outside:
        raise VertexError(f"vertices {outside} are not in V(D) = 0..{digraph.n - 1}")
    return chosen


def _nonadjacent_sum_check(name: str, digraph: Digraph, vertices: List[int], threshold: int) -> ConditionVerdict:
    for x, y in combinations(vertices, 2):
        if digraph.has_arc(x, y) or digraph.has_arc(y, x):
            continue
        total = digraph.total_degree(x) + digraph.total_degree(y)
        if total < threshold:
            return ConditionVerdict(name, False, (x, y), total, threshold, measure="d(x)+d(y)")
    return ConditionVerdict(name, True)


def _missing_arc_sum_check(name: str, digraph: Digraph, threshold: int) -> ConditionVerdict:
    for x in digraph.vertices:
        for y in digraph.vertices:
            if x == y or digraph.has_arc(x, y):
                continue
            total = digraph.out_degree(x) + digraph.in_degree(y)
            if total < threshold:
                return ConditionVerdict(name, False, (x, y), total, threshold, measure="d+(x)+d-(y)")
    return ConditionVerdict(name, True)


def check_nash_williams(digraph: Digraph) -> ConditionVerdict:
    """d+(x) >= n/2 and d-(x) >= n/2 for every vertex, compared as 2*d >= n"""
    _require_order(digraph)
    n = digraph.n
    for x in digraph.vertices:
        smaller = min(digraph.out_degree(x), digraph.in_degree(x))
        if 2 * smaller < n:
            return ConditionVerdict("nash-williams", False, (x,), 2 * smaller, n, measure="2*min(d+,d-)")
    return ConditionVerdict("nash-williams", True)


def check_ghouila_houri(digraph: Digraph) -> ConditionVerdict:
    """d(x) >= n for every vertex; strong connectivity is checked separately"""
    _require_order(digraph)
    for x in digraph.vertices:
        total = digraph.total_degree(x)
        if total < digraph.n:
            return ConditionVerdict("ghouila-houri", False, (x,), total, digraph.n, measure="d(x)")
    return ConditionVerdict("ghouila-houri", True)


def check_woodall(digraph: Digraph) -> ConditionVerdict:
    """d+(x) + d-(y) >= n whenever x->y is not an arc"""
    _require_order(digraph)
    return _missing_arc_sum_check("woodall", digraph, digraph.n)


def check_overbeck_larisch(digraph: Digraph) -> ConditionVerdict:
    """d+(x) + d-(y) >= n+1 whenever x->y is not an arc"""
    _require_order(digraph)
    return _missing_arc_sum_check("overbeck-larisch", digraph, digraph.n + 1)


def check_meyniel(digraph: Digraph) -> ConditionVerdict:
    """d(x) + d(y) >= 2n-1 for every non-adjacent pair"""
    _require_order(digraph)
    return _nonadjacent_sum_check("meyniel", digraph, list(digraph.vertices), 2 * digraph.n - 1)


def condition_M(digraph: Digraph, z0: int) -> ConditionVerdict:
    """Meyniel bound 2n-1 for every non-adjacent pair avoiding z0"""
    if not digraph.has_vertex(z0):
        raise VertexError(f"vertex {z0!r} is not in V(D) = 0..{digraph.n - 1}")
    others = [v for v in digraph.vertices if v != z0]
    return _nonadjacent_sum_check("condition-M", digraph, others, 2 * digraph.n - 1)


def condition_N(digraph: Digraph) -> ConditionVerdict:
    """d(x) + d(y) >= 2n+1 for every non-adjacent pair"""
    return _nonadjacent_sum_check("condition-N", digraph, list(digraph.vertices), 2 * digraph.n + 1)


def is_meyniel_set(digraph: Digraph, vertices: Iterable[int]) -> ConditionVerdict:
    """Every non-adjacent pair inside the set has degree sum >= 2n-1"""
    chosen = _subset(digraph, vertices)
    return _nonadjacent_sum_check("meyniel-set", digraph, chosen, 2 * digraph.n - 1)


def is_M_strongly_connected(digraph: Digraph, vertices: Iterable[int]) -> bool:
    """Every ordered pair inside the set is joined by a path of D"""
    chosen = _subset(digraph, vertices)
    if len(chosen) < 2:
        return True
    mask = 0
    for v in chosen:
        mask |= 1 << v
    return all(reachable_from(digraph, x) & mask == mask for x in chosen)


def high_degree_vertices(digraph: Digraph, threshold: Optional[int] = None) -> List[int]:
    """Vertices of degree at least ``threshold`` (default: the order)"""
    return vertices_with_degree_at_least(digraph, digraph.n if threshold is None else threshold)


def has_many_high_degree_vertices(digraph: Digraph) -> Tuple[bool, List[int]]:
    """Whether at least n-1 vertices have degree >= n, with that vertex list"""
    high = high_degree_vertices(digraph)
    return len(high) >= digraph.n - 1, high
