"""
Strong components, unilateral connectivity and vertex connectivity via Menger's theorem
"""
import heapq
from collections import deque
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

import structlog

from ..exceptions import DigraphError, InvalidDigraphError, VertexError
from ..models.digraph import Digraph, bits_of, iter_bits
from ..models.reports import ConnectivityReport

logger = structlog.get_logger(__name__)


def reachable_from(digraph: Digraph, x: int, within: Optional[int] = None, reverse: bool = False) -> int:
    """Bitmask of vertices reachable from x, staying inside ``within`` if given"""
    allowed = digraph.full_mask if within is None else within
    rows = digraph.in_bits if reverse else digraph.out_bits
    seen = 1 << x
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_strong_within(digraph: Digraph, mask: int) -> bool:
    """Whether the subdigraph induced by ``mask`` is strong (empty and single vertex count as strong)"""
    if mask & (mask - 1) == 0:
        return True
    root = (mask & -mask).bit_length() - 1
    return (
        reachable_from(digraph, root, mask) == mask
        and reachable_from(digraph, root, mask, reverse=True) == mask
    )


def is_strong(digraph: Digraph) -> bool:
    return is_strong_within(digraph, digraph.full_mask)


def is_strong_after_removal(digraph: Digraph, removed: Iterable[int]) -> bool:
    """Definitional check: is D - S strong"""
    return is_strong_within(digraph, digraph.full_mask & ~bits_of(removed))


def _tarjan(digraph: Digraph) -> List[List[int]]:
    """Iterative Tarjan; components come out sinks first"""
    index = {}
    lowlink = {}
    on_stack = set()
    stack: List[int] = []
    components: List[List[int]] = []
    counter = 0

    for root in digraph.vertices:
        if root in index:
            continue
        work = [(root, iter(digraph.out_neighbors(root)))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, neighbours = work[-1]
            advanced = False
            for w in neighbours:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(digraph.out_neighbors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.append(w)
                    if w == v:
                        break
                components.append(sorted(component))
    return components


def _condensation_order(digraph: Digraph, components: List[List[int]]) -> List[List[int]]:
    """Topological order of the condensation; ties go to the smallest contained vertex"""
    owner = {}
    for index, component in enumerate(components):
        for v in component:
            owner[v] = index
    successors = [set() for _ in components]
    indegree = [0] * len(components)
    for u, v in digraph.arcs():
        a, b = owner[u], owner[v]
        if a != b and b not in successors[a]:
            successors[a].add(b)
            indegree[b] += 1
    heap = [(components[i][0], i) for i in range(len(components)) if indegree[i] == 0]
    heapq.heapify(heap)
    ordered = []
    while heap:
        _, i = heapq.heappop(heap)
        ordered.append(components[i])
        for j in successors[i]:
            indegree[j] -= 1
            if indegree[j] == 0:
                heapq.heappush(heap, (components[j][0], j))
    return ordered


def _consecutive_joined(digraph: Digraph, ordered: List[List[int]]) -> bool:
    for earlier, later in zip(ordered, ordered[1:]):
        later_mask = bits_of(later)
        if not any(digraph.out_bits[v] & later_mask for v in earlier):
            return False
    return True


def strong_components(digraph: Digraph, with_connectivity: bool = False) -> ConnectivityReport:
    """Strong components in condensation-topological order"""
    ordered = _condensation_order(digraph, _tarjan(digraph))
    kappa = None
    if with_connectivity and digraph.n >= 2:
        kappa = vertex_connectivity(digraph)
    return ConnectivityReport(
        components=tuple(tuple(component) for component in ordered),
        is_strong=len(ordered) == 1,
        is_unilateral=_consecutive_joined(digraph, ordered),
        vertex_connectivity=kappa,
    )


def is_unilateral(digraph: Digraph) -> bool:
    """Every pair is joined by a path in at least one direction"""
    return strong_components(digraph).is_unilateral


def _check_pair(digraph: Digraph, x: int, y: int) -> None:
    for v in (x, y):
        if not digraph.has_vertex(v):
            raise VertexError(f"vertex {v!r} is not in V(D) = 0..{digraph.n - 1}")
    if x == y:
        raise VertexError(f"disjoint paths need two distinct end vertices, got {x} twice")


def max_internally_disjoint_paths(digraph: Digraph, x: int, y: int, limit: Optional[int] = None) -> int:
    """Maximum number of internally vertex-disjoint x->y paths.

    Unit-capacity max-flow on the vertex-split network: vertex w becomes
    w_in = 2w and w_out = 2w+1 joined by a capacity-1 arc. A direct arc x->y
    counts as one path. With ``limit`` the search stops once that many
    paths are found.
    """
    _check_pair(digraph, x, y)
    size = 2 * digraph.n
    capacity = [dict() for _ in range(size)]

    def add_edge(a: int, b: int) -> None:
        capacity[a][b] = capacity[a].get(b, 0) + 1
        capacity[b].setdefault(a, 0)

    for w in digraph.vertices:
        if w != x and w != y:
            add_edge(2 * w, 2 * w + 1)
    for a, b in digraph.arcs():
        if b == x or a == y:
            continue
        add_edge(2 * a + 1, 2 * b)

    source, sink = 2 * x + 1, 2 * y
    flow = 0
    while limit is None or flow < limit:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, cap in capacity[a].items():
                if cap > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            capacity[a][b] -= 1
            capacity[b][a] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(digraph: Digraph) -> int:
    """Largest k such that D is k-strong; n-1 for complete digraphs.

    Minimum over all ordered pairs of the number of internally disjoint
    paths, which by Menger's theorem is the connectivity.
    """
    if digraph.n < 2:
        raise InvalidDigraphError(f"vertex connectivity needs at least 2 vertices, got {digraph.n}")
    best = digraph.n - 1
    for x in digraph.vertices:
        for y in digraph.vertices:
            if x == y:
                continue
            best = min(best, max_internally_disjoint_paths(digraph, x, y, limit=best))
            if best == 0:
                return 0
    return best


def is_k_strong(digraph: Digraph, k: int) -> bool:
    """|V(D)| >= k+1 and k internally disjoint paths between every ordered pair"""
    if k < 1:
        raise DigraphError(f"k-strong connectivity is defined for k >= 1, got {k}")
    if digraph.n < k + 1:
        return False
    if not is_strong(digraph):
        return False
    for x in digraph.vertices:
        for y in digraph.vertices:
            if x != y and max_internally_disjoint_paths(digraph, x, y, limit=k) < k:
                logger.debug("k_strong_failed", k=k, pair=(x, y))
                return False
    return True


def minimum_separator(digraph: Digraph, max_size: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """Smallest vertex set S whose removal leaves D - S non-strong, by enumeration.

    Exponential; intended for small orders and cross-checks.
    """
    upper = digraph.n - 2 if max_size is None else min(max_size, digraph.n - 2)
    for size in range(0, upper + 1):
        for removed in combinations(digraph.vertices, size):
            if not is_strong_after_removal(digraph, removed):
                return removed
    return None
