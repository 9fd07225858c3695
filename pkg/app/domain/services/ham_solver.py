"""
Exact Hamiltonian cycle/path solvers, longest-cycle and cycle-through-set
search, and path insertion.

Orders up to the configured subset-DP limit are decided by a Held-Karp
style DP whose table maps each vertex subset to the bitset of path end
vertices. Larger orders fall back to depth-first search with residual
pruning.
"""
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import structlog

from ...infrastructure.dependencies import get_settings
from ..exceptions import InvalidDigraphError, SolverLimitError, VertexError
from ..models.digraph import Cycle, Digraph, Path, bits_of, iter_bits
from ..models.reports import ExtensionOutcome, HamiltonicityAnswer
from .connectivity import reachable_from

logger = structlog.get_logger(__name__)


class HamiltonianMode(str, Enum):
    CYCLE = "cycle"
    PATH = "path"


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _check_vertex(digraph: Digraph, x: int) -> None:
    if not digraph.has_vertex(x):
        raise VertexError(f"vertex {x!r} is not in V(D) = 0..{digraph.n - 1}")


def _check_endpoints(digraph: Digraph, u: int, v: int) -> None:
    _check_vertex(digraph, u)
    _check_vertex(digraph, v)
    if u == v:
        raise VertexError(f"a Hamiltonian path needs distinct end vertices, got {u} twice")


# Subset DP

def _reach_table(digraph: Digraph, start: int, allowed: Optional[int] = None) -> Tuple[List[int], int]:
    """reach[mask] = bitset of v such that some start->v path has vertex set exactly mask"""
    allowed = digraph.full_mask if allowed is None else allowed
    out = digraph.out_bits
    reach = [0] * (1 << digraph.n)
    reach[1 << start] = 1 << start
    states = 0
    for mask in range(1 << start, len(reach)):
        ends = reach[mask]
        if not ends:
            continue
        for v in iter_bits(ends):
            states += 1
            nxt = out[v] & allowed & ~mask
            while nxt:
                low = nxt & -nxt
                reach[mask | low] |= low
                nxt ^= low
    return reach, states


def _rebuild(digraph: Digraph, reach: List[int], start: int, mask: int, end: int) -> List[int]:
    """Walk the table backwards from (mask, end); smallest predecessor first"""
    sequence = [end]
    current = end
    while mask != 1 << start:
        mask ^= 1 << current
        options = reach[mask] & digraph.in_bits[current]
        current = (options & -options).bit_length() - 1
        sequence.append(current)
    sequence.reverse()
    return sequence


def _count_table(digraph: Digraph, start: int) -> List[Optional[Dict[int, int]]]:
    out = digraph.out_bits
    counts: List[Optional[Dict[int, int]]] = [None] * (1 << digraph.n)
    counts[1 << start] = {start: 1}
    for mask in range(1 << start, len(counts)):
        row = counts[mask]
        if not row:
            continue
        for v, ways in row.items():
            nxt = out[v] & ~mask
            while nxt:
                low = nxt & -nxt
                w = low.bit_length() - 1
                target = counts[mask | low]
                if target is None:
                    target = counts[mask | low] = {}
                target[w] = target.get(w, 0) + ways
                nxt ^= low
    return counts


# Backtracking

class _PathSearch:
    """DFS for a path from ``start`` that covers ``allowed`` and ends at a
    vertex in ``targets``. Cycles use start as the closing target via
    ``close_to``.
    """

    def __init__(self, digraph: Digraph, start: int, targets: int, allowed: int, close_to: Optional[int] = None):
        self.digraph = digraph
        self.start = start
        self.targets = targets
        self.allowed = allowed
        self.close_to = close_to
        self.nodes = 0

    def _finish_ok(self, v: int) -> bool:
        if not self.targets >> v & 1:
            return False
        if self.close_to is None:
            return True
        return self.digraph.has_arc(v, self.close_to)

    def _viable(self, current: int, remaining: int) -> bool:
        d = self.digraph
        head = 1 << current
        tail = 0 if self.close_to is None else 1 << self.close_to
        forced = 0
        for w in iter_bits(remaining):
            ins = d.in_bits[w] & (remaining | head)
            if not ins:
                return False
            if ins == head:
                forced += 1
                if forced > 1:
                    return False
            is_last_option = self.close_to is None and self.targets >> w & 1
            if not is_last_option and not d.out_bits[w] & (remaining | tail):
                return False
        if remaining:
            if reachable_from(d, current, remaining | head) & remaining != remaining:
                return False
            sink_side = remaining & self.targets
            if not sink_side:
                return False
            back = 0
            for t in iter_bits(sink_side):
                if self.close_to is None or d.has_arc(t, self.close_to):
                    back |= reachable_from(d, t, remaining, reverse=True)
            if back & remaining != remaining:
                return False
        return True

    def run(self) -> Optional[List[int]]:
        path = [self.start]
        remaining = self.allowed & ~(1 << self.start)
        if not remaining:
            return path if self._finish_ok(self.start) else None
        return self._extend(path, remaining)

    def _extend(self, path: List[int], remaining: int) -> Optional[List[int]]:
        self.nodes += 1
        current = path[-1]
        if not remaining:
            return list(path) if self._finish_ok(current) else None
        if not self._viable(current, remaining):
            return None
        options = self.digraph.out_bits[current] & remaining
        forced = [
            w for w in iter_bits(remaining)
            if self.digraph.in_bits[w] & (remaining | 1 << current) == 1 << current
        ]
        if forced:
            options &= 1 << forced[0]
        for w in iter_bits(options):
            rest = remaining & ~(1 << w)
            if rest and self.targets >> w & 1 and _popcount(self.targets & remaining) == 1:
                continue
            path.append(w)
            found = self._extend(path, rest)
            if found is not None:
                return found
            path.pop()
        return None


def _dp_limit(limit: Optional[int]) -> int:
    return get_settings().HELD_KARP_LIMIT if limit is None else limit


# Public solvers

def hamiltonian_cycle(digraph: Digraph, *, dp_limit: Optional[int] = None) -> HamiltonicityAnswer:
    """Decide whether D has a spanning cycle"""
    n = digraph.n
    if n <= 1:
        return HamiltonicityAnswer(found=False, method="trivial")
    if n <= _dp_limit(dp_limit):
        reach, states = _reach_table(digraph, 0)
        closing = reach[digraph.full_mask] & digraph.in_bits[0]
        logger.debug("hamiltonian_cycle", method="subset-dp", order=n, states=states)
        if not closing:
            return HamiltonicityAnswer(found=False, nodes_explored=states, method="subset-dp")
        end = (closing & -closing).bit_length() - 1
        sequence = _rebuild(digraph, reach, 0, digraph.full_mask, end)
        return HamiltonicityAnswer(True, Cycle(tuple(sequence)), states, "subset-dp")

    search = _PathSearch(digraph, 0, digraph.full_mask & ~1, digraph.full_mask, close_to=0)
    sequence = search.run()
    logger.debug("hamiltonian_cycle", method="backtracking", order=n, nodes=search.nodes)
    if sequence is None:
        return HamiltonicityAnswer(found=False, nodes_explored=search.nodes, method="backtracking")
    return HamiltonicityAnswer(True, Cycle(tuple(sequence)), search.nodes, "backtracking")


def hamiltonian_path_between(digraph: Digraph, u: int, v: int, *, dp_limit: Optional[int] = None) -> HamiltonicityAnswer:
    """Decide whether D has a spanning u->v path"""
    _check_endpoints(digraph, u, v)
    if digraph.n <= _dp_limit(dp_limit):
        reach, states = _reach_table(digraph, u)
        if not reach[digraph.full_mask] >> v & 1:
            return HamiltonicityAnswer(found=False, nodes_explored=states, method="subset-dp")
        sequence = _rebuild(digraph, reach, u, digraph.full_mask, v)
        return HamiltonicityAnswer(True, Path(tuple(sequence)), states, "subset-dp")

    search = _PathSearch(digraph, u, 1 << v, digraph.full_mask)
    sequence = search.run()
    if sequence is None:
        return HamiltonicityAnswer(found=False, nodes_explored=search.nodes, method="backtracking")
    return HamiltonicityAnswer(True, Path(tuple(sequence)), search.nodes, "backtracking")


def hamiltonian_path_ends(digraph: Digraph, u: int, *, dp_limit: Optional[int] = None) -> Set[int]:
    """All v such that D has a Hamiltonian u->v path"""
    _check_vertex(digraph, u)
    if digraph.n == 1:
        return set()
    if digraph.n <= _dp_limit(dp_limit):
        reach, _ = _reach_table(digraph, u)
        return set(iter_bits(reach[digraph.full_mask] & ~(1 << u)))
    return {
        v for v in digraph.vertices
        if v != u and hamiltonian_path_between(digraph, u, v, dp_limit=dp_limit).found
    }


def count_hamiltonian(
    digraph: Digraph,
    mode: HamiltonianMode = HamiltonianMode.CYCLE,
    endpoints: Optional[Tuple[int, int]] = None,
    *,
    count_limit: Optional[int] = None,
) -> int:
    """Exact number of Hamiltonian cycles (up to rotation) or Hamiltonian u->v paths"""
    limit = get_settings().COUNT_LIMIT if count_limit is None else count_limit
    if digraph.n > limit:
        raise SolverLimitError(f"counting supports order <= {limit}, got {digraph.n}", "COUNT_LIMIT")
    mode = HamiltonianMode(mode)
    full = digraph.full_mask
    if mode is HamiltonianMode.CYCLE:
        if digraph.n <= 1:
            return 0
        row = _count_table(digraph, 0)[full] or {}
        return sum(ways for v, ways in row.items() if digraph.has_arc(v, 0))
    if endpoints is None:
        raise VertexError("path counting needs (u, v) endpoints")
    u, v = endpoints
    _check_endpoints(digraph, u, v)
    row = _count_table(digraph, u)[full] or {}
    return row.get(v, 0)


def strongly_hamiltonian_connected(digraph: Digraph, *, dp_limit: Optional[int] = None) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Every ordered pair joined by a Hamiltonian path; else the first failing pair"""
    if digraph.n < 2:
        raise InvalidDigraphError(f"Hamiltonian-connectedness needs at least 2 vertices, got {digraph.n}")
    for u in digraph.vertices:
        ends = hamiltonian_path_ends(digraph, u, dp_limit=dp_limit)
        for v in digraph.vertices:
            if v != u and v not in ends:
                return False, (u, v)
    return True, None


def weakly_hamiltonian_connected(digraph: Digraph, *, dp_limit: Optional[int] = None) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Every unordered pair joined by a Hamiltonian path in some direction"""
    if digraph.n < 2:
        raise InvalidDigraphError(f"Hamiltonian-connectedness needs at least 2 vertices, got {digraph.n}")
    ends = {u: hamiltonian_path_ends(digraph, u, dp_limit=dp_limit) for u in digraph.vertices}
    for x in digraph.vertices:
        for y in range(x + 1, digraph.n):
            if y not in ends[x] and x not in ends[y]:
                return False, (x, y)
    return True, None


# Cycles

def _cycles_dp_limit(limit: Optional[int]) -> int:
    return get_settings().SUBSET_DP_LIMIT if limit is None else limit


def _cycle_search(digraph: Digraph, start: int, allowed: int, length: Optional[int], must_cover: int = 0) -> Optional[List[int]]:
    """DFS for a cycle through ``start`` inside ``allowed``.

    ``length`` fixes the number of vertices; ``must_cover`` lists vertices
    the cycle has to contain.
    """
    d = digraph
    path = [start]
    used = 1 << start

    def extend() -> Optional[List[int]]:
        nonlocal used
        current = path[-1]
        size = len(path)
        if size >= 2 and d.has_arc(current, start) and used & must_cover == must_cover:
            if length is None or size == length:
                return list(path)
        if length is not None and size >= length:
            return None
        free = allowed & ~used
        missing = must_cover & ~used
        if missing and reachable_from(d, current, free | 1 << current) & missing != missing:
            return None
        for w in iter_bits(d.out_bits[current] & free):
            path.append(w)
            used |= 1 << w
            found = extend()
            if found is not None:
                return found
            used &= ~(1 << w)
            path.pop()
        return None

    return extend()


def longest_cycle(digraph: Digraph, *, dp_limit: Optional[int] = None) -> Optional[Cycle]:
    """A maximum-length cycle, or None when D is acyclic"""
    n = digraph.n
    if n < 2:
        return None
    if n <= _cycles_dp_limit(dp_limit):
        best_length, best = 0, None
        for s in digraph.vertices:
            if n - s <= best_length:
                break
            allowed = digraph.full_mask & ~((1 << s) - 1)
            reach, _ = _reach_table(digraph, s, allowed)
            closing_in = digraph.in_bits[s]
            for mask in range(1 << s, 1 << n):
                ends = reach[mask] & closing_in
                if ends and mask != 1 << s:
                    size = _popcount(mask)
                    if size > best_length:
                        end = (ends & -ends).bit_length() - 1
                        best_length = size
                        best = _rebuild(digraph, reach, s, mask, end)
            if best_length == n:
                break
        return Cycle(tuple(best)) if best else None

    for length in range(n, 1, -1):
        for s in digraph.vertices:
            allowed = digraph.full_mask & ~((1 << s) - 1)
            if _popcount(allowed) < length:
                break
            found = _cycle_search(digraph, s, allowed, length)
            if found:
                return Cycle(tuple(found))
    return None


def cycle_through(digraph: Digraph, required: Iterable[int], *, dp_limit: Optional[int] = None) -> Optional[Cycle]:
    """Some cycle whose vertex set contains every vertex of ``required``"""
    wanted = sorted(set(required))
    if not wanted:
        raise VertexError("cycle_through needs a non-empty vertex set")
    outside = [v for v in wanted if not digraph.has_vertex(v)]
    if outside:
        raise VertexError(f"vertices {outside} are not in V(D) = 0..{digraph.n - 1}")
    cover = bits_of(wanted)
    start = wanted[0]
    if digraph.n <= _cycles_dp_limit(dp_limit):
        reach, _ = _reach_table(digraph, start)
        closing_in = digraph.in_bits[start]
        for mask in range(1 << start, 1 << digraph.n):
            if mask & cover != cover or mask == 1 << start:
                continue
            ends = reach[mask] & closing_in
            if ends:
                end = (ends & -ends).bit_length() - 1
                return Cycle(tuple(_rebuild(digraph, reach, start, mask, end)))
        return None
    found = _cycle_search(digraph, start, digraph.full_mask, None, cover)
    return Cycle(tuple(found)) if found else None


def cycle_of_length_through(digraph: Digraph, x: int, length: int) -> Optional[Cycle]:
    """A cycle with exactly ``length`` vertices containing x (exhaustive)"""
    _check_vertex(digraph, x)
    if length < 2 or length > digraph.n:
        return None
    found = _cycle_search(digraph, x, digraph.full_mask, length)
    return Cycle(tuple(found)) if found else None


# Path insertion

def insert_vertex(digraph: Digraph, path: Path, x: int) -> Optional[Path]:
    """Splice x between consecutive path vertices x_i -> x -> x_{i+1}, smallest i first"""
    _check_vertex(digraph, x)
    if x in path:
        raise VertexError(f"vertex {x} already lies on the path")
    if not path.is_valid_in(digraph):
        raise VertexError(f"path {path.vertices} is not a path of the digraph")
    seq = path.vertices
    for i in range(len(seq) - 1):
        if digraph.has_arc(seq[i], x) and digraph.has_arc(x, seq[i + 1]):
            return Path(seq[: i + 1] + (x,) + seq[i + 1:])
    return None


def extend_path_max(digraph: Digraph, path: Path, candidates: Iterable[int]) -> ExtensionOutcome:
    """Insert candidates (ascending id, rescanning after each success) until none fits"""
    pool = sorted(set(candidates))
    overlap = [v for v in pool if v in path]
    if overlap:
        raise VertexError(f"candidates {overlap} already lie on the path")
    current = path
    absorbed: Set[int] = set()
    steps = [path]
    progress = True
    while progress:
        progress = False
        for y in pool:
            if y in absorbed:
                continue
            extended = insert_vertex(digraph, current, y)
            if extended is not None:
                current = extended
                absorbed.add(y)
                steps.append(current)
                progress = True
                break
    leftover: FrozenSet[int] = frozenset(pool) - absorbed
    return ExtensionOutcome(path=current, absorbed=frozenset(absorbed), leftover=leftover, steps=steps)
