"""
Overbeck-Larisch reduction and expansion, and the explicit counterexample families
"""
from typing import List, Tuple

import structlog

from ..exceptions import ConstructionError, VertexError
from ..models.digraph import Digraph, iter_bits
from ..models.reports import ExpansionResult, ReductionResult
from .digraph_ops import make_digraph

logger = structlog.get_logger(__name__)


def _labels_for(digraph: Digraph, kept: List[int]) -> List[str]:
    return [digraph.label(v) for v in kept]


def reduce_pair(digraph: Digraph, u: int, v: int) -> ReductionResult:
    """H_D(u,v): delete u and v and add z0 with the out-arcs of u and in-arcs of v.

    z0 -> y for y in N+(u) - {v}, y -> z0 for y in N-(v) - {u}. The arcs
    between u and v simply disappear.
    """
    if digraph.n < 5:
        raise ConstructionError(f"reduction needs order >= 5, got {digraph.n}")
    for w in (u, v):
        if not digraph.has_vertex(w):
            raise VertexError(f"vertex {w!r} is not in V(D) = 0..{digraph.n - 1}")
    if u == v:
        raise VertexError(f"reduction needs two distinct vertices, got {u} twice")

    kept = [w for w in digraph.vertices if w != u and w != v]
    mapping = {old: new for new, old in enumerate(kept)}
    z0 = len(kept)
    arcs = [
        (mapping[a], mapping[b])
        for a, b in digraph.arcs()
        if a in mapping and b in mapping
    ]
    arcs += [(z0, mapping[y]) for y in iter_bits(digraph.out_bits[u]) if y != v]
    arcs += [(mapping[y], z0) for y in iter_bits(digraph.in_bits[v]) if y != u]
    labels = _labels_for(digraph, kept) + ["z0"]
    reduced = make_digraph(z0 + 1, arcs, labels)
    logger.debug("reduce_pair", order=digraph.n, u=u, v=v, z0_degree=reduced.total_degree(z0))
    return ReductionResult(digraph=reduced, z0=z0, old_to_new=mapping)


def expand_at(digraph: Digraph, z0: int) -> ExpansionResult:
    """D_H(z0): replace z0 by the 2-cycle u <-> v.

    Every old vertex x gets x -> u and v -> x; u inherits the out-arcs of z0
    and v its in-arcs.
    """
    if digraph.n < 4:
        raise ConstructionError(f"expansion needs order >= 4, got {digraph.n}")
    if not digraph.has_vertex(z0):
        raise VertexError(f"vertex {z0!r} is not in V(H) = 0..{digraph.n - 1}")

    kept = [w for w in digraph.vertices if w != z0]
    mapping = {old: new for new, old in enumerate(kept)}
    u, v = len(kept), len(kept) + 1
    arcs = [
        (mapping[a], mapping[b])
        for a, b in digraph.arcs()
        if a in mapping and b in mapping
    ]
    arcs += [(u, v), (v, u)]
    for x in kept:
        arcs += [(mapping[x], u), (v, mapping[x])]
    arcs += [(u, mapping[y]) for y in iter_bits(digraph.out_bits[z0])]
    arcs += [(mapping[y], v) for y in iter_bits(digraph.in_bits[z0])]
    labels = _labels_for(digraph, kept) + ["u", "v"]
    expanded = make_digraph(v + 1, arcs, labels)
    logger.debug("expand_at", order=digraph.n, z0=z0)
    return ExpansionResult(digraph=expanded, u=u, v=v, old_to_new=mapping)


def counterexample_labels(n: int) -> List[str]:
    return [f"x{i}" for i in range(n - 3)] + ["y1", "y2", "y3"]


def counterexample_arcs(n: int) -> List[Tuple[int, int]]:
    """Union of the seven arc families; x_i -> i, y_i -> n-4+i"""
    last = n - 4

    def y(i: int) -> int:
        return last + i

    arcs = []
    arcs += [(y(i), y(j)) for i in (1, 2, 3) for j in (1, 2, 3) if i != j]
    arcs += [(i, i + 1) for i in range(0, n - 4)]
    arcs += [(y(i), j) for i in (1, 2, 3) for j in range(1, n - 5)]
    arcs += [(i, j) for i in range(1, last + 1) for j in range(1, i)]
    arcs += [(last, y(i)) for i in (1, 2, 3)] + [(n - 6, y(i)) for i in (1, 2, 3)]
    arcs += [(i, n - 5) for i in range(1, n - 6)]
    arcs += [(0, n - 5), (n - 5, 0), (last, 0), (n - 6, last)]
    return arcs


def darbinyan_counterexample(n: int) -> Digraph:
    """2-strong non-Hamiltonian digraph of order n in which n-1 vertices have degree >= n"""
    if n < 8:
        raise ConstructionError(f"the counterexample family starts at order 8, got {n}")
    return make_digraph(n, counterexample_arcs(n), counterexample_labels(n))


nonhamiltonian_counterexample = darbinyan_counterexample


def thomassen_refutation(n: int) -> ExpansionResult:
    """3-strong digraph of order n, minimum degree >= n+1, with no Hamiltonian (u,v)-path.

    Built as the expansion of the order n-1 counterexample at x0.
    """
    if n < 9:
        raise ConstructionError(f"the refutation family starts at order 9, got {n}")
    return expand_at(darbinyan_counterexample(n - 1), 0)
