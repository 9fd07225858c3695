"""
Domain models for loop-free simple digraphs, paths and cycles
"""
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the set bit positions of an integer in ascending order"""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_of(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph on vertices 0..n-1.

    Row ``out_bits[u]`` has bit v set iff u->v is an arc; ``in_bits`` is the
    transpose. Labels are presentation only and do not take part in equality.
    """

    n: int
    out_bits: Tuple[int, ...]
    in_bits: Tuple[int, ...]
    labels: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_vertex(self, v: int) -> bool:
        return isinstance(v, int) and 0 <= v < self.n

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_bits[u] >> v & 1)

    def out_neighbors(self, u: int) -> List[int]:
        return list(iter_bits(self.out_bits[u]))

    def in_neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.in_bits[v]))

    def out_degree(self, v: int) -> int:
        return bin(self.out_bits[v]).count("1")

    def in_degree(self, v: int) -> int:
        return bin(self.in_bits[v]).count("1")

    def total_degree(self, v: int) -> int:
        return self.out_degree(v) + self.in_degree(v)

    def arcs(self) -> Iterator[Tuple[int, int]]:
        """Arcs in ascending lexicographic order"""
        for u in range(self.n):
            for v in iter_bits(self.out_bits[u]):
                yield (u, v)

    @property
    def arc_count(self) -> int:
        return sum(bin(row).count("1") for row in self.out_bits)

    def label(self, v: int) -> str:
        if self.labels and v < len(self.labels):
            return self.labels[v]
        return str(v)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arc_count})"


@dataclass(frozen=True)
class DegreeReport:
    """Out-, in- and total degree of one vertex, optionally restricted to a set"""

    vertex: int
    out_deg: int
    in_deg: int
    total: int
    restricted_to: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class Path:
    """Vertex sequence x1..xm of distinct vertices; length is m-1"""

    vertices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise ValueError("a path needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"path repeats a vertex: {self.vertices}")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def is_valid_in(self, digraph: Digraph) -> bool:
        if not all(digraph.has_vertex(v) for v in self.vertices):
            return False
        return all(digraph.has_arc(a, b) for a, b in zip(self.vertices, self.vertices[1:]))


@dataclass(frozen=True)
class Cycle:
    """Cycle x1..xk with the closing arc xk->x1 implied.

    Stored rotated so the smallest vertex comes first, which makes equal
    cycles compare equal regardless of the starting point.
    """

    vertices: Tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.vertices)
        if len(seq) < 2:
            raise ValueError("a cycle needs at least two vertices")
        if len(set(seq)) != len(seq):
            raise ValueError(f"cycle repeats a vertex: {seq}")
        pivot = seq.index(min(seq))
        object.__setattr__(self, "vertices", seq[pivot:] + seq[:pivot])

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def arcs(self) -> List[Tuple[int, int]]:
        seq = self.vertices
        return [(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]

    def is_valid_in(self, digraph: Digraph) -> bool:
        if not all(digraph.has_vertex(v) for v in self.vertices):
            return False
        return all(digraph.has_arc(a, b) for a, b in self.arcs())
