"""Graph values and the elementary edge-set algebra.

A graph on vertices ``0..n-1`` is stored as a Python int whose bit
``j*(j-1)//2 + i`` is set when the pair ``(i, j)``, ``i < j``, is an edge.
The colex pair order keeps bit positions stable when vertices are appended,
so a graph padded with isolated vertices has the same edge bits.

Vertex sets are plain int bit masks; functions that take a vertex set also
accept any iterable of vertex indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Tuple, Union

MAX_VERTICES = 16

VertexSetLike = Union[int, Iterable[int]]


class GraphError(ValueError):
    """Raised for malformed graphs or mismatched operands."""


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def pairs(n: int) -> Tuple[Tuple[int, int], ...]:
    """All pairs ``(i, j)``, ``i < j < n``, listed in bit order."""
    return tuple((i, j) for j in range(n) for i in range(j))


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    return (1 << num_pairs(n)) - 1


@lru_cache(maxsize=None)
def star_masks(n: int) -> Tuple[int, ...]:
    """``star_masks(n)[v]`` has the bits of the n-1 pairs containing ``v``."""
    stars = [0] * n
    for p, (i, j) in enumerate(pairs(n)):
        stars[i] |= 1 << p
        stars[j] |= 1 << p
    return tuple(stars)


def as_mask(n: int, vertices: VertexSetLike) -> int:
    """Normalize a vertex set (bit mask or iterable of indices) to a mask."""
    if isinstance(vertices, int):
        if vertices < 0 or vertices >> n:
            raise GraphError(f"vertex mask {vertices:#x} has bits outside 0..{n - 1}")
        return vertices
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range for n={n}")
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Vertices of a mask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True, order=True)
class Graph:
    """Simple graph on ``n`` labelled vertices; ``edges`` is the pair bit set."""

    n: int
    edges: int = 0

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if self.edges < 0 or self.edges >> num_pairs(self.n):
            raise GraphError(f"edge bits set beyond the {num_pairs(self.n)} pairs of n={self.n}")

    @property
    def edge_count(self) -> int:
        return self.edges.bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.edges >> pair_index(u, v) & 1)

    def edge_list(self) -> list[Tuple[int, int]]:
        return [pairs(self.n)[p] for p in members(self.edges)]

    def neighbors(self, v: int) -> int:
        """Neighbourhood of ``v`` as a vertex mask."""
        mask = 0
        for u in range(self.n):
            if u != v and self.edges >> pair_index(u, v) & 1:
                mask |= 1 << u
        return mask

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edge_list():
            deg[i] += 1
            deg[j] += 1
        return deg

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.edge_list())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_list()})"


def make_graph(n: int, edge_list: Iterable[Sequence[int]] = ()) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    bits = 0
    for u, v in edge_list:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        bits |= 1 << pair_index(u, v)
    return Graph(n, bits)


def complete(n: int) -> Graph:
    return Graph(n, full_mask(n))


def empty(n: int) -> Graph:
    return Graph(n, 0)


def path(n: int) -> Graph:
    return make_graph(n, ((v, v + 1) for v in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return make_graph(n, [(v, v + 1) for v in range(n - 1)] + [(0, n - 1)])


def complete_bipartite(n: int, side: VertexSetLike) -> Graph:
    """The spanning complete bipartite graph between ``side`` and its complement."""
    bits = 0
    stars = star_masks(n)
    # pairs inside ``side`` are toggled twice and cancel
    for v in members(as_mask(n, side)):
        bits ^= stars[v]
    return Graph(n, bits)


def _same_order(g1: Graph, g2: Graph) -> None:
    if g1.n != g2.n:
        raise GraphError(f"graphs on different vertex counts ({g1.n} vs {g2.n})")


def symmetric_difference(g1: Graph, g2: Graph) -> Graph:
    _same_order(g1, g2)
    return Graph(g1.n, g1.edges ^ g2.edges)


def intersection(g1: Graph, g2: Graph) -> Graph:
    _same_order(g1, g2)
    return Graph(g1.n, g1.edges & g2.edges)


def disjoint_union(*graphs: Graph) -> Graph:
    """Place the graphs side by side; later operands are shifted to higher labels."""
    total = sum(g.n for g in graphs)
    if total > MAX_VERTICES:
        raise GraphError(f"disjoint union has {total} vertices, limit is {MAX_VERTICES}")
    edges: list[Tuple[int, int]] = []
    offset = 0
    for g in graphs:
        edges.extend((i + offset, j + offset) for i, j in g.edge_list())
        offset += g.n
    return make_graph(total, edges)


def pad(g: Graph, n: int) -> Graph:
    """``g`` plus isolated vertices up to ``n`` vertices in total."""
    if n < g.n:
        raise GraphError(f"cannot pad a graph on {g.n} vertices down to {n}")
    return disjoint_union(g, empty(n - g.n))


def complement(g: Graph) -> Graph:
    return Graph(g.n, g.edges ^ full_mask(g.n))


def induced(g: Graph, vertices: VertexSetLike) -> Graph:
    """Subgraph induced on ``vertices``, relabelled by increasing original index."""
    keep = members(as_mask(g.n, vertices))
    bits = 0
    for b, j in enumerate(keep):
        for a in range(b):
            if g.edges >> pair_index(keep[a], j) & 1:
                bits |= 1 << pair_index(a, b)
    return Graph(len(keep), bits)
