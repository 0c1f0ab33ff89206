"""Simple undirected graphs over vertices ``0..n-1`` with bitset adjacency.

A vertex set is a plain Python ``int`` used as a bitset: vertex ``v`` is a
member iff bit ``v`` is set.  Graphs are immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 4096


class InputError(ValueError):
    """Raised for malformed input or violated preconditions."""


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a bitset in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_ORDER:
            raise InputError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise InputError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InputError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0 or n > MAX_ORDER:
            raise InputError(f"order {n} outside 0..{MAX_ORDER}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def vertices(self) -> int:
        """Bitset of all vertices."""
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def closed_neighborhoods(self) -> list[int]:
        return [row | (1 << v) for v, row in enumerate(self.adj)]

    def isolated(self) -> int:
        return to_mask(v for v, row in enumerate(self.adj) if not row)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.vertices

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def closed_neighborhood(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range for n={g.n}")
    return g.adj[v] | (1 << v)


def degree_sequence(g: Graph) -> list[int]:
    """Non-increasing degree sequence of ``g``."""
    if g.n == 0:
        raise InputError("degree sequence of the null graph")
    return sorted(g.degrees(), reverse=True)


def vertices_by_degree(g: Graph) -> list[int]:
    """Vertices sorted by (degree descending, index ascending)."""
    return sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v))


def induced_subgraph(g: Graph, s: int | Sequence[int]) -> Graph:
    """Subgraph induced by ``s``, relabeled ``0..|s|-1`` in the order of ``s``.

    A bitset is taken in increasing vertex order.
    """
    order = list(bits(s)) if isinstance(s, int) else list(s)
    pos = {v: i for i, v in enumerate(order)}
    if len(pos) != len(order):
        raise InputError("repeated vertex in induced subgraph selection")
    adj = []
    for v in order:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for n={g.n}")
        row = 0
        for u in order:
            if g.adj[v] >> u & 1:
                row |= 1 << pos[u]
        adj.append(row)
    return Graph(len(order), tuple(adj))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    return Graph(a.n + b.n, a.adj + tuple(row << a.n for row in b.adj))


# Small named graphs used throughout.

def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    return Graph.from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))
