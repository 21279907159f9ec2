"""Immutable simple graphs over dense integer vertex ids.

Adjacency is stored as one Python int per vertex, used as a bitset: bit ``u``
of ``adj[v]`` is set iff ``uv`` is an edge. This keeps membership O(1) and
neighbourhood intersection a single ``&`` for any ``n``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import GraphError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; every transform returns a new graph.
    """

    __slots__ = ("_n", "_adj", "_edges", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for n={n}")
        self._n = n
        self._adj = adj
        self._edges = None
        self._hash = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple:
        """Per-vertex neighbour bitmasks."""
        return self._adj

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    @property
    def edges(self) -> frozenset:
        if self._edges is None:
            self._edges = frozenset(
                (u, v) for u in range(self._n) for v in iter_bits(self._adj[u] >> (u + 1) << (u + 1))
            )
        return self._edges

    def edge_list(self) -> list:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return sorted(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return frozenset(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list:
        return [a.bit_count() for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable) -> Graph:
    """Build a graph from ``n`` and a list of vertex pairs.

    Repeated pairs are merged. Self-loops and out-of-range ids raise
    :class:`GraphError` naming the offending pair.
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    adj = [0] * n
    for pair in edge_list:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop {(u, v)}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


@dataclass(frozen=True)
class DistanceRow:
    source: int
    dist: tuple  # hop counts; None marks unreachable vertices

    def __getitem__(self, v):
        return self.dist[v]


def distances_from(G: Graph, s: int) -> DistanceRow:
    """Breadth-first hop distances from ``s``."""
    if not 0 <= s < G.n:
        raise GraphError(f"source {s} outside 0..{G.n - 1}")
    dist = [None] * G.n
    dist[s] = 0
    adj = G.adj
    seen = 1 << s
    frontier = 1 << s
    level = 0
    while frontier:
        level += 1
        reach = 0
        for v in iter_bits(frontier):
            reach |= adj[v]
        frontier = reach & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = level
    return DistanceRow(s, tuple(dist))


def ball2_masks(G: Graph) -> list:
    """For each vertex, the bitmask of vertices at distance 1 or 2."""
    adj = G.adj
    out = []
    for v in range(G.n):
        reach = adj[v]
        for u in iter_bits(adj[v]):
            reach |= adj[u]
        out.append(reach & ~(1 << v))
    return out


def square(G: Graph) -> Graph:
    """The square graph: ``uv`` is an edge iff ``1 <= d(u, v) <= 2``."""
    return Graph(G.n, ball2_masks(G))


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, (full & ~a & ~(1 << v) for v, a in enumerate(G.adj)))


def components(G: Graph) -> list:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    adj = G.adj
    left = G.full_mask
    comps = []
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adj[v]
            frontier = reach & ~seen
            seen |= frontier
        comps.append(list(iter_bits(seen)))
        left &= ~seen
    return comps


def is_connected(G: Graph) -> bool:
    return len(components(G)) == 1


def diameter(G: Graph) -> Optional[int]:
    """Largest shortest-path distance, or ``None`` for a disconnected graph."""
    best = 0
    for s in range(G.n):
        row = distances_from(G, s).dist
        if None in row:
            return None
        best = max(best, max(row))
    return best


def induced_subgraph(G: Graph, S: Iterable[int]):
    """Return ``(G[S], ids)`` where ``ids[i]`` is the original id of new vertex ``i``.

    Vertices of ``S`` keep their relative order.
    """
    ids = sorted(set(S))
    for v in ids:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} outside 0..{G.n - 1}")
    index = {v: i for i, v in enumerate(ids)}
    adj = []
    for v in ids:
        row = 0
        for u in iter_bits(G.adj[v]):
            i = index.get(u)
            if i is not None:
                row |= 1 << i
        adj.append(row)
    return Graph(len(ids), adj), ids


def max_degree(G: Graph) -> int:
    return max(G.degrees())


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    if not G.has_edge(u, v):
        raise GraphError(f"{(u, v)} is not an edge")
    adj = list(G.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(G.n, adj)


def delete_vertex(G: Graph, v: int) -> Graph:
    return induced_subgraph(G, [u for u in range(G.n) if u != v])[0]


def relabel(G: Graph, perm) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * G.n
    for u, v in G.edges:
        a, b = perm[u], perm[v]
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph(G.n, adj)


# Named families -----------------------------------------------------------

def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """``K_{a,b}`` with sides ``0..a-1`` and ``a..a+b-1``."""
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def disjoint_union(*graphs: Graph) -> Graph:
    adj = []
    offset = 0
    for H in graphs:
        adj.extend(a << offset for a in H.adj)
        offset += H.n
    return Graph(offset, adj)


def clique_number(G: Graph) -> int:
    """Exact ω(G) by bitset branch and bound with a greedy-colouring bound."""
    adj = G.adj
    best = 0

    def colour_order(P):
        order = []
        colour = 0
        while P:
            colour += 1
            Q = P
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                order.append((v, colour))
                P &= ~low
                Q &= ~low & ~adj[v]
        return order

    def expand(size, P):
        nonlocal best
        for v, c in reversed(colour_order(P)):
            if size + c <= best:
                return
            if size + 1 > best:
                best = size + 1
            expand(size + 1, P & adj[v])
            P &= ~(1 << v)

    expand(0, G.full_mask)
    return best
