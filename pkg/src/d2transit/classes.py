"""Recognisers for bipartite, split, chain and star-convex graphs, and the
polynomial d2-transitivity routes for complements of bipartite graphs and for
bipartite chain graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import GraphError
from .graph import Graph, build_graph, complement, components, is_connected, iter_bits, mask_of
from .solver import SolverConfig, exact_transitivity


@dataclass(frozen=True)
class BipartiteView:
    """A graph together with a certified bipartition ``(X, Y)``."""

    graph: Graph
    X: frozenset
    Y: frozenset

    def __post_init__(self):
        X, Y = frozenset(self.X), frozenset(self.Y)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        if X & Y or len(X) + len(Y) != self.graph.n or (X | Y) != frozenset(range(self.graph.n)):
            raise GraphError("sides must partition the vertex set")
        xm, ym = mask_of(X), mask_of(Y)
        for v in X:
            if self.graph.adj[v] & xm:
                raise GraphError(f"vertex {v} has a neighbour on its own side X")
        for v in Y:
            if self.graph.adj[v] & ym:
                raise GraphError(f"vertex {v} has a neighbour on its own side Y")

    @property
    def n(self) -> int:
        return self.graph.n

    def swapped(self) -> "BipartiteView":
        return BipartiteView(self.graph, self.Y, self.X)


@dataclass(frozen=True)
class ChainOrdering:
    sigma_X: tuple
    sigma_Y: tuple


@dataclass(frozen=True)
class SplitDecomposition:
    clique: frozenset
    independent: frozenset


def recognize_bipartite(G: Graph) -> Optional[BipartiteView]:
    """Two-colour ``G`` by BFS; the smallest vertex of each component goes to X."""
    side = [None] * G.n
    for root in range(G.n):
        if side[root] is not None:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in iter_bits(G.adj[v]):
                if side[u] is None:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    X = frozenset(v for v in range(G.n) if side[v] == 0)
    return BipartiteView(G, X, frozenset(range(G.n)) - X)


def _is_clique(G: Graph, S) -> bool:
    m = mask_of(S)
    return all((G.adj[v] | 1 << v) & m == m for v in S)


def _is_independent(G: Graph, S) -> bool:
    m = mask_of(S)
    return all(not G.adj[v] & m for v in S)


def recognize_split(G: Graph) -> Optional[SplitDecomposition]:
    """Degree-sequence split test, then a direct check of the decomposition.

    With degrees sorted ``d_1 >= ... >= d_n`` and ``w = max{i : d_i >= i - 1}``,
    ``G`` is split iff ``sum_{i<=w} d_i = w(w-1) + sum_{i>w} d_i``; the ``w``
    highest-degree vertices then form the clique.
    """
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    deg = [G.degree(v) for v in order]
    w = max(i for i in range(1, G.n + 1) if deg[i - 1] >= i - 1)
    if sum(deg[:w]) != w * (w - 1) + sum(deg[w:]):
        return None
    K, S = frozenset(order[:w]), frozenset(order[w:])
    if not (_is_clique(G, K) and _is_independent(G, S)):
        return None
    return SplitDecomposition(K, S)


def _nested(G: Graph, seq) -> bool:
    adj = G.adj
    return all(adj[b] & ~adj[a] == 0 for a, b in zip(seq, seq[1:]))


def chain_ordering(B: BipartiteView) -> Optional[ChainOrdering]:
    """Sort each side by non-increasing degree (ties by id) and check nesting."""
    G = B.graph
    sx = tuple(sorted(B.X, key=lambda v: (-G.degree(v), v)))
    sy = tuple(sorted(B.Y, key=lambda v: (-G.degree(v), v)))
    if _nested(G, sx) and _nested(G, sy):
        return ChainOrdering(sx, sy)
    return None


def verify_star_convex(B: BipartiteView, center: int) -> bool:
    """Whether the star on X centred at ``center`` makes every ``N(y)`` a subtree.

    A vertex set spans a subtree of a star iff it has at most one vertex or
    contains the centre.
    """
    if center not in B.X:
        raise GraphError(f"centre {center} is not on side X")
    adj = B.graph.adj
    return all(adj[y] >> center & 1 or adj[y].bit_count() <= 1 for y in B.Y)


def find_star_center(B: BipartiteView) -> Optional[int]:
    """Smallest valid star centre on side X, trying every candidate."""
    for x in sorted(B.X):
        if verify_star_convex(B, x):
            return x
    return None


def recognize_star_convex(G: Graph, B: Optional[BipartiteView] = None):
    """``(view, centre)`` with the star on ``view.X``, or ``None``.

    Without a given bipartition every component's two-colouring is fixed
    only up to swapping sides, so both global orientations of the BFS
    colouring are tried; with one component this is exhaustive.
    """
    views = [B] if B is not None else []
    if B is None:
        base = recognize_bipartite(G)
        if base is None:
            return None
        views = [base, base.swapped()]
    for view in views:
        if view.X:
            c = find_star_center(view)
            if c is not None:
                return view, c
    return None


# Complement of a bipartite graph ------------------------------------------

def d2_of_complement_bipartite(B: BipartiteView):
    """d2-transitivity of the complement of the bipartite graph ``B``.

    Returns ``(value, t, X', Y')`` where ``X'`` (``Y'``) holds the vertices of
    X (Y) adjacent in ``B`` to all of the other side, ``t = min(|X'|, |Y'|)``
    and ``value = |X| + |Y| - t``. The complement is never built.
    """
    if not B.X or not B.Y:
        raise GraphError("both sides must be non-empty")
    G = B.graph
    nx, ny = len(B.X), len(B.Y)
    Xp = frozenset(x for x in B.X if G.degree(x) == ny)
    Yp = frozenset(y for y in B.Y if G.degree(y) == nx)
    t = min(len(Xp), len(Yp))
    return nx + ny - t, t, Xp, Yp


# Bipartite chain graphs ------------------------------------------------------

def chain_square_complement(B: BipartiteView, ordering: Optional[ChainOrdering] = None) -> BipartiteView:
    """The bipartite graph ``H`` with ``square(B.graph) == complement(H)``.

    ``H`` keeps the bipartition and joins ``x`` and ``y`` exactly when they are
    non-adjacent in ``B``; it is again a chain graph whose orderings are the
    reversals of ``B``'s, possibly with isolated vertices.
    """
    if not is_connected(B.graph):
        raise GraphError("chain graph must be connected")
    if ordering is None:
        ordering = chain_ordering(B)
        if ordering is None:
            raise GraphError("graph is not a bipartite chain graph")
    elif not (_nested(B.graph, ordering.sigma_X) and _nested(B.graph, ordering.sigma_Y)):
        raise GraphError("given ordering is not a chain ordering")
    G = B.graph
    edges = [(x, y) for x in B.X for y in B.Y if not G.has_edge(x, y)]
    return BipartiteView(build_graph(G.n, edges), B.X, B.Y)


def d2_of_chain(B: BipartiteView, cfg: SolverConfig = SolverConfig()) -> int:
    """d2-transitivity of a connected bipartite chain graph.

    The square of ``B`` is the complement of the chain graph
    :func:`chain_square_complement` returns; its transitivity is computed with
    the exact solver.
    """
    H = chain_square_complement(B)
    return exact_transitivity(complement(H.graph), cfg).value


def d2_of_chain_components(B: BipartiteView, cfg: SolverConfig = SolverConfig()) -> int:
    """Like :func:`d2_of_chain` but maximised over components."""
    from .graph import induced_subgraph

    best = 0
    for comp in components(B.graph):
        if len(comp) == 1:
            best = max(best, 1)
            continue
        sub, ids = induced_subgraph(B.graph, comp)
        X = frozenset(i for i, v in enumerate(ids) if v in B.X)
        view = BipartiteView(sub, X, frozenset(range(sub.n)) - X)
        best = max(best, d2_of_chain(view, cfg))
    return best
