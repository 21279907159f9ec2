"""Deterministic instance generators, keyed by ``(family, params, seed)``."""

from __future__ import annotations

import random

from .classes import BipartiteView
from .errors import GraphError
from .graph import (
    build_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    is_connected,
    path_graph,
)

FAMILIES = ("path", "cycle", "complete", "complete_bipartite", "chain", "split", "gnp", "bipartite_gnp")


def _check(cond, msg):
    if not cond:
        raise GraphError(msg)


def _prob(p):
    _check(0.0 <= p <= 1.0, f"probability must lie in [0, 1], got {p}")
    return p


def gnp(n, p, seed=0, connected=False, max_tries=1000):
    """``G(n, p)`` with edges drawn in lexicographic pair order."""
    _check(n >= 1, "gnp needs n >= 1")
    _prob(p)
    rng = random.Random(seed)
    for _ in range(max_tries):
        G = build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        if not connected or is_connected(G):
            return G
    raise GraphError(f"no connected G({n}, {p}) sample in {max_tries} tries")


def bipartite_gnp(nx, ny, p, seed=0, connected=False, max_tries=1000):
    """Random bipartite graph with sides ``0..nx-1`` and ``nx..nx+ny-1``."""
    _check(nx >= 1 and ny >= 0, "bipartite_gnp needs nx >= 1 and ny >= 0")
    _prob(p)
    rng = random.Random(seed)
    X, Y = frozenset(range(nx)), frozenset(range(nx, nx + ny))
    for _ in range(max_tries):
        G = build_graph(nx + ny, [(i, nx + j) for i in range(nx) for j in range(ny) if rng.random() < p])
        if not connected or is_connected(G):
            return BipartiteView(G, X, Y)
    raise GraphError(f"no connected bipartite sample after {max_tries} tries")


def chain(nx, ny, seed=0):
    """Random connected bipartite chain graph.

    Side X ``0..nx-1`` and side Y ``nx..`` are shuffled into a hidden chain
    order; ``N(x_i)`` is the first ``d_i`` vertices of Y's order with
    ``ny = d_1 >= ... >= d_nx >= 1``, so the top vertex of each side sees all
    of the other side.
    """
    _check(nx >= 1 and ny >= 1, "chain needs both sides non-empty")
    rng = random.Random(seed)
    xs = list(range(nx))
    ys = list(range(nx, nx + ny))
    rng.shuffle(xs)
    rng.shuffle(ys)
    degs = sorted((rng.randint(1, ny) for _ in range(nx - 1)), reverse=True)
    degs = [ny] + degs
    edges = [(x, y) for x, d in zip(xs, degs) for y in ys[:d]]
    return BipartiteView(build_graph(nx + ny, edges), frozenset(xs), frozenset(ys))


def split(nk, ns, p, seed=0):
    """Clique on ``0..nk-1``; each independent vertex joins each clique vertex w.p. ``p``."""
    _check(nk >= 0 and ns >= 0 and nk + ns >= 1, "split needs at least one vertex")
    _prob(p)
    rng = random.Random(seed)
    edges = [(i, j) for i in range(nk) for j in range(i + 1, nk)]
    edges += [(i, nk + s) for s in range(ns) for i in range(nk) if rng.random() < p]
    return build_graph(nk + ns, edges)


def generate(family: str, *params, seed: int = 0):
    """Dispatch by family name; returns a Graph or a BipartiteView."""
    try:
        if family == "path":
            (n,) = params
            return path_graph(int(n))
        if family == "cycle":
            (n,) = params
            return cycle_graph(int(n))
        if family == "complete":
            (n,) = params
            _check(int(n) >= 1, "complete needs n >= 1")
            return complete_graph(int(n))
        if family == "complete_bipartite":
            a, b = (int(x) for x in params)
            _check(a >= 1 and b >= 1, "complete_bipartite needs both sides non-empty")
            G = complete_bipartite_graph(a, b)
            return BipartiteView(G, frozenset(range(a)), frozenset(range(a, a + b)))
        if family == "chain":
            a, b = (int(x) for x in params)
            return chain(a, b, seed)
        if family == "split":
            a, b, p = params
            return split(int(a), int(b), float(p), seed)
        if family == "gnp":
            n, p = params
            return gnp(int(n), float(p), seed)
        if family == "bipartite_gnp":
            a, b, p = params
            return bipartite_gnp(int(a), int(b), float(p), seed)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad parameters for {family}: {params!r}") from None
    raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
