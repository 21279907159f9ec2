"""Closed-form d2-transitivity values for paths, cycles and small graphs.

These double as fast paths and as independent oracles for the exact solver.
"""

from __future__ import annotations

from typing import Optional

from .errors import GraphError
from .graph import Graph, diameter, is_connected

TAGS = ("K1", "K2", "P3", "K3", "P4", "other")

_SMALL = {
    # (n, m, sorted degrees) -> tag
    (1, 0, (0,)): "K1",
    (2, 1, (1, 1)): "K2",
    (3, 2, (1, 1, 2)): "P3",
    (3, 3, (2, 2, 2)): "K3",
    (4, 3, (1, 1, 2, 2)): "P4",
}
_SMALL_VALUE = {"K1": 1, "K2": 2, "P3": 3, "K3": 3, "P4": 3}


def path_d2(n: int) -> int:
    """d2-transitivity of the path on ``n`` vertices."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    if n <= 2:
        return n
    if n <= 4:
        return 3
    if n <= 6:
        return 4
    return 5


def cycle_d2(n: int) -> int:
    """d2-transitivity of the cycle on ``n`` vertices.

    ``C_6`` is the exception to the value 5 for ``n >= 5``: its square is the
    octahedron ``K_{2,2,2}``, whose transitivity is 4 (confirmed by exhaustive
    enumeration of all level assignments).
    """
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    if n == 3:
        return 3
    if n in (4, 6):
        return 4
    return 5


def full_value_if_small_diameter(G: Graph) -> Optional[int]:
    """``n`` when ``diam(G) <= 2`` (every vertex can be its own part), else ``None``."""
    d = diameter(G)
    if d is not None and d <= 2:
        return G.n
    return None


def small_class_tag(G: Graph) -> str:
    """Which of K1, K2, P3, K3, P4 a connected graph is, or ``"other"``.

    Among connected graphs, (n, m, degree multiset) pins these five down.
    """
    if not is_connected(G):
        raise GraphError("small-class lookup needs a connected graph")
    key = (G.n, G.m, tuple(sorted(G.degrees())))
    return _SMALL.get(key, "other")


def classify_small(G: Graph) -> Optional[int]:
    """d2-transitivity when it is 1, 2 or 3 (K1; K2; P3, K3, P4), else ``None``."""
    return _SMALL_VALUE.get(small_class_tag(G))


def complete_bipartite_d2(t1: int, t2: int, cfg=None):
    """``(Tr_d2, Tr)`` of ``K_{t1,t2}``.

    ``Tr_d2 = t1 + t2`` since the diameter is at most 2. ``Tr = t + 1`` is used
    only for the balanced case ``t1 == t2 == t``; otherwise the exact solver
    computes it.
    """
    if t1 < 1 or t2 < 1:
        raise ValueError("both sides need at least one vertex")
    if t1 == t2:
        return t1 + t2, t1 + 1
    from .graph import complete_bipartite_graph
    from .solver import SolverConfig, exact_transitivity

    tr = exact_transitivity(complete_bipartite_graph(t1, t2), cfg or SolverConfig()).value
    return t1 + t2, tr
