"""Exact transitivity and d2-transitivity with witness partitions.

``Tr_d2(G)`` is computed as ``Tr(G^2)``: a partition is d2-transitive in ``G``
exactly when it is transitive in the square graph. The exact search scans
``k`` upward from a greedy lower bound, one feasibility probe per ``k``; by
downward monotonicity (merging the first two parts of a size-``k`` transitive
partition gives one of size ``k-1``) the first infeasible ``k`` ends the scan.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

from . import kernel
from .errors import InconclusiveError, VertexBudgetError
from .graph import Graph, clique_number, components, induced_subgraph, iter_bits, max_degree, square
from .partition import D2, TRANSITIVE, OrderedPartition

UPWARD = "upward"
DOWNWARD = "downward"

DEFAULT_VERTEX_BUDGET = 32
DEFAULT_NODE_BUDGET = 10**8


@dataclass(frozen=True)
class SolverConfig:
    vertex_budget: int = DEFAULT_VERTEX_BUDGET
    node_budget: int = DEFAULT_NODE_BUDGET
    search_order: str = UPWARD
    backend: Optional[str] = None  # None picks the import-time kernel

    def __post_init__(self):
        if self.vertex_budget < 1 or self.node_budget < 1:
            raise ValueError("solver budgets must be positive")
        if self.search_order not in (UPWARD, DOWNWARD):
            raise ValueError(f"unknown search order {self.search_order!r}")

    @classmethod
    def from_env(cls, **overrides):
        """Defaults read from ``D2TRANSIT_VERTEX_BUDGET`` / ``D2TRANSIT_NODE_BUDGET``."""
        env = {}
        if "D2TRANSIT_VERTEX_BUDGET" in os.environ:
            env["vertex_budget"] = int(os.environ["D2TRANSIT_VERTEX_BUDGET"])
        if "D2TRANSIT_NODE_BUDGET" in os.environ:
            env["node_budget"] = int(os.environ["D2TRANSIT_NODE_BUDGET"])
        env.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**env)


@dataclass
class SolveResult:
    value: int
    witness: OrderedPartition
    nodes_explored: int
    mode: str
    # bounds the search started from (greedy lower, combined upper)
    lower: int = 0
    upper: int = 0
    probes: list = field(default_factory=list)


def degree_bounds(G: Graph):
    """``(Δ+1, min(n, Δ²+1))`` with the lower end capped at ``n``."""
    d = max_degree(G)
    lo = min(d + 1, G.n)
    hi = min(G.n, d * d + 1)
    return lo, hi


def clique_bound(host: Graph) -> int:
    """``floor((n + ω) / 2)``, an upper bound on ``Tr(host)``.

    Singleton parts are pairwise adjacent, so at most ω of the ``k`` parts
    are singletons and the rest hold two or more vertices each.
    """
    return (host.n + clique_number(host)) // 2


# Greedy lower bounds -------------------------------------------------------

def _degree_order(host: Graph):
    return sorted(range(host.n), key=lambda v: (-host.degree(v), v))


def _first_fit_levels(host: Graph):
    """Greedy (Grundy) colouring in decreasing-degree order.

    A vertex coloured ``c`` has earlier neighbours of every colour ``< c``, so
    colour classes in colour order form a transitive partition.
    """
    levels = [0] * host.n
    for v in _degree_order(host):
        used = {levels[u] for u in iter_bits(host.adj[v])}
        c = 1
        while c in used:
            c += 1
        levels[v] = c
    return levels


def _clique_levels(n: int, clique):
    """Part 1 holds everything off the clique plus one clique vertex; the
    other clique vertices become singleton parts."""
    clique = sorted(clique)
    levels = [1] * n
    for i, v in enumerate(clique[1:], 2):
        levels[v] = i
    return levels


def _greedy_clique(host: Graph, start: int):
    clique = [start]
    cand = host.adj[start]
    while cand:
        v = max(iter_bits(cand), key=lambda u: ((host.adj[u] & cand).bit_count(), -u))
        clique.append(v)
        cand &= host.adj[v]
    return clique


def greedy_lower_bound(host: Graph, seeds=()):
    """Best of first-fit and clique-based partitions of ``host``.

    ``seeds`` are extra cliques of ``host`` to try. Returns ``(k, levels)``.
    """
    best = _first_fit_levels(host)
    cliques = list(seeds)
    order = _degree_order(host)
    cliques.append(_greedy_clique(host, order[0]))
    for q in cliques:
        lv = _clique_levels(host.n, q)
        if max(lv) > max(best):
            best = lv
    return max(best), best


def greedy_d2_lower_bound(G: Graph) -> SolveResult:
    """Deterministic d2-transitive partition; at least Δ(G)+1 parts.

    The closed neighbourhood of a maximum-degree vertex is a clique of ``G^2``
    and is always tried as a seed.
    """
    host = square(G)
    x = _degree_order(G)[0]
    closed = [x, *iter_bits(G.adj[x])]
    value, levels = greedy_lower_bound(host, seeds=[closed])
    return SolveResult(value, OrderedPartition.from_levels(levels), 0, D2, value, value)


# Exact search ------------------------------------------------------------

class _Counter:
    def __init__(self, budget):
        self.budget = budget
        self.nodes = 0


def _probe(adj, k, cap, counter, cfg):
    remaining = counter.budget - counter.nodes
    status, levels, nodes = kernel.feasible(adj, k, cap, remaining, backend=cfg.backend)
    counter.nodes += nodes
    if status == kernel.BUDGET:
        raise InconclusiveError(
            f"node budget {counter.budget} exhausted while probing k={k}", nodes=counter.nodes
        )
    return levels if status == kernel.FOUND else None


def _solve_connected(host: Graph, upper_hint, seeds, cfg, counter, probes):
    """Exact Tr of a connected host. Returns ``(value, levels, lower, upper)``."""
    order = _degree_order(host)
    pos = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        row = 0
        for u in iter_bits(host.adj[v]):
            row |= 1 << pos[u]
        adj.append(row)
    cap = kernel.level_caps(adj)
    upper = min(host.n, max(cap), clique_bound(host))
    if upper_hint is not None:
        upper = min(upper, upper_hint)
    lower, levels = greedy_lower_bound(host, seeds)
    if lower > upper:
        raise AssertionError(f"greedy bound {lower} exceeds upper bound {upper}")

    def run(k):
        found = _probe(adj, k, cap, counter, cfg)
        probes.append((k, found is not None))
        if found is None:
            return None
        return [found[pos[v]] for v in range(host.n)]

    value = lower
    if cfg.search_order == UPWARD:
        for k in range(lower + 1, upper + 1):
            got = run(k)
            if got is None:
                break
            value, levels = k, got
    else:
        for k in range(upper, lower, -1):
            got = run(k)
            if got is not None:
                value, levels = k, got
                break
    return value, levels, lower, upper


def _solve(host: Graph, mode: str, cfg: SolverConfig, source: Optional[Graph] = None) -> SolveResult:
    if host.n > cfg.vertex_budget:
        raise VertexBudgetError(f"graph has {host.n} vertices, budget is {cfg.vertex_budget}")
    counter = _Counter(cfg.node_budget)
    probes = []
    comps = sorted(components(host), key=lambda c: (-len(c), c[0]))
    best = None
    for comp in comps:
        if best is not None and len(comp) <= best[0]:
            break
        sub, ids = induced_subgraph(host, comp)
        upper_hint = None
        seeds = []
        if source is not None:
            # d2 mode: Δ²+1 bound and the closed-neighbourhood seed of the source component
            src, _ = induced_subgraph(source, comp)
            upper_hint = degree_bounds(src)[1]
            x = _degree_order(src)[0]
            seeds = [[x, *iter_bits(src.adj[x])]]
        value, levels, lo, hi = _solve_connected(sub, upper_hint, seeds, cfg, counter, probes)
        if best is None or value > best[0]:
            best = (value, ids, levels, lo, hi)
    value, ids, levels, lo, hi = best
    full = [1] * host.n
    for i, v in enumerate(ids):
        full[v] = levels[i]
    witness = OrderedPartition.from_levels(full, value)
    return SolveResult(value, witness, counter.nodes, mode, lo, hi, probes)


def exact_transitivity(G: Graph, cfg: SolverConfig = SolverConfig()) -> SolveResult:
    """``Tr(G)`` with a witness partition.

    For a disconnected graph the value is the best component value; the other
    components' vertices are folded into part 1 of the witness.
    """
    return _solve(G, TRANSITIVE, cfg)


def exact_d2_transitivity(G: Graph, cfg: SolverConfig = SolverConfig()) -> SolveResult:
    """``Tr_d2(G)`` computed as ``Tr(G^2)``; the witness is d2-transitive in ``G``."""
    return _solve(square(G), D2, cfg, source=G)


def feasible_transitive(G: Graph, k: int, cfg: SolverConfig = SolverConfig()) -> Optional[OrderedPartition]:
    """A transitive partition of ``G`` with exactly ``k`` parts, or ``None``."""
    if not 1 <= k <= G.n:
        raise ValueError(f"k must lie in 1..{G.n}, got {k}")
    if G.n > cfg.vertex_budget:
        raise VertexBudgetError(f"graph has {G.n} vertices, budget is {cfg.vertex_budget}")
    # level_caps is a valid per-vertex bound on any graph, connected or not
    adj = list(G.adj)
    cap = kernel.level_caps(adj)
    levels = _probe(adj, k, cap, _Counter(cfg.node_budget), cfg)
    if levels is None:
        return None
    return OrderedPartition.from_levels(levels, k)


def feasible_d2_transitive(G: Graph, k: int, cfg: SolverConfig = SolverConfig()) -> Optional[OrderedPartition]:
    return feasible_transitive(square(G), k, cfg)
