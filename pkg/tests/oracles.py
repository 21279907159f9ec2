"""Brute-force reference implementations used as test oracles.

Nothing here touches the package's search code: distances come from
Floyd-Warshall on a plain edge list and partitions are enumerated outright.
"""

from __future__ import annotations

import itertools

import networkx as nx

INF = float("inf")


def floyd(n, edges):
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for w in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][w] + d[w][j] < d[i][j]:
                    d[i][j] = d[i][w] + d[w][j]
    return d


def set_partitions(items):
    """All unordered set partitions, as lists of lists."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield [[first], *p]
        for i in range(len(p)):
            yield [*p[:i], [first, *p[i]], *p[i + 1:]]


def ordered_partitions(n):
    for p in set_partitions(list(range(n))):
        yield from itertools.permutations(p)


def _ok(parts, close):
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for b in parts[j]:
                if not any(close[a][b] for a in parts[i]):
                    return False
    return True


def closeness(n, edges, radius):
    d = floyd(n, edges)
    return [[1 <= d[a][b] <= radius for b in range(n)] for a in range(n)]


def brute_value(n, edges, radius=1):
    """Maximum k over all ordered partitions; radius 2 gives Tr_d2."""
    close = closeness(n, edges, radius)
    best = 1
    for parts in ordered_partitions(n):
        if len(parts) > best and _ok(parts, close):
            best = len(parts)
    return best


def brute_feasible_sizes(n, edges, radius=1):
    close = closeness(n, edges, radius)
    return {len(p) for p in ordered_partitions(n) if _ok(p, close)}


def brute_is_valid(n, edges, parts, radius=1):
    return _ok([list(p) for p in parts], closeness(n, edges, radius))


def atlas(max_n, connected=None):
    """Graphs from the networkx atlas as ``(n, edges)``, one per iso class."""
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        if connected is not None and nx.is_connected(g) != connected:
            continue
        yield n, sorted(tuple(sorted(e)) for e in g.edges())


def labeled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [pairs[i] for i in range(len(pairs)) if mask >> i & 1]


def is_connected_edges(n, edges):
    d = floyd(n, edges)
    return all(x < INF for x in d[0])
