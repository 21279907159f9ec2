import pytest

from d2transit import GraphError, bipartite_gadget, build_graph, check_shift_equivalence, recognize_bipartite, recognize_split, split_gadget, star_convex_gadget, verify_star_convex
from d2transit.graph import complete_graph, cycle_graph, path_graph
from d2transit.reductions import build_gadget
from oracles import atlas

K2, P3, K3 = path_graph(2), path_graph(3), complete_graph(3)


@pytest.mark.parametrize("G,n,m", [(K2, 3, 2), (P3, 5, 5), (K3, 6, 9)])
def test_split_counts(G, n, m):
    g = split_gadget(G)
    assert (g.graph.n, g.graph.m, g.shift) == (n, m, G.m)


@pytest.mark.parametrize("G,n,m", [(K2, 6, 5), (P3, 10, 12)])
def test_bipartite_counts(G, n, m):
    g = bipartite_gadget(G)
    assert (g.graph.n, g.graph.m, g.shift) == (n, m, 2 * G.m)


def test_star_convex_counts():
    B = recognize_bipartite(cycle_graph(4))
    g = star_convex_gadget(B)
    assert (g.graph.n, g.graph.m, g.graph.degree(g.apex)) == (5, 6, 2)
    g = star_convex_gadget(recognize_bipartite(K2))
    assert (g.graph.n, g.graph.m) == (3, 2)
    assert verify_star_convex(g.view, g.apex)


def test_structural_certificates_all_small_graphs():
    for n, edges in atlas(6):
        G = build_graph(n, edges)
        if G.m == 0:
            continue
        m = G.m
        s = split_gadget(G)
        assert (s.graph.n, s.graph.m) == (n + m, (m * m + 3 * m) // 2)
        assert recognize_split(s.graph) is not None
        sub = range(n, n + m)
        assert all(s.graph.has_edge(a, b) for a in sub for b in sub if a < b)
        assert not any(s.graph.has_edge(a, b) for a in range(n) for b in range(a + 1, n))
        b = bipartite_gadget(G)
        assert (b.graph.n, b.graph.m) == (2 * (n + m), m * m + 4 * m)
        X = frozenset(range(n)) | frozenset(range(2 * n + m, 2 * n + 2 * m))
        assert b.view.X == X
        assert recognize_bipartite(b.graph) is not None
        assert len(b.role) == b.graph.n == len(b.source_map)
        B = recognize_bipartite(G)
        if B is not None:
            g = star_convex_gadget(B)
            assert g.graph.n == n + 1 and g.graph.m == m + len(B.Y)
            assert verify_star_convex(g.view, g.apex)


def test_edgeless_sources_rejected():
    E = build_graph(3, [])
    with pytest.raises(GraphError):
        split_gadget(E)
    with pytest.raises(GraphError):
        bipartite_gadget(E)
    with pytest.raises(GraphError):
        build_gadget("starconvex", complete_graph(3))
    with pytest.raises(ValueError):
        build_gadget("tree", K2)


def test_role_comments_cover_every_vertex():
    g = bipartite_gadget(P3)
    lines = g.role_comments()
    assert len(lines) == g.graph.n
    assert lines[0] == "0 copy1 v0" and lines[6] == "6 edge-copy1 e0"


def test_shift_examples():
    r = check_shift_equivalence(P3, "split")
    assert (r.source_value, r.shift, r.gadget_value, r.passed) == (2, 2, 4, True)
    r = check_shift_equivalence(K3, "bipartite")
    assert (r.source_value, r.shift, r.gadget_value, r.passed) == (3, 6, 9, True)
    r = check_shift_equivalence(recognize_bipartite(cycle_graph(4)), "starconvex")
    assert (r.source_value, r.gadget_value, r.passed) == (4, 5, True)


def test_star_convex_shift_counterexample():
    # apex shortcuts let the gadget gain two parts over the source
    edges = [(0, 2), (0, 3), (0, 4), (0, 6), (0, 7), (1, 3), (1, 5), (1, 6)]
    G = build_graph(8, edges)
    B = recognize_bipartite(G)
    assert B.X == {0, 1}
    r = check_shift_equivalence(B, "starconvex")
    assert (r.source_value, r.gadget_value, r.passed) == (6, 8, False)
