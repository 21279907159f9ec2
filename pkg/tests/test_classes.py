import itertools
import random

import pytest

from d2transit import (
    BipartiteView,
    GraphError,
    build_graph,
    chain_ordering,
    chain_square_complement,
    complement,
    d2_of_chain,
    d2_of_complement_bipartite,
    exact_d2_transitivity,
    find_star_center,
    recognize_bipartite,
    recognize_split,
    square,
    verify_star_convex,
)
from d2transit.classes import d2_of_chain_components, recognize_star_convex
from d2transit.generators import bipartite_gnp, chain, split
from d2transit.graph import complete_bipartite_graph, complete_graph, cycle_graph, disjoint_union, path_graph
from d2transit.reductions import star_convex_gadget
from oracles import labeled_graphs


def view(n, edges, X):
    G = build_graph(n, edges)
    X = frozenset(X)
    return BipartiteView(G, X, frozenset(range(n)) - X)


def brute_split(G):
    for mask in range(1 << G.n):
        K = [v for v in range(G.n) if mask >> v & 1]
        S = [v for v in range(G.n) if not mask >> v & 1]
        if all(G.has_edge(a, b) for a, b in itertools.combinations(K, 2)) and \
                not any(G.has_edge(a, b) for a, b in itertools.combinations(S, 2)):
            return True
    return False


def brute_chain(B):
    def nested_some(side):
        return any(all(B.graph.neighbors(o[i + 1]) <= B.graph.neighbors(o[i]) for i in range(len(o) - 1))
                   for o in itertools.permutations(sorted(side)))
    return nested_some(B.X) and nested_some(B.Y)


def test_bipartite_examples():
    B = recognize_bipartite(cycle_graph(4))
    assert len(B.X) == 2 and len(B.Y) == 2
    assert recognize_bipartite(cycle_graph(5)) is None
    B = recognize_bipartite(path_graph(4))
    assert {B.X, B.Y} == {frozenset({0, 2}), frozenset({1, 3})}


def test_view_validation():
    with pytest.raises(GraphError):
        view(3, [(0, 1), (1, 2)], [0, 1])
    G = path_graph(3)
    with pytest.raises(GraphError):
        BipartiteView(G, frozenset({0}), frozenset({1}))


def test_split_examples():
    d = recognize_split(complete_graph(4))
    assert d.clique == frozenset(range(4)) and not d.independent
    assert recognize_split(cycle_graph(4)) is None
    star = complete_bipartite_graph(1, 3)
    d = recognize_split(star)
    assert 0 in d.clique and len(d.clique) <= 2 and d.clique | d.independent == frozenset(range(4))


@pytest.mark.parametrize("n", range(1, 7))
def test_split_matches_brute_force(n):
    for edges in labeled_graphs(n):
        G = build_graph(n, edges)
        d = recognize_split(G)
        assert (d is not None) == brute_split(G)
        if d is not None:
            assert all(G.has_edge(a, b) for a, b in itertools.combinations(d.clique, 2))
            assert not any(G.has_edge(a, b) for a, b in itertools.combinations(d.independent, 2))


def test_chain_examples():
    B = recognize_bipartite(path_graph(4))
    assert chain_ordering(B) is not None
    assert chain_ordering(recognize_bipartite(cycle_graph(6))) is None
    assert chain_ordering(recognize_bipartite(cycle_graph(8))) is None
    K = recognize_bipartite(complete_bipartite_graph(2, 3))
    assert chain_ordering(K) is not None


def test_chain_matches_brute_force():
    rng = random.Random(1)
    for _ in range(300):
        B = bipartite_gnp(rng.randint(1, 4), rng.randint(1, 4), rng.random(), seed=rng.randrange(10**6))
        order = chain_ordering(B)
        assert (order is not None) == brute_chain(B)
        if order is not None:
            assert sorted(order.sigma_X) == sorted(B.X) and sorted(order.sigma_Y) == sorted(B.Y)


def test_generated_chain_graphs_are_chain():
    for seed in range(50):
        assert chain_ordering(chain(1 + seed % 5, 1 + seed % 4, seed)) is not None


def test_star_convex_examples():
    B = recognize_bipartite(cycle_graph(4))
    g = star_convex_gadget(B)
    assert verify_star_convex(g.view, g.apex)
    C6 = recognize_bipartite(cycle_graph(6))
    assert all(not verify_star_convex(C6, x) for x in C6.X)
    assert find_star_center(C6) is None
    matching = view(4, [(0, 2), (1, 3)], [0, 1])
    assert verify_star_convex(matching, 0) and verify_star_convex(matching, 1)
    with pytest.raises(GraphError):
        verify_star_convex(matching, 2)


def test_recognize_star_convex_both_orientations():
    # the center lives on the side listed second
    B = view(5, [(0, 2), (1, 2), (2, 3), (2, 4)], [0, 1, 3, 4])
    found = recognize_star_convex(B.graph, B)
    assert found is not None
    Bv, center = found
    assert verify_star_convex(Bv, center)


def test_complement_bipartite_examples():
    K22 = recognize_bipartite(complete_bipartite_graph(2, 2))
    value, t, Xp, Yp = d2_of_complement_bipartite(K22)
    assert (value, t) == (2, 2) and Xp == K22.X and Yp == K22.Y
    P3 = view(3, [(0, 1), (1, 2)], [1])
    value, t, _, _ = d2_of_complement_bipartite(P3)
    assert (value, t) == (2, 1)
    assert value == exact_d2_transitivity(complement(P3.graph)).value
    C6 = recognize_bipartite(cycle_graph(6))
    assert d2_of_complement_bipartite(C6)[:2] == (6, 0)
    with pytest.raises(GraphError):
        d2_of_complement_bipartite(BipartiteView(build_graph(2, []), frozenset({0, 1}), frozenset()))


def test_chain_square_complement_examples():
    P4 = recognize_bipartite(path_graph(4))
    H = chain_square_complement(P4)
    assert H.graph.edges == {(0, 3)}
    assert [d for d in H.graph.degrees()] == [1, 0, 0, 1]
    K = recognize_bipartite(complete_bipartite_graph(3, 2))
    assert chain_square_complement(K).graph.m == 0
    with pytest.raises(GraphError):
        chain_square_complement(recognize_bipartite(cycle_graph(6)))
    with pytest.raises(GraphError):
        chain_square_complement(recognize_bipartite(disjoint_union(path_graph(2), path_graph(2))))


def test_chain_square_structure():
    for seed in range(60):
        B = chain(1 + seed % 5, 1 + (seed // 5) % 5, seed)
        H = chain_square_complement(B)
        S = square(B.graph)
        cross = {(min(x, y), max(x, y)) for x in B.X for y in B.Y}
        assert {e for e in S.edges if e in cross} == cross - H.graph.edges
        for side in (B.X, B.Y):
            assert all(S.has_edge(a, b) for a, b in itertools.combinations(side, 2))
        assert complement(H.graph) == S
        order = chain_ordering(B)
        rev_x, rev_y = order.sigma_X[::-1], order.sigma_Y[::-1]
        for seq in (rev_x, rev_y):
            assert all(H.graph.neighbors(seq[i + 1]) <= H.graph.neighbors(seq[i]) for i in range(len(seq) - 1))
        assert chain_ordering(H) is not None


def test_d2_of_chain_examples():
    assert d2_of_chain(recognize_bipartite(path_graph(4))) == 3
    assert d2_of_chain(recognize_bipartite(complete_bipartite_graph(1, 3))) == 4
    assert d2_of_chain(recognize_bipartite(complete_bipartite_graph(3, 3))) == 6


def test_d2_of_chain_components():
    G = disjoint_union(path_graph(4), complete_bipartite_graph(2, 3), complete_graph(1))
    B = recognize_bipartite(G)
    assert d2_of_chain_components(B) == 5 == exact_d2_transitivity(G).value


def test_split_generator_passes_recognizer():
    for seed in range(50):
        assert recognize_split(split(1 + seed % 5, seed % 4, 0.5, seed)) is not None
