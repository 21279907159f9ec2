import pytest

from d2transit import BipartiteView, GraphError, build_graph
from d2transit.generators import FAMILIES, generate
from d2transit.graph import path_graph
from d2transit.io import ParseError, format_instance, parse_edge_list, parse_instance


def test_parse_path():
    assert parse_edge_list("p 3 2\ne 0 1\ne 1 2") == path_graph(3)


def test_parse_sides():
    B = parse_edge_list("p 4 2\ne 0 2\ne 1 3\nb X: 0 1 | Y: 2 3\n")
    assert isinstance(B, BipartiteView)
    assert B.X == {0, 1} and B.Y == {2, 3}


def test_parse_labels_and_comments():
    inst = parse_instance("# a graph\np 3 2  # header\nv 0 a\nv 2 c\ne a 1\ne 1 c\n")
    assert inst.graph == path_graph(3)
    assert inst.labels == ("a", "1", "c")


@pytest.mark.parametrize("text,lineno", [
    ("p 2 1\ne 0 0", 2),
    ("p 3 2\ne 0 1\ne 1 0", 3),
    ("e 0 1\np 2 1", 1),
    ("p 2 1\np 2 1", 2),
    ("p 2 1\ne 0 5", 2),
    ("p 2 1\ne 0 x", 2),
    ("p 2 1\nq 1", 2),
    ("p 2 1\ne 0", 2),
    ("p 3 1\ne 0 1\nb X: 0 1 | Y: 2", 3),
    ("p 3 1\ne 0 1\nb X: 0 | Z: 1 2", 3),
    ("p x 1", 1),
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_parse_header_problems():
    with pytest.raises(GraphError, match="header"):
        parse_instance("# nothing\n")
    with pytest.raises(GraphError, match="declares 2 edges"):
        parse_instance("p 3 2\ne 0 1\n")


@pytest.mark.parametrize("family,params", [
    ("path", ["7"]), ("cycle", ["5"]), ("complete", ["4"]), ("complete_bipartite", ["3", "3"]),
    ("chain", ["4", "4"]), ("split", ["3", "4", "0.5"]), ("gnp", ["9", "0.3"]), ("bipartite_gnp", ["3", "4", "0.5"]),
])
def test_round_trip_generated(family, params):
    for seed in range(5):
        obj = generate(family, *params, seed=seed)
        text = format_instance(obj, comments=["generated"])
        assert parse_edge_list(text) == obj
        assert format_instance(parse_edge_list(text), comments=["generated"]) == text


def test_round_trip_labels():
    inst = parse_instance("p 2 1\nv 0 left\nv 1 right\ne left right\n")
    again = parse_instance(format_instance(inst.graph, labels=inst.labels))
    assert again == inst


def test_generators_examples_and_determinism():
    from d2transit import chain_ordering, recognize_split

    assert generate("path", 7) == path_graph(7)
    K = generate("complete_bipartite", 3, 3)
    assert K.graph.m == 9 and len(K.X) == 3
    assert chain_ordering(generate("chain", 4, 4, seed=1)) is not None
    assert generate("gnp", 10, 0.5, seed=3) == generate("gnp", 10, 0.5, seed=3)
    assert recognize_split(generate("split", 4, 3, 0.4, seed=2)) is not None
    assert set(FAMILIES) == {"path", "cycle", "complete", "complete_bipartite", "chain", "split", "gnp", "bipartite_gnp"}


@pytest.mark.parametrize("family,params", [
    ("path", [0]), ("cycle", [2]), ("gnp", [5, 1.5]), ("chain", [0, 3]), ("nope", [1]), ("path", [1, 2]),
])
def test_generator_rejects_bad_params(family, params):
    with pytest.raises(GraphError):
        generate(family, *params)


def test_format_graph():
    assert format_instance(build_graph(2, [(0, 1)])) == "p 2 1\ne 0 1\n"
