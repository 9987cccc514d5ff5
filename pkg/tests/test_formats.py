import pytest

from blockrainbow import EdgeColoring, Graph, GraphError
from blockrainbow.corpus import sample_block_graphs
from blockrainbow.formats import (
    format_coloring,
    format_graph,
    parse_coloring,
    parse_graph,
    parse_graph_with_pairs,
    read_coloring,
    read_graph,
    write_coloring,
    write_graph,
)


def test_parse_ignores_comments_and_blanks():
    g = parse_graph("# a bowtie\n0 1\n\n1 2\n0 2\n2 3\n3 4\n2 4\n")
    assert g.n == 5 and g.m == 6


def test_pairs_and_vertex_count():
    g, pairs = parse_graph_with_pairs("# vertices 4\n0 1\n0 2\n0 3\n# pair 3 1\n# pair 1 2\n")
    assert g.n == 4
    assert pairs == [(1, 3), (1, 2)]


def test_single_vertex_roundtrip():
    g = Graph(1, [])
    text = format_graph(g)
    assert "# vertices 1" in text
    assert parse_graph(text) == g


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("0 1\n1 1\n", "line 2: self-loop"),
        ("0 1\n1 0\n", "line 2: duplicate edge"),
        ("0 1\nx y\n", "line 2: expected integers"),
        ("0 1 2\n", "line 1: expected 2 integers"),
        ("0 -1\n", "line 1: negative"),
        ("", "empty graph"),
        ("0 1\n2 3\n", "not connected"),
        ("# vertices 2\n0 1\n1 2\n", "declared 2 vertices"),
    ],
)
def test_parse_errors_name_the_problem(text, fragment):
    with pytest.raises(GraphError, match=fragment):
        parse_graph(text)


def test_graph_roundtrip_through_files(tmp_path):
    for g in sample_block_graphs(2, 20):
        path = tmp_path / "g.txt"
        write_graph(path, g)
        assert read_graph(path) == g


def test_coloring_roundtrip(tmp_path):
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    c = EdgeColoring({(1, 0): 2, (1, 2): 0, (0, 2): 1})
    text = format_coloring(c)
    assert text == "0 1 2\n0 2 1\n1 2 0\n"
    assert parse_coloring(text, g) == c
    write_coloring(tmp_path / "c.txt", c)
    assert read_coloring(tmp_path / "c.txt", g) == c


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("0 1 -1\n", "negative color"),
        ("0 1 0\n1 0 1\n", "colored twice"),
        ("0 5 0\n", "not in the graph"),
        ("0 1\n", "expected 3 integers"),
    ],
)
def test_coloring_errors(text, fragment):
    g = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(GraphError, match=fragment):
        parse_coloring(text, g)


def test_coloring_list_view():
    g = Graph(3, [(0, 1), (1, 2)])
    c = EdgeColoring.from_list(g, [0, 1])
    assert c.as_list(g) == [0, 1] and c.color_count == 2 and c.is_dense
    assert not EdgeColoring({(0, 1): 3}).is_dense
    with pytest.raises(GraphError, match="partial"):
        EdgeColoring({(0, 1): 0}).as_list(g)
    with pytest.raises(GraphError, match="expected 2 colors"):
        EdgeColoring.from_list(g, [0])
