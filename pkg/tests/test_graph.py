import networkx as nx
import pytest
from hypothesis import given, settings

from helpers import brute_bridges, brute_component_gain, connected_graphs
from mist.graph import (Graph, GraphFormatError, SpanningTree, connected_components, cut_edges,
                        cut_vertices, format_graph, format_tree, parse_graph, parse_tree,
                        super_cut_vertices)


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_edges_are_ascending():
    g = Graph.from_edges(4, [(3, 2), (1, 0), (2, 0)])
    assert list(g.edges()) == [(0, 1), (0, 2), (2, 3)]
    assert g.m == 3 and g.degree(0) == 2 and g.has_edge(3, 2)


def test_components_and_tree():
    g = Graph.from_edges(5, [(0, 1), (3, 4)])
    part = connected_components(g)
    assert part.count == 3
    assert sorted(map(sorted, part.members())) == [[0, 1], [2], [3, 4]]
    assert not g.is_connected()
    assert Graph.from_edges(3, [(0, 1), (1, 2)]).is_tree()


def test_star_center_is_super_cut():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert super_cut_vertices(star) == {0}
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert cut_vertices(path) == {1}
    assert super_cut_vertices(path) == set()


def test_cycle_has_no_bridges():
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert cut_edges(c5) == set()
    assert cut_vertices(c5) == set()


@settings(max_examples=200, deadline=None)
@given(connected_graphs(max_n=9))
def test_bridges_match_deletion(g):
    assert cut_edges(g) == brute_bridges(g)
    G = nx.Graph(list(g.edges()))
    G.add_nodes_from(range(g.n))
    assert cut_edges(g) == {tuple(sorted(e)) for e in nx.bridges(G)}


@settings(max_examples=200, deadline=None)
@given(connected_graphs(max_n=9))
def test_cut_vertices_match_deletion(g):
    gains = {v: brute_component_gain(g, v) for v in range(g.n)}
    assert cut_vertices(g) == {v for v, k in gains.items() if k >= 1}
    assert super_cut_vertices(g) == {v for v, k in gains.items() if k >= 2}


# --- file formats ---------------------------------------------------------------

GOOD = """c triangle with a tail
p 4 4
e 1 2
e 2 3
e 1 3
e 3 4
"""


def test_parse_graph():
    g = parse_graph(GOOD)
    assert g.n == 4 and g.edge_list() == [(0, 1), (0, 2), (1, 2), (2, 3)]


def test_parse_dimacs_header():
    g = parse_graph("p edge 2 1\ne 1 2\n")
    assert g.edge_list() == [(0, 1)]


@pytest.mark.parametrize("text, line", [
    ("p 3 1\ne 1 1\n", 2),          # self-loop
    ("p 3 2\ne 1 2\ne 2 1\n", 3),   # duplicate
    ("p 3 1\ne 1 4\n", 2),          # out of range
    ("p 3 1\ne 1 x\n", 2),          # not an integer
    ("e 1 2\n", 1),                 # edge before header
    ("p 3 1\nq 1 2\n", 2),          # unknown tag
    ("p 3\n", 1),                   # short header
])
def test_parse_graph_errors_carry_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_parse_graph_count_mismatch():
    with pytest.raises(GraphFormatError):
        parse_graph("p 3 2\ne 1 2\n")
    with pytest.raises(GraphFormatError):
        parse_graph("c nothing\n")


@settings(max_examples=100, deadline=None)
@given(connected_graphs(max_n=10))
def test_graph_round_trip(g):
    assert parse_graph(format_graph(g, ["note"])) == g


def test_spanning_tree_problems():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    good = SpanningTree.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert good.spans(g) and good.internal == {1, 2}
    assert SpanningTree.from_edges(4, [(0, 1), (1, 2)]).problems(g)
    assert SpanningTree.from_edges(4, [(0, 1), (1, 2), (0, 2)]).problems(g)
    assert SpanningTree.from_edges(4, [(0, 2), (1, 2), (2, 3)]).problems(g)


def test_tree_round_trip():
    t = SpanningTree.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    back, stats = parse_tree(format_tree(t, {"internal": 2, "mode": "approx"}), 4)
    assert back == t and stats == {"internal": "2", "mode": "approx"}
    with pytest.raises(GraphFormatError):
        parse_tree("t 1 9\n", 4)
