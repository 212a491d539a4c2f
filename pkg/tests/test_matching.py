import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_matching, connected_graphs
from mist.graph import Graph
from mist.matching import is_matching, max_matching, max_matching_edges
from mist.oracle import exhaustive_matching_size


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def test_petersen_has_perfect_matching():
    m = max_matching(petersen())
    assert len(m) == 5 and is_matching(m)


def test_odd_cycle_blossom():
    # 5-cycle with a pendant: the pendant must be matched through the blossom
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (4, 5)])
    assert len(max_matching(g)) == 3


def test_empty_and_isolated():
    assert max_matching_edges(3, []) == []
    assert max_matching(Graph.from_edges(1, [])) == []


def test_is_matching():
    assert is_matching([(0, 1), (2, 3)])
    assert not is_matching([(0, 1), (1, 2)])


@st.composite
def any_graph(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@settings(max_examples=300, deadline=None)
@given(any_graph())
def test_matching_size_against_references(g):
    m = max_matching(g)
    assert is_matching(m)
    assert all(g.has_edge(u, v) for u, v in m)
    assert len(m) == exhaustive_matching_size(g)
    assert len(m) == len(nx.max_weight_matching(nx.Graph(g.edge_list()), maxcardinality=True))


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=8))
def test_exhaustive_matching_against_combinations(g):
    assert exhaustive_matching_size(g) == brute_matching(g)
