import pytest
from hypothesis import given, settings

from helpers import brute_covers, brute_mist, connected_graphs
from mist.cover import validate_cover
from mist.generators import gen_tight, random_tree
from mist.graph import Graph, SpanningTree
from mist.oracle import (HamTables, OracleBoundError, exact_max_path_cover, exact_mist,
                         exhaustive_cover, internal_vertices, tree_path_cover)


def test_hamiltonian_tables():
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    t = HamTables(c4)
    assert t.has_cycle(0b1111) and not t.has_cycle(0b0111)
    assert t.has_path(0b0111) and not t.has_path(0b0101)
    p = t.path(0b1111)
    assert sorted(p) == [0, 1, 2, 3] and all(c4.has_edge(a, b) for a, b in zip(p, p[1:]))
    cyc = t.cycle(0b1111)
    assert all(c4.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4))


def test_exact_mist_small_cases():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert exact_mist(star)[1] == 1
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert exact_mist(c5)[1] == 3
    assert exact_mist(Graph.from_edges(2, [(0, 1)]))[1] == 0


@pytest.mark.parametrize("k, want", [(2, 6), (3, 10)])
def test_tight_family_optimum(k, want):
    t, count = exact_mist(gen_tight(k))
    assert count == want == 4 * k - 2
    assert t.spans(gen_tight(k))


def test_bounds():
    big = Graph.from_edges(13, [(i, i + 1) for i in range(12)])
    with pytest.raises(OracleBoundError):
        exact_mist(big)
    with pytest.raises(ValueError):
        exact_mist(Graph.from_edges(3, [(0, 1)]))
    assert exact_mist(big, bound=13)[1] == 11


@settings(max_examples=120, deadline=None)
@given(connected_graphs(max_n=7))
def test_exact_mist_matches_tree_enumeration(g):
    t, count = exact_mist(g)
    assert t.spans(g) and t.internal_count == count
    assert count == brute_mist(g)


@settings(max_examples=120, deadline=None)
@given(connected_graphs(max_n=6))
def test_cover_dp_matches_subset_scan(g):
    for min_cycle in (3, 4):
        h = exhaustive_cover(g, min_cycle)
        assert validate_cover(g, h, min_cycle)
        assert h.edge_count == brute_covers(g, min_cycle)[0]
    p = exact_max_path_cover(g)
    assert not p.cycles
    assert p.edge_count == brute_covers(g, g.n + 1)[0]


@settings(max_examples=120, deadline=None)
@given(connected_graphs(min_n=2, max_n=9))
def test_optimum_below_path_cover(g):
    # a tree with I internal vertices contains a path cover with more than I edges
    opt = exact_mist(g)[1]
    assert opt < exact_max_path_cover(g).edge_count


def test_internal_vertices():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    t = SpanningTree.from_edges(3, [(0, 1), (1, 2)])
    assert internal_vertices(g, t) == (frozenset({1}), 1)
    with pytest.raises(ValueError):
        internal_vertices(g, SpanningTree.from_edges(3, [(0, 1)]))


def test_tree_path_cover_spider():
    # three legs of length 2 from a center: longest path uses two legs
    g = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    h = tree_path_cover(g)
    assert len(h.components) == 2 <= len(g.leaves()) - 1
    assert validate_cover(g, h)
    with pytest.raises(ValueError):
        tree_path_cover(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


@settings(max_examples=200, deadline=None)
@given(connected_graphs(min_n=2, max_n=30, max_extra=0))
def test_tree_path_cover_leaf_bound(t):
    h = tree_path_cover(t)
    assert validate_cover(t, h)
    assert not h.cycles
    assert len(h.components) <= len(t.leaves()) - 1


def test_tree_path_cover_accepts_spanning_tree():
    t = random_tree(12, 5)
    st_ = SpanningTree.from_edges(12, t.edges())
    assert tree_path_cover(st_) == tree_path_cover(t)
