import pytest
from hypothesis import given, settings

from helpers import brute_covers, connected_graphs, cycle_lengths
from mist.cover import (Cycle, Path, PathCycleCover, SizeBoundError, enumerate_max_covers,
                        format_cover, heuristic_cover, max_path_cycle_cover, max_two_matching,
                        parse_cover, validate_cover)
from mist.generators import gen_tight
from mist.graph import Graph
from mist.oracle import exhaustive_cover


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_triangle_gives_two_edge_path():
    h = max_path_cycle_cover(cycle(3))
    assert h.edge_count == 2
    assert h.components == (Path((1, 0, 2)),)
    assert len(max_two_matching(cycle(3))) == 3


def test_triangle_allowed_with_min_cycle_3():
    h = max_path_cycle_cover(cycle(3), min_cycle=3)
    assert h.edge_count == 3 and h.cycles


def test_square_is_its_own_cover():
    h = max_path_cycle_cover(cycle(4))
    assert h.components == (Cycle((0, 1, 2, 3)),)


def test_tight_two_squares():
    h = max_path_cycle_cover(gen_tight(2))
    assert h.edge_count == 8
    assert [c.verts for c in h.cycles] == [(0, 1, 2, 3), (4, 5, 6, 7)]
    # the squares are the only maximum cover
    assert len(list(enumerate_max_covers(gen_tight(2)))) == 1


def test_two_triangles_joined():
    # triangles 012 and 345 bridged by (2, 3): best triangle-free cover is a
    # Hamiltonian path with 5 edges
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    assert len(max_two_matching(g)) == 6
    assert max_path_cycle_cover(g).edge_count == 5
    assert heuristic_cover(g).edge_count == 5


def test_from_edges_canonical_orientation():
    h = PathCycleCover.from_edges(6, [(4, 3), (1, 0), (2, 1), (5, 3), (4, 5)])
    assert h.components == (Path((0, 1, 2)), Cycle((3, 4, 5)))
    with pytest.raises(ValueError):
        PathCycleCover.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def test_validate_cover_reports():
    g = cycle(4)
    assert validate_cover(g, PathCycleCover.from_edges(4, [(0, 1), (2, 3)])).ok
    bad = PathCycleCover(4, (Path((0, 2)), Path((1,)), Path((3,))))
    assert any("non-edge" in v for v in validate_cover(g, bad).violations)
    twice = PathCycleCover(4, (Path((0, 1)), Path((1, 2, 3))))
    assert not validate_cover(g, twice)
    tri = PathCycleCover(3, (Cycle((0, 1, 2)),))
    assert not validate_cover(cycle(3), tri, 4)
    assert validate_cover(cycle(3), tri, 3)


def test_errors():
    with pytest.raises(ValueError):
        max_path_cycle_cover(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(SizeBoundError):
        max_path_cycle_cover(cycle(25))
    with pytest.raises(ValueError):
        max_path_cycle_cover(cycle(4), mode="fast")
    assert max_path_cycle_cover(cycle(25), mode="heuristic").edge_count == 25


def test_exact_is_lexicographically_first_optimum():
    g = cycle(5)
    h = max_path_cycle_cover(g)
    assert h.edge_count == 5
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2)])
    h = max_path_cycle_cover(g)
    optima = sorted(c.edges() for c in enumerate_max_covers(g))
    assert h.edges() == optima[0]


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_n=6))
def test_exact_cover_matches_subset_scan(g):
    best, sets = brute_covers(g, 4)
    h = max_path_cycle_cover(g)
    assert h.edge_count == best
    assert validate_cover(g, h, 4)
    assert sorted(c.edges() for c in enumerate_max_covers(g)) == sorted(map(list, sets))
    assert exhaustive_cover(g).edge_count == best


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_n=6))
def test_two_matching_matches_subset_scan(g):
    best, _ = brute_covers(g, 3)
    m2 = max_two_matching(g)
    assert len(m2) == best
    deg = [0] * g.n
    for u, v in m2:
        deg[u] += 1
        deg[v] += 1
    assert max(deg) <= 2
    assert max_path_cycle_cover(g, min_cycle=3).edge_count == best


@settings(max_examples=200, deadline=None)
@given(connected_graphs(max_n=10))
def test_heuristic_is_valid_and_bounded(g):
    h = heuristic_cover(g)
    assert validate_cover(g, h, 4)
    exact = max_path_cycle_cover(g)
    assert h.edge_count <= exact.edge_count <= h.stats["unconstrained_edges"]
    if h.stats["lossy_repairs"] == 0 and not h.stats["lost_edge"]:
        assert h.edge_count == h.stats["unconstrained_edges"]
    assert all(c >= 4 for c in cycle_lengths(g.n, h.edges()))


@settings(max_examples=100, deadline=None)
@given(connected_graphs(max_n=10))
def test_cover_round_trip(g):
    h = max_path_cycle_cover(g)
    back, summary = parse_cover(format_cover(h), g.n)
    assert back == h
    assert summary == {"edges": str(h.edge_count), "mode": "exact", "lossy_repairs": "0"}
