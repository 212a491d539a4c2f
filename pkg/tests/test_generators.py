import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mist.cover import enumerate_max_covers
from mist.generators import (XorShift64Star, gen_random, gen_tight, random_tree, splitmix64)
from mist.graph import cut_edges


def test_xorshift_reference_values():
    # first outputs for seed 0, computed by hand from the documented recurrence
    rng = XorShift64Star(0)
    x = splitmix64(0)
    assert rng.state == x == 0xE220A8397B1DCDAF
    x ^= x >> 12
    x ^= (x << 25) & (2**64 - 1)
    x ^= x >> 27
    assert rng.next_u64() == (x * 0x2545F4914F6CDD1D) % 2**64


def test_below_range_and_errors():
    rng = XorShift64Star(3)
    draws = [rng.below(7) for _ in range(2000)]
    assert set(draws) == set(range(7))
    with pytest.raises(ValueError):
        rng.below(0)


def test_tight_shape():
    g = gen_tight(2)
    assert (g.n, g.m) == (8, 9)
    assert cut_edges(g) == {(3, 4)}
    assert gen_tight(1).m == 4
    with pytest.raises(ValueError):
        gen_tight(0)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_tight_unique_square_cover(k):
    g = gen_tight(k)
    covers = list(enumerate_max_covers(g))
    assert len(covers) == 1 and covers[0].edge_count == 4 * k
    assert all(c.length == 4 for c in covers[0].cycles)


def test_tight_has_hamiltonian_path():
    g = gen_tight(5)
    assert all(g.has_edge(v, v + 1) for v in range(g.n - 1))


def test_random_graph_examples():
    assert gen_random(4, 3, 9).is_tree()
    k5 = gen_random(5, 10, 123)
    assert k5.m == 10
    assert gen_random(8, 12, 42) == gen_random(8, 12, 42)
    assert gen_random(1, 0, 0).n == 1
    for bad in [(4, 2), (4, 7), (0, 0)]:
        with pytest.raises(ValueError):
            gen_random(bad[0], bad[1], 0)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 14), st.data(), st.integers(0, 2**40))
def test_random_graph_is_connected_with_m_edges(n, data, seed):
    m = data.draw(st.integers(n - 1, n * (n - 1) // 2)) if n > 1 else 0
    g = gen_random(n, m, seed)
    assert g.n == n and g.m == m and g.is_connected()


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 50), st.integers(0, 2**40))
def test_random_tree(n, seed):
    t = random_tree(n, seed)
    assert t.n == n and t.is_tree()


def test_seeds_differ():
    assert len({gen_random(10, 15, s) for s in range(20)}) > 15
