"""Instance generators: the chained-squares tight family and seeded random graphs.

Random instances use xorshift64* so corpora are reproducible from the seed
alone, independent of Python's `random` module:

    state ^= state >> 12
    state ^= state << 25   (mod 2**64)
    state ^= state >> 27
    output = state * 0x2545F4914F6CDD1D  (mod 2**64)

The initial state is splitmix64(seed), which is never zero in practice; a
zero result is replaced by a fixed constant.
"""

from __future__ import annotations

import heapq

from .graph import Graph

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, k: int) -> int:
        """Uniform integer in [0, k) by rejection."""
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % k

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)


def gen_tight(k: int) -> Graph:
    """k squares a_i b_i c_i d_i chained by the bridges (d_i, a_{i+1}).

    Vertex 4i+j is the j-th corner of square i (a=0, b=1, c=2, d=3).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    edges = []
    for i in range(k):
        a, b, c, d = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += [(a, b), (b, c), (c, d), (a, d)]
        if i + 1 < k:
            edges.append((d, 4 * i + 4))
    return Graph.from_edges(4 * k, edges)


def random_tree_edges(n: int, rng: XorShift64Star) -> list[tuple[int, int]]:
    """Uniform labeled tree on n vertices via a random Pruefer sequence."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    return Graph.from_edges(n, random_tree_edges(n, XorShift64Star(seed)))


def gen_random(n: int, m: int, seed: int) -> Graph:
    """Connected simple graph: random labeled tree plus m-n+1 random extra edges."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not (n - 1 <= m <= n * (n - 1) // 2):
        raise ValueError(f"no connected simple graph with n={n}, m={m}")
    rng = XorShift64Star(seed)
    tree = random_tree_edges(n, rng)
    taken = set(tree)
    pool = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in taken]
    extra = m - (n - 1)
    # partial Fisher-Yates over the lexicographically ordered pool
    for i in range(extra):
        j = i + rng.below(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return Graph.from_edges(n, tree + pool[:extra])
