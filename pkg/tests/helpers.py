"""Hypothesis strategies and small brute-force references shared by the tests.

The brute-force functions here deliberately avoid the package's own search
code: they enumerate edge subsets with itertools and check them directly.
"""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from mist.generators import random_tree_edges, XorShift64Star
from mist.graph import Graph, connected_components


@st.composite
def connected_graphs(draw, min_n=2, max_n=8, max_extra=None):
    """Random labeled tree plus a random subset of the remaining pairs."""
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32))
    tree = random_tree_edges(n, XorShift64Star(seed))
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in set(tree)]
    cap = len(others) if max_extra is None else min(max_extra, len(others))
    extra = draw(st.lists(st.sampled_from(others), max_size=cap, unique=True)) if others else []
    return Graph.from_edges(n, tree + extra)


def component_count(g: Graph) -> int:
    return connected_components(g).count


def brute_bridges(g: Graph) -> set:
    base = component_count(g)
    return {e for e in g.edges() if component_count(g.without_edges([e])) > base}


def brute_component_gain(g: Graph, v: int) -> int:
    """How many components removing v adds (v itself excluded)."""
    keep = [w for w in range(g.n) if w != v]
    sub, _ = g.induced(keep)
    return component_count(sub) - component_count(g)


def cycle_lengths(n, edges):
    """Lengths of the cycle components of a degree-<=2 edge set."""
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen, out = set(), []
    for s in range(n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(comp) >= 3 and all(len(nbrs[x]) == 2 for x in comp):
            out.append(len(comp))
    return out


def brute_covers(g: Graph, min_cycle=4):
    """(max size, all maximum edge sets) by scanning every edge subset."""
    edges = g.edge_list()
    best, sets = -1, []
    for k in range(len(edges), -1, -1):
        if k < best:
            break
        for sub in combinations(edges, k):
            deg = [0] * g.n
            ok = True
            for u, v in sub:
                deg[u] += 1
                deg[v] += 1
                if deg[u] > 2 or deg[v] > 2:
                    ok = False
                    break
            if ok and all(c >= min_cycle for c in cycle_lengths(g.n, sub)):
                best = k
                sets.append(tuple(sub))
    return best, sets


def brute_mist(g: Graph) -> int:
    """Maximum internal count over all (n-1)-edge subsets that form trees."""
    if g.n == 1:
        return 0
    best = 0
    for sub in combinations(g.edge_list(), g.n - 1):
        t = Graph.from_edges(g.n, sub)
        if t.is_connected():
            best = max(best, sum(1 for v in range(g.n) if t.degree(v) >= 2))
    return best


def brute_matching(g: Graph) -> int:
    edges = g.edge_list()
    for k in range(g.n // 2, 0, -1):
        for sub in combinations(edges, k):
            used = [x for e in sub for x in e]
            if len(set(used)) == 2 * k:
                return k
    return 0
