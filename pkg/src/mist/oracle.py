"""Exact brute-force references for small graphs.

Nothing here calls the approximation pipeline or the cover solver: covers
are computed by a dynamic program over vertex subsets (a cover is a
partition into vertex sets that each carry a Hamiltonian path or cycle), and
the maximum internal spanning tree by exhaustive spanning-tree search.
"""

from __future__ import annotations

from collections import deque

from .cover import Cycle, Path, PathCycleCover
from .graph import Graph, SpanningTree

DEFAULT_ORACLE_BOUND = 12


class OracleBoundError(ValueError):
    pass


def _check(g: Graph, bound: int, connected: bool = True):
    if g.n > bound:
        raise OracleBoundError(f"oracle limited to n <= {bound}, got n={g.n}")
    if connected and not g.is_connected():
        raise ValueError("graph must be connected")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class HamTables:
    """Hamiltonian path/cycle reachability for every vertex subset.

    ends[S]: bitmask of vertices at which some Hamiltonian path of G[S] ends.
    low_ends[S]: same, restricted to paths starting at the smallest vertex
    of S (used to detect Hamiltonian cycles of G[S]).
    """

    def __init__(self, g: Graph):
        n = g.n
        self.n = n
        self.nb = nb = [sum(1 << w for w in a) for a in g.adj]
        size = 1 << n
        ends = [0] * size
        low_ends = [0] * size
        for v in range(n):
            ends[1 << v] = low_ends[1 << v] = 1 << v
        for mask in range(1, size):
            r = ends[mask]
            if r:
                for v in _bits(r):
                    for w in _bits(nb[v] & ~mask):
                        ends[mask | (1 << w)] |= 1 << w
            r = low_ends[mask]
            if r:
                low = mask & -mask
                above = ~((low << 1) - 1)
                for v in _bits(r):
                    for w in _bits(nb[v] & ~mask & above):
                        low_ends[mask | (1 << w)] |= 1 << w
        self.ends = ends
        self.low_ends = low_ends

    def has_path(self, mask: int) -> bool:
        return self.ends[mask] != 0

    def has_cycle(self, mask: int) -> bool:
        if bin(mask).count("1") < 3:
            return False
        low = (mask & -mask).bit_length() - 1
        return (self.low_ends[mask] & self.nb[low]) != 0

    def path(self, mask: int) -> tuple[int, ...]:
        v = next(_bits(self.ends[mask]))
        out = [v]
        while mask != 1 << v:
            rest = mask ^ (1 << v)
            v = next(_bits(self.ends[rest] & self.nb[v]))
            out.append(v)
            mask = rest
        return tuple(out)

    def cycle(self, mask: int) -> tuple[int, ...]:
        low = (mask & -mask).bit_length() - 1
        v = next(_bits(self.low_ends[mask] & self.nb[low]))
        out = [v]
        while mask != 1 << v:
            rest = mask ^ (1 << v)
            v = next(_bits(self.low_ends[rest] & self.nb[v]))
            out.append(v)
            mask = rest
        return tuple(reversed(out))


def _best_partition(g: Graph, min_cycle: int | None, tables: HamTables | None = None):
    """Max-edge cover by a subset DP; min_cycle=None means paths only."""
    n = g.n
    t = tables or HamTables(g)
    size = 1 << n
    NEG = -1 << 30
    val = [NEG] * size
    for mask in range(1, size):
        k = bin(mask).count("1")
        if min_cycle is not None and k >= min_cycle and t.has_cycle(mask):
            val[mask] = k
        elif t.has_path(mask):
            val[mask] = k - 1
    best = [0] * size
    choice = [0] * size
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        top, arg = NEG, 0
        sub = rest
        while True:
            part = sub | low
            v = val[part]
            if v > NEG:
                total = v + best[s ^ part]
                if total > top:
                    top, arg = total, part
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[s] = top
        choice[s] = arg
    comps = []
    s = size - 1
    while s:
        part = choice[s]
        k = bin(part).count("1")
        if min_cycle is not None and val[part] == k:
            comps.append(Cycle(t.cycle(part)))
        else:
            comps.append(Path(t.path(part)))
        s ^= part
    edges = [e for c in comps for e in c.edges()]
    return best[size - 1], PathCycleCover.from_edges(n, edges)


def exhaustive_cover(g: Graph, min_cycle: int = 4,
                     bound: int = DEFAULT_ORACLE_BOUND) -> PathCycleCover:
    """Maximum path-cycle cover with cycles of >= min_cycle edges, exactly."""
    _check(g, bound, connected=False)
    return _best_partition(g, min_cycle)[1]


def exact_max_path_cover(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> PathCycleCover:
    _check(g, bound, connected=False)
    return _best_partition(g, None)[1]


def exhaustive_matching_size(g: Graph, bound: int = 16) -> int:
    """Maximum matching size by recursion on the smallest unmatched vertex."""
    _check(g, bound, connected=False)
    nb = [sum(1 << w for w in a) for a in g.adj]
    memo = {0: 0}

    def f(mask):
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        out = f(rest)
        for w in _bits(nb[v] & rest):
            out = max(out, 1 + f(rest ^ (1 << w)))
        memo[mask] = out
        return out

    return f((1 << g.n) - 1)


# --- exact maximum internal spanning tree --------------------------------------


def _dfs_tree(g: Graph) -> list:
    seen = [False] * g.n
    seen[0] = True
    edges = []
    stack = [(0, iter(g.adj[0]))]
    while stack:
        u, it = stack[-1]
        for w in it:
            if not seen[w]:
                seen[w] = True
                edges.append((u, w))
                stack.append((w, iter(g.adj[w])))
                break
        else:
            stack.pop()
    return edges


class _TreeSearch:
    """Include/exclude enumeration of spanning trees with a leaf bound.

    A vertex can only end up internal if its tree degree plus its undecided
    edges reach 2; the count of such vertices bounds the subtree's best.
    """

    def __init__(self, g: Graph, best: int, best_edges, ceiling: int):
        self.g = g
        self.n = g.n
        self.edges = g.edge_list()
        self.parent = list(range(g.n))
        self.rank = [0] * g.n
        self.tdeg = [0] * g.n
        self.und = [len(a) for a in g.adj]
        self.chosen: list = []
        self.best = best
        self.best_edges = best_edges
        self.ceiling = ceiling

    def find(self, x):
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def _bound(self):
        return sum(1 for v in range(self.n) if self.tdeg[v] + self.und[v] >= 2)

    def _still_connected(self, i, u, v):
        # u, v in different include-components: can edges > i still join them?
        adj = [[] for _ in range(self.n)]
        for a, b in self.chosen:
            adj[a].append(b)
            adj[b].append(a)
        for a, b in self.edges[i + 1:]:
            adj[a].append(b)
            adj[b].append(a)
        seen = {u}
        q = deque([u])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y == v:
                    return True
                if y not in seen:
                    seen.add(y)
                    q.append(y)
        return False

    def run(self):
        self._dfs(0)
        return self.best, self.best_edges

    def _dfs(self, i) -> bool:
        if len(self.chosen) == self.n - 1:
            count = sum(1 for d in self.tdeg if d >= 2)
            if count > self.best:
                self.best, self.best_edges = count, list(self.chosen)
            return self.best >= self.ceiling
        if i == len(self.edges) or self._bound() <= self.best:
            return False
        u, v = self.edges[i]
        self.und[u] -= 1
        self.und[v] -= 1
        ru, rv = self.find(u), self.find(v)
        stop = False
        if ru != rv:
            if self.rank[ru] < self.rank[rv]:
                ru, rv = rv, ru
            self.parent[rv] = ru
            bumped = self.rank[ru] == self.rank[rv]
            if bumped:
                self.rank[ru] += 1
            self.tdeg[u] += 1
            self.tdeg[v] += 1
            self.chosen.append((u, v))
            stop = self._dfs(i + 1)
            self.chosen.pop()
            self.tdeg[u] -= 1
            self.tdeg[v] -= 1
            if bumped:
                self.rank[ru] -= 1
            self.parent[rv] = rv
            if not stop and self._still_connected(i, u, v):
                stop = self._dfs(i + 1)
        else:
            stop = self._dfs(i + 1)
        self.und[u] += 1
        self.und[v] += 1
        return stop


def exact_mist(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> tuple[SpanningTree, int]:
    """A spanning tree with the maximum number of internal vertices."""
    _check(g, bound)
    n = g.n
    if n <= 2:
        return SpanningTree.from_edges(n, g.edges()), 0
    tables = HamTables(g)
    full = (1 << n) - 1
    if tables.has_path(full):
        p = tables.path(full)
        return SpanningTree.from_edges(n, zip(p, p[1:])), n - 2
    # a tree with exactly two leaves would be a Hamiltonian path
    start = _dfs_tree(g)
    t0 = SpanningTree.from_edges(n, start)
    search = _TreeSearch(g, t0.internal_count, start, ceiling=n - 3)
    best, edges = search.run()
    return SpanningTree.from_edges(n, edges), best


def internal_vertices(g: Graph, t: SpanningTree) -> tuple[frozenset[int], int]:
    problems = t.problems(g)
    if problems:
        raise ValueError("not a spanning tree of the graph: " + "; ".join(problems))
    return t.internal, t.internal_count


# --- path cover of a tree from its leaves ---------------------------------------


def _farthest(adj, alive, src):
    dist = {src: 0}
    prev = {src: -1}
    q = deque([src])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if y in alive and y not in dist:
                dist[y] = dist[x] + 1
                prev[y] = x
                q.append(y)
    far = max(dist.values())
    return min(v for v, d in dist.items() if d == far), prev


def tree_path_cover(t) -> PathCycleCover:
    """Path cover of a tree with at most (#leaves - 1) paths.

    Repeatedly take a longest leaf-to-leaf path of a remaining subtree (two
    BFS sweeps), cut every edge hanging off it, and recurse on what is left.
    Accepts a SpanningTree or a Graph that is a tree.
    """
    g = t.as_graph() if isinstance(t, SpanningTree) else t
    if g.n < 2 or not g.is_tree():
        raise ValueError("tree_path_cover needs a tree with at least 2 vertices")
    adj = g.adj
    remaining = set(range(g.n))
    comps = []
    while remaining:
        s = min(remaining)
        # restrict to the subtree containing s
        sub, q = {s}, deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y in remaining and y not in sub:
                    sub.add(y)
                    q.append(y)
        a, _ = _farthest(adj, sub, s)
        b, prev = _farthest(adj, sub, a)
        path = [b]
        while path[-1] != a:
            path.append(prev[path[-1]])
        comps.append(Path(tuple(path)))
        remaining -= set(path)
    edges = [e for c in comps for e in c.edges()]
    return PathCycleCover.from_edges(g.n, edges)
