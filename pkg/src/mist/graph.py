"""Undirected simple graphs, the edge-list file format, and structural queries.

Vertices are 0-based internally and 1-based in files. Neighbor lists are kept
sorted so every traversal in the package is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised for malformed graph files; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        if n < 0:
            raise ValueError("negative vertex count")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def nbr_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbr_sets[u]

    def edges(self) -> Iterator[Edge]:
        """Edges (u, v) with u < v, in ascending lexicographic order."""
        for u, nb in enumerate(self.adj):
            for v in nb:
                if v > u:
                    yield (u, v)

    def edge_list(self) -> list[Edge]:
        return list(self.edges())

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adj[v]) == 1]

    def without_edges(self, removed: Iterable[Edge]) -> Graph:
        gone = {norm_edge(*e) for e in removed}
        return Graph.from_edges(self.n, (e for e in self.edges() if e not in gone))

    def induced(self, keep: Iterable[int]) -> tuple[Graph, list[int]]:
        """Subgraph induced by `keep`, relabelled 0..k-1 in ascending order.

        Returns the subgraph and the list mapping new labels to old ones.
        """
        old = sorted(set(keep))
        new_of = {v: i for i, v in enumerate(old)}
        edges = [(new_of[u], new_of[v]) for u, v in self.edges() if u in new_of and v in new_of]
        return Graph.from_edges(len(old), edges), old

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex v renamed to perm[v]."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def is_connected(self) -> bool:
        return self.n <= 1 or connected_components(self).count == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()


@dataclass(frozen=True)
class VertexPartition:
    labels: tuple[int, ...]
    count: int

    def members(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.labels):
            groups[c].append(v)
        return groups


def connected_components(g: Graph) -> VertexPartition:
    """Label components in order of their smallest vertex."""
    labels = [-1] * g.n
    count = 0
    for s in range(g.n):
        if labels[s] != -1:
            continue
        labels[s] = count
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if labels[w] == -1:
                    labels[w] = count
                    stack.append(w)
        count += 1
    return VertexPartition(tuple(labels), count)


def _lowlink(g: Graph, removed: frozenset[Edge] | set[Edge] = frozenset()):
    """Iterative DFS computing discovery times, low-links, parents and
    per-vertex counts of separated children. Edges in `removed` are ignored."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    children = [0] * n
    separated = [0] * n
    bridges: list[Edge] = []
    t = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, 0)]
        while stack:
            u, i = stack[-1]
            nb = g.adj[u]
            if i < len(nb):
                stack[-1] = (u, i + 1)
                w = nb[i]
                if removed and norm_edge(u, w) in removed:
                    continue
                if disc[w] == -1:
                    parent[w] = u
                    children[u] += 1
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, 0))
                elif w != parent[u]:
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            else:
                stack.pop()
                p = parent[u]
                if p != -1:
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] > disc[p]:
                        bridges.append(norm_edge(p, u))
                    if low[u] >= disc[p]:
                        separated[p] += 1
    return disc, low, parent, children, separated, bridges


def cut_edges(g: Graph) -> set[Edge]:
    """Bridges of g, as normalized (u, v) pairs with u < v."""
    return set(_lowlink(g)[5])


def super_cut_vertices(g: Graph) -> set[int]:
    """Vertices whose deletion adds at least two connected components.

    A DFS root splits into one component per DFS child; any other vertex
    splits off each child subtree with low >= disc(v), plus its parent side.
    """
    _, _, parent, children, separated, _ = _lowlink(g)
    out = set()
    for v in range(g.n):
        if parent[v] == -1:
            if children[v] >= 3:
                out.add(v)
        elif separated[v] >= 2:
            out.add(v)
    return out


def cut_vertices(g: Graph) -> set[int]:
    _, _, parent, children, separated, _ = _lowlink(g)
    return {
        v
        for v in range(g.n)
        if (children[v] >= 2 if parent[v] == -1 else separated[v] >= 1)
    }


# --- file format -----------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the `p n m` / `e u v` edge-list format (1-based vertices)."""
    n = expected_m = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("second header line", lineno)
            nums = parts[1:]
            # tolerate DIMACS "p edge n m"
            if len(nums) == 3 and not nums[0].lstrip("-").isdigit():
                nums = nums[1:]
            if len(nums) != 2:
                raise GraphFormatError("header must be 'p <n> <m>'", lineno)
            try:
                n, expected_m = int(nums[0]), int(nums[1])
            except ValueError:
                raise GraphFormatError("non-integer header field", lineno) from None
            if n < 0 or expected_m < 0:
                raise GraphFormatError("negative header field", lineno)
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge before header", lineno)
            if len(parts) != 3:
                raise GraphFormatError("edge line must be 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("non-integer vertex", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            e = norm_edge(u - 1, v - 1)
            if e in seen:
                raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
            seen.add(e)
            edges.append(e)
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    if len(edges) != expected_m:
        raise GraphFormatError(f"header declares {expected_m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


# --- spanning trees ----------------------------------------------------------


@dataclass(frozen=True)
class SpanningTree:
    """Edge set of a spanning tree over vertices 0..n-1."""

    n: int
    edges: tuple[Edge, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> SpanningTree:
        return cls(n, tuple(sorted(norm_edge(u, v) for u, v in edges)))

    @cached_property
    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    @cached_property
    def internal(self) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.degrees) if d >= 2)

    @property
    def internal_count(self) -> int:
        return len(self.internal)

    def as_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)

    def problems(self, g: Graph) -> list[str]:
        """Reasons this is not a spanning tree of g (empty when it is)."""
        out = []
        if self.n != g.n:
            out.append(f"vertex count {self.n} != {g.n}")
            return out
        if len(self.edges) != max(g.n - 1, 0):
            out.append(f"{len(self.edges)} edges, expected {g.n - 1}")
        if len(set(self.edges)) != len(self.edges):
            out.append("repeated edge")
        for u, v in self.edges:
            if not g.has_edge(u, v):
                out.append(f"({u}, {v}) is not a graph edge")
        if not out and not self.as_graph().is_connected():
            out.append("not connected")
        return out

    def spans(self, g: Graph) -> bool:
        return not self.problems(g)


def format_tree(t: SpanningTree, stats: dict | None = None) -> str:
    lines = [f"t {u + 1} {v + 1}" for u, v in t.edges]
    for k, v in (stats or {}).items():
        lines.append(f"{k}={v}")
    return "\n".join(lines) + "\n"


def parse_tree(text: str, n: int) -> tuple[SpanningTree, dict[str, str]]:
    """Inverse of format_tree: `t u v` lines plus trailing key=value stats."""
    edges = []
    stats: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("t "):
            parts = line.split()
            if len(parts) != 3:
                raise GraphFormatError("tree line must be 't <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("non-integer vertex", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise GraphFormatError(f"bad tree edge {u} {v}", lineno)
            edges.append((u - 1, v - 1))
        elif "=" in line:
            key, _, val = line.partition("=")
            stats[key.strip()] = val.strip()
        else:
            raise GraphFormatError(f"unrecognised line {line!r}", lineno)
    return SpanningTree.from_edges(n, edges), stats
