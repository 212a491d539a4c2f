"""Safe edge and leaf deletions, and the inverse leaf restoration.

An edge whose two ends are each adjacent to a leaf can be dropped when it is
not a bridge; a leaf hanging off a super cut vertex can be dropped outright.
Neither deletion lowers the best achievable internal-vertex count, and a
spanning tree of the reduced graph extends to one of the original graph with
the same internal vertices by re-hanging the deleted leaves on their anchors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .graph import Graph, SpanningTree, cut_edges, norm_edge, super_cut_vertices


class EdgeDeleted(NamedTuple):
    u: int
    v: int


class LeafDeleted(NamedTuple):
    leaf: int
    anchor: int


Step = Union[EdgeDeleted, LeafDeleted]


class DisconnectedGraphError(ValueError):
    pass


class TraceMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class ReductionTrace:
    """Ordered deletions applied to an `n`-vertex graph (original labels)."""

    n: int
    steps: tuple[Step, ...] = ()

    @property
    def deleted_leaves(self) -> list[int]:
        return [s.leaf for s in self.steps if isinstance(s, LeafDeleted)]

    @property
    def kept(self) -> list[int]:
        """Original labels of the reduced graph's vertices, by new label."""
        gone = set(self.deleted_leaves)
        return [v for v in range(self.n) if v not in gone]

    def __add__(self, other: ReductionTrace) -> ReductionTrace:
        if other.n != self.n:
            raise TraceMismatchError("traces over different vertex counts")
        return ReductionTrace(self.n, self.steps + other.steps)


class _Work:
    """Mutable view of a graph under deletion; keeps original labels."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.nbrs = [set(a) for a in g.adj]
        self.steps: list[Step] = []

    def graph(self) -> Graph:
        # deleted leaves stay behind as isolated vertices; that changes
        # neither bridges nor the super-cut test
        return Graph(self.n, tuple(tuple(sorted(s)) for s in self.nbrs))

    def delete_edge(self, u, v):
        self.nbrs[u].discard(v)
        self.nbrs[v].discard(u)


def _check_connected(g: Graph):
    if not g.is_connected():
        raise DisconnectedGraphError("graph must be connected")


def _leafy(nbrs: list[set[int]]) -> list[bool]:
    """leafy[v]: v has at least one neighbor of degree 1."""
    return [any(len(nbrs[w]) == 1 for w in nb) for nb in nbrs]


def _edge_pass(w: _Work) -> bool:
    fired = False
    while True:
        g = w.graph()
        leafy = _leafy(w.nbrs)
        bridges = cut_edges(g)
        for u, v in g.edges():
            if leafy[u] and leafy[v] and (u, v) not in bridges:
                w.delete_edge(u, v)
                w.steps.append(EdgeDeleted(u, v))
                fired = True
                break
        else:
            return fired


def _leaf_pass(w: _Work) -> bool:
    fired = False
    while True:
        g = w.graph()
        sup = super_cut_vertices(g)
        for x in range(w.n):
            if len(w.nbrs[x]) == 1:
                (a,) = w.nbrs[x]
                if a in sup:
                    w.delete_edge(x, a)
                    w.steps.append(LeafDeleted(x, a))
                    fired = True
                    break
        else:
            return fired


def _finish(g: Graph, w: _Work) -> tuple[Graph, ReductionTrace]:
    trace = ReductionTrace(g.n, tuple(w.steps))
    return replay(g, trace), trace


def safe_edge_deletions(g: Graph) -> tuple[Graph, ReductionTrace]:
    _check_connected(g)
    w = _Work(g)
    _edge_pass(w)
    return _finish(g, w)


def safe_leaf_deletions(g: Graph) -> tuple[Graph, ReductionTrace]:
    _check_connected(g)
    w = _Work(g)
    _leaf_pass(w)
    return _finish(g, w)


def reduce_graph(g: Graph) -> tuple[Graph, ReductionTrace]:
    """Alternate both deletion passes until neither fires.

    The reduced graph is relabelled compactly; `trace.kept[i]` is the
    original label of its vertex i.
    """
    _check_connected(g)
    w = _Work(g)
    while True:
        a = _edge_pass(w)
        b = _leaf_pass(w)
        if not (a or b):
            break
    return _finish(g, w)


def replay(g: Graph, trace: ReductionTrace) -> Graph:
    """Apply trace steps to g and return the compacted result."""
    if trace.n != g.n:
        raise TraceMismatchError(f"trace is for n={trace.n}, graph has n={g.n}")
    nbrs = [set(a) for a in g.adj]
    dead = set()
    for s in trace.steps:
        if isinstance(s, EdgeDeleted):
            u, v = s
        else:
            u, v = s.leaf, s.anchor
            if len(nbrs[u]) != 1:
                raise TraceMismatchError(f"vertex {u} is not a leaf when deleted")
            dead.add(u)
        if v not in nbrs[u]:
            raise TraceMismatchError(f"edge ({u}, {v}) not present when deleted")
        nbrs[u].discard(v)
        nbrs[v].discard(u)
    edges = [norm_edge(u, v) for u in range(g.n) for v in nbrs[u] if u < v]
    full = Graph.from_edges(g.n, edges)
    return full.induced(v for v in range(g.n) if v not in dead)[0]


def is_reduced(g: Graph) -> bool:
    leafy = _leafy([set(a) for a in g.adj])
    bridges = cut_edges(g)
    for u, v in g.edges():
        if leafy[u] and leafy[v] and (u, v) not in bridges:
            return False
    sup = super_cut_vertices(g)
    return not any(leafy[v] for v in sup)


def restore(tree: SpanningTree, trace: ReductionTrace) -> SpanningTree:
    """Lift a spanning tree of the reduced graph back to the original graph.

    Deleted leaves are hung back on their anchors in reverse order; the
    anchors must already be internal, so the internal set is unchanged.
    """
    kept = trace.kept
    if tree.n != len(kept):
        raise TraceMismatchError(
            f"tree has {tree.n} vertices, trace leaves {len(kept)}")
    edges = [(kept[u], kept[v]) for u, v in tree.edges]
    lifted = SpanningTree.from_edges(trace.n, edges)
    deg = list(lifted.degrees)
    internal_before = {v for v in range(trace.n) if deg[v] >= 2}
    for s in reversed(trace.steps):
        if isinstance(s, LeafDeleted):
            if deg[s.anchor] < 2:
                raise TraceMismatchError(
                    f"anchor {s.anchor} of leaf {s.leaf} is not internal in the tree")
            edges.append((s.leaf, s.anchor))
            deg[s.leaf] += 1
            deg[s.anchor] += 1
    out = SpanningTree.from_edges(trace.n, edges)
    if out.internal != internal_before:
        raise TraceMismatchError("restoration changed the internal vertex set")
    return out


def format_trace(trace: ReductionTrace) -> str:
    lines = []
    for s in trace.steps:
        if isinstance(s, EdgeDeleted):
            lines.append(f"DE {s.u + 1} {s.v + 1}")
        else:
            lines.append(f"DL {s.leaf + 1} {s.anchor + 1}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_trace(text: str, n: int) -> ReductionTrace:
    steps: list[Step] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] not in ("DE", "DL"):
            continue
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected '{parts[0]} <a> <b>'")
        a, b = int(parts[1]) - 1, int(parts[2]) - 1
        steps.append(EdgeDeleted(a, b) if parts[0] == "DE" else LeafDeleted(a, b))
    return ReductionTrace(n, tuple(steps))
