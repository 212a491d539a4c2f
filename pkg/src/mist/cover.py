"""Path-cycle covers: spanning subgraphs in which every vertex has degree <= 2.

The maximum unconstrained cover is a maximum 2-matching, found by reducing
to ordinary matching through a vertex-splitting gadget. Forbidding triangles
(cycles must have at least four edges) is handled either exactly, by a
branch-and-bound bounded above by the unconstrained optimum, or heuristically
by repairing the triangles of an unconstrained optimum.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Iterator, Union

from .graph import Edge, Graph, norm_edge
from .matching import max_matching_edges

DEFAULT_EXACT_BOUND = 20


@dataclass(frozen=True)
class Path:
    verts: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.verts) - 1

    @property
    def endpoints(self) -> tuple[int, ...]:
        v = self.verts
        return (v[0],) if len(v) == 1 else (v[0], v[-1])

    @property
    def inner(self) -> tuple[int, ...]:
        return self.verts[1:-1]

    def edges(self) -> list[Edge]:
        v = self.verts
        return [norm_edge(v[i], v[i + 1]) for i in range(len(v) - 1)]


@dataclass(frozen=True)
class Cycle:
    verts: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.verts)

    def edges(self) -> list[Edge]:
        v = self.verts
        return [norm_edge(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


Component = Union[Path, Cycle]


@dataclass(frozen=True)
class PathCycleCover:
    n: int
    components: tuple[Component, ...]
    stats: dict = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def from_edges(cls, n: int, edges, stats: dict | None = None) -> PathCycleCover:
        """Split a degree-<=2 edge set into canonically oriented components.

        Components are listed by smallest vertex; paths start at their
        smaller endpoint, cycles at their smallest vertex heading toward the
        smaller neighbor.
        """
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        for v in range(n):
            if len(nbrs[v]) > 2:
                raise ValueError(f"vertex {v} has degree {len(nbrs[v])} in cover")
        seen = [False] * n
        comps: list[Component] = []
        for s in range(n):
            if seen[s]:
                continue
            # collect the component, then orient it
            stack, members = [s], []
            seen[s] = True
            while stack:
                u = stack.pop()
                members.append(u)
                for w in nbrs[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            ends = sorted(v for v in members if len(nbrs[v]) < 2)
            if ends:
                comps.append(Path(_walk(nbrs, ends[0])))
            else:
                start = min(members)
                nxt = min(nbrs[start])
                comps.append(Cycle(_walk(nbrs, start, nxt)))
        return cls(n, tuple(comps), dict(stats or {}))

    def edges(self) -> list[Edge]:
        return sorted(e for c in self.components for e in c.edges())

    @property
    def edge_count(self) -> int:
        return sum(c.length for c in self.components)

    @property
    def paths(self) -> list[Path]:
        return [c for c in self.components if isinstance(c, Path)]

    @property
    def cycles(self) -> list[Cycle]:
        return [c for c in self.components if isinstance(c, Cycle)]

    def canonical(self) -> PathCycleCover:
        return PathCycleCover.from_edges(self.n, self.edges(), self.stats)


def _walk(nbrs, start: int, second: int | None = None) -> tuple[int, ...]:
    out = [start]
    prev, cur = start, second
    if cur is None:
        if not nbrs[start]:
            return (start,)
        cur = nbrs[start][0]
    while cur != start:
        out.append(cur)
        nxt = [w for w in nbrs[cur] if w != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
    return tuple(out)


# --- validation --------------------------------------------------------------


@dataclass
class CoverReport:
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_cover(g: Graph, h: PathCycleCover, min_cycle: int = 4) -> CoverReport:
    bad: list[str] = []
    if h.n != g.n:
        bad.append(f"cover is over {h.n} vertices, graph has {g.n}")
        return CoverReport(bad)
    count = [0] * g.n
    deg = [0] * g.n
    for idx, c in enumerate(h.components):
        if len(set(c.verts)) != len(c.verts):
            bad.append(f"component {idx} repeats a vertex")
        for v in c.verts:
            if not 0 <= v < g.n:
                bad.append(f"component {idx} has out-of-range vertex {v}")
                continue
            count[v] += 1
        if isinstance(c, Cycle) and c.length < 3:
            bad.append(f"cycle {idx} has only {c.length} vertices")
            continue
        if isinstance(c, Cycle) and c.length < min_cycle:
            bad.append(f"cycle {idx} has length {c.length} < {min_cycle}")
        for u, v in c.edges():
            if 0 <= u < g.n and 0 <= v < g.n:
                deg[u] += 1
                deg[v] += 1
                if not g.has_edge(u, v):
                    bad.append(f"component {idx} uses non-edge ({u}, {v})")
    for v in range(g.n):
        if count[v] != 1:
            bad.append(f"vertex {v} covered {count[v]} times")
        if deg[v] > 2:
            bad.append(f"vertex {v} has cover degree {deg[v]}")
    return CoverReport(bad)


# --- unconstrained maximum 2-matching ------------------------------------------


def max_two_matching(g: Graph) -> list[Edge]:
    """Maximum edge set with every degree <= 2 (cycles of any length allowed).

    Vertex v becomes two ports; edge k = (u, v) becomes two nodes a_k, b_k
    joined to each other, a_k to both ports of u and b_k to both ports of v.
    A maximum matching there has size m + |F|, where F is the set of edges
    whose two gadget nodes are both matched to ports.
    """
    n, edges = g.n, g.edge_list()
    gadget = []
    for k, (u, v) in enumerate(edges):
        a, b = 2 * n + 2 * k, 2 * n + 2 * k + 1
        gadget += [(a, b), (a, 2 * u), (a, 2 * u + 1), (b, 2 * v), (b, 2 * v + 1)]
    mate = {}
    for x, y in max_matching_edges(2 * n + 2 * len(edges), gadget):
        mate[x], mate[y] = y, x
    chosen = []
    for k, e in enumerate(edges):
        a, b = 2 * n + 2 * k, 2 * n + 2 * k + 1
        if mate.get(a, b) < 2 * n and mate.get(b, a) < 2 * n:
            chosen.append(e)
    return chosen


# --- exact branch-and-bound ------------------------------------------------------


class SizeBoundError(ValueError):
    pass


class _Search:
    """Depth-first include/exclude search over edges in ascending order.

    Path components are tracked by their endpoints so that closing a cycle
    shorter than `min_cycle` can be refused in O(1). The bound is
    floor(sum_v min(spare capacity, undecided incident edges) / 2).
    """

    def __init__(self, g: Graph, min_cycle: int):
        self.n = g.n
        self.edges = g.edge_list()
        self.min_cycle = min_cycle
        self.deg = [0] * g.n
        self.rem = [len(a) for a in g.adj]
        self.end = list(range(g.n))
        self.size = [1] * g.n
        self.slack = sum(min(2, r) for r in self.rem)
        self.chosen: list[Edge] = []

    def _contrib(self, v):
        c = 2 - self.deg[v]
        r = self.rem[v]
        return c if c < r else r

    def run(self, target: int, collect_all: bool = False):
        self.target = target
        self.collect_all = collect_all
        self.found: list[list[Edge]] = []
        limit = sys.getrecursionlimit()
        if limit < 4 * len(self.edges) + 100:
            sys.setrecursionlimit(4 * len(self.edges) + 100)
        self._dfs(0)
        return self.found

    def _dfs(self, i: int) -> bool:
        if len(self.chosen) == self.target:
            self.found.append(list(self.chosen))
            return not self.collect_all
        if i == len(self.edges) or len(self.chosen) + self.slack // 2 < self.target:
            return False
        u, v = self.edges[i]
        deg, end, size = self.deg, self.end, self.size
        before = self._contrib(u) + self._contrib(v)
        self.rem[u] -= 1
        self.rem[v] -= 1
        # include
        if deg[u] < 2 and deg[v] < 2:
            closes = end[u] == v
            if not closes or size[u] >= self.min_cycle:
                a, b = end[u], end[v]
                saved = (end[a], end[b], size[a], size[b])
                if not closes:
                    end[a], end[b] = b, a
                    size[a] = size[b] = size[u] + size[v]
                deg[u] += 1
                deg[v] += 1
                self.slack += self._contrib(u) + self._contrib(v) - before
                self.chosen.append((u, v))
                stop = self._dfs(i + 1)
                self.chosen.pop()
                self.slack -= self._contrib(u) + self._contrib(v) - before
                deg[u] -= 1
                deg[v] -= 1
                end[a], end[b], size[a], size[b] = saved
                if stop:
                    self.rem[u] += 1
                    self.rem[v] += 1
                    return True
        # exclude
        delta = self._contrib(u) + self._contrib(v) - before
        self.slack += delta
        stop = self._dfs(i + 1)
        self.slack -= delta
        self.rem[u] += 1
        self.rem[v] += 1
        return stop


def _first_with(g: Graph, target: int, min_cycle: int) -> list[Edge] | None:
    found = _Search(g, min_cycle).run(target)
    return found[0] if found else None


def enumerate_max_covers(g: Graph, min_cycle: int = 4,
                         optimum: int | None = None) -> Iterator[PathCycleCover]:
    """Every maximum cover (as distinct edge sets), in lexicographic order."""
    if optimum is None:
        optimum = max_path_cycle_cover(g, "exact", min_cycle=min_cycle).edge_count
    for edges in _Search(g, min_cycle).run(optimum, collect_all=True):
        yield PathCycleCover.from_edges(g.n, edges)


# --- heuristic triangle repair -------------------------------------------------


def _augment(g: Graph, edges: set[Edge], min_cycle: int) -> int:
    """Greedily add edges that keep the cover valid; returns how many."""
    added = 0
    while True:
        h = PathCycleCover.from_edges(g.n, edges)
        deg = [0] * g.n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        comp = {}
        for idx, c in enumerate(h.components):
            for x in c.verts:
                comp[x] = idx
        pick = None
        for u, v in g.edges():
            if (u, v) in edges or deg[u] == 2 or deg[v] == 2:
                continue
            if comp[u] != comp[v] or len(h.components[comp[u]].verts) >= min_cycle:
                pick = (u, v)
                break
        if pick is None:
            return added
        edges.add(pick)
        added += 1


def _repair_triangles(g: Graph, edges: set[Edge], min_cycle: int) -> tuple[int, int]:
    """Remove short cycles from a 2-matching in place.

    A triangle is rerouted at no cost when one of its vertices is adjacent
    to a path endpoint of another component; otherwise its largest edge is
    dropped. Returns (rerouted, lossy) counts.
    """
    rerouted = lossy = 0
    while True:
        h = PathCycleCover.from_edges(g.n, edges)
        short = [c for c in h.cycles if c.length < min_cycle]
        if not short:
            return rerouted, lossy
        deg = [0] * g.n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        done = False
        for c in short:
            members = set(c.verts)
            for x in c.verts:
                for y in g.adj[x]:
                    if y in members or deg[y] == 2:
                        continue
                    # drop one cycle edge at x, hang the rest on y
                    drop = min(e for e in c.edges() if x in e)
                    edges.discard(drop)
                    edges.add(norm_edge(x, y))
                    rerouted += 1
                    done = True
                    break
                if done:
                    break
            if done:
                break
        if not done:
            c = short[0]
            edges.discard(max(c.edges()))
            lossy += 1


def heuristic_cover(g: Graph, min_cycle: int = 4) -> PathCycleCover:
    base = max_two_matching(g)
    unconstrained = len(base)
    edges = set(base)
    rerouted, lossy = _repair_triangles(g, edges, min_cycle)
    gained = _augment(g, edges, min_cycle)
    stats = {
        "mode": "heuristic",
        "unconstrained_edges": unconstrained,
        "rerouted_triangles": rerouted,
        "lossy_repairs": lossy,
        "augmented": gained,
        "lost_edge": unconstrained - len(edges) > 0,
    }
    return PathCycleCover.from_edges(g.n, sorted(edges), stats)


# --- public entry point ------------------------------------------------------------


def max_path_cycle_cover(g: Graph, mode: str = "exact", min_cycle: int = 4,
                         bound: int = DEFAULT_EXACT_BOUND) -> PathCycleCover:
    """Maximum path-cycle cover whose cycles have at least `min_cycle` edges.

    `exact` returns the lexicographically smallest optimal edge set;
    `heuristic` repairs triangles of an unconstrained optimum and reports in
    `stats["lossy_repairs"]` how many repairs cost an edge.
    """
    if mode not in ("exact", "heuristic"):
        raise ValueError(f"unknown cover mode {mode!r}")
    if min_cycle < 3:
        raise ValueError("min_cycle must be at least 3")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if mode == "heuristic":
        return heuristic_cover(g, min_cycle)
    if g.n > bound:
        raise SizeBoundError(f"exact cover limited to n <= {bound}, got n={g.n}")
    upper = len(max_two_matching(g))
    lower = heuristic_cover(g, min_cycle).edge_count if min_cycle > 3 else upper
    for target in range(upper, lower - 1, -1):
        edges = _first_with(g, target, min_cycle)
        if edges is not None:
            stats = {"mode": "exact", "unconstrained_edges": upper, "lossy_repairs": 0,
                     "lost_edge": False}
            return PathCycleCover.from_edges(g.n, edges, stats)
    raise AssertionError("no cover at the heuristic's edge count")  # pragma: no cover


def format_cover(h: PathCycleCover) -> str:
    lines = []
    for c in h.components:
        tag = "P" if isinstance(c, Path) else "C"
        lines.append(" ".join([tag, *(str(v + 1) for v in c.verts)]))
    mode = h.stats.get("mode", "exact")
    lines.append(f"edges={h.edge_count} mode={mode} lossy_repairs={h.stats.get('lossy_repairs', 0)}")
    return "\n".join(lines) + "\n"


def parse_cover(text: str, n: int) -> tuple[PathCycleCover, dict[str, str]]:
    comps: list[Component] = []
    summary: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts:
            continue
        if parts[0] in ("P", "C"):
            verts = tuple(int(x) - 1 for x in parts[1:])
            if not verts:
                raise ValueError(f"line {lineno}: empty component")
            comps.append(Path(verts) if parts[0] == "P" else Cycle(verts))
        elif "=" in parts[0]:
            for kv in parts:
                k, _, v = kv.partition("=")
                summary[k] = v
        else:
            raise ValueError(f"line {lineno}: unrecognised line {raw!r}")
    return PathCycleCover(n, tuple(comps)), summary
