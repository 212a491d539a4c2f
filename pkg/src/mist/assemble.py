"""Grow a spanning forest from a normalized cover, link it, and run the
whole pipeline (reduce, cover, reconstruct, assemble, link, restore).

Every tree in the forest carries a ledger: the cover components that joined
it and their total edge count. Assembly keeps 4 * internal >= 3 * ledger for
each tree after every attachment; the history of those checks is kept on the
forest so callers can audit it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cover import DEFAULT_EXACT_BOUND, Cycle, Path, PathCycleCover, max_path_cycle_cover
from .graph import Edge, Graph, SpanningTree, norm_edge
from .reconstruct import check_reconstructed, reconstruct
from .reduce import DisconnectedGraphError, reduce_graph, restore

ALPHA = Fraction(3, 4)


class AssemblyError(RuntimeError):
    pass


@dataclass
class AlphaCheck:
    stage: str
    tree: int
    internal: int
    ledger: int

    @property
    def ok(self) -> bool:
        return 4 * self.internal >= 3 * self.ledger


@dataclass
class JoinForest:
    n: int
    trees: list[set[Edge]] = field(default_factory=list)
    verts: list[set[int]] = field(default_factory=list)
    members: list[list[int]] = field(default_factory=list)
    ledger: list[int] = field(default_factory=list)
    history: list[AlphaCheck] = field(default_factory=list)
    # trees that absorbed a component by a fallback attachment
    fallback: set[int] = field(default_factory=set)

    def internal(self, i: int) -> int:
        deg: dict[int, int] = {}
        for u, v in self.trees[i]:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        return sum(1 for d in deg.values() if d >= 2)

    def margin(self, i: int) -> int:
        """4 * internal - 3 * ledger; non-negative for a 3/4-approximate tree."""
        return 4 * self.internal(i) - 3 * self.ledger[i]

    def tree_of(self) -> list[int]:
        owner = [-1] * self.n
        for i, vs in enumerate(self.verts):
            for v in vs:
                owner[v] = i
        return owner

    @property
    def violations(self) -> list[AlphaCheck]:
        return [c for c in self.history if not c.ok]

    def _new(self, comp: int, verts, edges, ledger: int) -> int:
        self.trees.append(set(edges))
        self.verts.append(set(verts))
        self.members.append([comp])
        self.ledger.append(ledger)
        return len(self.trees) - 1

    def _check(self, stage: str, i: int):
        self.history.append(AlphaCheck(stage, i, self.internal(i), self.ledger[i]))


def _first_pair(g: Graph, sources, accept) -> tuple[int, int] | None:
    best = None
    for u in sources:
        for x in g.adj[u]:
            if accept(x) and (best is None or (u, x) < best):
                best = (u, x)
    return best


def _drop_at(c: Cycle, v: int) -> list[Edge]:
    """Cycle edges minus the smaller of the two incident to v."""
    at = sorted(e for e in c.edges() if v in e)
    return [e for e in c.edges() if e != at[0]]


def assemble_forest(g1: Graph, h: PathCycleCover, strict: bool = True) -> JoinForest:
    """Join every cover component into a tree of a spanning forest.

    Long paths (>= 4 edges) seed the forest; 1..3-edge paths hang by an
    endpoint on an inner vertex of a long path; singletons hang on an inner
    vertex of any path; cycles are opened either onto an existing tree or
    pairwise onto each other. With strict=False, components that cannot be
    placed by those rules are attached wherever possible and their trees are
    listed in `fallback`.
    """
    if strict and len(h.components) > 1 and not check_reconstructed(g1, h):
        raise AssemblyError("cover is not in normal form")
    f = JoinForest(g1.n)
    comps = h.components
    owner = [-1] * g1.n
    comp_at = [0] * g1.n
    for ci, c in enumerate(comps):
        for v in c.verts:
            comp_at[v] = ci

    def claim(i, vs):
        for v in vs:
            owner[v] = i

    inner_long = set()
    inner_any = set()
    for ci, c in enumerate(comps):
        if isinstance(c, Path):
            inner_any.update(c.inner)
            if c.length >= 4:
                inner_long.update(c.inner)
                t = f._new(ci, c.verts, c.edges(), c.length)
                claim(t, c.verts)
                f._check("long-path", t)

    def attach(ci, c, u, x, extra_edges, ledger, stage, fallback=False):
        t = owner[x]
        f.trees[t].update(extra_edges)
        f.trees[t].add(norm_edge(u, x))
        f.verts[t].update(c.verts)
        f.members[t].append(ci)
        f.ledger[t] += ledger
        claim(t, c.verts)
        if fallback:
            f.fallback.add(t)
        f._check(stage, t)

    def in_tree(x):
        return owner[x] != -1

    pending: list[int] = []
    shorts = sorted((ci for ci, c in enumerate(comps) if isinstance(c, Path) and 1 <= c.length <= 3),
                    key=lambda ci: (-comps[ci].length, ci))
    for ci in shorts:
        c = comps[ci]
        pair = _first_pair(g1, c.endpoints, lambda x: x in inner_long and in_tree(x))
        if pair is None:
            if strict:
                raise AssemblyError(f"short path {c.verts} has no long-path anchor")
            pending.append(ci)
            continue
        attach(ci, c, *pair, c.edges(), c.length, "short-path")

    singles = [ci for ci, c in enumerate(comps) if isinstance(c, Path) and c.length == 0]
    for ci in singles:
        c = comps[ci]
        pair = _first_pair(g1, c.verts, lambda x: x in inner_any and in_tree(x))
        if pair is None:
            if strict:
                raise AssemblyError(f"singleton {c.verts[0]} has no inner-vertex anchor")
            pending.append(ci)
            continue
        attach(ci, c, *pair, (), 0, "singleton")

    cycles = [ci for ci, c in enumerate(comps) if isinstance(c, Cycle)]
    placed: set[int] = set()
    while len(placed) < len(cycles):
        hit = None
        for ci in cycles:
            if ci in placed:
                continue
            pair = _first_pair(g1, comps[ci].verts, in_tree)
            if pair is not None:
                hit = (ci, pair)
                break
        if hit is not None:
            ci, (u, x) = hit
            c = comps[ci]
            attach(ci, c, u, x, _drop_at(c, u), c.length, "cycle-to-tree")
            placed.add(ci)
            continue
        for ci in cycles:
            if ci in placed:
                continue
            c = comps[ci]
            mine = set(c.verts)
            pair = _first_pair(
                g1, c.verts,
                lambda x: x not in mine and isinstance(comps[comp_at[x]], Cycle)
                and comp_at[x] not in placed)
            if pair is not None:
                hit = (ci, pair)
                break
        if hit is None:
            # no cycle touches the forest or another cycle
            if strict:
                raise AssemblyError("cycle components are disconnected from the rest")
            for ci in cycles:
                if ci not in placed:
                    c = comps[ci]
                    t = f._new(ci, c.verts, _drop_at(c, c.verts[0]), c.length)
                    claim(t, c.verts)
                    f.fallback.add(t)
                    f._check("cycle-alone", t)
                    placed.add(ci)
            break
        ci, (u, v) = hit
        cj = comp_at[v]
        c, q = comps[ci], comps[cj]
        edges = _drop_at(c, u) + _drop_at(q, v) + [norm_edge(u, v)]
        t = f._new(ci, c.verts + q.verts, edges, c.length + q.length)
        f.members[t].append(cj)
        claim(t, c.verts + q.verts)
        f._check("cycle-pair", t)
        placed.update((ci, cj))

    # components left over in non-strict mode
    progress = True
    while pending and progress:
        progress = False
        for ci in list(pending):
            c = comps[ci]
            pair = _first_pair(g1, c.endpoints, in_tree) or _first_pair(g1, c.verts, in_tree)
            if pair is not None:
                attach(ci, c, *pair, c.edges(), c.length, "fallback", fallback=True)
                pending.remove(ci)
                progress = True
    for ci in pending:
        c = comps[ci]
        t = f._new(ci, c.verts, c.edges(), c.length)
        claim(t, c.verts)
        f.fallback.add(t)
        f._check("fallback-alone", t)

    if strict and f.violations:
        raise AssemblyError(f"3/4 invariant violated: {f.violations[0]}")
    return f


def joins_violations(h: PathCycleCover, f: JoinForest) -> list[str]:
    """Check that every component joins exactly one tree of f."""
    bad = []
    for ci, c in enumerate(h.components):
        hosts = []
        ce = c.edges()
        for t, (edges, vs) in enumerate(zip(f.trees, f.verts)):
            if not set(c.verts) <= vs:
                continue
            inside = sum(1 for e in ce if e in edges)
            need = len(ce) if isinstance(c, Path) else len(ce) - 1
            if inside >= need:
                hosts.append(t)
        if len(hosts) != 1:
            bad.append(f"component {ci} joins {len(hosts)} trees")
    for i in range(len(f.trees)):
        for j in range(i + 1, len(f.trees)):
            if f.verts[i] & f.verts[j]:
                bad.append(f"trees {i} and {j} share vertices")
    return bad


def link_forest(g1: Graph, f: JoinForest) -> SpanningTree:
    """Connect the forest's trees with graph edges into one spanning tree.

    Trees are contracted to nodes and explored breadth-first; each newly
    reached tree is linked by the smallest crossing edge from the tree that
    reached it. Vertices outside every tree count as one-vertex trees.
    """
    owner = f.tree_of()
    groups = [set(vs) for vs in f.verts]
    for v in range(g1.n):
        if owner[v] == -1:
            owner[v] = len(groups)
            groups.append({v})
    edges = set().union(*f.trees) if f.trees else set()
    if not groups:
        return SpanningTree.from_edges(g1.n, edges)
    reached = [False] * len(groups)
    order = [0]
    reached[0] = True
    k = 0
    while k < len(order):
        t = order[k]
        k += 1
        crossing = sorted(norm_edge(u, w) for u in groups[t] for w in g1.adj[u]
                          if owner[w] != t)
        for u, w in crossing:
            other = owner[w] if owner[u] == t else owner[u]
            if not reached[other]:
                reached[other] = True
                edges.add((u, w))
                order.append(other)
    if not all(reached):
        raise DisconnectedGraphError("graph is not connected")
    return SpanningTree.from_edges(g1.n, edges)


def spanning_tree_of_reduced(g1: Graph, cover_mode: str = "exact",
                             exact_bound: int = DEFAULT_EXACT_BOUND):
    """Spanning tree of a connected reduced graph, plus run statistics."""
    stats: dict = {}
    if g1.is_tree():
        stats["route"] = "reduced-tree"
        return SpanningTree.from_edges(g1.n, g1.edges()), stats, None
    h = max_path_cycle_cover(g1, cover_mode, bound=exact_bound)
    stats["cover_edges"] = h.edge_count
    stats["unconstrained_edges"] = h.stats.get("unconstrained_edges", h.edge_count)
    stats["lossy_repairs"] = h.stats.get("lossy_repairs", 0)
    if len(h.components) == 1:
        (c,) = h.components
        if isinstance(c, Path):
            stats["route"] = "single-path"
            edges = c.edges()
        else:
            stats["route"] = "single-cycle"
            edges = c.edges()
            edges.remove(max(edges))
        return SpanningTree.from_edges(g1.n, edges), stats, None
    strict = cover_mode == "exact"
    h2 = reconstruct(g1, h, strict=strict)
    stats["route"] = "assembled"
    stats["reconstruct_steps"] = h2.stats.get("reconstruct_steps", 0)
    stats["cover_edges_final"] = h2.edge_count
    f = assemble_forest(g1, h2, strict=strict)
    stats["forest_trees"] = len(f.trees)
    stats["alpha_checks"] = len(f.history)
    stats["alpha_violations"] = len(f.violations)
    stats["alpha_margins"] = ",".join(str(f.margin(i)) for i in range(len(f.trees)))
    stats["fallback_trees"] = len(f.fallback)
    return link_forest(g1, f), stats, f


def approx_mist(g: Graph, cover_mode: str = "exact",
                exact_bound: int = DEFAULT_EXACT_BOUND) -> tuple[SpanningTree, dict]:
    """Approximate maximum internal spanning tree of a connected graph.

    Returns the tree and a flat stats dict. In exact cover mode the tree
    has at least 3/4 of the optimal number of internal vertices.
    """
    if g.n < 1:
        raise ValueError("need at least 1 vertex")
    if not g.is_connected():
        raise DisconnectedGraphError("graph must be connected")
    g1, trace = reduce_graph(g)
    t1, stats, forest = spanning_tree_of_reduced(g1, cover_mode, exact_bound)
    t = restore(t1, trace)
    out = {
        "n": g.n,
        "m": g.m,
        "reduced_n": g1.n,
        "reduced_m": g1.m,
        "trace_steps": len(trace.steps),
        "cover_mode": cover_mode,
    }
    out.update(stats)
    out["internal"] = t.internal_count
    return t, out
