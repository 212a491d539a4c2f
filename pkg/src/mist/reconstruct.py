"""Rewrite a maximum constrained cover into the normal form assembly needs.

Target form, on a connected reduced graph that is not a tree:

(a) no path endpoint is adjacent to a vertex of a cycle component;
(b) every singleton is adjacent to an inner vertex of some path;
(c) every path with 1 to 3 edges has an endpoint adjacent to an inner vertex
    of a path with at least 4 edges.

Every rewrite keeps the edge count. The loop applies, restarting after each
structural change: path/cycle merges, endpoint swaps for short paths whose
endpoints see nothing outside, then (1-path, 2-path) -> (3-path, singleton),
then (short, short) -> (long, singleton).
"""

from __future__ import annotations

from .cover import Cycle, Path, PathCycleCover, validate_cover
from .graph import Graph, norm_edge
from .reduce import is_reduced


class ReconstructionError(RuntimeError):
    pass


class _State:
    def __init__(self, g: Graph, comps):
        self.g = g
        self.comps = list(comps)
        self.reindex()

    def reindex(self):
        self.comp_of = [0] * self.g.n
        for i, c in enumerate(self.comps):
            for v in c.verts:
                self.comp_of[v] = i

    def replace(self, old: list[int], new: list):
        keep = [c for i, c in enumerate(self.comps) if i not in old]
        self.comps = keep + new
        self.comps.sort(key=lambda c: min(c.verts))
        self.reindex()

    def outside(self, v: int) -> list[int]:
        i = self.comp_of[v]
        return [w for w in self.g.adj[v] if self.comp_of[w] != i]

    def is_inner(self, v: int) -> bool:
        c = self.comps[self.comp_of[v]]
        return isinstance(c, Path) and v not in c.endpoints

    def is_endpoint(self, v: int) -> bool:
        c = self.comps[self.comp_of[v]]
        return isinstance(c, Path) and v in c.endpoints


def _orient_end(p: Path, v: int) -> tuple[int, ...]:
    """Vertices of p ordered so that endpoint v comes last."""
    return p.verts if p.verts[-1] == v else tuple(reversed(p.verts))


def _open_cycle(c: Cycle, v: int) -> tuple[int, ...]:
    """Walk of c starting at v after deleting the smaller cycle edge at v."""
    k = len(c.verts)
    i = c.verts.index(v)
    prev, nxt = c.verts[i - 1], c.verts[(i + 1) % k]
    if norm_edge(v, prev) < norm_edge(v, nxt):
        # drop (v, prev): walk forward, ending at prev
        return tuple(c.verts[(i + j) % k] for j in range(k))
    return tuple(c.verts[(i - j) % k] for j in range(k))


def _find_join(s: _State, min_cycle: int):
    """A single edge whose addition keeps the cover valid, if any."""
    for u, v in s.g.edges():
        if not (s.is_endpoint(u) and s.is_endpoint(v)):
            continue
        cu, cv = s.comp_of[u], s.comp_of[v]
        if cu != cv:
            return (u, v)
        p = s.comps[cu]
        if p.length >= min_cycle - 1 and set(p.endpoints) == {u, v}:
            return (u, v)
    return None


def _apply_join(s: _State, u: int, v: int):
    cu, cv = s.comp_of[u], s.comp_of[v]
    if cu == cv:
        s.replace([cu], [Cycle(s.comps[cu].verts)])
    else:
        a = _orient_end(s.comps[cu], u)
        b = tuple(reversed(_orient_end(s.comps[cv], v)))
        s.replace([cu, cv], [Path(a + b)])


def _find_merge(s: _State):
    """Path endpoint u adjacent to cycle vertex v (smallest such pair)."""
    best = None
    for i, c in enumerate(s.comps):
        if not isinstance(c, Path):
            continue
        for u in c.endpoints:
            for v in s.g.adj[u]:
                if isinstance(s.comps[s.comp_of[v]], Cycle):
                    if best is None or (u, v) < best:
                        best = (u, v)
    return best


def _apply_merge(s: _State, u: int, v: int):
    cu, cv = s.comp_of[u], s.comp_of[v]
    path = _orient_end(s.comps[cu], u) + _open_cycle(s.comps[cv], v)
    s.replace([cu, cv], [Path(path)])


def _is_leaf(g: Graph, v: int) -> bool:
    return len(g.adj[v]) == 1


def _swap_needed(s: _State, p: Path) -> bool:
    return 2 <= p.length <= 3 and not any(s.outside(e) for e in p.endpoints)


def _swap(s: _State, p: Path, strict: bool, log) -> Path | Cycle:
    g = s.g
    if p.length == 2:
        v1, v2, v3 = p.verts
        if g.has_edge(v1, v3):
            return Path((v3, v1, v2))
        raise ReconstructionError(
            f"2-path {p.verts} has both endpoints as leaves; graph is not reduced")
    u1, u2, u3, u4 = p.verts
    leaf1, leaf4 = _is_leaf(g, u1), _is_leaf(g, u4)
    if leaf1 and leaf4:
        raise ReconstructionError(
            f"3-path {p.verts} has both endpoints as leaves; graph is not reduced")
    if leaf1:
        u1, u2, u3, u4 = u4, u3, u2, u1
    if leaf1 or leaf4:
        # u4 is the leaf; u1 sees only u2, u3
        if g.has_edge(u1, u3) and s.outside(u2):
            return Path((u2, u1, u3, u4))
        raise ReconstructionError(
            f"3-path {p.verts}: inner vertex next to the leaf is a super cut vertex")
    # neither endpoint a leaf and neither sees outside: u1~u3 and u4~u2,
    # so u1 u3 u4 u2 closes a 4-cycle with one more edge
    if strict:
        raise ReconstructionError(f"cover is not maximum: 3-path {p.verts} closes to a 4-cycle")
    if log is not None:
        log.append(("improve", (u1, u3, u4, u2)))
    return Cycle((u1, u3, u4, u2))


def _lacking(s: _State) -> list[int]:
    """Indices of 1..3-edge paths failing condition (c)."""
    out = []
    for i, c in enumerate(s.comps):
        if isinstance(c, Path) and 1 <= c.length <= 3:
            if not _serves(s, c):
                out.append(i)
    return out


def _serves(s: _State, p: Path) -> bool:
    for e in p.endpoints:
        for x in s.outside(e):
            if s.is_inner(x) and s.comps[s.comp_of[x]].length >= 4:
                return True
    return False


def _find_pair_rewrite(s: _State, lacking: list[int], want_l12: bool):
    for i in lacking:
        p = s.comps[i]
        for e in p.endpoints:
            for x in s.outside(e):
                if not s.is_inner(x):
                    continue
                q = s.comps[s.comp_of[x]]
                if q.length >= 4:
                    continue
                if want_l12 and p.length == 1 and q.length == 2:
                    return i, e, x
                if not want_l12 and p.length + q.length >= 4:
                    return i, e, x
    return None


def _apply_l12(s: _State, i: int, e: int, x: int):
    p = s.comps[i]
    j = s.comp_of[x]
    q = s.comps[j]
    u1 = e
    u2 = p.verts[0] if p.verts[1] == e else p.verts[1]
    v1, v2, v3 = q.verts
    members = set(q.verts)
    if not any(w not in members for w in s.g.adj[v3]):
        v1, v3 = v3, v1
    s.replace([i, j], [Path((v3, v2, u1, u2)), Path((v1,))])


def _apply_l13(s: _State, i: int, e: int, x: int):
    p = s.comps[i]
    j = s.comp_of[x]
    q = s.comps[j].verts
    if q[1] != x:
        q = tuple(reversed(q))
    # q = v1 v2 [y] v3 with v2 = x; keep v3..v2, drop (v1, v2)
    tail = tuple(reversed(q[1:]))
    head = tuple(reversed(_orient_end(p, e)))
    s.replace([i, j], [Path(tail + head), Path((q[0],))])


def reconstruct(g1: Graph, h: PathCycleCover, *, strict: bool = True,
                log: list | None = None) -> PathCycleCover:
    """Normalize a maximum constrained cover of a reduced graph.

    With strict=True any sign that `h` is not maximum, or that `g1` is not
    reduced, raises ReconstructionError. With strict=False edge-gaining
    improvements are applied instead and the loop stops quietly when no rule
    fires; the result may then fail check_reconstructed.
    """
    report = validate_cover(g1, h, 4)
    if not report.ok:
        raise ReconstructionError("invalid cover: " + "; ".join(report.violations))
    if len(h.components) < 2:
        raise ReconstructionError("cover must have at least two components")
    if strict:
        if not g1.is_connected():
            raise ReconstructionError("graph is not connected")
        if g1.is_tree():
            raise ReconstructionError("graph is a tree")
        if not is_reduced(g1):
            raise ReconstructionError("graph is not reduced")
    s = _State(g1, h.components)
    steps = 0
    limit = 3 * g1.n if strict else 10 * g1.n + 10

    def step(kind, detail):
        nonlocal steps
        steps += 1
        if log is not None:
            log.append((kind, detail))
        if steps > limit:
            raise ReconstructionError(f"more than {limit} rewrite steps")

    while True:
        join = _find_join(s, 4)
        if join is not None:
            if strict:
                raise ReconstructionError(f"cover is not maximum: edge {join} can be added")
            step("join", join)
            _apply_join(s, *join)
            continue
        merge = _find_merge(s)
        if merge is not None:
            step("merge", merge)
            _apply_merge(s, *merge)
            continue
        swapped = False
        for i, c in enumerate(s.comps):
            if isinstance(c, Path) and _swap_needed(s, c):
                new = _swap(s, c, strict, log)
                step("swap", (c.verts, new.verts))
                s.comps[i] = new
                swapped = True
        if swapped:
            s.reindex()
            continue
        lacking = _lacking(s)
        if not lacking:
            break
        hit = _find_pair_rewrite(s, lacking, want_l12=True)
        if hit is not None:
            step("short-pair-3", hit)
            _apply_l12(s, *hit)
            continue
        hit = _find_pair_rewrite(s, lacking, want_l12=False)
        if hit is not None:
            step("short-pair-long", hit)
            _apply_l13(s, *hit)
            continue
        if strict:
            bad = [s.comps[i].verts for i in lacking]
            raise ReconstructionError(f"no rewrite applies to short paths {bad}")
        break

    out = PathCycleCover.from_edges(g1.n, [e for c in s.comps for e in c.edges()],
                                    dict(h.stats, reconstruct_steps=steps))
    if strict:
        if out.edge_count != h.edge_count:
            raise ReconstructionError("edge count changed during reconstruction")
        if not check_reconstructed(g1, out):
            raise ReconstructionError("result is not in normal form")
    return out


def check_reconstructed(g1: Graph, h: PathCycleCover) -> bool:
    return not normal_form_violations(g1, h)


def normal_form_violations(g1: Graph, h: PathCycleCover) -> list[str]:
    s = _State(g1, h.components)
    bad = []
    for c in s.comps:
        if not isinstance(c, Path):
            continue
        for e in c.endpoints:
            for w in g1.adj[e]:
                if isinstance(s.comps[s.comp_of[w]], Cycle):
                    bad.append(f"path endpoint {e} adjacent to cycle vertex {w}")
        if c.length == 0:
            v = c.verts[0]
            if not any(s.is_inner(w) for w in g1.adj[v]):
                bad.append(f"singleton {v} not adjacent to an inner path vertex")
        elif c.length <= 3 and not _serves(s, c):
            bad.append(f"short path {c.verts} has no endpoint next to a long path's inner vertex")
    return bad
