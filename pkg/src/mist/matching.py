"""Maximum cardinality matching on general graphs (Edmonds' blossom algorithm).

The O(n^3) formulation: grow an alternating BFS forest from one free vertex
at a time, contract odd cycles by relabelling their vertices to a common base,
and augment along the first free vertex reached.
"""

from __future__ import annotations

from collections import deque

from .graph import Edge, Graph, norm_edge


def _adjacency(n: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    return adj


def _augment_from(root: int, adj: list[list[int]], match: list[int]) -> bool:
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]):
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    # flip the alternating path ending at `to`
                    u = to
                    while u != -1:
                        pu = parent[u]
                        nxt = match[pu]
                        match[u] = pu
                        match[pu] = u
                        u = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def max_matching_edges(n: int, edges) -> list[Edge]:
    """Maximum cardinality matching of the graph on 0..n-1 with `edges`."""
    adj = _adjacency(n, edges)
    match = [-1] * n
    # greedy warm start; the search below only ever augments
    for u in range(n):
        if match[u] == -1:
            for w in adj[u]:
                if match[w] == -1:
                    match[u], match[w] = w, u
                    break
    for v in range(n):
        if match[v] == -1 and adj[v]:
            _augment_from(v, adj, match)
    return sorted(norm_edge(u, match[u]) for u in range(n) if match[u] > u)


def max_matching(g: Graph) -> list[Edge]:
    return max_matching_edges(g.n, g.edges())


def is_matching(edges) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u == v or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True
