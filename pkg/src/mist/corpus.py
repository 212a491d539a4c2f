"""Graph corpora for sweeps and audits.

All connected graphs up to isomorphism: n <= 7 from the networkx graph
atlas, n = 8 from a bundled graph6 file (11117 graphs, produced by
scripts/build_connected8.py).

Corpus spec strings, joined with '+':

    exhaustive:7          connected graphs with 2..7 vertices
    exhaustive:8-8        connected graphs with exactly 8 vertices
    tight:2-25            chained-squares family, k = 2..25
    random:n=10,m=15,count=500,seed=1     (m may be a range such as 9-20)
    file:path/to/graph.txt
"""

from __future__ import annotations

from importlib import resources
from typing import Iterator

from .generators import XorShift64Star, gen_random, gen_tight
from .graph import Graph, read_graph

MAX_EXHAUSTIVE_N = 8
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on n vertices, one per isomorphism class."""
    import networkx as nx

    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive corpus available for 1 <= n <= {MAX_EXHAUSTIVE_N}")
    if n <= 7:
        for G in nx.graph_atlas_g():
            if G.number_of_nodes() == n and nx.is_connected(G):
                yield Graph.from_edges(n, G.edges())
        return
    data = resources.files("mist").joinpath("data/connected8.g6").read_bytes()
    for line in data.splitlines():
        if line.strip():
            G = nx.from_graph6_bytes(line.strip())
            yield Graph.from_edges(n, G.edges())


def _range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("-")
    return int(lo), int(hi or lo)


def random_instances(n: int, m_lo: int, m_hi: int, count: int, seed: int):
    """`count` connected graphs; instance i uses seed `seed + i`."""
    top = n * (n - 1) // 2
    m_lo, m_hi = max(m_lo, n - 1), min(m_hi, top)
    for i in range(count):
        s = seed + i
        m = m_lo if m_lo == m_hi else XorShift64Star(s ^ 0x5DEECE66D).between(m_lo, m_hi)
        yield f"random-n{n}-s{s}", gen_random(n, m, s)


def load_corpus(spec: str) -> list[tuple[str, Graph]]:
    out: list[tuple[str, Graph]] = []
    for part in spec.split("+"):
        kind, _, arg = part.strip().partition(":")
        if kind == "exhaustive":
            lo, hi = _range(arg) if "-" in arg else (2, int(arg))
            for n in range(lo, hi + 1):
                for i, g in enumerate(connected_graphs(n)):
                    out.append((f"conn-n{n}-{i}", g))
        elif kind == "tight":
            lo, hi = _range(arg)
            out.extend((f"tight-k{k}", gen_tight(k)) for k in range(lo, hi + 1))
        elif kind == "random":
            opts = dict(kv.split("=", 1) for kv in arg.split(","))
            n = int(opts["n"])
            m_lo, m_hi = _range(opts.get("m", f"{n - 1}-{2 * n}"))
            out.extend(random_instances(n, m_lo, m_hi, int(opts.get("count", 100)),
                                        int(opts.get("seed", 0))))
        elif kind == "file":
            out.append((arg, read_graph(arg)))
        else:
            raise ValueError(f"unknown corpus kind {kind!r}")
    return out
