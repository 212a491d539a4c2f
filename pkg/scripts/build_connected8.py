"""Generate every connected graph on 8 vertices up to isomorphism.

Each 8-vertex graph minus its last vertex is some 7-vertex graph, so adding
a vertex with every possible neighborhood to each of the 1044 atlas graphs
on 7 vertices reaches all of them. Duplicates are removed by WL-hash bucket
plus an exact isomorphism test. Writes graph6 lines to
src/mist/data/connected8.g6; the count must be 11117.
"""

import sys
from pathlib import Path

import networkx as nx

EXPECTED = 11117
OUT = Path(__file__).resolve().parents[1] / "src" / "mist" / "data" / "connected8.g6"


def main():
    base = [G for G in nx.graph_atlas_g() if G.number_of_nodes() == 7]
    assert len(base) == 1044, len(base)
    buckets: dict[str, list[nx.Graph]] = {}
    kept = []
    for i, G in enumerate(base):
        for nbhd in range(1, 1 << 7):
            H = G.copy()
            H.add_node(7)
            H.add_edges_from((7, w) for w in range(7) if nbhd >> w & 1)
            if not nx.is_connected(H):
                continue
            key = nx.weisfeiler_lehman_graph_hash(H, iterations=3)
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(H, K) for K in bucket):
                continue
            bucket.append(H)
            kept.append(H)
        if i % 100 == 0:
            print(f"{i}/1044 base graphs, {len(kept)} kept", file=sys.stderr)
    if len(kept) != EXPECTED:
        sys.exit(f"found {len(kept)} graphs, expected {EXPECTED}")
    kept.sort(key=lambda H: (H.number_of_edges(), sorted(H.edges())))
    with open(OUT, "wb") as fh:
        for H in kept:
            fh.write(nx.to_graph6_bytes(H, header=False))
    print(f"wrote {len(kept)} graphs to {OUT}")


if __name__ == "__main__":
    main()
