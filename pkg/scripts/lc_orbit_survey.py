"""LC orbit sizes for small connected graphs, labeled and up to isomorphism."""

import argparse
from collections import Counter

import networkx as nx

from graphqec.graph import SimpleGraph, to_graph6
from graphqec.graphstate import lc_orbit


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--cap", type=int, default=100_000)
    args = ap.parse_args()

    seen = set()
    classes = Counter()
    print(f"{'graph6':<10} {'n':>2} {'orbit':>7} {'classes':>8}")
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if not 1 <= n <= args.max_n or not nx.is_connected(h):
            continue
        g = SimpleGraph.from_edges(n, list(h.edges()))
        key = nx.weisfeiler_lehman_graph_hash(h)
        if any(nx.is_isomorphic(h, other) for other in seen_graphs(seen, key)):
            continue
        orbit = lc_orbit(g, args.cap)
        reps = []
        for m in orbit.graphs:
            mh = nx.Graph(m.edges())
            mh.add_nodes_from(range(n))
            if not any(nx.is_isomorphic(mh, r) for r in reps):
                reps.append(mh)
        for r in reps:
            seen.add((nx.weisfeiler_lehman_graph_hash(r), r))
        classes[n] += 1
        flag = "+" if orbit.truncated else ""
        print(f"{to_graph6(g):<10} {n:>2} {len(orbit):>6}{flag:1} {len(reps):>8}")
    for n in sorted(classes):
        print(f"n={n}: {classes[n]} LC classes of connected graphs")


def seen_graphs(seen, key):
    return [g for k, g in seen if k == key]


if __name__ == "__main__":
    main()
