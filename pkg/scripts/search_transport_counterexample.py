"""Compare logical transport against applying U_v directly to a codeword.

Walks every connected graph on up to --max-n vertices (one per isomorphism
class), every vertex whose complement still admits a code, and every basis
input. Prints how often the two states differ.
"""

import argparse
import itertools
import json

import networkx as nx

from graphqec import oracle
from graphqec.graph import SimpleGraph
from graphqec.graphcode import GraphCodeError, build_code, kernel_dimension


def atlas(max_n):
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_n and nx.is_connected(h):
            yield SimpleGraph.from_edges(h.number_of_nodes(), list(h.edges()))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--gap", type=float, default=1e-6, help="fidelity gap counted as a difference")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    cases = differ = infeasible = 0
    first = None
    worst = 1.0
    for g in atlas(args.max_n):
        if kernel_dimension(g) == 0:
            continue
        code = build_code(g)
        for v in range(g.n):
            try:
                code2 = oracle.transport_target_code(code, v)
            except GraphCodeError:
                infeasible += 1
                continue
            for c in itertools.product((0, 1), repeat=code.k):
                out = oracle.lc_transport(code, v, c, code2=code2)
                fid = oracle.fidelity(out, oracle.direct_lc(code, v, c))
                cases += 1
                worst = min(worst, fid)
                if fid < 1 - args.gap:
                    differ += 1
                    if first is None:
                        first = {"n": g.n, "edges": g.edges(), "vertex": v + 1, "input": list(c), "fidelity": fid}
    summary = {
        "cases": cases,
        "differ": differ,
        "infeasible_vertices": infeasible,
        "min_fidelity": worst,
        "first_instance": first,
    }
    if args.json:
        print(json.dumps(summary, indent=2))
    else:
        for k, v in summary.items():
            print(f"{k:<20} {v}")


if __name__ == "__main__":
    main()
