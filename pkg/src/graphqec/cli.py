"""Command-line interface.

Exit status is 0 on success, 1 on a domain error (infeasible k, invalid B,
size mismatch, failed verification) and 2 on usage or parse errors.
Vertex numbers on the command line and in human-readable output are
1-based.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .f2linalg import MatrixFormatError, parse_matrix
from .graph import FORMATS, GraphParseError, SimpleGraph, local_complement, parse_graph, to_graph6
from .graphcode import GraphCode, GraphCodeError, build_code, kernel_dimension, syndrome, validate_b
from .graphstate import generators, lc_operator, lc_orbit
from .oracle import OracleSizeError
from .pauli import PauliParseError, from_string
from .verification import run_checks

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args) -> SimpleGraph:
    text = _read(args.graph_file)
    try:
        return parse_graph(text, args.format, one_based=not args.zero_based)
    except (GraphParseError, ValueError) as exc:
        raise UsageError(f"{args.graph_file}: {exc}") from None


def _emit(args, payload, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def cmd_stabilizers(args) -> int:
    g = _load_graph(args)
    gens = [str(k) for k in generators(g).generators]
    _emit(args, gens, "\n".join(gens))
    return EXIT_OK


def _code_summary(code: GraphCode) -> str:
    lines = [
        f"code        {code.parameters()}",
        f"graph6      {to_graph6(code.graph)}",
        "B           " + " / ".join(code.b.to_strings()),
        "logical Z   " + ", ".join(map(str, code.logical_z)),
        "logical X   " + ", ".join(map(str, code.logical_x)),
        "stabilizers",
    ]
    lines.extend(f"  {s}" for s in code.stabilizers)
    return "\n".join(lines)


def cmd_derive_code(args) -> int:
    g = _load_graph(args)
    b = None
    if args.b_file:
        try:
            b = parse_matrix(_read(args.b_file))
        except MatrixFormatError as exc:
            raise UsageError(f"{args.b_file}: {exc}") from None
        if not validate_b(b, g):
            raise GraphCodeError("B is not valid for this graph (needs matching width, full row rank, B * Gamma = 0)")
    k = args.k
    if k is None and b is None:
        k = kernel_dimension(g)
    code = build_code(g, b=b, k=k)
    if args.json:
        print(code.to_json(indent=2))
    else:
        print(_code_summary(code))
    return EXIT_OK


def cmd_syndrome(args) -> int:
    code = GraphCode.from_json(_read(args.code_json))
    try:
        err = from_string(args.error)
    except PauliParseError as exc:
        raise UsageError(str(exc)) from None
    syn = syndrome(code, err)
    _emit(args, list(syn.bits), str(syn))
    return EXIT_OK


def _up_to_isomorphism(graphs: Sequence[SimpleGraph]) -> list[SimpleGraph]:
    import networkx as nx

    reps: list[tuple[SimpleGraph, object]] = []
    for g in graphs:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        if not any(nx.is_isomorphic(h, other) for _, other in reps):
            reps.append((g, h))
    return [g for g, _ in reps]


def cmd_lc(args) -> int:
    g = _load_graph(args)
    if args.orbit:
        orbit = lc_orbit(g, args.max)
        graphs = list(orbit.graphs)
        if args.up_to_iso:
            graphs = _up_to_isomorphism(graphs)
        codes = [to_graph6(h) for h in graphs]
        payload = {"size": len(codes), "truncated": orbit.truncated, "graphs": codes}
        human = "\n".join(codes) + f"\n# {len(codes)} graphs" + (" (truncated)" if orbit.truncated else "")
        _emit(args, payload, human)
        return EXIT_OK
    if args.vertex is None:
        raise UsageError("lc needs --vertex V or --orbit")
    v = args.vertex - 1
    if not 0 <= v < g.n:
        raise GraphCodeError(f"vertex {args.vertex} out of range 1..{g.n}")
    g2 = local_complement(g, v)
    op = lc_operator(g, v)
    payload = {
        "vertex": args.vertex,
        "graph6": to_graph6(g2),
        "operator": [{"qubit": q + 1, "gate": tag} for q, tag in op.factors],
    }
    _emit(args, payload, f"{to_graph6(g2)}\n{op.describe()}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args)
    checks = run_checks(g, k=args.k, depth=args.depth, seed=args.seed)
    ok = all(c.passed for c in checks)
    if args.json:
        print(json.dumps({"passed": ok, "checks": [c.to_dict() for c in checks]}, indent=2))
    else:
        for c in checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.name:<32} {c.metric}={c.value:.3e}")
        print("all checks passed" if ok else "some checks FAILED")
    return EXIT_OK if ok else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphqec", description="Graph states and graph codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("graph_file", help="graph file, or - for stdin")
        p.add_argument("--format", choices=FORMATS, default="edgelist")
        p.add_argument("--zero-based", action="store_true", help="edge-list labels start at 0")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("stabilizers", help="print the graph-state generators")
    graph_input(p)
    p.set_defaults(func=cmd_stabilizers)

    p = sub.add_parser("derive-code", help="derive the graph code, its stabilizers and distance")
    graph_input(p)
    p.add_argument("--k", type=int, help="number of logical qubits (default: kernel dimension)")
    p.add_argument("--b-file", help="explicit B matrix (rows of bits, optional 'rows cols' header)")
    p.set_defaults(func=cmd_derive_code)

    p = sub.add_parser("syndrome", help="syndrome of a Pauli error against a code bundle")
    p.add_argument("code_json")
    p.add_argument("error", help="Pauli string, e.g. IIXII")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_syndrome)

    p = sub.add_parser("lc", help="local complementation at a vertex, or the LC orbit")
    graph_input(p)
    p.add_argument("--vertex", type=int, help="1-based vertex")
    p.add_argument("--orbit", action="store_true")
    p.add_argument("--max", type=int, default=1000, help="orbit size cap")
    p.add_argument("--up-to-iso", action="store_true", help="keep one graph per isomorphism class")
    p.set_defaults(func=cmd_lc)

    p = sub.add_parser("verify", help="run the statevector oracle checks")
    graph_input(p)
    p.add_argument("--k", type=int, help="logical qubits (default: kernel dimension)")
    p.add_argument("--depth", type=int, default=3, help="random measurement seeds per encoding check")
    p.add_argument("--seed", type=int, default=0, help="first random seed")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphCodeError, OracleSizeError, IndexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
