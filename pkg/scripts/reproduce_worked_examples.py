"""Rebuild the ring and star examples end to end and print what each stage produces."""

from graphqec import oracle
from graphqec.f2linalg import BinaryMatrix
from graphqec.graph import ring, star, to_graph6
from graphqec.graphcode import build_code, extraction_stages, syndrome
from graphqec.graphstate import generators, lc_operator
from graphqec.pauli import from_string


def show_code(name, g, b):
    print(f"== {name}  graph6={to_graph6(g)}")
    print("K:", " ".join(map(str, generators(g).generators)))
    code = build_code(g, b)
    print("B:", " / ".join(b.to_strings()))
    print("logical Z:", " ".join(map(str, code.logical_z)))
    for i, stage in enumerate(extraction_stages(g, list(code.logical_z))):
        print(f"  stage {i}:", " ".join(map(str, stage)))
    print("logical X:", " ".join(map(str, code.logical_x)))
    print("parameters:", code.parameters())
    state = oracle.build_graph_state(g)
    dev = max(oracle.eigen_deviation(state, s) for s in code.stabilizers)
    print(f"max stabilizer deviation on |G>: {dev:.1e}")
    return code


def main():
    r5 = show_code("ring 5", ring(5), BinaryMatrix.from_rows(["11111"]))
    print("syndrome IIXII:", syndrome(r5, from_string("IIXII")))
    print("U_1:", lc_operator(ring(5), 0).describe())
    show_code("star 4", star(4), BinaryMatrix.from_rows(["0110", "0011"]))


if __name__ == "__main__":
    main()
