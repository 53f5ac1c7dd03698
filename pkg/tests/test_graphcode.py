import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from graphqec import oracle
from graphqec.f2linalg import BinaryMatrix, rank
from graphqec.graph import SimpleGraph, ring, star
from graphqec.graphcode import (
    DegenerateLogicalError,
    GraphCode,
    GraphCodeError,
    build_code,
    derive_b,
    distance,
    extract_stabilizers,
    extraction_stages,
    kernel_dimension,
    logical_z_ops,
    syndrome,
    validate_b,
)
from graphqec.graphstate import generators
from graphqec.pauli import from_string, in_group, independent_set, product, same_group, symplectic_matrix

from conftest import R5_B, T4_B, graphs, random_graphs_with_kernel

EXTRACTED_R5 = ["YYZIZ", "XIXZZ", "XZZXI", "YZIZY"]
STANDARD_513 = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]


def P(strings):
    return [from_string(s) for s in strings]


def test_derive_b_examples(r5, t4):
    assert derive_b(r5, 1).to_strings() == ["11111"]
    assert validate_b(R5_B, r5)
    b = derive_b(t4, 2)
    assert b.rows == 2 and validate_b(b, t4)
    assert validate_b(T4_B, t4)
    k2 = SimpleGraph.from_edges(2, [(0, 1)])
    with pytest.raises(GraphCodeError, match="at most k=0"):
        derive_b(k2, 1)
    with pytest.raises(GraphCodeError, match="at most k=1"):
        derive_b(r5, 2)


def test_validate_b_rejects(r5, t4):
    assert not validate_b(BinaryMatrix.from_rows(["11000"]), r5)
    assert not validate_b(BinaryMatrix.from_rows(["0110", "0110"]), t4)
    assert not validate_b(BinaryMatrix.from_rows(["1111"]), r5)


def test_logical_z_examples():
    assert [str(z) for z in logical_z_ops(R5_B)] == ["ZZZZZ"]
    assert [str(z) for z in logical_z_ops(T4_B)] == ["IZZI", "IIZZ"]
    assert str(logical_z_ops(BinaryMatrix.from_rows(["000"]))[0]) == "III"


def test_extract_r5(r5):
    stab = extract_stabilizers(r5, P(["ZZZZZ"]))
    assert [str(s) for s in stab] == EXTRACTED_R5
    assert same_group(stab, P(EXTRACTED_R5))
    assert same_group(stab, P(STANDARD_513))


def test_extract_t4_stages(t4):
    stages = extraction_stages(t4, P(["IZZI", "IIZZ"]))
    assert same_group(stages[1], P(["XZZZ", "ZIIX", "IXXI"]))
    assert [str(s) for s in stages[2]] == ["XZZZ", "ZXXX"]
    assert same_group(extract_stabilizers(t4, P(["IZZI", "IIZZ"])), P(["XZZZ", "ZXXX"]))


def test_extract_degenerate(r5):
    # ZZZZZ twice: the second pass finds nothing anticommuting
    with pytest.raises(DegenerateLogicalError, match="degenerate logical operator"):
        extract_stabilizers(r5, P(["ZZZZZ", "ZZZZZ"]))


def test_extraction_is_deterministic(r5):
    a = extract_stabilizers(r5, P(["ZZZZZ"]))
    b = extract_stabilizers(r5, P(["ZZZZZ"]))
    assert [str(s) for s in a] == [str(s) for s in b]
    assert build_code(r5, R5_B).to_json() == build_code(r5, R5_B).to_json()


def test_extracted_generators_fix_graph_state(r5_code, t4_code):
    for code in (r5_code, t4_code):
        state = oracle.build_graph_state(code.graph)
        ks = generators(code.graph).generators
        for s in code.stabilizers:
            assert oracle.eigen_deviation(state, s, +1) < 1e-10
            assert rank(symplectic_matrix(list(ks) + [s])) == code.n


def test_logical_x(r5_code, t4_code):
    trivial = build_code(SimpleGraph.empty(1), BinaryMatrix.from_rows(["1"]))
    assert [str(x) for x in trivial.logical_x] == ["X"]
    assert trivial.stabilizers == ()
    for code in (r5_code, t4_code):
        code.check_invariants()
    # Xbar flips |0>_L to |1>_L
    g = oracle.build_graph_state(r5_code.graph)
    zero = oracle.project_logical(g, r5_code.logical_z, [0])
    one = oracle.project_logical(g, r5_code.logical_z, [1])
    assert abs(oracle.fidelity(oracle.apply_pauli(zero, r5_code.logical_x[0]), one) - 1) < 1e-10
    for c in itertools.product((0, 1), repeat=2):
        word = oracle.project_logical(oracle.build_graph_state(t4_code.graph), t4_code.logical_z, c)
        for i, xi in enumerate(t4_code.logical_x):
            flipped = list(c)
            flipped[i] ^= 1
            target = oracle.project_logical(oracle.build_graph_state(t4_code.graph), t4_code.logical_z, flipped)
            assert abs(oracle.fidelity(oracle.apply_pauli(word, xi), target) - 1) < 1e-10


def test_syndrome_examples(r5_code, t4_code):
    assert str(syndrome(r5_code, from_string("IIXII"))) == "(-1, +1, -1, +1)"
    assert syndrome(r5_code, from_string("IIIII")).trivial
    assert syndrome(t4_code, from_string("IIII")).bits == (1, 1)
    # XZZZ has X on qubit 0 (anticommutes with Z), ZXXX has Z there (commutes)
    assert syndrome(t4_code, from_string("ZIII")).bits == (-1, 1)
    with pytest.raises(GraphCodeError):
        syndrome(r5_code, from_string("IIXI"))


def brute_distance(code: GraphCode) -> int:
    """Scan all 4**n Paulis with dense commutators against the enumerated stabilizer group."""
    n = code.n
    mats = [oracle.pauli_matrix(s) for s in code.stabilizers]
    group = set()
    for bits in itertools.product((0, 1), repeat=len(code.stabilizers)):
        p = product([s for s, b in zip(code.stabilizers, bits) if b], n=n)
        group.add(p.letters())
    best = None
    for letters in itertools.product("IXYZ", repeat=n):
        s = "".join(letters)
        if s in group:
            continue
        m = oracle.pauli_matrix(from_string(s))
        if all(np.allclose(m @ a, a @ m) for a in mats):
            w = n - s.count("I")
            best = w if best is None else min(best, w)
    return best


def test_distance_examples(r5_code, t4_code):
    assert distance(r5_code) == 3
    assert distance(t4_code) == 2
    assert distance(build_code(SimpleGraph.empty(1), BinaryMatrix.from_rows(["1"]))) == 1
    assert r5_code.parameters() == "[[5,1,3]]"
    assert t4_code.parameters() == "[[4,2,2]]"


def test_distance_against_dense_enumeration():
    for g in random_graphs_with_kernel(6, (3, 5), seed=5) + [ring(5), star(4)]:
        code = build_code(g)
        assert distance(code) == brute_distance(code)


def test_distance_size_limit():
    g = SimpleGraph.empty(15)
    code = build_code(g, k=1)
    with pytest.raises(GraphCodeError, match="n <= 14"):
        distance(code)


@given(graphs(min_n=2, max_n=9))
@settings(max_examples=60, deadline=None)
def test_code_invariants_for_random_graphs(g):
    kdim = kernel_dimension(g)
    if kdim == 0:
        with pytest.raises(GraphCodeError):
            build_code(g, k=1)
        return
    code = build_code(g)
    code.check_invariants()
    ks = generators(g).generators
    # every stabilizer and logical X lies in the graph-state group, sign included
    assert all(in_group(p, ks) for p in code.stabilizers + code.logical_x)
    stab_x = list(code.stabilizers) + list(code.logical_x)
    assert rank(symplectic_matrix(stab_x, g.n)) == g.n
    assert same_group(stab_x, ks)
    assert independent_set(stab_x)


def test_bundle_round_trip(r5_code, t4_code):
    for code in (r5_code, t4_code):
        back = GraphCode.from_json(code.to_json())
        assert back.stabilizers == code.stabilizers
        assert back.logical_x == code.logical_x
        assert back.b == code.b and back.graph == code.graph
        assert back.distance == code.distance


def test_bundle_rejects_bad_input():
    with pytest.raises(GraphCodeError, match="malformed"):
        GraphCode.from_json("{}")
    bad = build_code(ring(5), R5_B).to_json().replace('"11111"', '"11000"')
    with pytest.raises(GraphCodeError, match="orthogonal"):
        GraphCode.from_json(bad)


def test_build_code_arguments(r5):
    with pytest.raises(GraphCodeError, match="k=2"):
        build_code(r5, R5_B, k=2)
    assert build_code(r5).b == R5_B
    # k=0 leaves the graph-state generators untouched
    assert build_code(ring(6), k=0).stabilizers == generators(ring(6)).generators
