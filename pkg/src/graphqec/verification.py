"""Oracle-backed consistency checks for one graph, as run by ``graphqec verify``."""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass

import numpy as np

from . import oracle
from .graph import SimpleGraph, local_complement
from .graphcode import GraphCode, GraphCodeError, build_code, kernel_dimension
from .graphstate import conjugate_generators, generators, lc_operator
from .pauli import same_group

TOL = oracle.TOL


@dataclass
class Check:
    name: str
    passed: bool
    value: float
    metric: str = "deviation"

    def to_dict(self) -> dict:
        return asdict(self)


def _dev_check(name: str, dev: float) -> Check:
    return Check(name, bool(dev < TOL), float(dev), "deviation")


def _fid_check(name: str, fid: float) -> Check:
    return Check(name, bool(abs(fid - 1) < TOL), float(fid), "fidelity")


def graph_state_checks(g: SimpleGraph) -> list[Check]:
    state = oracle.build_graph_state(g)
    gens = generators(g).generators
    checks = [_dev_check("graph_state_stabilized", max((oracle.eigen_deviation(state, k) for k in gens), default=0.0))]
    for v in range(g.n):
        op = lc_operator(g, v)
        g2 = local_complement(g, v)
        target = oracle.build_graph_state(g2)
        checks.append(_fid_check(f"lc_fidelity[vertex {v + 1}]", oracle.fidelity(target, oracle.apply_local_clifford(state, op))))
        conj = conjugate_generators(generators(g), op)
        ok = same_group(conj, generators(g2).generators)
        dev = max((oracle.eigen_deviation(target, p) for p in conj), default=0.0)
        checks.append(Check(f"lc_conjugation[vertex {v + 1}]", bool(ok and dev < TOL), float(dev)))
    return checks


def code_checks(code: GraphCode, seeds: int = 3, seed: int = 0, transport: bool = True) -> list[Check]:
    g, k = code.graph, code.k
    checks = []
    try:
        code.check_invariants()
        checks.append(Check("code_invariants", True, 0.0))
    except AssertionError:
        checks.append(Check("code_invariants", False, 1.0))

    state = oracle.build_graph_state(g)
    total = np.zeros_like(state.amplitudes)
    worst_stab = worst_z = worst_enc = 0.0
    for c in itertools.product((0, 1), repeat=k):
        raw = oracle.project_logical(state, code.logical_z, c, normalize=False)
        total = total + raw.amplitudes
        word = raw.normalize()
        for s in code.stabilizers:
            worst_stab = max(worst_stab, oracle.eigen_deviation(word, s))
        for zi, ci in zip(code.logical_z, c):
            worst_z = max(worst_z, oracle.eigen_deviation(word, zi, -1 if ci else 1))
        runs = [("force-zero", None)] + [("random", r) for r in range(seed, seed + seeds)]
        for policy, rseed in runs:
            enc, _ = oracle.encode_teleport(g, code.b, c, policy, rseed, code=code)
            worst_enc = max(worst_enc, 1 - oracle.fidelity(enc, word))
    checks.append(_dev_check("stabilizers_fix_codewords", worst_stab))
    checks.append(_dev_check("logical_z_eigenvalues", worst_z))
    checks.append(_dev_check("superposition_identity", float(np.linalg.norm(total - state.amplitudes))))
    checks.append(Check("encode_teleport", worst_enc < TOL, 1 - worst_enc, "fidelity"))

    if transport:
        for v in range(g.n):
            try:
                code2 = oracle.transport_target_code(code, v)
            except GraphCodeError:
                continue
            worst = 0.0
            for c in itertools.product((0, 1), repeat=k):
                out = oracle.lc_transport(code, v, c, "random", seed + v, code2=code2)
                for s in code2.stabilizers:
                    worst = max(worst, oracle.eigen_deviation(out, s))
                for zi, ci in zip(code2.logical_z, c):
                    worst = max(worst, oracle.eigen_deviation(out, zi, -1 if ci else 1))
            checks.append(_dev_check(f"lc_transport[vertex {v + 1}]", worst))
    return checks


def run_checks(g: SimpleGraph, k: int | None = None, depth: int = 3, seed: int = 0) -> list[Check]:
    """All oracle checks for ``g``; ``depth`` is the number of random measurement seeds.

    ``k`` defaults to the adjacency kernel dimension; ``k=0`` runs the
    graph-state checks only.
    """
    if g.n > oracle.MAX_QUBITS:
        raise oracle.OracleSizeError(f"dense oracle supports at most {oracle.MAX_QUBITS} qubits, got {g.n}")
    if k is None:
        k = kernel_dimension(g)
    if g.n + k > oracle.MAX_QUBITS:
        raise oracle.OracleSizeError(f"n + k = {g.n + k} exceeds the oracle bound {oracle.MAX_QUBITS}")
    checks = graph_state_checks(g)
    if k > 0:
        checks.extend(code_checks(build_code(g, k=k), seeds=depth, seed=seed))
    return checks
