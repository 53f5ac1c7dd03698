"""Dense statevector reference used to cross-check the symbolic code.

Qubit 0 is the most significant bit of the basis index, matching the
left-to-right order of Pauli strings. Gates are applied as explicit 2x2
matrices, independent of the symplectic machinery in :mod:`graphqec.pauli`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .f2linalg import BinaryMatrix
from .graph import SimpleGraph, local_complement
from .graphcode import GraphCode, GraphCodeError, build_code, derive_b, kernel_dimension
from .graphstate import SQRT_MINUS_IX, SQRT_PLUS_IZ, LocalCliffordOp, lc_operator
from .pauli import PauliOperator

__all__ = [
    "StateVector",
    "EmptySectorError",
    "OracleSizeError",
    "MAX_QUBITS",
    "TOL",
    "PAULI_MATRICES",
    "GATE_MATRICES",
    "basis_state",
    "plus_state",
    "build_graph_state",
    "apply_single",
    "apply_cz",
    "apply_pauli",
    "apply_local_clifford",
    "pauli_matrix",
    "fidelity",
    "overlap",
    "eigen_deviation",
    "project_logical",
    "encode_teleport",
    "unproject",
    "transport_target_code",
    "lc_transport",
    "direct_lc",
]

MAX_QUBITS = 14
TOL = 1e-10

_S = 1 / np.sqrt(2)
PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
H = np.array([[1, 1], [1, -1]], dtype=complex) * _S
# exp(+-i pi/4 sigma) = cos(pi/4) I +- i sin(pi/4) sigma
GATE_MATRICES = {
    SQRT_MINUS_IX: _S * (PAULI_MATRICES["I"] - 1j * PAULI_MATRICES["X"]),
    SQRT_PLUS_IZ: _S * (PAULI_MATRICES["I"] + 1j * PAULI_MATRICES["Z"]),
}


class OracleSizeError(ValueError):
    pass


class EmptySectorError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class StateVector:
    n: int
    amplitudes: np.ndarray = field(repr=False)
    normalized: bool = True

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amp.shape[0] != 2**self.n:
            raise ValueError(f"expected {2 ** self.n} amplitudes, got {amp.shape[0]}")
        if self.normalized and abs(np.linalg.norm(amp) - 1) > TOL:
            raise ValueError("state is flagged normalized but has norm != 1")
        object.__setattr__(self, "amplitudes", amp)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalize(self) -> StateVector:
        nrm = self.norm
        if nrm < TOL:
            raise EmptySectorError("cannot normalize the zero vector")
        return StateVector(self.n, self.amplitudes / nrm, True)

    def tensor(self, other: StateVector) -> StateVector:
        return StateVector(
            self.n + other.n, np.kron(self.amplitudes, other.amplitudes), self.normalized and other.normalized
        )

    def __add__(self, other: StateVector) -> StateVector:
        if self.n != other.n:
            raise ValueError("qubit count mismatch")
        return StateVector(self.n, self.amplitudes + other.amplitudes, False)


def _check_size(n: int) -> None:
    if n > MAX_QUBITS:
        raise OracleSizeError(f"dense oracle supports at most {MAX_QUBITS} qubits, got {n}")


def basis_state(bits: Sequence[int]) -> StateVector:
    n = len(bits)
    _check_size(n)
    amp = np.zeros(2**n, dtype=complex)
    idx = 0
    for b in bits:
        idx = (idx << 1) | int(b)
    amp[idx] = 1
    return StateVector(n, amp)


def plus_state(n: int) -> StateVector:
    _check_size(n)
    return StateVector(n, np.full(2**n, 2 ** (-n / 2), dtype=complex))


def apply_single(s: StateVector, matrix: np.ndarray, qubit: int) -> StateVector:
    if not 0 <= qubit < s.n:
        raise IndexError(f"qubit {qubit} out of range for {s.n} qubits")
    t = s.amplitudes.reshape((2,) * s.n)
    t = np.moveaxis(np.tensordot(matrix, t, axes=([1], [qubit])), 0, qubit)
    return StateVector(s.n, t.reshape(-1), s.normalized)


def apply_cz(s: StateVector, a: int, b: int) -> StateVector:
    if a == b:
        raise ValueError("CZ needs two distinct qubits")
    t = s.amplitudes.reshape((2,) * s.n).copy()
    idx = [slice(None)] * s.n
    idx[a] = 1
    idx[b] = 1
    t[tuple(idx)] *= -1
    return StateVector(s.n, t.reshape(-1), s.normalized)


def build_graph_state(g: SimpleGraph) -> StateVector:
    """CZ on every edge applied to ``|+>^n``."""
    _check_size(g.n)
    s = plus_state(g.n)
    for u, v in g.edges():
        s = apply_cz(s, u, v)
    return s


def apply_pauli(s: StateVector, p: PauliOperator, offset: int = 0) -> StateVector:
    """Apply ``p`` to qubits ``offset .. offset + p.n - 1`` including its phase."""
    if p.n + offset > s.n:
        raise ValueError(f"{p.n}-qubit operator does not fit a {s.n}-qubit state at offset {offset}")
    if offset == 0 and p.n != s.n:
        raise ValueError(f"size mismatch: operator on {p.n} qubits, state on {s.n}")
    out = s
    for q, ch in enumerate(p.letters()):
        if ch != "I":
            out = apply_single(out, PAULI_MATRICES[ch], q + offset)
    coeff = 1j**p.letter_phase
    return StateVector(s.n, out.amplitudes * coeff, s.normalized)


def pauli_matrix(p: PauliOperator) -> np.ndarray:
    """Full ``2**n x 2**n`` matrix; only sensible for small ``n``."""
    m = np.array([[1]], dtype=complex)
    for ch in p.letters():
        m = np.kron(m, PAULI_MATRICES[ch])
    return (1j**p.letter_phase) * m


def apply_local_clifford(s: StateVector, op: LocalCliffordOp) -> StateVector:
    out = s
    for q, tag in op.factors:
        if q >= s.n:
            raise ValueError(f"gate on qubit {q} outside a {s.n}-qubit state")
        out = apply_single(out, GATE_MATRICES[tag], q)
    return out


def overlap(a: StateVector, b: StateVector) -> float:
    """``|<a|b>|``."""
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)))


def fidelity(a: StateVector, b: StateVector) -> float:
    """``|<a|b>|**2`` between normalized states; global phase is ignored."""
    if a.n != b.n:
        raise ValueError("qubit count mismatch")
    return overlap(a, b) ** 2


def eigen_deviation(s: StateVector, p: PauliOperator, eigenvalue: int = 1) -> float:
    """``|| p|s> - eigenvalue |s> ||``; zero iff ``s`` is an eigenvector."""
    return float(np.linalg.norm(apply_pauli(s, p).amplitudes - eigenvalue * s.amplitudes))


def project_logical(
    s: StateVector, logical_z: Sequence[PauliOperator], outcomes: Sequence[int], normalize: bool = True
) -> StateVector:
    """Apply ``prod_i (I + (-1)**c_i Zbar_i) / 2``.

    With ``normalize=False`` the raw projection is returned and flagged
    unnormalized; otherwise a vanishing projection raises
    :class:`EmptySectorError`.
    """
    if len(outcomes) != len(logical_z):
        raise ValueError(f"{len(outcomes)} outcomes for {len(logical_z)} logical operators")
    amp = s.amplitudes
    for z, c in zip(logical_z, outcomes):
        sign = -1 if c else 1
        amp = (amp + sign * apply_pauli(StateVector(s.n, amp, False), z).amplitudes) / 2
    out = StateVector(s.n, amp, False)
    if not normalize:
        return out
    if out.norm < TOL:
        raise EmptySectorError(f"empty sector: projection onto outcomes {tuple(outcomes)} vanishes")
    return out.normalize()


def _resolve_policy(policy: str, seed: int | None) -> np.random.Generator | None:
    if policy == "force-zero":
        return None
    if policy == "random":
        return np.random.default_rng(seed)
    raise ValueError(f"unknown outcome policy {policy!r}")


def _measure_leading(
    s: StateVector, k: int, rng: np.random.Generator | None
) -> tuple[tuple[int, ...], StateVector]:
    """Measure the first ``k`` qubits; returns outcome bits and the normalized rest.

    All outcomes are expected to be equally likely; this is checked because
    the ``force-zero`` policy relies on it.
    """
    n = s.n - k
    branches = s.amplitudes.reshape(2**k, 2**n)
    probs = np.sum(np.abs(branches) ** 2, axis=1)
    if not np.allclose(probs, 2.0**-k, atol=1e-9):
        raise AssertionError(f"ancilla outcomes are not uniform: {probs}")
    m = 0 if rng is None else int(rng.choice(2**k, p=probs / probs.sum()))
    bits = tuple((m >> (k - 1 - i)) & 1 for i in range(k))
    return bits, StateVector(n, branches[m] / np.sqrt(probs[m]))


def encode_teleport(
    g: SimpleGraph,
    b: BinaryMatrix,
    info_bits: Sequence[int],
    policy: str = "force-zero",
    seed: int | None = None,
    code: GraphCode | None = None,
) -> tuple[StateVector, tuple[int, ...]]:
    """Encode ``|c>`` into the graph code by ancilla-mediated CZs.

    Simulates ``|c> (x) |G>``, Hadamards on the ancillas, a CZ for every 1 in
    ``B``, Hadamards again, then measures the ancillas and corrects with the
    logical X operators selected by the outcome.
    """
    k, n = b.rows, g.n
    if len(info_bits) != k:
        raise ValueError(f"{len(info_bits)} info bits for k={k}")
    _check_size(k + n)
    code = code or build_code(g, b)
    rng = _resolve_policy(policy, seed)

    s = basis_state(info_bits).tensor(build_graph_state(g))
    for i in range(k):
        s = apply_single(s, H, i)
    for i in range(k):
        for j in range(n):
            if b[i, j]:
                s = apply_cz(s, i, k + j)
    for i in range(k):
        s = apply_single(s, H, i)

    measured, out = _measure_leading(s, k, rng)
    for xbar, m in zip(code.logical_x, measured):
        if m:
            out = apply_pauli(out, xbar)
    return out, measured


def unproject(
    codeword: StateVector, code: GraphCode, policy: str = "force-zero", seed: int | None = None
) -> tuple[StateVector, tuple[int, ...]]:
    """Recover the graph state from a logical basis state.

    Prepares ``|+>^k`` ancillas, applies ``Xbar_i`` controlled on ancilla
    ``i``, Hadamards the ancillas, measures them and undoes the outcome with
    ``Zbar``.
    """
    k, n = code.k, code.n
    _check_size(k + n)
    rng = _resolve_policy(policy, seed)
    branches = np.tile(codeword.amplitudes, (2**k, 1)) * 2 ** (-k / 2)
    for a in range(2**k):
        psi = StateVector(n, branches[a], False)
        for i, xbar in enumerate(code.logical_x):
            if (a >> (k - 1 - i)) & 1:
                psi = apply_pauli(psi, xbar)
        branches[a] = psi.amplitudes
    s = StateVector(k + n, branches.reshape(-1))
    for i in range(k):
        s = apply_single(s, H, i)
    measured, out = _measure_leading(s, k, rng)
    for zbar, m in zip(code.logical_z, measured):
        if m:
            out = apply_pauli(out, zbar)
    return out, measured


def transport_target_code(code1: GraphCode, v: int) -> GraphCode:
    """Code on the locally complemented graph with the echelon kernel basis as B."""
    g2 = local_complement(code1.graph, v)
    if kernel_dimension(g2) < code1.k:
        raise GraphCodeError(
            f"no valid B for the complemented graph at k={code1.k}: kernel dimension {kernel_dimension(g2)}"
        )
    return build_code(g2, derive_b(g2, code1.k))


def lc_transport(
    code1: GraphCode,
    v: int,
    info_bits: Sequence[int],
    policy: str = "force-zero",
    seed: int | None = None,
    code2: GraphCode | None = None,
) -> StateVector:
    """Move ``|c>_L`` of ``code1`` to ``|c>_L`` of the code on the complemented graph.

    The codeword is turned back into the graph state, the local Clifford for
    vertex ``v`` maps it to the new graph state, and that state is projected
    with the new code's logical Zs.
    """
    code2 = code2 or transport_target_code(code1, v)
    g1 = build_graph_state(code1.graph)
    codeword = project_logical(g1, code1.logical_z, info_bits)
    graph_state, _ = unproject(codeword, code1, policy, seed)
    g2_state = apply_local_clifford(graph_state, lc_operator(code1.graph, v))
    return project_logical(g2_state, code2.logical_z, info_bits)


def direct_lc(code1: GraphCode, v: int, info_bits: Sequence[int]) -> StateVector:
    """The naive alternative: apply the local Clifford straight to the codeword."""
    g1 = build_graph_state(code1.graph)
    codeword = project_logical(g1, code1.logical_z, info_bits)
    return apply_local_clifford(codeword, lc_operator(code1.graph, v))
