"""Graph codes: B matrices, logical operators and stabilizer extraction.

A code is specified by an output graph ``G`` on ``n`` vertices and a ``k x n``
matrix ``B`` with ``B @ adj(G) = 0``. Row ``i`` of ``B`` is the Z-support of
the ``i``-th logical Z. The code stabilizers are obtained from the graph-state
generators by repeatedly splitting them into the part that commutes with the
next logical Z and the part that does not, and multiplying the latter by a
fixed pivot.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .f2linalg import BinaryMatrix, BinaryVector, mat_mul, nullspace, rank, rref, solve
from .graph import ExtendedGraph, SimpleGraph, from_graph6, to_graph6
from .graphstate import generators
from .pauli import PauliOperator, commutes, from_string, independent_set, multiply, product

__all__ = [
    "GraphCode",
    "GraphCodeError",
    "DegenerateLogicalError",
    "Syndrome",
    "kernel_dimension",
    "derive_b",
    "validate_b",
    "logical_z_ops",
    "extract_stabilizers",
    "extraction_stages",
    "logical_x_ops",
    "build_code",
    "syndrome",
    "distance",
    "MAX_DISTANCE_QUBITS",
]

MAX_DISTANCE_QUBITS = 14


class GraphCodeError(ValueError):
    """Domain error: infeasible parameters or an invalid B matrix."""


class DegenerateLogicalError(GraphCodeError):
    pass


@dataclass(frozen=True)
class Syndrome:
    bits: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ", ".join("+1" if b > 0 else "-1" for b in self.bits) + ")"

    def __iter__(self):
        return iter(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    @property
    def trivial(self) -> bool:
        return all(b > 0 for b in self.bits)


@dataclass(frozen=True)
class GraphCode:
    ext: ExtendedGraph
    logical_z: tuple[PauliOperator, ...]
    logical_x: tuple[PauliOperator, ...]
    stabilizers: tuple[PauliOperator, ...]

    @property
    def graph(self) -> SimpleGraph:
        return self.ext.inner

    @property
    def b(self) -> BinaryMatrix:
        return self.ext.b

    @property
    def n(self) -> int:
        return self.ext.n

    @property
    def k(self) -> int:
        return self.ext.k

    @cached_property
    def distance(self) -> int:
        return distance(self)

    def parameters(self, with_distance: bool = True) -> str:
        if with_distance:
            return f"[[{self.n},{self.k},{self.distance}]]"
        return f"[[{self.n},{self.k}]]"

    def check_invariants(self) -> None:
        """Raise AssertionError if any commutation or independence constraint fails."""
        stab, lz, lx = self.stabilizers, self.logical_z, self.logical_x
        assert len(stab) == self.n - self.k
        assert independent_set(list(stab) + list(lx))
        for i, z in enumerate(lz):
            assert z.x == 0 and z.z == self.b.data[i] and z.phase == 0
        for a, s in enumerate(stab):
            assert s.is_hermitian()
            for t in stab[a + 1 :]:
                assert commutes(s, t)
            for p in lz + lx:
                assert commutes(s, p)
        for i, xi in enumerate(lx):
            assert xi.is_hermitian()
            for j, zj in enumerate(lz):
                assert commutes(xi, zj) == (i != j)

    def to_json(self, include_distance: bool = True, **kwargs) -> str:
        data = {
            "n": self.n,
            "k": self.k,
            "graph": to_graph6(self.graph),
            "B": self.b.to_strings(),
            "stabilizers": [str(s) for s in self.stabilizers],
            "logical_z": [str(z) for z in self.logical_z],
            "logical_x": [str(x) for x in self.logical_x],
        }
        if include_distance and self.n <= MAX_DISTANCE_QUBITS:
            data["d"] = self.distance
            data["parameters"] = self.parameters()
        return json.dumps(data, **kwargs)

    @classmethod
    def from_json(cls, text: str) -> GraphCode:
        """Rebuild a code from its JSON bundle.

        The graph and B are revalidated; operator lists are taken verbatim so
        that a bundle carrying a different (equivalent) generator choice is
        preserved.
        """
        try:
            data = json.loads(text)
            g = from_graph6(data["graph"])
            b = BinaryMatrix.from_rows(data["B"], cols=g.n)
            stab = tuple(from_string(s) for s in data["stabilizers"])
            lz = tuple(from_string(s) for s in data["logical_z"])
            lx = tuple(from_string(s) for s in data["logical_x"])
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise GraphCodeError(f"malformed code bundle: {exc}") from None
        if data.get("n", g.n) != g.n or data.get("k", b.rows) != b.rows:
            raise GraphCodeError("bundle n/k disagree with graph and B")
        ext = _extended(g, b)
        if any(p.n != g.n for p in stab + lz + lx):
            raise GraphCodeError("operator length does not match n")
        code = cls(ext, lz, lx, stab)
        if "d" in data:
            code.__dict__["distance"] = int(data["d"])
        return code


def _extended(g: SimpleGraph, b: BinaryMatrix) -> ExtendedGraph:
    try:
        return ExtendedGraph(g, b)
    except ValueError as exc:
        raise GraphCodeError(str(exc)) from None


def kernel_dimension(g: SimpleGraph) -> int:
    return g.n - rank(g.adj)


def validate_b(b: BinaryMatrix, g: SimpleGraph) -> bool:
    """True iff ``b`` has ``g.n`` columns, full row rank and ``b @ adj(g) = 0``."""
    return b.cols == g.n and rank(b) == b.rows and mat_mul(b, g.adj).is_zero()


def derive_b(g: SimpleGraph, k: int) -> BinaryMatrix:
    """First ``k`` rows of the echelon kernel basis of the adjacency matrix.

    The adjacency matrix is symmetric, so its left and right kernels coincide.
    """
    basis = nullspace(g.adj)
    if k < 0:
        raise GraphCodeError("k must be non-negative")
    if k > basis.rows:
        raise GraphCodeError(
            f"k={k} is infeasible: the adjacency matrix has kernel dimension {basis.rows}, so at most k={basis.rows}"
        )
    return BinaryMatrix(k, g.n, basis.data[:k])


def logical_z_ops(b: BinaryMatrix) -> list[PauliOperator]:
    return [PauliOperator(b.cols, 0, row, 0) for row in b.data]


def _split_step(current: list[PauliOperator], zbar: PauliOperator) -> list[PauliOperator]:
    keep = [p for p in current if commutes(p, zbar)]
    anti = [p for p in current if not commutes(p, zbar)]
    if not anti:
        return current
    pivot, rest = anti[0], anti[1:]
    return keep + [multiply(pivot, a) for a in rest]


def extraction_stages(g: SimpleGraph, logical_z: Sequence[PauliOperator]) -> list[list[PauliOperator]]:
    """Generator lists after each logical Z is processed (stage 0 is the graph state)."""
    stages = [list(generators(g).generators)]
    for zbar in logical_z:
        if zbar.n != g.n:
            raise ValueError("logical operator size does not match the graph")
        stages.append(_split_step(stages[-1], zbar))
    return stages


def extract_stabilizers(g: SimpleGraph, logical_z: Sequence[PauliOperator]) -> list[PauliOperator]:
    """Stabilizer generators of the graph code with the given logical Zs.

    For each logical Z in turn, generators commuting with it are kept and the
    anticommuting ones are replaced by their products with the lowest-index
    anticommuting generator. Each step removes exactly one generator unless
    the logical Z commutes with all of them.
    """
    final = extraction_stages(g, logical_z)[-1]
    expected = g.n - len(logical_z)
    if len(final) != expected:
        raise DegenerateLogicalError(
            f"degenerate logical operator: extraction left {len(final)} generators, expected {expected}; "
            "some logical Z lies in the stabilizer span"
        )
    return final


def logical_x_ops(
    g: SimpleGraph, b: BinaryMatrix, stabilizers: Sequence[PauliOperator] = ()
) -> list[PauliOperator]:
    """Logical X operators chosen inside the graph-state stabilizer group.

    A product ``prod_j K_j**a_j`` has symplectic product ``(B a)_i`` with the
    ``i``-th logical Z, because ``K_j`` carries its only X on qubit ``j``.
    Solving ``B a = e_i`` therefore gives an operator that anticommutes with
    exactly one logical Z and, lying in an abelian group containing the code
    stabilizers, commutes with all of them. Such an operator fixes the graph
    state with eigenvalue +1.
    """
    ks = generators(g).generators
    out = []
    for i in range(b.rows):
        a = solve(b, BinaryVector(b.rows, 1 << i))
        if a is None:
            raise GraphCodeError(f"no logical X solution for row {i}; B is rank deficient")
        out.append(product((ks[j] for j in a.support()), n=g.n))
    for xi in out:
        if not all(commutes(xi, s) for s in stabilizers):
            raise AssertionError("logical X does not commute with the stabilizers")
    return out


def build_code(g: SimpleGraph, b: BinaryMatrix | None = None, k: int | None = None) -> GraphCode:
    """Assemble a :class:`GraphCode` from a graph and either ``b`` or ``k``."""
    if b is None:
        if k is None:
            k = kernel_dimension(g)
        b = derive_b(g, k)
    elif k is not None and k != b.rows:
        raise GraphCodeError(f"B has {b.rows} rows but k={k} was requested")
    ext = _extended(g, b)
    lz = logical_z_ops(b)
    stab = extract_stabilizers(g, lz)
    lx = logical_x_ops(g, b, stab)
    return GraphCode(ext, tuple(lz), tuple(lx), tuple(stab))


def syndrome(code: GraphCode, error: PauliOperator) -> Syndrome:
    if error.n != code.n:
        raise GraphCodeError(f"error acts on {error.n} qubits, code has n={code.n}")
    return Syndrome(tuple(1 if commutes(s, error) else -1 for s in code.stabilizers))


def _echelon_basis(vectors: Sequence[int], width: int) -> dict[int, int]:
    red, pivots = rref(BinaryMatrix(len(vectors), width, tuple(vectors)))
    return {1 << p: row for p, row in zip(pivots, red.data)}


def distance(code: GraphCode, max_qubits: int = MAX_DISTANCE_QUBITS) -> int:
    """Minimum weight of an operator that commutes with every stabilizer but is not one.

    Supports are enumerated in order of increasing weight and the search stops
    at the first hit. Stabilizer membership ignores sign.
    """
    n = code.n
    if n > max_qubits:
        raise GraphCodeError(f"brute-force distance supports n <= {max_qubits}, got n={n}")
    if code.k == 0:
        raise GraphCodeError("distance is undefined for k=0")
    stab = [(s.x, s.z) for s in code.stabilizers]
    basis = _echelon_basis([s.symplectic for s in code.stabilizers], 2 * n)

    def in_span(v: int) -> bool:
        for bit, row in basis.items():
            if v & bit:
                v ^= row
        return v == 0

    # per-qubit (x, z) choices for X, Y, Z
    letters = ((1, 0), (1, 1), (0, 1))
    for w in range(1, n + 1):
        for support in itertools.combinations(range(n), w):
            for choice in itertools.product(letters, repeat=w):
                x = z = 0
                for q, (xb, zb) in zip(support, choice):
                    x |= xb << q
                    z |= zb << q
                if any(bin((x & sz) ^ (z & sx)).count("1") & 1 for sx, sz in stab):
                    continue
                if not in_span(x | (z << n)):
                    return w
    raise AssertionError("no logical operator found; k must be 0")
