"""n-qubit Pauli operators in binary symplectic form.

An operator is stored as ``i**phase * prod_j X_j**x_j Z_j**z_j`` with the X
factor to the left of the Z factor on every qubit. Under this ordering
``Y = i X Z``, so the letter ``Y`` carries one unit of phase.

``x`` and ``z`` are packed integers: bit ``j`` is qubit ``j`` (leftmost letter
of the string form).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .f2linalg import BinaryMatrix, BinaryVector, rank, solve

__all__ = [
    "PauliOperator",
    "PauliParseError",
    "from_string",
    "multiply",
    "commutes",
    "weight",
    "independent_set",
    "product",
    "decompose",
    "in_group",
    "same_group",
    "symplectic_matrix",
    "dumps_generators",
    "loads_generators",
]

_SIGNS = {"": 0, "+": 0, "i": 1, "+i": 1, "-": 2, "-i": 3}
_SIGN_TEXT = {0: "", 1: "i", 2: "-", 3: "-i"}


class PauliParseError(ValueError):
    pass


def _popcount(v: int) -> int:
    return bin(v).count("1")


@dataclass(frozen=True)
class PauliOperator:
    n: int
    x: int = 0
    z: int = 0
    phase: int = 0

    def __post_init__(self):
        if self.x >> self.n or self.z >> self.n or self.x < 0 or self.z < 0:
            raise ValueError("x/z bits exceed qubit count")
        if not 0 <= self.phase < 4:
            object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls(n)

    @classmethod
    def from_string(cls, s: str) -> PauliOperator:
        return from_string(s)

    @classmethod
    def from_symplectic(cls, x: BinaryVector, z: BinaryVector, phase: int = 0) -> PauliOperator:
        if x.n != z.n:
            raise ValueError("x and z lengths differ")
        return cls(x.n, x.bits, z.bits, phase)

    @property
    def x_vector(self) -> BinaryVector:
        return BinaryVector(self.n, self.x)

    @property
    def z_vector(self) -> BinaryVector:
        return BinaryVector(self.n, self.z)

    @property
    def symplectic(self) -> int:
        """``(x|z)`` packed as one integer of ``2n`` bits, x in the low half."""
        return self.x | (self.z << self.n)

    @property
    def letter_phase(self) -> int:
        """Exponent of ``i`` in front of the letter form, e.g. 2 for ``-XY``."""
        return (self.phase - _popcount(self.x & self.z)) % 4

    def is_hermitian(self) -> bool:
        return self.letter_phase % 2 == 0

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def letters(self) -> str:
        out = []
        for j in range(self.n):
            xb, zb = (self.x >> j) & 1, (self.z >> j) & 1
            out.append("IZXY"[xb * 2 + zb])
        return "".join(out)

    def __str__(self) -> str:
        return _SIGN_TEXT[self.letter_phase] + self.letters()

    def __repr__(self) -> str:
        return f"PauliOperator({str(self)!r})"

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        return multiply(self, other)

    def __neg__(self) -> PauliOperator:
        return PauliOperator(self.n, self.x, self.z, self.phase + 2)

    def commutes(self, other: PauliOperator) -> bool:
        return commutes(self, other)

    @property
    def weight(self) -> int:
        return weight(self)

    def support(self) -> list[int]:
        s = self.x | self.z
        return [j for j in range(self.n) if (s >> j) & 1]

    def unsigned(self) -> PauliOperator:
        """Same letters with a + sign."""
        return PauliOperator(self.n, self.x, self.z, _popcount(self.x & self.z))


def from_string(s: str) -> PauliOperator:
    """Parse strings like ``"XZIIZ"``, ``"-ZZ"`` or ``"iXY"``."""
    s = s.strip()
    i = 0
    while i < len(s) and s[i] in "+-i":
        i += 1
    sign, body = s[:i], s[i:]
    if sign not in _SIGNS:
        raise PauliParseError(f"invalid sign prefix {sign!r} in {s!r}")
    x = z = 0
    n_y = 0
    for j, ch in enumerate(body):
        if ch == "X":
            x |= 1 << j
        elif ch == "Z":
            z |= 1 << j
        elif ch == "Y":
            x |= 1 << j
            z |= 1 << j
            n_y += 1
        elif ch != "I":
            raise PauliParseError(f"invalid Pauli character {ch!r} at position {i + j} in {s!r}")
    return PauliOperator(len(body), x, z, (_SIGNS[sign] + n_y) % 4)


def _check_sizes(a: PauliOperator, b: PauliOperator) -> None:
    if a.n != b.n:
        raise ValueError(f"qubit count mismatch: {a.n} vs {b.n}")


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Exact product ``a * b``.

    Moving ``Z**z_a`` past ``X**x_b`` costs ``(-1)**(z_a . x_b)``.
    """
    _check_sizes(a, b)
    phase = a.phase + b.phase + 2 * _popcount(a.z & b.x)
    return PauliOperator(a.n, a.x ^ b.x, a.z ^ b.z, phase % 4)


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    _check_sizes(a, b)
    return _popcount((a.x & b.z) ^ (a.z & b.x)) % 2 == 0


def weight(a: PauliOperator) -> int:
    return _popcount(a.x | a.z)


def product(ops: Iterable[PauliOperator], n: int | None = None) -> PauliOperator:
    """Ordered product of ``ops``; identity on ``n`` qubits if empty."""
    out = None
    for op in ops:
        out = op if out is None else multiply(out, op)
    if out is None:
        if n is None:
            raise ValueError("qubit count needed for an empty product")
        return PauliOperator(n)
    return out


def symplectic_matrix(ops: Sequence[PauliOperator], n: int | None = None) -> BinaryMatrix:
    """Rows ``(x|z)`` of the operators, phases dropped."""
    if n is None:
        if not ops:
            raise ValueError("qubit count needed for an empty list")
        n = ops[0].n
    if any(op.n != n for op in ops):
        raise ValueError("qubit count mismatch")
    return BinaryMatrix(len(ops), 2 * n, tuple(op.symplectic for op in ops))


def independent_set(ops: Sequence[PauliOperator]) -> bool:
    """True iff the ``(x|z)`` rows are linearly independent over GF(2)."""
    if not ops:
        return True
    return rank(symplectic_matrix(ops)) == len(ops)


def decompose(target: PauliOperator, gens: Sequence[PauliOperator]) -> list[int] | None:
    """Indices of generators whose product matches ``target`` up to phase."""
    n = target.n
    if not gens:
        return [] if target.is_identity() else None
    cols = symplectic_matrix(gens, n).transpose()
    sol = solve(cols, BinaryVector(2 * n, target.symplectic))
    if sol is None:
        return None
    return sol.support()


def in_group(target: PauliOperator, gens: Sequence[PauliOperator]) -> bool:
    """Sign-exact membership in the group generated by commuting ``gens``."""
    idx = decompose(target, gens)
    if idx is None:
        return False
    p = product((gens[i] for i in idx), n=target.n)
    return p.phase == target.phase


def same_group(a: Sequence[PauliOperator], b: Sequence[PauliOperator]) -> bool:
    """Sign-exact equality of the groups generated by two commuting sets."""
    return all(in_group(p, b) for p in a) and all(in_group(p, a) for p in b)


def dumps_generators(ops: Sequence[PauliOperator]) -> str:
    return json.dumps([str(op) for op in ops])


def loads_generators(text: str) -> list[PauliOperator]:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(s, str) for s in data):
        raise PauliParseError("expected a JSON array of Pauli strings")
    return [from_string(s) for s in data]
