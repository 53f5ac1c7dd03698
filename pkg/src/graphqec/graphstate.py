"""Graph-state stabilizers and the local Clifford realising local complementation."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .graph import SimpleGraph, local_complement
from .pauli import PauliOperator, commutes

__all__ = [
    "GraphState",
    "LocalCliffordOp",
    "LCOrbit",
    "SQRT_MINUS_IX",
    "SQRT_PLUS_IZ",
    "CONJUGATION_TABLE",
    "generators",
    "lc_operator",
    "conjugate",
    "conjugate_generators",
    "lc_orbit",
]

SQRT_MINUS_IX = "sqrt_minus_iX"
SQRT_PLUS_IZ = "sqrt_plus_iZ"

# U P U^dagger for each non-identity single-qubit letter, as (sign, letter).
# Derived from the 2x2 matrices exp(-i pi/4 X) and exp(+i pi/4 Z).
CONJUGATION_TABLE: dict[str, dict[str, tuple[int, str]]] = {
    SQRT_MINUS_IX: {"X": (1, "X"), "Y": (1, "Z"), "Z": (-1, "Y")},
    SQRT_PLUS_IZ: {"X": (-1, "Y"), "Y": (1, "X"), "Z": (1, "Z")},
}

_DISPLAY = {SQRT_MINUS_IX: "sqrt(-iX)", SQRT_PLUS_IZ: "sqrt(iZ)"}


@dataclass(frozen=True)
class GraphState:
    graph: SimpleGraph
    generators: tuple[PauliOperator, ...]

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class LocalCliffordOp:
    """Product of single-qubit pi/4 rotations, one factor per listed qubit."""

    factors: tuple[tuple[int, str], ...] = ()

    def __post_init__(self):
        qubits = [q for q, _ in self.factors]
        if len(set(qubits)) != len(qubits):
            raise ValueError("each qubit may appear at most once")
        for _, tag in self.factors:
            if tag not in CONJUGATION_TABLE:
                raise ValueError(f"unknown gate tag {tag!r}")

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def describe(self, one_based: bool = True) -> str:
        base = 1 if one_based else 0
        return ", ".join(f"{_DISPLAY[tag]}@{q + base}" for q, tag in self.factors)


class LCOrbit(NamedTuple):
    graphs: tuple[SimpleGraph, ...]
    truncated: bool

    def __contains__(self, g) -> bool:
        return g in self.graphs

    def __len__(self) -> int:
        return len(self.graphs)


def generators(g: SimpleGraph) -> GraphState:
    """``K_j = X_j prod_{b in N_j} Z_b`` for every vertex ``j``."""
    gens = tuple(PauliOperator(g.n, 1 << j, g.adj.data[j], 0) for j in range(g.n))
    return GraphState(g, gens)


def lc_operator(g: SimpleGraph, v: int) -> LocalCliffordOp:
    """``sqrt(-iX)`` on ``v`` and ``sqrt(iZ)`` on each neighbour, ascending qubit order."""
    nb = g.neighbors(v)
    factors = [(v, SQRT_MINUS_IX)] + [(b, SQRT_PLUS_IZ) for b in nb]
    return LocalCliffordOp(tuple(sorted(factors)))


def conjugate(p: PauliOperator, op: LocalCliffordOp) -> PauliOperator:
    """``U p U^dagger`` evaluated letter by letter from the conjugation table."""
    letters = list(p.letters())
    letter_phase = p.letter_phase
    for q, tag in op.factors:
        if not 0 <= q < p.n:
            raise IndexError(f"gate on qubit {q} outside a {p.n}-qubit operator")
        ch = letters[q]
        if ch == "I":
            continue
        sign, new = CONJUGATION_TABLE[tag][ch]
        letters[q] = new
        if sign < 0:
            letter_phase += 2
    x = z = 0
    n_y = 0
    for j, ch in enumerate(letters):
        if ch in "XY":
            x |= 1 << j
        if ch in "ZY":
            z |= 1 << j
        n_y += ch == "Y"
    return PauliOperator(p.n, x, z, (letter_phase + n_y) % 4)


def conjugate_generators(state: GraphState, op: LocalCliffordOp) -> list[PauliOperator]:
    return [conjugate(k, op) for k in state.generators]


def lc_orbit(g: SimpleGraph, max_size: int = 1000) -> LCOrbit:
    """Breadth-first closure of ``g`` under local complementation.

    Graphs are compared as labelled graphs. Stops once ``max_size`` graphs
    are collected and reports ``truncated=True`` if more were reachable.
    """
    if max_size < 1:
        raise ValueError("max_size must be positive")
    seen = {g}
    order = [g]
    queue = deque([g])
    while queue:
        h = queue.popleft()
        for v in range(h.n):
            nxt = local_complement(h, v)
            if nxt in seen:
                continue
            if len(order) >= max_size:
                return LCOrbit(tuple(order), True)
            seen.add(nxt)
            order.append(nxt)
            queue.append(nxt)
    return LCOrbit(tuple(order), False)


def pairwise_commuting(ops: Sequence[PauliOperator]) -> bool:
    return all(commutes(a, b) for i, a in enumerate(ops) for b in ops[i + 1 :])
