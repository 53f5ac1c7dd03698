"""Simple graphs, local complementation and graph file formats.

Vertices are 0-based internally. Edge lists are read and written with
1-based labels by default, the usual convention when graphs are drawn by
hand; pass ``one_based=False`` for 0-based files.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .f2linalg import BinaryMatrix, MatrixFormatError, mat_mul, parse_matrix, rank

__all__ = [
    "SimpleGraph",
    "ExtendedGraph",
    "GraphParseError",
    "neighborhood",
    "local_complement",
    "parse_graph",
    "format_graph",
    "to_graph6",
    "from_graph6",
    "ring",
    "star",
    "complete",
    "path",
    "random_graph",
    "FORMATS",
]

FORMATS = ("edgelist", "adj", "graph6")
MAX_VERTICES = 64


class GraphParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph without self-loops or multi-edges."""

    adj: BinaryMatrix

    def __post_init__(self):
        a = self.adj
        if a.rows != a.cols:
            raise ValueError("adjacency matrix must be square")
        if a.rows > MAX_VERTICES:
            raise ValueError(f"graphs with more than {MAX_VERTICES} vertices are unsupported")
        for i, r in enumerate(a.data):
            if (r >> i) & 1:
                raise ValueError(f"self-loop at vertex {i}")
        if not a.is_symmetric():
            raise ValueError("adjacency matrix is not symmetric")

    @classmethod
    def empty(cls, n: int) -> SimpleGraph:
        return cls(BinaryMatrix.zeros(n, n))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(BinaryMatrix(n, n, tuple(rows)))

    @property
    def n(self) -> int:
        return self.adj.rows

    def neighbors(self, v: int) -> set[int]:
        return neighborhood(self, v)

    def neighbor_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj.data[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if (self.adj.data[i] >> j) & 1]

    def degree(self, v: int) -> int:
        return bin(self.neighbor_mask(v)).count("1")

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in range(self.n):
                if (frontier >> v) & 1:
                    nxt |= self.adj.data[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def local_complement(self, v: int) -> SimpleGraph:
        return local_complement(self, v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for a graph on {self.n} vertices")

    def __str__(self) -> str:
        return to_graph6(self)


def neighborhood(g: SimpleGraph, v: int) -> set[int]:
    mask = g.neighbor_mask(v)
    return {u for u in range(g.n) if (mask >> u) & 1}


def local_complement(g: SimpleGraph, v: int) -> SimpleGraph:
    """Complement the subgraph induced on the neighbourhood of ``v``.

    Computed as ``adj + c c^T + diag`` with ``c`` the column of ``v``; the
    diagonal correction clears the self-loops the outer product introduces.
    """
    col = g.neighbor_mask(v)
    rows = []
    for i, r in enumerate(g.adj.data):
        if (col >> i) & 1:
            r ^= col
            r &= ~(1 << i)
        rows.append(r)
    return SimpleGraph(BinaryMatrix(g.n, g.n, tuple(rows)))


@dataclass(frozen=True)
class ExtendedGraph:
    """Graph on ``k`` input plus ``n`` output vertices.

    Only the ``k x n`` input/output block ``b`` and the output graph are
    stored; ``b @ adj(inner)`` must vanish and ``b`` must have full row rank.
    """

    inner: SimpleGraph
    b: BinaryMatrix

    def __post_init__(self):
        if self.b.cols != self.inner.n:
            raise ValueError(f"B has {self.b.cols} columns, graph has {self.inner.n} vertices")
        if not mat_mul(self.b, self.inner.adj).is_zero():
            raise ValueError("B is not orthogonal to the adjacency matrix (B * Gamma != 0)")
        if rank(self.b) != self.b.rows:
            raise ValueError("rows of B are not linearly independent")

    @property
    def k(self) -> int:
        return self.b.rows

    @property
    def n(self) -> int:
        return self.inner.n

    def adjacency(self) -> BinaryMatrix:
        """Full ``(k+n) x (k+n)`` adjacency, input vertices first."""
        top = BinaryMatrix.zeros(self.k, self.k).hstack(self.b)
        bottom = self.b.transpose().hstack(self.inner.adj)
        return top.stack(bottom)

    def as_graph(self) -> SimpleGraph:
        return SimpleGraph(self.adjacency())


# -- graph6 ------------------------------------------------------------------


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: SimpleGraph) -> str:
    """Encode without the optional ``>>graph6<<`` header."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append((g.adj.data[i] >> j) & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(63 + int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6))
    return (_encode_n(g.n) + body).decode("ascii")


def from_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    data = s.encode("ascii")
    for pos, c in enumerate(data, start=1):
        if not 63 <= c <= 126:
            raise GraphParseError(f"invalid graph6 byte {chr(c)!r}", 1, pos)
    if not data:
        raise GraphParseError("empty graph6 string", 1, 1)
    if data[0] != 126:
        n, off = data[0] - 63, 1
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise GraphParseError("truncated graph6 size field", 1, 1)
        n, off = 0, 8
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
    else:
        if len(data) < 4:
            raise GraphParseError("truncated graph6 size field", 1, 1)
        n, off = 0, 4
        for c in data[1:4]:
            n = (n << 6) | (c - 63)
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(data) - off != expected:
        raise GraphParseError(
            f"graph6 body has {len(data) - off} bytes, expected {expected} for n={n}", 1, off + 1
        )
    rows = [0] * n
    k = 0
    body = data[off:]
    for j in range(1, n):
        for i in range(j):
            if ((body[k // 6] - 63) >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise GraphParseError("nonzero padding bits in graph6 string", 1, len(data))
    return SimpleGraph(BinaryMatrix(n, n, tuple(rows)))


# -- text formats ------------------------------------------------------------


def _parse_edgelist(text: str, one_based: bool) -> SimpleGraph:
    base = 1 if one_based else 0
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if content.strip():
            lines.append((lineno, content))
    if not lines:
        raise GraphParseError("empty edge list")
    lineno, head = lines[0]
    tokens = head.split()
    if len(tokens) != 1 or not tokens[0].isdigit():
        raise GraphParseError("first line must be the vertex count", lineno, 1)
    n = int(tokens[0])
    if n > MAX_VERTICES:
        raise GraphParseError(f"graphs with more than {MAX_VERTICES} vertices are unsupported", lineno, 1)
    rows = [0] * n
    for lineno, content in lines[1:]:
        tokens = content.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got {content.strip()!r}", lineno, 1)
        labels = []
        for t in tokens:
            col = content.index(t) + 1
            try:
                label = int(t)
            except ValueError:
                raise GraphParseError(f"vertex label {t!r} is not an integer", lineno, col) from None
            if not base <= label < n + base:
                raise GraphParseError(f"vertex {label} out of range {base}..{n + base - 1}", lineno, col)
            labels.append(label - base)
        u, v = labels
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u + base}", lineno, 1)
        if (rows[u] >> v) & 1:
            raise GraphParseError(f"duplicate edge {u + base} {v + base}", lineno, 1)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return SimpleGraph(BinaryMatrix(n, n, tuple(rows)))


def _parse_adjacency(text: str) -> SimpleGraph:
    try:
        m = parse_matrix(text)
    except MatrixFormatError as exc:
        raise GraphParseError(str(exc).split(": ", 1)[-1], exc.line, exc.column) from None
    if m.rows != m.cols:
        raise GraphParseError(f"adjacency matrix is {m.rows}x{m.cols}, not square")
    if m.rows > MAX_VERTICES:
        raise GraphParseError(f"graphs with more than {MAX_VERTICES} vertices are unsupported")
    for i in range(m.rows):
        if m[i, i]:
            raise GraphParseError(f"self-loop at vertex {i + 1}")
        for j in range(i + 1, m.cols):
            if m[i, j] != m[j, i]:
                raise GraphParseError(f"asymmetric entries ({i + 1},{j + 1}) and ({j + 1},{i + 1})")
    return SimpleGraph(m)


def parse_graph(text: str, fmt: str = "edgelist", one_based: bool = True) -> SimpleGraph:
    """Read a graph in one of ``FORMATS``.

    Malformed input, self-loops, duplicate edges and asymmetric adjacency
    matrices raise :class:`GraphParseError` with a line (and column when known).
    """
    if fmt == "edgelist":
        return _parse_edgelist(text, one_based)
    if fmt == "adj":
        return _parse_adjacency(text)
    if fmt == "graph6":
        lines = [l for l in text.splitlines() if l.strip()]
        if len(lines) != 1:
            raise GraphParseError(f"expected one graph6 line, found {len(lines)}")
        return from_graph6(lines[0])
    raise ValueError(f"unknown graph format {fmt!r}; choose from {FORMATS}")


def format_graph(g: SimpleGraph, fmt: str = "edgelist", one_based: bool = True) -> str:
    if fmt == "edgelist":
        base = 1 if one_based else 0
        lines = [str(g.n)] + [f"{u + base} {v + base}" for u, v in g.edges()]
        return "\n".join(lines) + "\n"
    if fmt == "adj":
        return str(g.adj)
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    raise ValueError(f"unknown graph format {fmt!r}; choose from {FORMATS}")


# -- named graphs ------------------------------------------------------------


def ring(n: int) -> SimpleGraph:
    """Cycle 0-1-...-(n-1)-0."""
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> SimpleGraph:
    """Star with centre 0 and ``n - 1`` leaves."""
    return SimpleGraph.from_edges(n, [(0, i) for i in range(1, n)])


def path(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_graph(n: int, p: float = 0.5, rng: random.Random | None = None, connected: bool = False) -> SimpleGraph:
    rng = rng or random.Random()
    while True:
        g = SimpleGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        if not connected or g.is_connected():
            return g
