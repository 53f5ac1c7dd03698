"""Dense linear algebra over GF(2).

Rows are packed into Python integers: bit ``j`` of a row integer is the entry
in column ``j``. Python ints are arbitrary precision, so the packing works for
any column count, and row operations reduce to a single XOR.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "BinaryVector",
    "BinaryMatrix",
    "MatrixFormatError",
    "rank",
    "rref",
    "nullspace",
    "mat_mul",
    "solve",
    "reduce_against",
    "parse_matrix",
    "format_matrix",
]


class MatrixFormatError(ValueError):
    """Raised when matrix text cannot be parsed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


def _popcount(v: int) -> int:
    return bin(v).count("1")


def _bits_to_int(bits: Iterable[int]) -> int:
    out = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"entry {b!r} is not a GF(2) value")
        if b:
            out |= 1 << j
    return out


def _int_to_str(v: int, n: int) -> str:
    return "".join("1" if (v >> j) & 1 else "0" for j in range(n))


def _str_to_int(s: str) -> int:
    out = 0
    for j, ch in enumerate(s):
        if ch == "1":
            out |= 1 << j
        elif ch != "0":
            raise ValueError(f"invalid bit character {ch!r}")
    return out


@dataclass(frozen=True)
class BinaryVector:
    """Fixed-length vector over GF(2), packed into ``bits``."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("length must be non-negative")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError("bits exceed vector length")

    @classmethod
    def from_list(cls, values: Sequence[int]) -> BinaryVector:
        return cls(len(values), _bits_to_int(values))

    @classmethod
    def from_str(cls, s: str) -> BinaryVector:
        s = "".join(s.split())
        return cls(len(s), _str_to_int(s))

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return (self[j] for j in range(self.n))

    def __add__(self, other: BinaryVector) -> BinaryVector:
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BinaryVector(self.n, self.bits ^ other.bits)

    def dot(self, other: BinaryVector) -> int:
        if self.n != other.n:
            raise ValueError("length mismatch")
        return _popcount(self.bits & other.bits) & 1

    def weight(self) -> int:
        return _popcount(self.bits)

    def support(self) -> list[int]:
        return [j for j in range(self.n) if (self.bits >> j) & 1]

    def __str__(self) -> str:
        return _int_to_str(self.bits, self.n)


@dataclass(frozen=True)
class BinaryMatrix:
    """Immutable dense matrix over GF(2) with bit-packed rows.

    ``data[i]`` holds row ``i``; bit ``j`` of that integer is entry ``(i, j)``.
    """

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("dimensions must be non-negative")
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        for r in self.data:
            if r < 0 or r >> self.cols:
                raise ValueError("row has entries beyond the column count")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BinaryMatrix:
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> BinaryMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str], cols: int | None = None) -> BinaryMatrix:
        """Build from nested 0/1 sequences or bit-strings like ``"0110"``."""
        packed = []
        widths = set()
        for r in rows:
            if isinstance(r, str):
                r = "".join(r.split())
                widths.add(len(r))
                packed.append(_str_to_int(r))
            else:
                widths.add(len(r))
                packed.append(_bits_to_int(r))
        if cols is None:
            if len(widths) > 1:
                raise ValueError("rows have inconsistent lengths")
            cols = widths.pop() if widths else 0
        elif widths and widths != {cols}:
            raise ValueError("rows have inconsistent lengths")
        return cls(len(packed), cols, tuple(packed))

    @classmethod
    def from_array(cls, arr) -> BinaryMatrix:
        a = np.asarray(arr)
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        a = a.astype(np.int64) % 2
        return cls.from_rows(a.tolist(), cols=a.shape[1])

    @classmethod
    def from_vectors(cls, vectors: Sequence[BinaryVector], cols: int | None = None) -> BinaryMatrix:
        if cols is None:
            if not vectors:
                raise ValueError("column count needed for an empty vector list")
            cols = vectors[0].n
        if any(v.n != cols for v in vectors):
            raise ValueError("vector length mismatch")
        return cls(len(vectors), cols, tuple(v.bits for v in vectors))

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> BinaryVector:
        return BinaryVector(self.cols, self.data[i])

    def column(self, j: int) -> BinaryVector:
        if not 0 <= j < self.cols:
            raise IndexError(j)
        return BinaryVector(self.rows, _bits_to_int((r >> j) & 1 for r in self.data))

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i, r in enumerate(self.data):
            for j in range(self.cols):
                out[i, j] = (r >> j) & 1
        return out

    def to_strings(self) -> list[str]:
        return [_int_to_str(r, self.cols) for r in self.data]

    def transpose(self) -> BinaryMatrix:
        cols = [0] * self.cols
        for i, r in enumerate(self.data):
            j = 0
            while r:
                if r & 1:
                    cols[j] |= 1 << i
                r >>= 1
                j += 1
        return BinaryMatrix(self.cols, self.rows, tuple(cols))

    @property
    def T(self) -> BinaryMatrix:
        return self.transpose()

    def __add__(self, other: BinaryMatrix) -> BinaryMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return BinaryMatrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))

    def __matmul__(self, other: BinaryMatrix) -> BinaryMatrix:
        return mat_mul(self, other)

    def is_zero(self) -> bool:
        return not any(self.data)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def stack(self, other: BinaryMatrix) -> BinaryMatrix:
        """Vertical concatenation."""
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return BinaryMatrix(self.rows + other.rows, self.cols, self.data + other.data)

    def hstack(self, other: BinaryMatrix) -> BinaryMatrix:
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        shift = self.cols
        return BinaryMatrix(
            self.rows, self.cols + other.cols, tuple(a | (b << shift) for a, b in zip(self.data, other.data))
        )

    def __str__(self) -> str:
        return format_matrix(self)


def rref(m: BinaryMatrix) -> tuple[BinaryMatrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are chosen left to right, so the result is unique for a given
    row space. Zero rows are dropped from the returned matrix.
    """
    rows = list(m.data)
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        bit = 1 << c
        sel = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        p = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= p
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return BinaryMatrix(r, m.cols, tuple(rows[:r])), pivots


def rank(m: BinaryMatrix) -> int:
    """GF(2) rank."""
    rows = [r for r in m.data if r]
    rk = 0
    while rows:
        p = rows.pop()
        low = p & -p
        rows = [r ^ p if r & low else r for r in rows]
        rows = [r for r in rows if r]
        rk += 1
    return rk


def nullspace(m: BinaryMatrix) -> BinaryMatrix:
    """Basis of ``{v : m v = 0}`` as the rows of a matrix in reduced echelon form."""
    red, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = 1 << f
        for row, p in zip(red.data, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(v)
    out, _ = rref(BinaryMatrix(len(basis), m.cols, tuple(basis)))
    return out


def mat_mul(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    """GF(2) product ``a @ b``."""
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for r in a.data:
        acc = 0
        j = 0
        while r:
            if r & 1:
                acc ^= b.data[j]
            r >>= 1
            j += 1
        out.append(acc)
    return BinaryMatrix(a.rows, b.cols, tuple(out))


def solve(m: BinaryMatrix, rhs: BinaryVector) -> BinaryVector | None:
    """One solution ``x`` of ``m x = rhs`` (free variables set to 0), or None."""
    if rhs.n != m.rows:
        raise ValueError("right-hand side length must equal the row count")
    # Augment with the rhs as an extra column and reduce.
    aug = BinaryMatrix(
        m.rows, m.cols + 1, tuple(r | (((rhs.bits >> i) & 1) << m.cols) for i, r in enumerate(m.data))
    )
    red, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = 0
    for row, p in zip(red.data, pivots):
        if (row >> m.cols) & 1:
            x |= 1 << p
    return BinaryVector(m.cols, x)


def reduce_against(v: int, basis: dict[int, int]) -> int:
    """Reduce ``v`` by an echelon basis given as ``{pivot_bit: row}``."""
    for bit, row in basis.items():
        if v & bit:
            v ^= row
    return v


def parse_matrix(text: str, header: bool | None = None) -> BinaryMatrix:
    """Parse the plain-text matrix format.

    The canonical form is a ``rows cols`` header line followed by one line of
    0/1 characters per row; whitespace between entries is ignored. With
    ``header=None`` the header is detected: a first line of exactly two
    integer tokens whose product is consistent with the remaining lines.
    Blank lines and ``#`` comments are skipped.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((lineno, content))
    if not lines:
        raise MatrixFormatError("empty matrix text")

    shape = None
    first_no, first = lines[0]
    tokens = first.split()
    looks_like_header = len(tokens) == 2 and all(t.isdigit() for t in tokens)
    if looks_like_header and header is None:
        r, c = int(tokens[0]), int(tokens[1])
        # A two-token first line is a header only if the rest agrees with it.
        body = lines[1:]
        header = len(body) == r and all(len("".join(b.split())) == c for _, b in body)
    if header:
        if not looks_like_header:
            raise MatrixFormatError("expected header 'rows cols'", first_no, 1)
        shape = (int(tokens[0]), int(tokens[1]))
        lines = lines[1:]

    data = []
    width = None
    for lineno, content in lines:
        packed = 0
        col = 0
        for pos, ch in enumerate(content, start=1):
            if ch.isspace():
                continue
            if ch not in "01":
                raise MatrixFormatError(f"invalid character {ch!r}", lineno, pos)
            if ch == "1":
                packed |= 1 << col
            col += 1
        if width is None:
            width = col
        elif col != width:
            raise MatrixFormatError(f"row has {col} entries, expected {width}", lineno, None)
        data.append(packed)

    cols = width or 0
    if shape is not None:
        if shape[0] != len(data):
            raise MatrixFormatError(f"header declares {shape[0]} rows, found {len(data)}", first_no, None)
        if data and shape[1] != cols:
            raise MatrixFormatError(f"header declares {shape[1]} columns, found {cols}", first_no, None)
        cols = shape[1]
    return BinaryMatrix(len(data), cols, tuple(data))


def format_matrix(m: BinaryMatrix, header: bool = True) -> str:
    lines = [f"{m.rows} {m.cols}"] if header else []
    lines.extend(m.to_strings())
    return "\n".join(lines) + "\n"
