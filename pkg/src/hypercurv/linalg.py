"""Exact rational scalars, vectors and small dense matrices.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator, so equality of values is structural.
Vectors are plain tuples of fractions; matrices are immutable
:class:`Matrix` objects stored row-major.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "ShapeError",
    "Matrix",
    "to_rational",
    "format_rational",
    "parse_rational",
    "vector",
    "basis_vector",
    "dot",
    "add",
    "sub",
    "scale",
    "lin_comb",
    "mat_mul",
    "char_poly",
    "leading_principal_minors",
]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class ShapeError(ValueError):
    """Raised when operands have incompatible dimensions."""


def to_rational(value) -> Fraction:
    """Coerce ints, fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: they would smuggle rounding into exact tables.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(x: Fraction) -> str:
    """Serialize as ``"p/q"`` in lowest terms, or ``"p"`` when q = 1."""
    x = to_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


# -- vectors ---------------------------------------------------------------

def vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(to_rational(v) for v in values)


def basis_vector(n: int, i: int) -> tuple[Fraction, ...]:
    """The i-th standard basis vector (0-based) of length n."""
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))


def _check_len(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise ShapeError(f"vector lengths differ: {len(u)} vs {len(v)}")


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    _check_len(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u, v):
    _check_len(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    _check_len(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u):
    c = to_rational(c)
    return tuple(c * a for a in u)


def lin_comb(coeffs: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]]):
    """sum_i coeffs[i] * vectors[i]."""
    if len(coeffs) != len(vectors):
        raise ShapeError("coefficient count does not match vector count")
    if not vectors:
        raise ShapeError("empty linear combination has no length")
    n = len(vectors[0])
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if len(v) != n:
            raise ShapeError("vectors of unequal length")
        if c:
            for k in range(n):
                out[k] += c * v[k]
    return tuple(out)


# -- matrices --------------------------------------------------------------

class Matrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(to_rational(e) for e in entries)
        if rows <= 0 or cols <= 0:
            raise ShapeError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ShapeError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ShapeError("matrix needs at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), width, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def block_diag(cls, *blocks: "Matrix") -> "Matrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(out)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    T = property(transpose)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ShapeError("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def apply(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ShapeError(f"cannot apply {self.rows}x{self.cols} matrix to length-{len(v)} vector")
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} - {other.shape}")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return NotImplemented
        c = to_rational(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix([{body}])"

    def inverse(self) -> "Matrix":
        """Exact Gauss-Jordan inverse; raises ZeroDivisionError if singular."""
        if not self.is_square:
            raise ShapeError("inverse of a non-square matrix")
        n = self.rows
        a = [list(self.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for c in range(n):
            pivot = next((r for r in range(c, n) if a[r][c] != 0), None)
            if pivot is None:
                raise ZeroDivisionError("matrix is singular")
            a[c], a[pivot] = a[pivot], a[c]
            p = a[c][c]
            a[c] = [x / p for x in a[c]]
            for r in range(n):
                if r != c and a[r][c] != 0:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return Matrix.from_rows([row[n:] for row in a])

    def det(self) -> Fraction:
        """Exact determinant by fraction-exact Gaussian elimination."""
        if not self.is_square:
            raise ShapeError("determinant of a non-square matrix")
        n = self.rows
        a = self.to_rows()
        det = Fraction(1)
        for c in range(n):
            pivot = next((r for r in range(c, n) if a[r][c] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != c:
                a[c], a[pivot] = a[pivot], a[c]
                det = -det
            p = a[c][c]
            det *= p
            for r in range(c + 1, n):
                if a[r][c] != 0:
                    f = a[r][c] / p
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return det


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for i in range(a.rows):
        ra = a.row(i)
        for j in range(b.cols):
            out.append(sum((ra[k] * b.entries[k * b.cols + j] for k in range(a.cols) if ra[k]),
                           Fraction(0)))
    return Matrix(a.rows, b.cols, out)


def char_poly(a: Matrix) -> list[Fraction]:
    """Coefficients of det(t I - A), highest degree first (so result[0] == 1).

    Faddeev-LeVerrier recurrence:  M_0 = 0, c_n = 1,
    M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
    Exact over the rationals since only division by small integers occurs.
    """
    if not a.is_square:
        raise ShapeError("characteristic polynomial of a non-square matrix")
    n = a.rows
    ident = Matrix.identity(n)
    coeffs = [Fraction(1)]
    m = Matrix.zeros(n)
    for k in range(1, n + 1):
        m = mat_mul(a, m) + ident * coeffs[-1]
        coeffs.append(-mat_mul(a, m).trace() / k)
    return coeffs


def leading_principal_minors(a: Matrix) -> list[Fraction]:
    if not a.is_square:
        raise ShapeError("minors of a non-square matrix")
    n = a.rows
    return [
        Matrix.from_rows([a.row(i)[:k] for i in range(k)]).det()
        for k in range(1, n + 1)
    ]
