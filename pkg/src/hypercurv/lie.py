"""Metric Lie algebras: structure constants, inner products, the catalog.

Basis convention used throughout the package: the labels X, Y, Z, W of
the four-dimensional cases are the basis vectors e1, e2, e3, e4, in that
order.  Internally indices are 0-based; everything user facing (file
format, reports, validation messages) is 1-based.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import (
    Matrix,
    ShapeError,
    format_rational,
    leading_principal_minors,
    to_rational,
)

__all__ = [
    "LABELS",
    "LieAlgebra",
    "InnerProduct",
    "MetricLieAlgebra",
    "CatalogEntry",
    "ValidationReport",
    "Violation",
    "DocumentError",
    "ValidationError",
    "validate_lie_algebra",
    "bracket",
    "catalog",
    "catalog_ids",
    "load_metric_lie_algebra",
    "dump_metric_lie_algebra",
    "metric_lie_algebra_to_dict",
    "bracket_summary",
    "format_vector",
    "parse_document",
]

LABELS = ("X", "Y", "Z", "W")


class DocumentError(ValueError):
    """Input document is malformed (bad JSON, wrong schema, bad literal)."""


class ValidationError(ValueError):
    """Input is well-formed but violates a mathematical requirement."""

    def __init__(self, message: str, report: "ValidationReport | None" = None):
        super().__init__(message)
        self.report = report


class LieAlgebra:
    """Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k."""

    __slots__ = ("dim", "c")

    def __init__(self, dim: int, c):
        if dim <= 0:
            raise ShapeError("dimension must be positive")
        if len(c) != dim or any(len(ci) != dim or any(len(cij) != dim for cij in ci) for ci in c):
            raise ShapeError(f"structure constants must be a {dim}x{dim}x{dim} array")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(
            self, "c",
            tuple(tuple(tuple(to_rational(x) for x in cij) for cij in ci) for ci in c),
        )

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict[tuple[int, int], dict[int, object]]) -> "LieAlgebra":
        """Build from {(i, j): {k: coeff}} with 0-based i < j, completing antisymmetry."""
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ShapeError(f"bracket index out of range: ({i + 1}, {j + 1})")
            if i == j:
                raise ValueError(f"[e{i + 1}, e{i + 1}] must vanish and may not be listed")
            for k, val in coeffs.items():
                if not 0 <= k < dim:
                    raise ShapeError(f"bracket output index out of range: {k + 1}")
                val = to_rational(val)
                c[i][j][k] += val
                c[j][i][k] -= val
        return cls(dim, c)

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls.from_brackets(dim, {})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.c == other.c

    def __hash__(self):
        return hash((self.dim, self.c))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, {bracket_summary(self) or 'abelian'})"

    def bracket_basis(self, i: int, j: int) -> tuple[Fraction, ...]:
        return self.c[i][j]

    def nonzero_brackets(self):
        """Yield (i, j, vector) for i < j with [e_i, e_j] != 0."""
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if any(self.c[i][j]):
                    yield i, j, self.c[i][j]

    def is_abelian(self) -> bool:
        return not any(x for ci in self.c for cij in ci for x in cij)

    def change_basis(self, p: Matrix) -> "LieAlgebra":
        """Structure constants in the basis f_a = sum_i p[i, a] e_i."""
        n = self.dim
        if p.shape != (n, n):
            raise ShapeError("basis change matrix has the wrong size")
        pinv = p.inverse()
        cols = [p.col(a) for a in range(n)]
        new = [[None] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                v = bracket(self, cols[a], cols[b])
                new[a][b] = pinv.apply(v)
        return LieAlgebra(n, new)


@dataclass(frozen=True)
class InnerProduct:
    g: Matrix

    def __post_init__(self):
        if not self.g.is_square:
            raise ShapeError("inner product matrix must be square")

    @classmethod
    def identity(cls, n: int) -> "InnerProduct":
        return cls(Matrix.identity(n))

    @property
    def dim(self) -> int:
        return self.g.rows

    def __call__(self, u, v) -> Fraction:
        gv = self.g.apply(v)
        return sum((a * b for a, b in zip(u, gv)), Fraction(0))

    def is_identity(self) -> bool:
        return self.g == Matrix.identity(self.dim)

    def problems(self) -> list[str]:
        out = []
        if not self.g.is_symmetric():
            out.append("metric is not symmetric")
            return out
        minors = leading_principal_minors(self.g)
        for k, m in enumerate(minors, start=1):
            if m <= 0:
                out.append(
                    f"metric is not positive definite: leading principal minor of order {k} is {format_rational(m)}"
                )
                break
        return out

    def is_positive_definite(self) -> bool:
        return not self.problems()


@dataclass(frozen=True)
class MetricLieAlgebra:
    algebra: LieAlgebra
    metric: InnerProduct

    def __post_init__(self):
        if self.algebra.dim != self.metric.dim:
            raise ShapeError(
                f"algebra has dimension {self.algebra.dim} but metric is {self.metric.dim}x{self.metric.dim}"
            )

    @property
    def dim(self) -> int:
        return self.algebra.dim


@dataclass(frozen=True)
class Violation:
    kind: str  # "antisymmetry" or "jacobi"
    indices: tuple[int, ...]  # 1-based; (i, j, k) or (i, j, k, l) with l the first nonzero slot
    residual: tuple[Fraction, ...] | Fraction

    def __str__(self):
        idx = ",".join(map(str, self.indices))
        if self.kind == "antisymmetry":
            i, j, k = self.indices
            return (f"antisymmetry violated at ({idx}): c^{k}_{{{i}{j}}} + c^{k}_{{{j}{i}}} = "
                    f"{format_rational(self.residual)}")
        i, j, k, l = self.indices
        return (f"Jacobi identity violated at (i,j,k,l)=({idx}): "
                f"[[e{i},e{j}],e{k}] + [[e{j},e{k}],e{i}] + [[e{k},e{i}],e{j}] = {format_vector(self.residual)}")


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "OK"
        return "\n".join(str(v) for v in self.violations)


def validate_lie_algebra(alg: LieAlgebra) -> ValidationReport:
    """Check antisymmetry and the Jacobi identity on every index combination.

    Violations are listed in lexicographic index order, so ``report.first``
    is the first failing combination.  Jacobi residuals are reported per
    triple (i, j, k) as the whole vector sum_l (...) e_l.
    """
    n, c = alg.dim, alg.c
    found: list[Violation] = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = c[i][j][k] + c[j][i][k]
                if s:
                    found.append(Violation("antisymmetry", (i + 1, j + 1, k + 1), s))
    if found:
        return ValidationReport(tuple(found))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                res = tuple(
                    sum((c[i][j][m] * c[m][k][l] + c[j][k][m] * c[m][i][l] + c[k][i][m] * c[m][j][l]
                         for m in range(n)), Fraction(0))
                    for l in range(n)
                )
                if any(res):
                    l = next(l for l, x in enumerate(res) if x)
                    found.append(Violation("jacobi", (i + 1, j + 1, k + 1, l + 1), res))
    return ValidationReport(tuple(found))


def bracket(alg: LieAlgebra, u: Sequence, v: Sequence) -> tuple[Fraction, ...]:
    n = alg.dim
    if len(u) != n or len(v) != n:
        raise ShapeError(f"bracket needs length-{n} vectors, got {len(u)} and {len(v)}")
    out = [Fraction(0)] * n
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if not vj:
                continue
            w = ui * vj
            for k, ck in enumerate(alg.c[i][j]):
                if ck:
                    out[k] += w * ck
    return tuple(out)


# -- catalog ---------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    id: str
    data: MetricLieAlgebra
    description: str


_h = Fraction(1, 2)
X, Y, Z, W = range(4)

_CATALOG_BRACKETS = {
    "abelian": ({}, "abelian Lie algebra R^4"),
    "case1": (
        {(Y, Z): {W: 1}, (Z, W): {Y: 1}, (Y, W): {Z: -1}},
        "[Y,Z]=W, [Z,W]=Y, [W,Y]=Z, X central (R + su(2))",
    ),
    "case2": (
        {(X, Z): {X: 1}, (Y, Z): {Y: 1}, (X, W): {Y: 1}, (Y, W): {X: -1}},
        "[X,Z]=X, [Y,Z]=Y, [X,W]=Y, [Y,W]=-X",
    ),
    "case3": (
        {(X, Y): {Y: 1}, (X, Z): {Z: 1}, (X, W): {W: 1}},
        "[X,Y]=Y, [X,Z]=Z, [X,W]=W (real hyperbolic space)",
    ),
    "case4": (
        {(X, Y): {Y: 1}, (X, Z): {Z: _h}, (X, W): {W: _h}, (Z, W): {Y: _h}},
        "[X,Y]=Y, [X,Z]=1/2 Z, [X,W]=1/2 W, [Z,W]=1/2 Y (complex hyperbolic space)",
    ),
}


def catalog_ids() -> tuple[str, ...]:
    return tuple(_CATALOG_BRACKETS)


def catalog(id: str) -> CatalogEntry:
    """The four-dimensional metric Lie algebras carrying an invariant
    hypercomplex structure, with (X, Y, Z, W) = (e1, e2, e3, e4)
    orthonormal."""
    try:
        brackets, description = _CATALOG_BRACKETS[id]
    except KeyError:
        raise KeyError(f"unknown catalog id {id!r}; expected one of {', '.join(catalog_ids())}") from None
    alg = LieAlgebra.from_brackets(4, brackets)
    return CatalogEntry(id, MetricLieAlgebra(alg, InnerProduct.identity(4)), description)


def bracket_summary(alg: LieAlgebra) -> str:
    """Compact ``[A,B]=v`` list, using X..W labels for brackets and e_k for values."""
    parts = []
    for i, j, vec in alg.nonzero_brackets():
        a = LABELS[i] if alg.dim == 4 else f"e{i + 1}"
        b = LABELS[j] if alg.dim == 4 else f"e{j + 1}"
        parts.append(f"[{a},{b}]={format_vector(vec)}")
    return ", ".join(parts)


def format_vector(vec: Sequence[Fraction], labels: Sequence[str] | None = None) -> str:
    """Human form such as ``1/2 e2 - e4``; ``0`` for the zero vector."""
    terms = []
    for k, x in enumerate(vec):
        if not x:
            continue
        mag = abs(x)
        coeff = "" if mag == 1 else format_rational(mag) + " "
        sign = "-" if x < 0 else "+"
        name = labels[k] if labels else f"e{k + 1}"
        terms.append((sign, f"{coeff}{name}"))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# -- JSON documents --------------------------------------------------------

def _parse_matrix(rows, n: int, what: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != n or any(
        not isinstance(r, list) or len(r) != n for r in rows
    ):
        raise DocumentError(f"{what} must be a {n}x{n} array")
    try:
        return Matrix.from_rows([[_parse_scalar(x) for x in r] for r in rows])
    except (ValueError, TypeError) as exc:
        raise DocumentError(f"bad entry in {what}: {exc}") from None


def _parse_scalar(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise DocumentError(f"rational entries must be strings like \"p/q\" or integers, got {x!r}")
    try:
        return to_rational(x)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def parse_document(document: str | dict) -> tuple[MetricLieAlgebra, list[Matrix] | None]:
    """Parse a JSON document into a metric Lie algebra and optional J matrices.

    Raises DocumentError for anything schema-level and ValidationError when
    the bracket fails antisymmetry/Jacobi or the metric is not positive
    definite.
    """
    if isinstance(document, str):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from None
    else:
        doc = document
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    n = doc.get("dimension")
    if isinstance(n, bool) or not isinstance(n, int) or n <= 0:
        raise DocumentError("\"dimension\" must be a positive integer")

    entries = doc.get("brackets", [])
    if not isinstance(entries, list):
        raise DocumentError("\"brackets\" must be an array")
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for e in entries:
        if not isinstance(e, dict) or not {"i", "j", "coeffs"} <= set(e):
            raise DocumentError("each bracket entry needs \"i\", \"j\" and \"coeffs\"")
        i, j, coeffs = e["i"], e["j"], e["coeffs"]
        if any(isinstance(x, bool) or not isinstance(x, int) for x in (i, j)):
            raise DocumentError("bracket indices must be integers")
        if not (1 <= i < j <= n):
            raise DocumentError(f"bracket entry needs 1 <= i < j <= {n}, got i={i}, j={j}")
        if (i - 1, j - 1) in brackets:
            raise DocumentError(f"duplicate bracket entry for ({i}, {j})")
        if not isinstance(coeffs, dict):
            raise DocumentError("\"coeffs\" must be an object mapping output index to rational")
        out = {}
        for k, val in coeffs.items():
            try:
                kk = int(k)
            except ValueError:
                raise DocumentError(f"bad output index {k!r}") from None
            if not 1 <= kk <= n:
                raise DocumentError(f"output index {kk} out of range 1..{n}")
            out[kk - 1] = _parse_scalar(val)
        brackets[(i - 1, j - 1)] = out
    alg = LieAlgebra.from_brackets(n, brackets)

    if "metric" in doc and doc["metric"] is not None:
        g = _parse_matrix(doc["metric"], n, "\"metric\"")
    else:
        g = Matrix.identity(n)

    structures = None
    if doc.get("complex_structures") is not None:
        js = doc["complex_structures"]
        if not isinstance(js, list) or len(js) != 3:
            raise DocumentError("\"complex_structures\" must list exactly three matrices (J1, J2, J3)")
        structures = [_parse_matrix(m, n, f"complex structure J{a + 1}") for a, m in enumerate(js)]

    report = validate_lie_algebra(alg)
    if not report.ok:
        raise ValidationError(f"not a Lie algebra: {report.first}", report)
    ip = InnerProduct(g)
    problems = ip.problems()
    if problems:
        raise ValidationError(problems[0])
    return MetricLieAlgebra(alg, ip), structures


def load_metric_lie_algebra(document: str | dict) -> MetricLieAlgebra:
    return parse_document(document)[0]


def metric_lie_algebra_to_dict(m: MetricLieAlgebra, structures: Sequence[Matrix] | None = None) -> dict:
    brackets = []
    for i, j, vec in m.algebra.nonzero_brackets():
        brackets.append({
            "i": i + 1,
            "j": j + 1,
            "coeffs": {str(k + 1): format_rational(x) for k, x in enumerate(vec) if x},
        })
    doc = {
        "dimension": m.dim,
        "brackets": brackets,
        "metric": [[format_rational(x) for x in row] for row in m.metric.g.to_rows()],
    }
    if structures is not None:
        doc["complex_structures"] = [
            [[format_rational(x) for x in row] for row in j.to_rows()] for j in structures
        ]
    return doc


def dump_metric_lie_algebra(m: MetricLieAlgebra, structures: Sequence[Matrix] | None = None) -> str:
    return json.dumps(metric_lie_algebra_to_dict(m, structures), indent=2)
