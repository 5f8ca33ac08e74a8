"""Levi-Civita connection and curvature of a left-invariant metric.

Conventions (fixed so the four catalog cases come out with the signs of
the published tables):

* connection   ∇_{e_i} e_j = sum_k gamma[i][j][k] e_k, from the Koszul formula
  2 g(∇_U V, W) = g([U,V],W) - g([V,W],U) + g([W,U],V);
* curvature    R(U,V)W = ∇_U ∇_V W - ∇_V ∇_U W - ∇_[U,V] W,
  stored as r[i][j][k][l] = l-th component of R(e_i, e_j) e_k;
* sectional    K(U,V) = g(R(V,U)U, V) / (|U|^2 |V|^2 - g(U,V)^2);
* scalar       S = g-trace of Ricci = 2 sum_{i<j} K(e_i, e_j) for an
  orthonormal basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .lie import InnerProduct, LieAlgebra, MetricLieAlgebra, bracket
from .linalg import Matrix, ShapeError, mat_mul

__all__ = [
    "DegeneratePlaneError",
    "Connection",
    "CurvatureTensor",
    "CurvatureOperator",
    "levi_civita",
    "riemann",
    "riemann_bruteforce",
    "sectional",
    "r_v_u_u",
    "ricci",
    "scalar",
    "sectional_matrix",
    "curvature_operator",
    "plucker",
    "plane_pairs",
    "Curvature",
    "compute",
]

_0 = Fraction(0)


class DegeneratePlaneError(ValueError):
    """The two vectors do not span a 2-plane."""


def _tensor3(t, n):
    return tuple(tuple(tuple(t[i][j][k] for k in range(n)) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class Connection:
    dim: int
    gamma: tuple  # gamma[i][j][k] = k-th component of ∇_{e_i} e_j

    def nabla(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """∇_u v for left-invariant u, v given by their coefficients."""
        n = self.dim
        if len(u) != n or len(v) != n:
            raise ShapeError("vector length does not match connection dimension")
        out = [_0] * n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                w = u[i] * v[j]
                if w:
                    gij = self.gamma[i][j]
                    for k in range(n):
                        if gij[k]:
                            out[k] += w * gij[k]
        return tuple(out)

    def operator(self, i: int) -> Matrix:
        """Matrix of the endomorphism v -> ∇_{e_i} v."""
        n = self.dim
        return Matrix(n, n, [self.gamma[i][k][l] for l in range(n) for k in range(n)])

    def is_zero(self) -> bool:
        return not any(x for gi in self.gamma for gij in gi for x in gij)


@dataclass(frozen=True)
class CurvatureTensor:
    dim: int
    r: tuple  # r[i][j][k][l] = l-th component of R(e_i, e_j) e_k

    def apply(self, u, v, w) -> tuple[Fraction, ...]:
        """R(u, v) w, trilinear in the arguments."""
        n = self.dim
        if not len(u) == len(v) == len(w) == n:
            raise ShapeError(f"R needs three length-{n} vectors")
        out = [_0] * n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                if not v[j] or i == j:
                    continue
                a = u[i] * v[j]
                for k in range(n):
                    if not w[k]:
                        continue
                    b = a * w[k]
                    rijk = self.r[i][j][k]
                    for l in range(n):
                        if rijk[l]:
                            out[l] += b * rijk[l]
        return tuple(out)

    def endomorphism(self, i: int, j: int) -> Matrix:
        n = self.dim
        return Matrix(n, n, [self.r[i][j][k][l] for l in range(n) for k in range(n)])

    def lowered(self, g: InnerProduct) -> tuple:
        """R_{ijkl} = g(R(e_i, e_j) e_k, e_l)."""
        n = self.dim
        G = g.g
        return tuple(
            tuple(
                tuple(
                    tuple(sum((self.r[i][j][k][m] * G[m, l] for m in range(n)), _0) for l in range(n))
                    for k in range(n)
                )
                for j in range(n)
            )
            for i in range(n)
        )

    def is_zero(self) -> bool:
        return not any(x for a in self.r for b in a for c in b for x in c)


@dataclass(frozen=True)
class CurvatureOperator:
    """Symmetric form on bivectors in the basis e_a ∧ e_b, a < b (lexicographic)."""

    pairs: tuple[tuple[int, int], ...]
    m: Matrix

    def form(self, p: Sequence[Fraction]) -> Fraction:
        return sum((x * y for x, y in zip(p, self.m.apply(p))), _0)


def plane_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """0-based index pairs (a, b), a < b, in Plücker order (12, 13, 14, 23, 24, 34 for n = 4)."""
    return tuple(combinations(range(n), 2))


def plucker(u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    if len(u) != len(v):
        raise ShapeError("plucker coordinates need equal-length vectors")
    return tuple(u[a] * v[b] - u[b] * v[a] for a, b in plane_pairs(len(u)))


def levi_civita(m: MetricLieAlgebra) -> Connection:
    alg, G = m.algebra, m.metric.g
    n, c = alg.dim, alg.c
    # h[i][j][l] = g([e_i, e_j], e_l)
    if m.metric.is_identity():
        h = c
    else:
        h = [[[sum((c[i][j][q] * G[q, l] for q in range(n)), _0) for l in range(n)]
              for j in range(n)] for i in range(n)]
    low = [[[(h[i][j][l] - h[j][l][i] + h[l][i][j]) / 2 for l in range(n)]
            for j in range(n)] for i in range(n)]
    if m.metric.is_identity():
        gamma = low
    else:
        ginv = G.inverse()
        gamma = [[[sum((low[i][j][l] * ginv[l, k] for l in range(n)), _0) for k in range(n)]
                  for j in range(n)] for i in range(n)]
    return Connection(n, _tensor3(gamma, n))


def riemann(conn: Connection, alg: LieAlgebra) -> CurvatureTensor:
    """R(e_i, e_j) = [∇_i, ∇_j] - ∇_[e_i, e_j] as endomorphisms."""
    n = conn.dim
    if alg.dim != n:
        raise ShapeError("connection and algebra dimensions differ")
    ops = [conn.operator(i) for i in range(n)]
    zero = Matrix.zeros(n)
    r = [[None] * n for _ in range(n)]
    for i in range(n):
        r[i][i] = zero
        for j in range(i + 1, n):
            e = mat_mul(ops[i], ops[j]) - mat_mul(ops[j], ops[i])
            for q, cq in enumerate(alg.c[i][j]):
                if cq:
                    e = e - ops[q] * cq
            r[i][j] = e
            r[j][i] = -e
    # endomorphism column k is R(e_i, e_j) e_k
    return CurvatureTensor(n, tuple(
        tuple(tuple(r[i][j].col(k) for k in range(n)) for j in range(n)) for i in range(n)
    ))


def riemann_bruteforce(conn: Connection, alg: LieAlgebra) -> CurvatureTensor:
    """Independent evaluation of R(e_i,e_j)e_k = ∇_i∇_j e_k - ∇_j∇_i e_k - ∇_[e_i,e_j] e_k,
    one component at a time, straight from vector-level ∇ and bracket."""
    n = conn.dim
    e = [tuple(Fraction(int(a == b)) for b in range(n)) for a in range(n)]
    out = []
    for i in range(n):
        row_i = []
        for j in range(n):
            row_j = []
            br = bracket(alg, e[i], e[j])
            for k in range(n):
                t1 = conn.nabla(e[i], conn.nabla(e[j], e[k]))
                t2 = conn.nabla(e[j], conn.nabla(e[i], e[k]))
                t3 = conn.nabla(br, e[k])
                row_j.append(tuple(t1[l] - t2[l] - t3[l] for l in range(n)))
            row_i.append(tuple(row_j))
        out.append(tuple(row_i))
    return CurvatureTensor(n, tuple(out))


def r_v_u_u(r: CurvatureTensor, u, v) -> tuple[Fraction, ...]:
    """R(v, u) u."""
    return r.apply(v, u, u)


def _gram(g: InnerProduct, u, v) -> Fraction:
    return g(u, u) * g(v, v) - g(u, v) ** 2


def sectional(r: CurvatureTensor, g: InnerProduct, u, v) -> Fraction:
    if len(u) != r.dim or len(v) != r.dim:
        raise ShapeError(f"sectional curvature needs length-{r.dim} vectors")
    gram = _gram(g, u, v)
    if gram == 0:
        raise DegeneratePlaneError("vectors are linearly dependent; they span no 2-plane")
    return g(r_v_u_u(r, u, v), v) / gram


def sectional_matrix(r: CurvatureTensor, g: InnerProduct) -> Matrix:
    """K(e_i, e_j) for i != j; zero on the diagonal."""
    n = r.dim
    e = [tuple(Fraction(int(a == b)) for b in range(n)) for a in range(n)]
    return Matrix(n, n, [sectional(r, g, e[i], e[j]) if i != j else 0
                         for i in range(n) for j in range(n)])


def ricci(r: CurvatureTensor, g: InnerProduct) -> Matrix:
    """Ric(e_j, e_k) = trace of x -> R(x, e_j) e_k."""
    n = r.dim
    return Matrix(n, n, [sum((r.r[i][j][k][i] for i in range(n)), _0)
                         for j in range(n) for k in range(n)])


def scalar(r: CurvatureTensor, g: InnerProduct) -> Fraction:
    ric = ricci(r, g)
    if g.is_identity():
        return ric.trace()
    return mat_mul(g.g.inverse(), ric).trace()


def curvature_operator(r: CurvatureTensor, g: InnerProduct) -> CurvatureOperator:
    """M[(a,b),(c,d)] = g(R(e_a, e_b) e_d, e_c).

    With p = plucker(u, v) this gives p^T M p = g(R(v,u)u, v), the numerator
    of K(u, v); the diagonal holds K(e_a, e_b) for orthonormal bases.
    """
    low = r.lowered(g)
    pairs = plane_pairs(r.dim)
    return CurvatureOperator(
        pairs, Matrix(len(pairs), len(pairs), [low[a][b][d][c] for a, b in pairs for c, d in pairs])
    )


@dataclass(frozen=True)
class Curvature:
    """Everything derived from one metric Lie algebra, computed once."""

    metric_algebra: MetricLieAlgebra
    connection: Connection
    tensor: CurvatureTensor

    @property
    def metric(self) -> InnerProduct:
        return self.metric_algebra.metric

    def sectional(self, u, v) -> Fraction:
        return sectional(self.tensor, self.metric, u, v)

    def ricci(self) -> Matrix:
        return ricci(self.tensor, self.metric)

    def scalar(self) -> Fraction:
        return scalar(self.tensor, self.metric)

    def operator(self) -> CurvatureOperator:
        return curvature_operator(self.tensor, self.metric)

    def sectional_matrix(self) -> Matrix:
        return sectional_matrix(self.tensor, self.metric)


def compute(m: MetricLieAlgebra) -> Curvature:
    conn = levi_civita(m)
    return Curvature(m, conn, riemann(conn, m.algebra))
