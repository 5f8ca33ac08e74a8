"""Exact sign classification of sectional curvature.

The curvature operator is a symmetric form on bivectors whose values on
decomposable bivectors u ∧ v are the numerators of K(u, v).  A semidefinite
operator therefore fixes the sign of every sectional curvature.  When the
operator is indefinite we only claim ``Mixed`` after exhibiting two planes
with opposite-sign curvature; otherwise the answer is ``Indeterminate``.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .curvature import Curvature, DegeneratePlaneError, compute
from .lie import MetricLieAlgebra
from .linalg import Matrix, ShapeError, char_poly

__all__ = [
    "Sign",
    "PlaneWitness",
    "SignClass",
    "is_semidefinite",
    "classify",
    "candidate_planes",
    "DEFAULT_WITNESS_CAP",
]

DEFAULT_WITNESS_CAP = 20000


class Sign(str, enum.Enum):
    FLAT = "Flat"
    NON_NEGATIVE = "NonNegative"
    NON_POSITIVE = "NonPositive"
    MIXED = "Mixed"
    INDETERMINATE = "Indeterminate"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PlaneWitness:
    u: tuple[Fraction, ...]
    v: tuple[Fraction, ...]
    k: Fraction


@dataclass(frozen=True)
class SignClass:
    tag: Sign
    witnesses: tuple[PlaneWitness, PlaneWitness] | None = None

    def __post_init__(self):
        if self.tag is Sign.MIXED:
            if self.witnesses is None or not (self.witnesses[0].k > 0 > self.witnesses[1].k):
                raise ValueError("Mixed needs a positive and a negative witness plane")


def is_semidefinite(m: Matrix, sign: str = "+") -> bool:
    """Exact PSD / NSD test from the characteristic polynomial.

    A real symmetric matrix is positive semidefinite iff the coefficients of
    det(t I - M) alternate in sign (zeros allowed): with
    p(t) = t^N + a_{N-1} t^{N-1} + ... + a_0, (-1)^(N-k) a_k >= 0 for all k.
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if not m.is_square or not m.is_symmetric():
        raise ShapeError("semidefiniteness is only defined here for symmetric matrices")
    if sign == "-":
        m = -m
    coeffs = char_poly(m)  # coeffs[i] multiplies t^(N - i)
    # a_k = coeffs[N - k]; required sign (-1)^(N-k) = (-1)^i
    return all((c if i % 2 == 0 else -c) >= 0 for i, c in enumerate(coeffs))


def candidate_planes(n: int):
    """Deterministic candidate planes: basis pairs first, then all pairs of
    distinct vectors with coefficients in {-1, 0, 1}, in lexicographic order."""
    basis = [tuple(Fraction(int(a == b)) for b in range(n)) for a in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        yield basis[i], basis[j]
    vecs = [tuple(Fraction(x) for x in t) for t in itertools.product((-1, 0, 1), repeat=n)]
    vecs = [v for v in vecs if any(v)]
    for u, v in itertools.combinations(vecs, 2):
        yield u, v


def _witness_search(curv: Curvature, cap: int):
    pos = neg = None
    for count, (u, v) in enumerate(candidate_planes(curv.metric_algebra.dim)):
        if count >= cap:
            break
        try:
            k = curv.sectional(u, v)
        except DegeneratePlaneError:
            continue
        if k > 0 and pos is None:
            pos = PlaneWitness(u, v, k)
        elif k < 0 and neg is None:
            neg = PlaneWitness(u, v, k)
        if pos is not None and neg is not None:
            return pos, neg
    return None


def classify(m: MetricLieAlgebra | Curvature, witness_cap: int = DEFAULT_WITNESS_CAP) -> SignClass:
    curv = m if isinstance(m, Curvature) else compute(m)
    if curv.tensor.is_zero():
        return SignClass(Sign.FLAT)
    op = curv.operator().m
    if is_semidefinite(op, "+"):
        return SignClass(Sign.NON_NEGATIVE)
    if is_semidefinite(op, "-"):
        return SignClass(Sign.NON_POSITIVE)
    found = _witness_search(curv, witness_cap)
    if found is not None:
        return SignClass(Sign.MIXED, found)
    return SignClass(Sign.INDETERMINATE)
