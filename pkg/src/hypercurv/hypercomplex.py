"""Hypercomplex and hyper-Hermitian checks at the Lie-algebra level.

An endomorphism J of the Lie algebra defines a left-invariant almost complex
structure on the group; it is integrable iff its Nijenhuis tensor
N(x, y) = [Jx, Jy] - [x, y] - J([x, Jy] + [Jx, y]) vanishes, and by
bilinearity it suffices to check basis pairs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .lie import InnerProduct, LieAlgebra, MetricLieAlgebra, bracket, format_vector
from .linalg import Matrix, ShapeError, add, mat_mul, sub

__all__ = [
    "AlmostComplexStructure",
    "HypercomplexTriple",
    "AxiomResult",
    "HypercomplexReport",
    "AXIOMS",
    "square_check",
    "quaternion_check",
    "nijenhuis",
    "is_integrable",
    "first_nijenhuis_failure",
    "is_hyper_hermitian",
    "full_report",
    "quaternion_left_triple",
    "quaternion_right_triple",
    "signed_permutation_complex_structures",
    "search_triples",
]


@dataclass(frozen=True)
class AlmostComplexStructure:
    j: Matrix

    def __post_init__(self):
        if not self.j.is_square:
            raise ShapeError("a complex structure must be a square matrix")

    @property
    def dim(self) -> int:
        return self.j.rows

    def __call__(self, v):
        return self.j.apply(v)


@dataclass(frozen=True)
class HypercomplexTriple:
    j1: AlmostComplexStructure
    j2: AlmostComplexStructure
    j3: AlmostComplexStructure

    @classmethod
    def from_matrices(cls, j1: Matrix, j2: Matrix, j3: Matrix) -> "HypercomplexTriple":
        return cls(AlmostComplexStructure(j1), AlmostComplexStructure(j2), AlmostComplexStructure(j3))

    def __iter__(self):
        return iter((self.j1, self.j2, self.j3))

    def matrices(self) -> list[Matrix]:
        return [s.j for s in self]


def _as_acs(j) -> AlmostComplexStructure:
    return j if isinstance(j, AlmostComplexStructure) else AlmostComplexStructure(j)


def square_check(j: AlmostComplexStructure | Matrix) -> bool:
    """J^2 = -Id exactly."""
    j = _as_acs(j)
    if j.dim % 2:
        return False
    return mat_mul(j.j, j.j) == -Matrix.identity(j.dim)


def quaternion_check(t: HypercomplexTriple) -> bool:
    """J1 J2 = J3 = -J2 J1 and each J_i squares to -Id."""
    n = t.j1.dim
    if t.j2.dim != n or t.j3.dim != n:
        raise ShapeError("complex structures of different sizes")
    if not all(square_check(j) for j in t):
        return False
    return mat_mul(t.j1.j, t.j2.j) == t.j3.j and mat_mul(t.j2.j, t.j1.j) == -t.j3.j


def nijenhuis(alg: LieAlgebra, j: AlmostComplexStructure | Matrix, x, y) -> tuple[Fraction, ...]:
    j = _as_acs(j)
    if j.dim != alg.dim:
        raise ShapeError(f"complex structure is {j.dim}x{j.dim} but algebra has dimension {alg.dim}")
    jx, jy = j(x), j(y)
    return sub(
        sub(bracket(alg, jx, jy), bracket(alg, x, y)),
        j(add(bracket(alg, x, jy), bracket(alg, jx, y))),
    )


def first_nijenhuis_failure(alg: LieAlgebra, j) -> tuple[int, int, tuple[Fraction, ...]] | None:
    """First basis pair (0-based, i < j) where N does not vanish, or None."""
    n = alg.dim
    e = [tuple(Fraction(int(a == b)) for b in range(n)) for a in range(n)]
    for a, b in itertools.combinations(range(n), 2):
        val = nijenhuis(alg, j, e[a], e[b])
        if any(val):
            return a, b, val
    return None


def is_integrable(alg: LieAlgebra, j) -> bool:
    return first_nijenhuis_failure(alg, j) is None


def _is_compatible(g: InnerProduct, j: Matrix) -> bool:
    return mat_mul(mat_mul(j.transpose(), g.g), j) == g.g


def is_hyper_hermitian(g: InnerProduct, t: HypercomplexTriple) -> bool:
    """g(J_i x, J_i y) = g(x, y) for i = 1, 2, 3, i.e. J_i^T g J_i = g."""
    if any(j.dim != g.dim for j in t):
        raise ShapeError("metric and complex structures differ in size")
    return all(_is_compatible(g, j.j) for j in t)


# -- aggregated report -----------------------------------------------------

AXIOMS = (
    "J^2 = -Id",
    "J1 J2 = J3",
    "J2 J1 = -J3",
    "N = 0",
    "hyper-Hermitian",
)


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class HypercomplexReport:
    results: tuple[AxiomResult, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failing(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            line = f"{'PASS' if r.passed else 'FAIL'}  {r.axiom}"
            if r.detail:
                line += f"  ({r.detail})"
            out.append(line)
        return out


def _first_basis_pair(n, pred):
    """First (a, b) basis pair (0-based, a <= b) where pred fails."""
    for a in range(n):
        for b in range(a, n):
            if not pred(a, b):
                return a, b
    return None


def full_report(m: MetricLieAlgebra, t: HypercomplexTriple) -> HypercomplexReport:
    n = m.dim
    if any(j.dim != n for j in t):
        raise ShapeError("complex structures do not match the algebra dimension")
    ident = Matrix.identity(n)
    results = []

    bad = []
    for idx, j in enumerate(t, start=1):
        sq = mat_mul(j.j, j.j)
        if sq != -ident:
            col = next(k for k in range(n) if sq.col(k) != (-ident).col(k))
            bad.append(f"J{idx}^2 e{col + 1} = {format_vector(sq.col(col))}")
    results.append(AxiomResult("J^2 = -Id", not bad, "; ".join(bad)))

    j12 = mat_mul(t.j1.j, t.j2.j)
    j21 = mat_mul(t.j2.j, t.j1.j)
    for axiom, lhs, rhs in (("J1 J2 = J3", j12, t.j3.j), ("J2 J1 = -J3", j21, -t.j3.j)):
        if lhs == rhs:
            results.append(AxiomResult(axiom, True))
        else:
            col = next(k for k in range(n) if lhs.col(k) != rhs.col(k))
            results.append(AxiomResult(
                axiom, False,
                f"on e{col + 1}: {format_vector(lhs.col(col))} != {format_vector(rhs.col(col))}",
            ))

    bad = []
    for idx, j in enumerate(t, start=1):
        fail = first_nijenhuis_failure(m.algebra, j)
        if fail is not None:
            a, b, val = fail
            bad.append(f"N{idx}(e{a + 1},e{b + 1}) = {format_vector(val)}")
    results.append(AxiomResult("N = 0", not bad, "; ".join(bad)))

    bad = []
    g = m.metric
    for idx, j in enumerate(t, start=1):
        pair = _first_basis_pair(n, lambda a, b: g(j(_e(n, a)), j(_e(n, b))) == g.g[a, b])
        if pair is not None:
            a, b = pair
            bad.append(f"g(J{idx} e{a + 1}, J{idx} e{b + 1}) != g(e{a + 1}, e{b + 1})")
    results.append(AxiomResult("hyper-Hermitian", not bad, "; ".join(bad)))
    return HypercomplexReport(tuple(results))


def _e(n, a):
    return tuple(Fraction(int(a == b)) for b in range(n))


# -- standard triples and search -------------------------------------------

def _from_images(images: Sequence[Sequence[int]]) -> Matrix:
    """Matrix whose k-th column is images[k]."""
    n = len(images)
    return Matrix(n, n, [images[k][r] for r in range(n) for k in range(n)])


def quaternion_left_triple() -> HypercomplexTriple:
    """Left multiplication by i, j, k on H with basis (1, i, j, k)."""
    li = _from_images([(0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0)])
    lj = _from_images([(0, 0, 1, 0), (0, 0, 0, -1), (-1, 0, 0, 0), (0, 1, 0, 0)])
    lk = _from_images([(0, 0, 0, 1), (0, 0, 1, 0), (0, -1, 0, 0), (-1, 0, 0, 0)])
    return HypercomplexTriple.from_matrices(li, lj, lk)


def quaternion_right_triple() -> HypercomplexTriple:
    """Right multiplication by -i, -j, -k on H (a second quaternionic triple,
    commuting with the left one)."""
    ri = _from_images([(0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0)])
    rj = _from_images([(0, 0, -1, 0), (0, 0, 0, -1), (1, 0, 0, 0), (0, 1, 0, 0)])
    rk = _from_images([(0, 0, 0, -1), (0, 0, 1, 0), (0, -1, 0, 0), (1, 0, 0, 0)])
    return HypercomplexTriple.from_matrices(ri, rj, rk)


def signed_permutation_complex_structures(n: int) -> list[Matrix]:
    """All signed permutation matrices with J^2 = -Id, in a fixed order."""
    out = []
    for perm in itertools.permutations(range(n)):
        if any(perm[k] == k or perm[perm[k]] != k for k in range(n)):
            continue
        for signs in itertools.product((1, -1), repeat=n):
            images = [[0] * n for _ in range(n)]
            for k in range(n):
                images[k][perm[k]] = signs[k]
            j = _from_images(images)
            if square_check(j):
                out.append(j)
    return out


def search_triples(m: MetricLieAlgebra, require_integrable: bool = True,
                   require_hermitian: bool = True) -> list[HypercomplexTriple]:
    """Signed-permutation triples (J1, J2, J1 J2) passing the requested checks.

    Results are ordered by the position of (J1, J2) in
    :func:`signed_permutation_complex_structures`.
    """
    cands = signed_permutation_complex_structures(m.dim)
    ok = []
    for j in cands:
        if require_integrable and not is_integrable(m.algebra, j):
            continue
        if require_hermitian and not _is_compatible(m.metric, j):
            continue
        ok.append(j)
    found = []
    for j1, j2 in itertools.product(ok, repeat=2):
        if mat_mul(j1, j2) != -mat_mul(j2, j1):
            continue
        j3 = mat_mul(j1, j2)
        if require_integrable and not is_integrable(m.algebra, j3):
            continue
        if require_hermitian and not _is_compatible(m.metric, j3):
            continue
        t = HypercomplexTriple.from_matrices(j1, j2, j3)
        if quaternion_check(t):
            found.append(t)
    return found
