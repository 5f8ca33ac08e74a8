"""Acceptance criteria 1-9, every comparison exact.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints
one PASS/FAIL line per criterion. Expected values below are hand
transcriptions of the published tables, not engine output.
"""
from __future__ import annotations

import random
import time
from fractions import Fraction as F
from pathlib import Path

import pytest

from hypercurv.cli import main
from hypercurv.curvature import (
    compute,
    curvature_operator,
    levi_civita,
    riemann,
    riemann_bruteforce,
    scalar,
)
from hypercurv.hypercomplex import (
    full_report,
    is_integrable,
    nijenhuis,
    search_triples,
    signed_permutation_complex_structures,
    square_check,
)
from hypercurv.lie import InnerProduct, LieAlgebra, bracket, catalog, catalog_ids
from hypercurv.linalg import Matrix
from hypercurv.signs import Sign, classify

from closed_forms import k_form_matrix
from randalg import random_metric_lie_algebra, random_vector

HERE = Path(__file__).parent
X, Y, Z, W = range(4)
NAMES = "XYZW"


def vec(**kw):
    return tuple(F(kw.get(s, 0)) for s in "xyzw")


def unit(i, n=4):
    return tuple(F(int(i == k)) for k in range(n))


# -- 1. connection tables --------------------------------------------------

# every entry of each 4x4 table, row = ∇_U, column = V
CONNECTION = {
    "case1": [
        [vec(), vec(), vec(), vec()],
        [vec(), vec(), vec(w=F(1, 2)), vec(z=F(-1, 2))],
        [vec(), vec(w=F(-1, 2)), vec(), vec(y=F(1, 2))],
        [vec(), vec(z=F(1, 2)), vec(y=F(-1, 2)), vec()],
    ],
    "case2": [
        [vec(z=-1), vec(), vec(x=1), vec()],
        [vec(), vec(z=-1), vec(y=1), vec()],
        [vec(), vec(), vec(), vec()],
        [vec(y=-1), vec(x=1), vec(), vec()],
    ],
    "case3": [
        [vec(), vec(), vec(), vec()],
        [vec(y=-1), vec(x=1), vec(), vec()],
        [vec(z=-1), vec(), vec(x=1), vec()],
        [vec(w=-1), vec(), vec(), vec(x=1)],
    ],
    "case4": [
        [vec(), vec(), vec(), vec()],
        [vec(y=-1), vec(x=1), vec(w=F(-1, 4)), vec(z=F(1, 4))],
        [vec(z=F(-1, 2)), vec(w=F(-1, 4)), vec(x=F(1, 2)), vec(y=F(1, 4))],
        [vec(w=F(-1, 2)), vec(z=F(1, 4)), vec(y=F(-1, 4)), vec(x=F(1, 2))],
    ],
}


@pytest.mark.criterion(1, "connection tables")
@pytest.mark.parametrize("cid", sorted(CONNECTION))
def test_connection_tables(cid):
    conn = levi_civita(catalog(cid).data)
    for i in range(4):
        for j in range(4):
            got = conn.nabla(unit(i), unit(j))
            assert got == CONNECTION[cid][i][j], f"∇_{NAMES[i]}{NAMES[j]} = {got}"


# -- 2. curvature tables ---------------------------------------------------

# (i, j, k, value of R(e_i, e_j) e_k) for the displayed families
CURVATURE = {
    "case1": [
        (Y, Z, Y, vec(z=F(-1, 4))), (Z, W, W, vec(z=F(1, 4))),
        (Y, W, W, vec(y=F(1, 4))), (Y, Z, Z, vec(y=F(1, 4))),
        (Z, W, Z, vec(w=F(-1, 4))), (Y, W, Y, vec(w=F(-1, 4))),
    ],
    "case2": [
        (X, Y, X, vec(y=1)), (Y, Z, Z, vec(y=-1)),
        (X, Y, Y, vec(x=-1)), (X, Z, Z, vec(x=-1)),
        (X, Z, X, vec(z=1)), (Y, Z, Y, vec(z=1)),
    ],
    "case3": [
        (X, Y, X, vec(y=1)), (Y, Z, Z, vec(y=-1)), (Y, W, W, vec(y=-1)),
        (X, Y, Y, vec(x=-1)), (X, Z, Z, vec(x=-1)), (X, W, W, vec(x=-1)),
        (X, Z, X, vec(z=1)), (Y, Z, Y, vec(z=1)), (Z, W, W, vec(z=-1)),
        (X, W, X, vec(w=1)), (Y, W, Y, vec(w=1)), (Z, W, Z, vec(w=1)),
    ],
}

# the packed case-4 display: coef * R(e_i, e_j) e_k = target
CASE4_PACKED = [
    (-1, X, Y, Y, X), (-4, X, Z, Z, X), (-4, X, W, W, X),
    (8, Y, Z, W, X), (-8, Y, W, Z, X), (-4, Z, W, Y, X),
    (1, X, Y, X, Y), (-8, X, Z, W, Y), (8, X, W, Z, Y),
    (F(-16, 7), Y, Z, Z, Y), (F(-16, 7), Y, W, W, Y), (4, Z, W, X, Y),
    (-4, X, Y, W, Z), (4, X, Z, X, Z), (-8, X, W, Y, Z),
    (F(16, 7), Y, Z, Y, Z), (8, Y, W, X, Z), (F(-16, 7), Z, W, W, Z),
    (4, X, Y, Z, W), (8, X, Z, Y, W), (4, X, W, X, W),
    (-8, Y, Z, X, W), (F(16, 7), Y, W, Y, W), (F(16, 7), Z, W, Z, W),
]


def _tensor(cid):
    m = catalog(cid).data
    return riemann(levi_civita(m), m.algebra)


@pytest.mark.criterion(2, "curvature tables")
@pytest.mark.parametrize("cid", sorted(CURVATURE))
def test_curvature_tables_cases_1_to_3(cid):
    r = _tensor(cid)
    shown = {(i, j, k): v for i, j, k, v in CURVATURE[cid]}
    for i in range(4):
        for j in range(i + 1, 4):
            for k in range(4):
                expected = shown.get((i, j, k), vec())
                assert r.r[i][j][k] == expected, f"R({NAMES[i]},{NAMES[j]}){NAMES[k]}"
                assert r.r[j][i][k] == tuple(-x for x in expected)


@pytest.mark.criterion(2, "curvature tables")
def test_curvature_case4_spot_values():
    r = _tensor("case4")
    assert r.r[X][Y][Y] == vec(x=-1)
    assert r.r[Y][Z][Z] == vec(y=F(-7, 16))


@pytest.mark.criterion(2, "curvature tables")
def test_curvature_case4_packed_display():
    r = _tensor("case4")
    covered = set()
    for coef, i, j, k, target in CASE4_PACKED:
        assert tuple(F(coef) * x for x in r.r[i][j][k]) == unit(target)
        covered.add((i, j, k))
    # 6 planes x 4 vectors: the display covers every i<j component
    assert len(covered) == 24


# -- 3. quadratic forms ----------------------------------------------------

@pytest.mark.criterion(3, "curvature operator quadratic forms")
def test_operator_case1_diagonal():
    q = F(1, 4)
    op = curvature_operator(_tensor("case1"), InnerProduct.identity(4))
    assert op.m == Matrix.diag([0, 0, 0, q, q, q])


@pytest.mark.criterion(3, "curvature operator quadratic forms")
@pytest.mark.parametrize("cid", ["case1", "case2", "case3", "case4"])
def test_operator_coefficients_match_display(cid):
    # plane pairs are ordered XY, XZ, XW, YZ, YW, ZW, the same order as the
    # Plücker keys of the transcribed displays
    op = curvature_operator(_tensor(cid), InnerProduct.identity(4))
    assert op.pairs == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert op.m.to_rows() == k_form_matrix(cid)


# -- 4. scalar curvature ---------------------------------------------------

@pytest.mark.criterion(4, "scalar curvature")
@pytest.mark.parametrize("cid, s", [
    ("case1", F(3, 2)), ("case2", F(-6)), ("case3", F(-12)), ("case4", F(-45, 8)), ("abelian", F(0)),
])
def test_scalar_constants(cid, s):
    assert scalar(_tensor(cid), InnerProduct.identity(4)) == s


# -- 5. sign classes -------------------------------------------------------

@pytest.mark.criterion(5, "sign classes")
@pytest.mark.parametrize("cid, tag", [
    ("case1", Sign.NON_NEGATIVE), ("case2", Sign.NON_POSITIVE), ("case3", Sign.NON_POSITIVE),
    ("case4", Sign.NON_POSITIVE), ("abelian", Sign.FLAT),
])
def test_sign_classes(cid, tag):
    assert classify(catalog(cid).data).tag is tag


# -- 6. property suite -----------------------------------------------------

ALGEBRAS_PER_DIM = 190
SAMPLES = 5


def _orthogonal_frame(g):
    out = []
    for a in range(g.dim):
        v = unit(a, g.dim)
        for f in out:
            c = g(v, f) / g(f, f)
            v = tuple(x - c * y for x, y in zip(v, f))
        out.append(v)
    return out


def _independent_pair(rng, n, g):
    while True:
        u, v = random_vector(rng, n), random_vector(rng, n)
        if g(u, u) * g(v, v) - g(u, v) ** 2:
            return u, v


def _properties(m, rng):
    """Yield (name, ok) for every trial run on one metric Lie algebra."""
    n, g, alg = m.dim, m.metric, m.algebra
    cu = compute(m)
    conn, r = cu.connection, cu.tensor
    e = [unit(a, n) for a in range(n)]
    low = r.lowered(g)
    idx = range(n)

    yield "torsion-free (basis)", all(
        conn.gamma[i][j][k] - conn.gamma[j][i][k] == alg.c[i][j][k]
        for i in idx for j in idx for k in idx)
    yield "metric compatibility (basis)", all(
        g(conn.nabla(e[i], e[j]), e[k]) + g(e[j], conn.nabla(e[i], e[k])) == 0
        for i in idx for j in idx for k in idx)
    yield "R antisymmetric in first pair", all(
        r.r[i][j][k][l] == -r.r[j][i][k][l] for i in idx for j in idx for k in idx for l in idx)
    yield "R antisymmetric in last pair", all(
        low[i][j][k][l] == -low[i][j][l][k] for i in idx for j in idx for k in idx for l in idx)
    yield "R pair symmetry", all(
        low[i][j][k][l] == low[k][l][i][j] for i in idx for j in idx for k in idx for l in idx)
    yield "first Bianchi (basis)", all(
        r.r[i][j][k][l] + r.r[j][k][i][l] + r.r[k][i][j][l] == 0
        for i in idx for j in idx for k in idx for l in idx)

    ric = cu.ricci()
    ginv = g.g.inverse()
    trace = sum((ginv[a, b] * ric[b, a] for a in idx for b in idx), F(0))
    frame = _orthogonal_frame(g)
    pair_sum = sum((cu.sectional(frame[a], frame[b]) for a in idx for b in range(a + 1, n)), F(0))
    yield "scalar = trace(Ricci) = 2 sum K", cu.scalar() == trace == 2 * pair_sum

    for _ in range(SAMPLES):
        u, v, w = (random_vector(rng, n) for _ in range(3))
        yield "torsion-free (random)", tuple(
            a - b for a, b in zip(conn.nabla(u, v), conn.nabla(v, u))) == bracket(alg, u, v)
        yield "metric compatibility (random)", g(conn.nabla(u, v), w) + g(v, conn.nabla(u, w)) == 0
        yield "first Bianchi (random)", not any(
            a + b + c for a, b, c in zip(r.apply(u, v, w), r.apply(v, w, u), r.apply(w, u, v)))

        u, v = _independent_pair(rng, n, g)
        while True:
            a, b, c, d = (F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(4))
            if a * d - b * c:
                break
        u2 = tuple(a * x + b * y for x, y in zip(u, v))
        v2 = tuple(c * x + d * y for x, y in zip(u, v))
        yield "sectional plane invariance", cu.sectional(u, v) == cu.sectional(u2, v2)


@pytest.mark.criterion(6, "property suites (>= 10000 random trials)")
def test_property_suite():
    rng = random.Random(20240601)
    trials = 0
    failures = []
    start = time.perf_counter()
    for n in (3, 4):
        for _ in range(ALGEBRAS_PER_DIM):
            m = random_metric_lie_algebra(rng, n)
            for name, ok in _properties(m, rng):
                trials += 1
                if not ok:
                    failures.append((name, m))
    elapsed = time.perf_counter() - start
    assert trials >= 10000, trials
    assert not failures, failures[:3]
    assert elapsed < 60, elapsed


# -- 7. oracle equivalence -------------------------------------------------

def _naive_riemann(c):
    """Identity-metric curvature from structure constants alone, nested loops.

    gamma[i][j][k] = (c_ijk - c_jki + c_kij) / 2 is the Koszul formula for an
    orthonormal basis; then R^l_ijk = sum_p (G_jkp G_ipl - G_ikp G_jpl - c_ijp G_pkl).
    """
    n = len(c)
    gamma = [[[(c[i][j][k] - c[j][k][i] + c[k][i][j]) / 2 for k in range(n)]
              for j in range(n)] for i in range(n)]
    out = [[[[F(0)] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    s = F(0)
                    for p in range(n):
                        s += gamma[j][k][p] * gamma[i][p][l]
                        s -= gamma[i][k][p] * gamma[j][p][l]
                        s -= c[i][j][p] * gamma[p][k][l]
                    out[i][j][k][l] = s
    return out


@pytest.mark.criterion(7, "brute-force oracle equivalence")
@pytest.mark.parametrize("cid", catalog_ids())
def test_oracle_equivalence(cid):
    m = catalog(cid).data
    conn = levi_civita(m)
    r = riemann(conn, m.algebra)
    assert riemann_bruteforce(conn, m.algebra) == r
    naive = _naive_riemann(m.algebra.c)
    for i in range(4):
        for j in range(4):
            for k in range(4):
                assert list(r.r[i][j][k]) == naive[i][j][k]


# -- 8. hypercomplex -------------------------------------------------------

@pytest.mark.criterion(8, "hypercomplex structures")
def test_search_abelian_triple():
    m = catalog("abelian").data
    found = search_triples(m)
    assert found
    assert full_report(m, found[0]).ok


@pytest.mark.criterion(8, "hypercomplex structures")
def test_nijenhuis_vanishes_on_abelian():
    alg = LieAlgebra.abelian(4)
    for j in signed_permutation_complex_structures(4):
        for a in range(4):
            for b in range(4):
                assert not any(nijenhuis(alg, j, unit(a), unit(b)))


@pytest.mark.criterion(8, "hypercomplex structures")
def test_case3_j1():
    # X -> Y, Y -> -X, Z -> W, W -> -Z (column k is the image of e_k)
    j1 = Matrix.from_rows([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    alg = catalog("case3").data.algebra
    assert square_check(j1)
    assert is_integrable(alg, j1)
    # hand expansion on one pair: N(X,Z) = [Y,W] - [X,Z] - J1([X,W] + [Y,Z]) = -Z + Z
    assert nijenhuis(alg, j1, unit(X), unit(Z)) == vec()


# -- 9. CLI ----------------------------------------------------------------

@pytest.mark.criterion(9, "CLI goldens and exit codes")
@pytest.mark.parametrize("cid", ["case1", "case2", "case3", "case4"])
def test_report_golden(cid, capsys):
    assert main(["report", cid]) == 0
    assert capsys.readouterr().out == (HERE / "golden" / f"report_{cid}.txt").read_text(encoding="utf-8")


@pytest.mark.criterion(9, "CLI goldens and exit codes")
@pytest.mark.parametrize("doc, code", [
    ("case1.json", 0), ("jacobi_violation.json", 1), ("malformed.json", 2),
])
def test_check_exit_codes(doc, code, capsys):
    assert main(["check", str(HERE / "data" / doc)]) == code
