"""Command-line front end.

    hypercurv list [--json]
    hypercurv report <source> [--json]
    hypercurv classify <source> [--json]
    hypercurv check <path>

A source is a catalog id (abelian, case1..case4) or a path to a JSON
document.  Exit codes: 0 success, 1 validation failure, 2 parse/IO failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .curvature import Curvature, compute
from .hypercomplex import HypercomplexTriple, full_report
from .lie import (
    LABELS,
    DocumentError,
    MetricLieAlgebra,
    ValidationError,
    bracket_summary,
    catalog,
    catalog_ids,
    format_vector,
    metric_lie_algebra_to_dict,
    parse_document,
)
from .linalg import Matrix, format_rational
from .signs import SignClass, classify

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2


class SourceError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def load_source(source: str) -> tuple[str, MetricLieAlgebra, list[Matrix] | None, str]:
    """Resolve a catalog id or document path to (name, algebra, structures, description)."""
    if source in catalog_ids():
        entry = catalog(source)
        return source, entry.data, None, entry.description
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SourceError(
            f"{source}: not a catalog id ({', '.join(catalog_ids())}) and not readable: {exc.strerror}",
            EXIT_PARSE,
        ) from None
    try:
        m, structures = parse_document(text)
    except DocumentError as exc:
        raise SourceError(f"{source}: parse error: {exc}", EXIT_PARSE) from None
    except ValidationError as exc:
        msg = f"{source}: invalid: {exc}"
        if exc.report is not None and len(exc.report.violations) > 1:
            msg += f"\n({len(exc.report.violations)} violations in total)"
        raise SourceError(msg, EXIT_INVALID) from None
    return source, m, structures, bracket_summary(m.algebra) or "abelian"


# -- report ----------------------------------------------------------------

def _q(x: Fraction) -> str:
    return format_rational(x)


def _vec(v) -> list[str]:
    return [_q(x) for x in v]


def _mat(m: Matrix) -> list[list[str]]:
    return [[_q(x) for x in row] for row in m.to_rows()]


def _sign_dict(sc: SignClass) -> dict:
    out = {"tag": sc.tag.value}
    if sc.witnesses is not None:
        out["witnesses"] = [
            {"u": _vec(w.u), "v": _vec(w.v), "K": _q(w.k)} for w in sc.witnesses
        ]
    return out


def build_report(name: str, m: MetricLieAlgebra, structures=None, description: str = "") -> dict:
    """Assemble every computed quantity as JSON-ready data (rationals as "p/q")."""
    curv: Curvature = compute(m)
    n = m.dim
    gamma = curv.connection.gamma
    r = curv.tensor.r
    low = curv.tensor.lowered(m.metric)
    op = curv.operator()
    report = {
        "source": name,
        "description": description,
        "dimension": n,
        "basis_labels": list(LABELS) if n == 4 else None,
        "brackets": metric_lie_algebra_to_dict(m)["brackets"],
        "metric": _mat(m.metric.g),
        "connection": [
            {"i": i + 1, "j": j + 1, "vector": _vec(gamma[i][j])}
            for i in range(n) for j in range(n) if any(gamma[i][j])
        ],
        "curvature": [
            {"i": i + 1, "j": j + 1, "k": k + 1, "vector": _vec(r[i][j][k])}
            for i in range(n) for j in range(i + 1, n) for k in range(n) if any(r[i][j][k])
        ],
        "curvature_lowered": [
            {"i": i + 1, "j": j + 1, "k": k + 1, "l": l + 1, "value": _q(low[i][j][k][l])}
            for i in range(n) for j in range(i + 1, n)
            for k in range(n) for l in range(k + 1, n) if low[i][j][k][l]
        ],
        "sectional": [
            [None if i == j else _q(x) for j, x in enumerate(row)]
            for i, row in enumerate(curv.sectional_matrix().to_rows())
        ],
        "curvature_operator": {
            "pairs": [[a + 1, b + 1] for a, b in op.pairs],
            "matrix": _mat(op.m),
        },
        "ricci": _mat(curv.ricci()),
        "scalar": _q(curv.scalar()),
        "sign_class": _sign_dict(classify(curv)),
    }
    if structures is not None:
        triple = HypercomplexTriple.from_matrices(*structures)
        report["hypercomplex"] = [
            {"axiom": a.axiom, "passed": a.passed, "detail": a.detail}
            for a in full_report(m, triple).results
        ]
    return report


def _vec_text(v: list[str], labels=None) -> str:
    return format_vector([Fraction(x) for x in v], labels)


def _grid(rows: list[list[str | None]], head: list[str]) -> list[str]:
    cells = [["-" if x is None else x for x in row] for row in rows]
    width = max(len(x) for x in [*head, *(c for row in cells for c in row)])
    out = ["  " + " " * width + " " + " ".join(h.rjust(width) for h in head)]
    for h, row in zip(head, cells):
        out.append("  " + h.rjust(width) + " " + " ".join(c.rjust(width) for c in row))
    return out


def render_text(rep: dict) -> str:
    n = rep["dimension"]
    labels = rep["basis_labels"]
    e = [f"e{k + 1}" for k in range(n)]
    lines = [f"source: {rep['source']}"]
    if rep["description"]:
        lines.append(f"description: {rep['description']}")
    lines.append(f"dimension: {n}")
    if labels:
        lines.append("basis: " + ", ".join(f"{a}={b}" for a, b in zip(e, labels)))
    br = [f"[e{b['i']},e{b['j']}] = {_vec_text([b['coeffs'].get(str(k + 1), '0') for k in range(n)])}"
          for b in rep["brackets"]]
    lines.append("brackets: " + ("; ".join(br) if br else "none (abelian)"))
    ident = [[("1" if i == j else "0") for j in range(n)] for i in range(n)]
    if rep["metric"] == ident:
        lines.append("metric: identity (e1..e%d orthonormal)" % n)
    else:
        lines.append("metric:")
        lines.extend(_grid(rep["metric"], e))

    lines += ["", "Levi-Civita connection"]
    if not rep["connection"]:
        lines.append("  all connection coefficients vanish")
    for c in rep["connection"]:
        s = f"  ∇_{{e{c['i']}}} e{c['j']} = {_vec_text(c['vector'])}"
        if labels:
            s += f"    (∇_{labels[c['i'] - 1]}{labels[c['j'] - 1]} = {_vec_text(c['vector'], labels)})"
        lines.append(s)

    lines += ["", "Curvature R(e_i,e_j)e_k, i < j"]
    if not rep["curvature"]:
        lines.append("  flat: all curvature components vanish")
    for c in rep["curvature"]:
        s = f"  R(e{c['i']},e{c['j']})e{c['k']} = {_vec_text(c['vector'])}"
        if labels:
            a, b, k = (labels[c[x] - 1] for x in "ijk")
            s += f"    (R({a},{b}){k} = {_vec_text(c['vector'], labels)})"
        lines.append(s)

    lines += ["", "Lowered curvature R_ijkl = g(R(e_i,e_j)e_k, e_l), i < j, k < l"]
    if not rep["curvature_lowered"]:
        lines.append("  none")
    for c in rep["curvature_lowered"]:
        sep = "" if n < 10 else ","
        idx = sep.join(str(c[x]) for x in "ijkl")
        lines.append(f"  R_{idx} = {c['value']}")

    lines += ["", "Sectional curvature K(e_i,e_j)"]
    lines.extend(_grid(rep["sectional"], e))

    pairs = [f"e{a}^e{b}" for a, b in rep["curvature_operator"]["pairs"]]
    lines += ["", "Curvature operator on bivectors (K(U,V) = p^T M p / |U^V|^2, p = Plücker coordinates)"]
    lines.extend(_grid(rep["curvature_operator"]["matrix"], pairs))

    lines += ["", "Ricci tensor"]
    lines.extend(_grid(rep["ricci"], e))

    lines += ["", "Scalar curvature", f"  S = {rep['scalar']}"]
    lines += ["", "Sectional curvature sign", f"  {rep['sign_class']['tag']}"]
    for w in rep["sign_class"].get("witnesses", []):
        lines.append(f"  K({_vec_text(w['u'])}, {_vec_text(w['v'])}) = {w['K']}")

    if "hypercomplex" in rep:
        lines += ["", "Hypercomplex structure"]
        for a in rep["hypercomplex"]:
            s = f"  {'PASS' if a['passed'] else 'FAIL'}  {a['axiom']}"
            if a["detail"]:
                s += f"  ({a['detail']})"
            lines.append(s)
    return "\n".join(lines) + "\n"


# -- commands --------------------------------------------------------------

def cmd_list(as_json: bool = False) -> str:
    entries = [catalog(cid) for cid in catalog_ids()]
    if as_json:
        return json.dumps([
            {
                "id": e.id,
                "description": e.description,
                "brackets": bracket_summary(e.data.algebra),
                "document": metric_lie_algebra_to_dict(e.data),
            }
            for e in entries
        ], indent=2) + "\n"
    width = max(len(e.id) for e in entries)
    return "".join(
        f"{e.id.ljust(width)}  {bracket_summary(e.data.algebra) or 'all brackets vanish'}\n"
        for e in entries
    )


def cmd_report(source: str, as_json: bool = False) -> str:
    name, m, structures, description = load_source(source)
    rep = build_report(name, m, structures, description)
    if as_json:
        return json.dumps(rep, indent=2, ensure_ascii=False) + "\n"
    return render_text(rep)


def cmd_classify(source: str, as_json: bool = False) -> str:
    _, m, _, _ = load_source(source)
    sc = classify(m)
    if as_json:
        return json.dumps(_sign_dict(sc), indent=2) + "\n"
    out = f"{sc.tag.value}\n"
    for w in sc.witnesses or ():
        out += f"K({format_vector(w.u)}, {format_vector(w.v)}) = {_q(w.k)}\n"
    return out


def cmd_check(path: str) -> tuple[str, int]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        return f"{path}: cannot read: {exc.strerror}\n", EXIT_PARSE
    try:
        m, structures = parse_document(text)
    except DocumentError as exc:
        return f"{path}: parse error: {exc}\n", EXIT_PARSE
    except ValidationError as exc:
        lines = []
        if exc.report is not None:
            lines.append("Lie algebra: FAIL")
            first = exc.report.first
            lines.append(f"  first violation: {first}")
            lines.append(f"  {len(exc.report.violations)} violation(s) in total")
        else:
            lines.append("Lie algebra: OK")
            lines.append(f"metric: FAIL ({exc})")
        lines.append("FAILED")
        return "\n".join(lines) + "\n", EXIT_INVALID

    lines = ["Lie algebra: OK (antisymmetry and Jacobi identity hold)", "metric: OK (symmetric, positive definite)"]
    ok = True
    if structures is not None:
        rep = full_report(m, HypercomplexTriple.from_matrices(*structures))
        lines.append("hypercomplex structure:")
        lines.extend("  " + ln for ln in rep.lines())
        ok = rep.ok
    lines.append("OK" if ok else "FAILED")
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_INVALID


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hypercurv",
        description="Exact curvature of left-invariant metrics on Lie groups.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("list", help="list the built-in catalog")
    s.add_argument("--json", action="store_true")
    s = sub.add_parser("report", help="connection, curvature and sign tables")
    s.add_argument("source", help="catalog id or path to a JSON document")
    s.add_argument("--json", action="store_true")
    s = sub.add_parser("classify", help="sign class of the sectional curvature")
    s.add_argument("source")
    s.add_argument("--json", action="store_true")
    s = sub.add_parser("check", help="validate a JSON document")
    s.add_argument("path")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    out = sys.stdout
    if hasattr(out, "reconfigure") and (out.encoding or "").lower() != "utf-8":
        out.reconfigure(encoding="utf-8")
    try:
        if args.command == "list":
            out.write(cmd_list(args.json))
        elif args.command == "report":
            out.write(cmd_report(args.source, args.json))
        elif args.command == "classify":
            out.write(cmd_classify(args.source, args.json))
        elif args.command == "check":
            text, code = cmd_check(args.path)
            out.write(text)
            return code
    except SourceError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
