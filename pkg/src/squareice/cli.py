"""Command line: ``squareice enumerate|refined|verify``.

Exit codes: 0 success, 1 usage error, 2 route disagreement or failed check.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import closed_forms, hankel, moments, oracle, orthopoly, refined3

FIELDS = ("N", "x", "r", "value", "routes", "agree")
EXIT_OK, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class OutputRecord:
    N: int | str
    x: int | str
    r: int | str
    value: str
    routes: tuple
    agree: bool

    def row(self) -> dict:
        return {"N": self.N, "x": self.x, "r": self.r, "value": self.value,
                "routes": "+".join(self.routes), "agree": "true" if self.agree else "false"}


def _compare(values: dict) -> tuple[str, tuple, bool]:
    """Common value (or the first one) of a ``route -> value`` map."""
    routes = tuple(values)
    first = values[routes[0]]
    agree = all(v == first for v in values.values())
    return str(first), routes, agree


# -- enumerate / refined ----------------------------------------------------

def _check_nx(n: int, x: int) -> None:
    if n < 1:
        raise UsageError("--n must be >= 1")
    if x not in (1, 2, 3):
        raise UsageError("--x must be 1, 2 or 3")


def enumerate_records(n: int, x: int) -> list[OutputRecord]:
    _check_nx(n, x)
    point = moments.point_for_weight(x)
    values = {
        "closed": closed_forms.closed_count(n, x),
        "determinant": hankel.enumeration_from_partition(point, n),
    }
    if n <= oracle.DEFAULT_LIMIT:
        values["oracle"] = oracle.oracle_counts(n, x).total
    value, routes, agree = _compare(values)
    return [OutputRecord(n, x, "", value, routes, agree)]


def refined_rows(n: int, x: int) -> dict:
    """Full refined row ``A(N, r; x)`` from each available route."""
    _check_nx(n, x)
    point = moments.point_for_weight(x)
    rows = {}
    if x == 3:
        rows["refined3"] = tuple(refined3.assemble(n).A)
    else:
        rows["closed"] = tuple(closed_forms.closed_refined(n, r, x) for r in range(1, n + 1))
        H = (closed_forms.recurrence_refined_ice(n) if x == 1
             else closed_forms.recurrence_refined_ff(n, 1))
        total = closed_forms.closed_count(n, x)
        rows["recurrence"] = tuple(h * total for h in H)
    rows["determinant"] = hankel.refined_from_correlator(point, n).refined
    if n <= oracle.DEFAULT_LIMIT:
        rows["oracle"] = oracle.oracle_counts(n, x).refined
    return rows


def refined_records(n: int, x: int, r: int | None = None) -> list[OutputRecord]:
    if r is not None and not 1 <= r <= n:
        raise UsageError(f"--r must lie in 1..{n}")
    rows = refined_rows(n, x)
    out = []
    for rr in range(1, n + 1):
        if r is not None and rr != r:
            continue
        value, routes, agree = _compare({k: Fraction(v[rr - 1]) for k, v in rows.items()})
        out.append(OutputRecord(n, x, rr, value, routes, agree))
    return out


# -- verify -----------------------------------------------------------------

Check = tuple[str, int, int | str, Callable[[], bool]]


def _moment_checks(top: int) -> list[Check]:
    checks = []
    for p in moments.POINTS:
        def chessboard(p=p):
            ms = moments.cot_derivative_moments(p, top)
            return all(ms[k] == 0 for k in range(1, top + 1, 2)) and all(
                ms[k] > 0 for k in range(0, top + 1, 2))
        checks.append(("chessboard", top, p.weight_x, chessboard))
    return checks


def _orthopoly_checks(top: int) -> list[Check]:
    F = orthopoly.Family
    checks = []
    for fam in (F.MP, F.CH, F.CDH0, F.CDH1):
        def orth(fam=fam):
            f = orthopoly.family_polynomials(fam, top)
            ms = moments.cot_derivative_moments(f.point, 4 * top + 2)
            return all(orthopoly.moment_functional(ms, f.polys[j], f.polys[k], f.sigma)
                       == (f.norms[j] if j == k else 0)
                       for j in range(top + 1) for k in range(top + 1))
        checks.append((f"orthogonality:{fam.value}", top, "", orth))
    for fam in F:
        checks.append((f"difference-equation:{fam.value}", top, "",
                       lambda fam=fam: all(orthopoly.difference_equation_residual(fam, n).is_zero()
                                           for n in range(top + 1))))
    checks.append(("shift-identities", top, "",
                   lambda: all(orthopoly.shift_identities(m) for m in range(top + 1))))
    return checks


def _determinant_checks(top: int) -> list[Check]:
    checks = []
    for p in moments.POINTS:
        checks.append(("det-product", top, p.weight_x,
                       lambda p=p: all(orthopoly.product_route_agrees(p, n)
                                       for n in range(1, top + 1))))
    checks.append(("free-fermion-Z=1", top, 2,
                   lambda: all(hankel.partition_function(moments.FREE_FERMION, n).value == 1
                               for n in range(1, top + 1))))
    checks.append(("block-factorization", top, 3,
                   lambda: all(hankel.factorization_check(m) for m in range((top - 1) // 2 + 1))))
    checks.append(("block-closed-form", top, 3,
                   lambda: all(orthopoly.block_product(s, m) == orthopoly.block_closed_form(s, m)
                               for s in (0, 1) for m in range(top // 2 + 1))))
    return checks


def _refined3_checks(top: int) -> list[Check]:
    def routes():
        return all(len({refined3.b_coefficients(m, rt).B for rt in refined3.B_ROUTES}) == 1
                   for m in range(top + 1))

    def vs_det():
        return all(refined3.assemble(n).A
                   == hankel.refined_from_correlator(moments.MINUS_HALF, n).refined
                   for n in range(1, top + 1))

    return [("b-routes", top, 3, routes), ("assemble-vs-determinant", top, 3, vs_det),
            ("gamma-vs-h", top, 3, lambda: all(refined3.gamma_matches_h(m) for m in range(top + 1)))]


def _appendix_checks(top: int) -> list[Check]:
    return [
        ("fQ", top, 3, lambda: all(refined3.fq_identity(m) for m in range(top + 1))),
        ("gff", top, 3, lambda: all(refined3.gff_identity(m) for m in range(top + 1))),
        ("Pdec+Pmix", top, 3, lambda: all(refined3.psi_identities(m, k)
                                          for m in range(1, top + 1) for k in range(top + 1))),
        ("E-V", top, 3, lambda: all(refined3.ev_consistency(m) for m in range(top + 1))),
    ]


SUITES = {
    "moments": _moment_checks,
    "orthopoly": _orthopoly_checks,
    "determinant": _determinant_checks,
    "refined3": _refined3_checks,
    "appendix": _appendix_checks,
}


def _run_check(check: Check) -> OutputRecord:
    name, top, x, fn = check
    try:
        ok = bool(fn())
    except (ArithmeticError, ValueError) as exc:
        print(f"{name}: {exc}", file=sys.stderr)
        ok = False
    return OutputRecord(top, x, "", "pass" if ok else "fail", (name,), ok)


def verify_records(suite: str, top: int) -> list[OutputRecord]:
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    if top < 1:
        raise UsageError("--max must be >= 1")
    names = list(SUITES) if suite == "all" else [suite]
    checks = [c for s in names for c in SUITES[s](top)]
    with ThreadPoolExecutor() as pool:
        return list(pool.map(_run_check, checks))


# -- output -----------------------------------------------------------------

def _approx(value: str) -> str:
    try:
        return f"{float(Fraction(value)):.6e}"
    except (ValueError, ZeroDivisionError, OverflowError):
        return ""


def render(command: str, records: list[OutputRecord], fmt: str, scientific: bool) -> str:
    rows = []
    for rec in records:
        row = rec.row()
        if scientific:
            row["approx"] = _approx(rec.value)
        rows.append(row)
    if fmt == "json":
        return json.dumps({"command": command, "records": rows}, sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    fields = FIELDS + (("approx",) if scientific else ())
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="squareice", description="Exact (refined) x-enumerations of ASMs.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--scientific", action="store_true",
                        help="add an approximate float column next to the exact value")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("enumerate", parents=[common], help="A(N; x) by every available route")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p = sub.add_parser("refined", parents=[common], help="A(N, r; x), r = 1..N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--r", type=int)
    p = sub.add_parser("verify", parents=[common], help="run an identity/consistency suite")
    p.add_argument("--suite", required=True, choices=(*SUITES, "all"))
    p.add_argument("--max", type=int, default=6)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        if args.command == "enumerate":
            records = enumerate_records(args.n, args.x)
        elif args.command == "refined":
            records = refined_records(args.n, args.x, args.r)
        else:
            records = verify_records(args.suite, args.max)
    except UsageError as exc:
        print(f"squareice: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(" ".join(argv), records, args.format, args.scientific)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if all(r.agree for r in records) else EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
