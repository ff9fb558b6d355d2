"""Command-line front end: point evaluation, coefficient tables, the
verification suite, and the moment asymptotics table.

Exit codes: 0 success (and all verifications passing), 1 verification
failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from typing import Callable

from .fourier import SERIES_LABELS, series_by_label, series_integrand
from .identities import (adjudicate, build_suite, gn_asymptotics, run_all,
                         select_identities)
from .quadrature import fourier_coeff_numeric
from .series import TailPolicy, z_function
from .special import (ApproxValue, ArgumentError, DomainError, clausen2,
                      ln_barnes_g, ln_gamma)


def _f15(x: float) -> float | None:
    # 15 significant digits; non-finite values have no JSON representation
    if not math.isfinite(x):
        return None
    return float(f"{x:.15g}")


def _eval_lngamma(x: float) -> ApproxValue:
    v = ln_gamma(x)
    return ApproxValue(v, 4e-16 * (1.0 + abs(v)))


def _eval_lnbarnesg(x: float) -> ApproxValue:
    v = ln_barnes_g(x)
    return ApproxValue(v, 2e-15 * (1.0 + abs(v)) + 1e-13)


def _eval_clausen2(x: float) -> ApproxValue:
    v = clausen2(x)
    return ApproxValue(v, 2e-15 * (1.0 + abs(v)))


_EVAL_FUNCS: dict[str, Callable[[float], ApproxValue]] = {
    "lngamma": _eval_lngamma,
    "lnbarnesg": _eval_lnbarnesg,
    "clausen2": _eval_clausen2,
    "zfunc": z_function,
}


def _env_policy() -> TailPolicy | None:
    raw = os.environ.get("SPECFN_DIRECT_TERMS")
    if raw is None:
        return None
    try:
        return TailPolicy(direct_terms=int(raw))
    except (ValueError, ArgumentError):
        raise _UsageError("SPECFN_DIRECT_TERMS must be a positive integer")


def _env_max_levels() -> int | None:
    raw = os.environ.get("SPECFN_MAX_LEVELS")
    if raw is None:
        return None
    try:
        levels = int(raw)
    except ValueError:
        levels = -1
    if not 1 <= levels <= 14:
        raise _UsageError("SPECFN_MAX_LEVELS must be an integer in 1..14")
    return levels


class _UsageError(Exception):
    pass


def _print_csv(header: list[str], rows: list[list]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_eval(args: argparse.Namespace) -> int:
    fn = _EVAL_FUNCS[args.function]
    res = fn(args.x)
    if args.format == "json":
        doc = {"function": args.function, "x": _f15(args.x),
               "value": _f15(res.value), "abs_err": _f15(res.abs_err)}
        print(json.dumps(doc))
    elif args.format == "csv":
        _print_csv(["function", "x", "value", "abs_err"],
                   [[args.function, f"{args.x:.15g}", f"{res.value:.15g}",
                     f"{res.abs_err:.3g}"]])
    else:
        print(f"{args.function}({args.x:g}) = {res.value:.15g}"
              f"   abs_err <= {res.abs_err:.3g}")
    return 0


def _coeff_rows(args: argparse.Namespace) -> list[dict]:
    ser = series_by_label(args.series, args.n_max)
    rows: list[dict] = []
    for n in range(0, args.n_max + 1):
        a = 0.5 * ser.a0 if n == 0 else float(ser.a[n])
        rows.append({"n": n, "a": a, "b": 0.0 if n == 0 else float(ser.b[n])})
    if args.check:
        spec = series_integrand(args.series)
        for row in rows:
            n = row["n"]
            meas_a = fourier_coeff_numeric(spec, n, "cosine")
            # the n = 0 row carries the constant term, half the doubled
            # integral that the measurement returns
            scale = 0.5 if n == 0 else 1.0
            row["a_measured"] = scale * meas_a.value
            row["a_residual"] = abs(row["a"] - row["a_measured"])
            if n == 0:
                row["b_measured"] = 0.0
                row["b_residual"] = 0.0
            else:
                meas_b = fourier_coeff_numeric(spec, n, "sine")
                row["b_measured"] = meas_b.value
                row["b_residual"] = abs(row["b"] - meas_b.value)
    return rows


def _cmd_coeffs(args: argparse.Namespace) -> int:
    rows = _coeff_rows(args)
    cols = ["n", "a", "b"]
    if args.check:
        cols += ["a_measured", "a_residual", "b_measured", "b_residual"]
    if args.format == "json":
        doc = {"series": args.series, "n_max": args.n_max,
               "rows": [{k: (r[k] if k == "n" else _f15(r[k])) for k in cols}
                        for r in rows]}
        print(json.dumps(doc))
    elif args.format == "csv":
        _print_csv(cols, [[r["n"]] + [f"{r[k]:.15g}" for k in cols[1:]]
                          for r in rows])
    else:
        head = f"{'n':>4s} " + " ".join(f"{k:>22s}" for k in cols[1:])
        print(f"series: {args.series}")
        print(head)
        for r in rows:
            line = f"{r['n']:>4d} " + " ".join(f"{r[k]:>22.15g}"
                                               for k in cols[1:])
            print(line)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    suite = build_suite(_env_policy(), _env_max_levels())
    selected = select_identities(suite.identities, args.pattern)
    reports = run_all({i.id: i for i in selected}, None, args.tol_scale)
    if args.pattern is None:
        cases = list(suite.cases.values())
    elif args.pattern in suite.cases:
        cases = [suite.cases[args.pattern]]
    else:
        cases = [case for cid, case in suite.cases.items()
                 if args.pattern in cid]
    outcomes = [adjudicate(case) for case in cases]
    n_pass = sum(r.passed for r in reports)
    n_fail = len(reports) - n_pass
    n_definite = sum(o.verdict != "none" for o in outcomes)
    if args.format == "json":
        doc = {
            "identities": [
                {"id": r.id, "lhs": _f15(r.lhs_value), "rhs": _f15(r.rhs_value),
                 "residual": _f15(r.residual), "tolerance": _f15(r.tolerance),
                 "pass": r.passed, "elapsed": _f15(r.elapsed), "note": r.note}
                for r in reports],
            "adjudications": [
                {"id": o.id, "verdict": o.verdict, "lhs": _f15(o.lhs_value),
                 "tolerance": _f15(o.tolerance),
                 "readings": [
                     {"description": res.description, "value": _f15(res.value),
                      "residual": _f15(res.residual)} for res in o.results]}
                for o in outcomes],
            "summary": {"identities": len(reports), "pass": n_pass,
                        "fail": n_fail, "adjudications": len(outcomes),
                        "definite": n_definite},
        }
        print(json.dumps(doc))
    elif args.format == "csv":
        rows = []
        for r in reports:
            rows.append(["identity", r.id, f"{r.lhs_value:.15g}",
                         f"{r.rhs_value:.15g}", f"{r.residual:.3g}",
                         f"{r.tolerance:.3g}", str(r.passed).lower(),
                         f"{r.elapsed:.3f}", ""])
        for o in outcomes:
            best = min(o.results, key=lambda res: res.residual,
                       default=None)
            rows.append(["adjudication", o.id, f"{o.lhs_value:.15g}",
                         "" if best is None else f"{best.value:.15g}",
                         "" if best is None else f"{best.residual:.3g}",
                         f"{o.tolerance:.3g}",
                         str(o.verdict != "none").lower(), "", o.verdict])
        _print_csv(["kind", "id", "lhs", "rhs", "residual", "tolerance",
                    "pass", "elapsed", "verdict"], rows)
    else:
        for r in reports:
            flag = "pass" if r.passed else "FAIL"
            print(f"{r.id:<22s} lhs={r.lhs_value:< 22.15g}"
                  f" rhs={r.rhs_value:< 22.15g} residual={r.residual:9.3g}"
                  f" tolerance={r.tolerance:9.3g} {flag} ({r.elapsed:.2f}s)")
        if outcomes:
            print("adjudications:")
        for o in outcomes:
            print(f"{o.id}: verdict = {o.verdict}")
            for res in sorted(o.results, key=lambda res: res.residual):
                print(f"    residual {res.residual:9.3g}  {res.description}")
        print(f"summary: {len(reports)} identities, {n_pass} pass,"
              f" {n_fail} fail; {len(outcomes)} adjudications,"
              f" {n_definite} definite")
    return 1 if n_fail else 0


def _cmd_asymptotics(args: argparse.Namespace) -> int:
    rows = [row for row in gn_asymptotics(args.n_max) if row.n >= 2]
    if args.format == "json":
        doc = {"rows": [{"n": row.n, "value": _f15(row.value),
                         "abs_err": _f15(row.abs_err),
                         "ratio": _f15(row.ratio), "sign_ok": row.sign_ok,
                         "note": row.note} for row in rows]}
        print(json.dumps(doc))
    elif args.format == "csv":
        _print_csv(["n", "value", "abs_err", "ratio", "sign_ok", "note"],
                   [[row.n, f"{row.value:.15g}", f"{row.abs_err:.3g}",
                     f"{row.ratio:.15g}", str(row.sign_ok).lower(), row.note]
                    for row in rows])
    else:
        print(f"{'n':>3s} {'value':>22s} {'ratio':>22s}  note")
        for row in rows:
            print(f"{row.n:>3d} {row.value:>22.15g} {row.ratio:>22.15g}"
                  f"  {row.note}")
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("human", "json", "csv"),
                     default="human", help="output format")
    parser = argparse.ArgumentParser(
        prog="specfn",
        description="Log-gamma family special functions, series coefficient "
                    "tables, and an identity verification suite.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[fmt],
                       help="evaluate one function at one point")
    p.add_argument("function", choices=sorted(_EVAL_FUNCS))
    p.add_argument("x", type=float)
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("coeffs", parents=[fmt],
                       help="print stored series coefficients")
    p.add_argument("series", choices=SERIES_LABELS)
    p.add_argument("n_max", type=int)
    p.add_argument("--check", action="store_true",
                   help="add quadrature-measured columns and residuals")
    p.set_defaults(handler=_cmd_coeffs)

    p = sub.add_parser("verify", parents=[fmt],
                       help="run the identity catalog and adjudications")
    p.add_argument("--filter", dest="pattern", default=None,
                   help="exact id, or substring of ids, to run")
    p.add_argument("--tol-scale", dest="tol_scale", type=float, default=1.0,
                   help="multiply every tolerance (exploratory runs)")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("asymptotics", parents=[fmt],
                       help="log-Barnes moment ratios")
    p.add_argument("n_max", type=int)
    p.set_defaults(handler=_cmd_asymptotics)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "coeffs" and args.n_max < 1:
        parser.error("n_max must be >= 1")
    if args.command == "asymptotics" and not 2 <= args.n_max <= 12:
        parser.error("n_max must be between 2 and 12")
    if args.command == "verify" and not args.tol_scale > 0.0:
        parser.error("--tol-scale must be positive")
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except (_UsageError, ArgumentError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
