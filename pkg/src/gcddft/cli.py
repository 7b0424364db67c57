"""Command-line front end: evaluate, tabulate, verify, export.

Exit codes: 0 success / all identities pass, 1 identity failures
(counterexamples go to stderr), 2 usage errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import dft, identities, lambert, roots


def _fmt_exact(value) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _fmt_float(value: float) -> str:
    return f"{value:.12g}"


def _emit_rows(schema: str, header: list[str], rows: list[list], fmt: str) -> None:
    if fmt == "json":
        payload = {"schema": schema, "rows": [dict(zip(header, row)) for row in rows]}
        print(json.dumps(payload))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


_EVAL_FNS = ("phi_a", "ramanujan", "pillai", "id_a", "count-pairs", "kappa")


def _eval_one(fn: str, a: Optional[int], m: Optional[int], method: Optional[str]) -> int:
    if m is None:
        raise ValueError(f"{fn} requires --m")
    if fn == "pillai":
        return dft.pillai(m)
    if a is None:
        raise ValueError(f"{fn} requires --a")
    if fn == "phi_a":
        return dft.phi_a(a, m, method or "closed")
    if fn == "ramanujan":
        return dft.ramanujan(m, a, method or "kluyver")
    if fn == "id_a":
        return dft.id_a(a, m)
    if fn == "count-pairs":
        return dft.count_factorizations(a, m)
    if fn == "kappa":
        return lambert.kappa(a, m)
    raise ValueError(f"unknown function {fn!r}")


def _cmd_eval(args) -> int:
    print(_eval_one(args.fn, args.a, args.m, args.method))
    return 0


def _cmd_table(args) -> int:
    a_lo = 1 if args.fn == "kappa" else 0
    rows = []
    for m in range(1, args.m_max + 1):
        for a in range(a_lo, args.a_max + 1):
            value = _eval_one(args.fn, a, m, args.method)
            rows.append([m, a, _fmt_exact(value)])
    _emit_rows("table", ["m", "a", "value"], rows, args.format)
    return 0


def _cmd_verify(args) -> int:
    bounds = {}
    if args.n_max is not None:
        bounds["n"] = args.n_max
    if args.m_max is not None:
        bounds["m"] = args.m_max
    if args.a_max is not None:
        bounds["a"] = args.a_max
    if args.target == "all":
        reports = identities.verify_all(bounds or None, mutate=args.mutate)
    else:
        entries = identities.registry(mutate=args.mutate)
        matches = [e for e in entries if e.id == args.target]
        if not matches:
            raise ValueError(f"unknown identity id {args.target!r}")
        reports = [identities.verify(matches[0], bounds or None)]
    rows = []
    failed = 0
    for rep in reports:
        rows.append(
            [rep.id, rep.points_checked, len(rep.failures), round(rep.elapsed * 1000)]
        )
        for point, lhs, rhs in rep.failures:
            failed += 1
            assign = ",".join(f"{k}={v}" for k, v in point.items())
            print(f"FAIL {rep.id} [{assign}] lhs={lhs} rhs={rhs}", file=sys.stderr)
    _emit_rows("report", ["id", "points", "failures", "elapsed_ms"], rows, args.format)
    return 1 if failed else 0


def _cmd_poly(args) -> int:
    poly = lambert.poly_p(args.a) if args.which == "p" else lambert.poly_q(args.a)
    if args.eval_at is None:
        print(" ".join(str(c) for c in poly.coeffs))
        return 0
    try:
        x = Fraction(args.eval_at)
    except ValueError as exc:
        raise ValueError(f"cannot parse --eval-at value {args.eval_at!r}") from exc
    print(_fmt_exact(poly(x)))
    return 0


def _cmd_roots(args) -> int:
    if args.which == "p":
        poly = lambert.poly_p(args.a)
        order = args.order if args.order is not None else args.a
        target = args.target or "unity"
    else:
        poly = lambert.poly_q(args.a)
        order = args.order if args.order is not None else 2 * args.a
        target = args.target or "minus-one"
    rs = roots.find_roots(poly, poly_id=f"{args.which}[{args.a}]")
    target_key = "roots_of_unity" if target == "unity" else "roots_of_minus_one"
    rs = roots.unity_distances(rs, order, target_key)
    rows = []
    for z, res, dist in zip(rs.roots, rs.residuals, rs.distances):
        if args.format == "json":
            rows.append(
                [
                    float(_fmt_float(z.real)),
                    float(_fmt_float(z.imag)),
                    float(_fmt_float(res)),
                    float(_fmt_float(dist)),
                ]
            )
        else:
            rows.append([_fmt_float(z.real), _fmt_float(z.imag), _fmt_float(res), _fmt_float(dist)])
    _emit_rows("rootset", ["re", "im", "residual", "min_distance"], rows, args.format)
    return 0


def _cmd_lambert(args) -> int:
    result = lambert.lambert_check(args.a, args.x, args.terms, alternating=args.alternating)
    _emit_rows(
        "table",
        ["lhs", "rhs", "gap"],
        [[_fmt_float(result.lhs), _fmt_float(result.rhs), _fmt_float(result.gap)]],
        "csv",
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcddft",
        description="Exact arithmetic for the Fourier transform of the gcd.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at one point")
    p_eval.add_argument("fn", choices=_EVAL_FNS)
    p_eval.add_argument("--a", type=int)
    p_eval.add_argument("--b", type=int, help="unused by current functions")
    p_eval.add_argument("--m", type=int)
    p_eval.add_argument("--method")
    p_eval.set_defaults(handler=_cmd_eval)

    p_table = sub.add_parser("table", help="tabulate a function over (m, a)")
    p_table.add_argument("fn", choices=_EVAL_FNS)
    p_table.add_argument("--m-max", type=int, required=True)
    p_table.add_argument("--a-max", type=int, default=0)
    p_table.add_argument("--method")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.set_defaults(handler=_cmd_table)

    p_verify = sub.add_parser("verify", help="verify identities over parameter grids")
    p_verify.add_argument("target", help="identity id or 'all'")
    p_verify.add_argument("--n-max", type=int)
    p_verify.add_argument("--m-max", type=int)
    p_verify.add_argument("--a-max", type=int)
    p_verify.add_argument("--format", choices=("csv", "json"), default="csv")
    p_verify.add_argument(
        "--mutate",
        help="deliberately corrupt this entry's rhs (suite sensitivity check)",
    )
    p_verify.set_defaults(handler=_cmd_verify)

    p_poly = sub.add_parser("poly", help="print a Lambert polynomial")
    p_poly.add_argument("which", choices=("p", "q"))
    p_poly.add_argument("--a", type=int, required=True)
    p_poly.add_argument("--eval-at", help="evaluate at an exact rational, e.g. 3/10 or 0.3")
    p_poly.set_defaults(handler=_cmd_poly)

    p_roots = sub.add_parser("roots", help="export roots and distances to reference roots")
    p_roots.add_argument("which", choices=("p", "q"))
    p_roots.add_argument("--a", type=int, required=True)
    p_roots.add_argument("--order", type=int)
    p_roots.add_argument("--target", choices=("unity", "minus-one"))
    p_roots.add_argument("--format", choices=("csv", "json"), default="csv")
    p_roots.set_defaults(handler=_cmd_roots)

    p_lambert = sub.add_parser("lambert", help="compare a Lambert series against its closed form")
    p_lambert.add_argument("--a", type=int, required=True)
    p_lambert.add_argument("--x", type=float, required=True)
    p_lambert.add_argument("--terms", type=int, required=True)
    p_lambert.add_argument("--alternating", action="store_true")
    p_lambert.set_defaults(handler=_cmd_lambert)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
