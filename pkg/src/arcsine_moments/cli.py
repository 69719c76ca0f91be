"""Command-line front end: ``arcsine-moments <command> ...``.

Precision is given in bits (``--prec``, default from ``ARCSINE_MOMENTS_PREC``
or 128); ``--digits`` only controls how many significant digits are printed.
Output for fixed flags is byte-identical across runs.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import mpmath
from mpmath import mp

from .closed_form import ClosedForm, arcsine_power_integral, eval_closed_form, specialize_pi
from .harmonic import g_table, h_table
from .pipoly import PiPoly
from .precision import DEFAULT_PRECISION, PrecisionContext, mpf_to_str, to_mpf

EXACT_POINTS = {"1": "1", "sqrt2/2": "sqrt2/2", "1/sqrt2": "sqrt2/2", "sqrt(2)/2": "sqrt2/2", "1/sqrt(2)": "sqrt2/2"}


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


# integral -------------------------------------------------------------------------


def cmd_integral(args, ctx: PrecisionContext) -> int:
    if args.q < 1:
        raise UsageError("--q must be >= 1 (the q = 0 integral is x^(n+1)/(n+1))")
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    cf = arcsine_power_integral(args.n, args.q)
    out: dict = {"n": args.n, "q": args.q, "closed_form": cf.to_latex() if args.format == "latex" else str(cf)}
    exact = None
    if args.x is not None:
        with ctx.workprec():
            if abs(to_mpf(args.x)) > 1:
                raise UsageError("|x| must be <= 1")
        value = eval_closed_form(cf, args.x, ctx)
        out["x"] = args.x
        out["value"] = mpf_to_str(value, args.digits)
        point = EXACT_POINTS.get(args.x.replace(" ", ""))
        if point is not None:
            exact = specialize_pi(cf, point)
            out["exact"] = exact.to_latex() if args.format == "latex" else str(exact)
    if args.format == "json":
        if exact is not None:
            out["exact_terms"] = exact.to_json()["terms"]
        out["terms"] = cf.to_json()["terms"]
        print(_dump(out))
    elif args.format == "csv":
        keys = [k for k in ("n", "q", "x", "closed_form", "exact", "value") if k in out]
        print(_csv(keys, [[out[k] for k in keys]]))
    else:
        print(out["closed_form"])
        if "exact" in out:
            print(out["exact"])
        if "value" in out:
            print(out["value"])
    return 0


# series ---------------------------------------------------------------------------


def _series_params(args) -> dict:
    params = {}
    for name in ("p", "n", "m", "ell"):
        v = getattr(args, name)
        if v is not None:
            params[name] = v
    if args.x is not None:
        params["x"] = args.x
    return params


def cmd_series(args, ctx: PrecisionContext) -> int:
    from .identities import IDENTITIES, corollary_rhs, identity_lhs, rhs_value
    from .series import sum_series

    if args.list:
        rows = [(i.id, " ".join(i.params) or "-", i.description) for i in IDENTITIES.values()]
        if args.format == "json":
            print(_dump([{"id": a, "params": b, "description": c} for a, b, c in rows]))
        elif args.format == "csv":
            print(_csv(["id", "params", "description"], rows))
        else:
            for a, b, c in rows:
                print(f"{a:<10} {b:<10} {c}")
        return 0
    if args.id is None:
        raise UsageError("series needs --id (or --list)")
    params = _series_params(args)
    try:
        spec, factor = identity_lhs(args.id, params, ctx)
    except KeyError as e:
        raise UsageError(str(e.args[0])) from None
    except ValueError as e:
        raise UsageError(str(e)) from None
    with ctx.workprec():
        tol = to_mpf(args.tol) if args.tol is not None else ctx.eps(16)
        result = sum_series(spec, tolerance=tol / factor, max_terms=args.terms, ctx=ctx)
        lhs = result.partial_sum * factor
        tail = result.tail_estimate * factor
        rhs_obj = corollary_rhs(args.id, params, ctx)
        rhs = rhs_value(args.id, params, ctx)
        diff = abs(lhs - rhs)
        agrees = bool(diff <= tail + ctx.eps(16))
    if isinstance(rhs_obj, (PiPoly, ClosedForm)):
        rhs_text = rhs_obj.to_latex() if args.format == "latex" else str(rhs_obj)
    else:
        rhs_text = None
    digits = args.digits
    out = {
        "id": args.id,
        "params": {k: str(v) for k, v in sorted(params.items())},
        "partial_sum": mpf_to_str(lhs, digits),
        "terms_used": result.terms_used,
        "tail_estimate": mpmath.nstr(tail, 6),
        "converged": result.converged,
        "rhs": mpf_to_str(rhs, digits),
        "abs_difference": mpmath.nstr(diff, 6),
        "within_tail": agrees,
    }
    if rhs_text is not None:
        out["rhs_exact"] = rhs_text
    if args.format == "json":
        print(_dump(out))
    elif args.format == "csv":
        keys = ["id", "partial_sum", "terms_used", "tail_estimate", "converged", "rhs", "abs_difference", "within_tail"]
        print(_csv(keys, [[out[k] for k in keys]]))
    else:
        width = max(len(k) for k in out)
        for k, v in out.items():
            print(f"{k:<{width}}  {v}")
    return 0


# pi ---------------------------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("n values must be positive")
    return values


def cmd_pi(args, ctx: PrecisionContext) -> int:
    from .limits import pi_limit_target, pi_limit_value

    low = 0 if args.family == "odd" else 1
    if args.p < low:
        raise UsageError(f"the {args.family} family needs --p >= {low}")
    rows = []
    for n in args.n:
        v = pi_limit_value(args.family, args.p, n, ctx, method=args.method)
        with ctx.workprec():
            err = abs(v - pi_limit_target(args.family, args.p))
        rows.append((n, mpf_to_str(v, args.digits), mpmath.nstr(err, 6)))
    if args.format == "json":
        print(_dump({
            "family": args.family,
            "p": args.p,
            "target": f"pi^{2 * args.p + 1 if args.family == 'odd' else 2 * args.p}",
            "rows": [{"n": n, "value": v, "abs_error": e} for n, v, e in rows],
        }))
    elif args.format == "plain":
        for n, v, e in rows:
            print(f"{n:>8}  {v}  {e}")
    else:
        print(_csv(["n", "value", "abs_error"], rows))
    return 0


# verify -----------------------------------------------------------------------------


def cmd_verify(args, ctx: PrecisionContext) -> int:
    from .verify import SUITES, run_suite

    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(sorted(SUITES))}")
    params = {k: getattr(args, k) for k in ("pmax", "lmax", "qmax", "nmax", "kmax") if getattr(args, k) is not None}
    report = run_suite(args.suite, params, ctx)
    print(report.to_json() if args.format == "json" else report.to_table())
    return 0 if report.passed else 1


# tables -----------------------------------------------------------------------------


def cmd_tables(args, ctx: PrecisionContext) -> int:
    if args.kind == "G":
        table = g_table(args.pmax, args.kmax)
    else:
        if args.pmax < 1 or args.kmax < 1:
            raise UsageError("H tables need --pmax >= 1 and --kmax >= 1")
        table = h_table(args.pmax, args.kmax)
    if args.format == "json":
        rows = [row.split(",") for row in table.to_csv().splitlines()[1:]]
        print(_dump([{"p": int(p), "k": int(k), "num": a, "den": b} for p, k, a, b in rows]))
    else:
        print(table.to_csv().rstrip("\n"))
    return 0


# parser -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=None, help=f"working precision in bits (default {DEFAULT_PRECISION})")
    common.add_argument("--digits", type=int, default=30, help="significant digits printed")
    common.add_argument("--format", choices=("plain", "latex", "json", "csv"), default="plain")

    parser = argparse.ArgumentParser(
        prog="arcsine-moments",
        description="Closed forms, series and limits for integrals of powers of arcsin.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("integral", parents=[common], help="closed form of int_0^x t^n arcsin(t)^q dt")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--x", default=None, help="evaluation point, e.g. 0.5, 1, sqrt2/2")
    p.set_defaults(func=cmd_integral)

    p = sub.add_parser("series", parents=[common], help="sum a series identity and compare with its right side")
    p.add_argument("--id", default=None)
    p.add_argument("--list", action="store_true", help="list identity ids")
    for name in ("p", "n", "m", "ell"):
        p.add_argument(f"--{name}", type=int, default=None)
    p.add_argument("--x", default=None)
    p.add_argument("--terms", type=int, default=10**6, help="maximum number of terms")
    p.add_argument("--tol", default=None, help="absolute tolerance (default 2^-(prec-16))")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("pi", parents=[common], help="convergence table of the pi-power limit sequences")
    p.add_argument("--family", choices=("odd", "even"), required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=_int_list, default=[16, 64, 256, 1024, 4096], help="comma-separated n values")
    p.add_argument("--method", choices=("integral", "closed", "series"), default="integral")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite; exit status 0 iff all pass")
    p.add_argument("--suite", required=True)
    for name in ("pmax", "lmax", "qmax", "nmax", "kmax"):
        p.add_argument(f"--{name}", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", parents=[common], help="exact G_p(k) or H_p(k) tables as CSV")
    p.add_argument("--kind", choices=("G", "H"), required=True)
    p.add_argument("--pmax", type=int, default=3)
    p.add_argument("--kmax", type=int, default=10)
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "pi" and "--format" not in (argv if argv is not None else sys.argv[1:]):
        args.format = "csv"
    try:
        ctx = PrecisionContext(args.prec if args.prec is not None else DEFAULT_PRECISION)
    except ValueError as e:
        parser.error(str(e))
    if args.digits < 1:
        parser.error("--digits must be >= 1")
    try:
        with mp.workprec(ctx.precision):
            return args.func(args, ctx)
    except UsageError as e:
        parser.error(str(e))
    return 2  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
