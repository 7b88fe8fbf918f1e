"""Command-line front end: solve, verify, tables, numcheck.

Output formats: plain canonical text, LaTeX, or JSON (set per-invocation
with --output or by default through LAYERPOISSON_OUTPUT).  The exit status
is 0 only when the requested computation succeeds and, for solve/verify,
the solution is certified exact.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import dirichlet, mixed, numcheck
from .parsing import PolyParseError, parse_poly
from .polyring import Poly, Ring, to_latex, to_text
from .solver import LayerProblem, SolutionReport, solve, verify

OUTPUT_ENV_VAR = "LAYERPOISSON_OUTPUT"
FORMATS = ("plain", "latex", "json")


class UsageError(ValueError):
    pass


def _default_output() -> str:
    fmt = os.environ.get(OUTPUT_ENV_VAR, "plain")
    return fmt if fmt in FORMATS else "plain"


def _parse_width(text: str) -> Fraction:
    try:
        a = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid width {text!r}: {exc}") from None
    if a <= 0:
        raise UsageError("width must be positive")
    return a


def _parse_data(expr: str, n: int, what: str, allow_y: bool) -> Poly:
    try:
        p = parse_poly(expr, n)
    except PolyParseError as exc:
        raise UsageError(f"cannot parse {what}: {exc}") from None
    if not allow_y and p.degree_in(n) != 0:
        raise UsageError(f"{what} must not involve y")
    return p


def _problem_from_args(args) -> LayerProblem:
    if args.problem:
        with open(args.problem, encoding="utf-8") as fh:
            data = json.load(fh)
        try:
            n = int(data["n"])
            a = _parse_width(str(data["a"]))
            kind = data["kind"]
            rhs = _parse_data(data["rhs"], n, "rhs", allow_y=True)
            lower = _parse_data(data["lower"], n, "lower boundary", allow_y=False)
            upper = _parse_data(data["upper"], n, "upper boundary", allow_y=False)
        except KeyError as exc:
            raise UsageError(f"problem file is missing field {exc}") from None
    else:
        for flag in ("dim", "width", "kind", "rhs", "lower", "upper"):
            if getattr(args, flag, None) is None:
                raise UsageError(f"--{flag} is required unless --problem is given")
        n = args.dim
        a = _parse_width(args.width)
        kind = args.kind
        rhs = _parse_data(args.rhs, n, "rhs", allow_y=True)
        lower = _parse_data(args.lower, n, "lower boundary", allow_y=False)
        upper = _parse_data(args.upper, n, "upper boundary", allow_y=False)
    try:
        return LayerProblem(n=n, a=a, rhs=rhs, kind=kind, lower=lower, upper=upper)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _print_report(report: SolutionReport, n: int, fmt: str) -> None:
    names = Ring(n).names
    if fmt == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
        return
    render = to_latex if fmt == "latex" else to_text
    print(f"solution: {render(report.u, names)}")
    print(f"residual_pde: {render(report.residual_pde, names)}")
    print(f"residual_lower: {render(report.residual_lower, names)}")
    print(f"residual_upper: {render(report.residual_upper, names)}")
    print(f"verified: {str(report.verified).lower()}")


def _cmd_solve(args) -> int:
    problem = _problem_from_args(args)
    report = solve(problem)
    _print_report(report, problem.n, args.output)
    return 0 if report.verified else 1


def _cmd_verify(args) -> int:
    problem = _problem_from_args(args)
    u = _parse_data(args.solution, problem.n, "solution", allow_y=True)
    report = verify(u, problem)
    _print_report(report, problem.n, args.output)
    return 0 if report.verified else 1


_FAMILIES = {
    "f": dirichlet.f_poly,
    "p": mixed.p_poly,
    "q": mixed.q_poly,
}


def _cmd_tables(args) -> int:
    gen = _FAMILIES[args.family]
    names = ("y", "a")
    entries = [(m, gen(m)) for m in range(args.max_m + 1)]
    if args.output == "json":
        payload = [
            {"m": m, "poly": p.to_json_dict(), "text": to_text(p, names)}
            for m, p in entries
        ]
        print(json.dumps(payload, indent=2))
    elif args.output == "latex":
        for m, p in entries:
            print(f"{args.family}_{{{2 * m}}}(y) = {to_latex(p, names)}")
        return 0
    else:
        for m, p in entries:
            print(f"{args.family}{2 * m}(y) = {to_text(p, names)}")
    return 0


def _cmd_numcheck(args) -> int:
    results = numcheck.run_all_checks()
    if args.output == "json":
        print(json.dumps([r.to_json_dict() for r in results], indent=2))
    else:
        for r in results:
            status = "pass" if r.passed else "FAIL"
            print(f"{status}  {r.name:<42} error={r.error:.3e} tol={r.tolerance:.1e}")
        n_fail = sum(not r.passed for r in results)
        print(f"{len(results) - n_fail}/{len(results)} checks passed")
    return 0 if all(r.passed for r in results) else 1


def _add_problem_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--problem", help="JSON problem file (overrides the flags below)")
    sub.add_argument("--dim", type=int, help="spatial dimension n")
    sub.add_argument("--width", help="layer width a, rational like 1 or 7/3")
    sub.add_argument("--kind", choices=("dirichlet", "mixed"))
    sub.add_argument("--rhs", help="right-hand side polynomial in x1..xn, y")
    sub.add_argument("--lower", help="boundary value at y=0 (no y)")
    sub.add_argument("--upper", help="value (dirichlet) or y-derivative (mixed) at y=a")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="layerpoisson",
        description="Exact polynomial solver for the Poisson equation in a layer.",
    )
    parser.add_argument(
        "--output",
        choices=FORMATS,
        default=None,
        dest="output_global",
        help=f"output format (default from ${OUTPUT_ENV_VAR}, else plain)",
    )
    fmt_parent = argparse.ArgumentParser(add_help=False)
    fmt_parent.add_argument("--output", choices=FORMATS, default=None)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser(
        "solve", parents=[fmt_parent], help="solve a layer problem and certify the result"
    )
    _add_problem_args(sub)
    sub.set_defaults(func=_cmd_solve)

    sub = subs.add_parser("verify", parents=[fmt_parent], help="check a candidate solution exactly")
    _add_problem_args(sub)
    sub.add_argument("--solution", required=True, help="candidate solution polynomial")
    sub.set_defaults(func=_cmd_verify)

    sub = subs.add_parser("tables", parents=[fmt_parent], help="dump a polynomial family with symbolic width")
    sub.add_argument("--family", choices=tuple(_FAMILIES), required=True)
    sub.add_argument("--max-m", type=int, default=5)
    sub.set_defaults(func=_cmd_tables)

    sub = subs.add_parser("numcheck", parents=[fmt_parent], help="run the numeric cross-check battery")
    sub.set_defaults(func=_cmd_numcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.output = args.output or args.output_global or _default_output()
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
