"""Command-line interface: ``shalika table | eval | verify``.

Exit codes: 0 success, 1 verification failure, 2 bad request or guard,
3 internal NotDivisible/consistency failure, 4 vanishing denominator.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence

from . import cs_formula as cs
from .errors import (
    ConsistencyError,
    DenominatorVanishes,
    GuardViolation,
    NotDivisible,
    NotDominant,
    RankMismatch,
    RankTooLarge,
    ZeroBase,
)
from .exact_arith import LaurentPoly, RationalFn, parse_poly, parse_rational
from .root_data import dominant_lambdas
from .verify import SUITES, run_verify

MODES = {"closed": "closed", "gamma": "gamma_sum", "hecke": "hecke"}
FORMATS = ("json", "csv", "latex")
MAX_RANK = {"closed": 4, "gamma": 4, "hecke": 3}
LAMBDA_MAX_LIMIT = 6


def check_guards(n: int, mode: str, lambda_max: int | None = None) -> None:
    if mode not in MODES:
        raise GuardViolation(f"unknown mode {mode!r}")
    if not 1 <= n <= MAX_RANK[mode]:
        raise GuardViolation(f"--n must be in 1..{MAX_RANK[mode]} for mode {mode}, got {n}")
    if lambda_max is not None and not 0 <= lambda_max <= LAMBDA_MAX_LIMIT:
        raise GuardViolation(f"--lambda-max must be in 0..{LAMBDA_MAX_LIMIT}, got {lambda_max}")


def compute_value(n: int, mode: str, lam: Sequence[int], cancel: bool = True) -> LaurentPoly | RationalFn:
    """The value of one mode at one lambda, optionally cancelled as far as exact division allows."""
    ctx = cs.ModelContext(n)
    value = cs.omega(lam, ctx, MODES[mode]).value
    if cancel and isinstance(value, RationalFn):
        value = value.cancel()
    return value


def _record(args: tuple[int, str, tuple[int, ...]]) -> dict:
    n, mode, lam = args
    value = compute_value(n, mode, lam)
    return {"lambda": list(lam), "mode": mode, "value": value.to_json()}


def thread_cap() -> int:
    raw = os.environ.get("CS_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise GuardViolation(f"CS_THREADS must be a positive integer, got {raw!r}") from None
    return os.cpu_count() or 1


def table_records(n: int, lambda_max: int, mode: str) -> list[dict]:
    check_guards(n, mode, lambda_max)
    jobs = [(n, mode, lam) for lam in dominant_lambdas(n, lambda_max)]
    workers = min(thread_cap(), len(jobs))
    if workers <= 1:
        return [_record(j) for j in jobs]
    # map() keeps lambda order regardless of completion order
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_record, jobs))


def value_from_json(obj, n: int) -> LaurentPoly | RationalFn:
    """Inverse of the ``value`` field of a JSON record."""
    if isinstance(obj, dict):
        return RationalFn.from_json(obj, n)
    return LaurentPoly.from_json(obj, n)


def _num_den(obj, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    if isinstance(obj, dict):
        return LaurentPoly.from_json(obj["num"], n), LaurentPoly.from_json(obj["den"], n)
    return LaurentPoly.from_json(obj, n), LaurentPoly.one(n)


def render_json(n: int, mode: str, records: list[dict]) -> str:
    return json.dumps({"n": n, "mode": mode, "records": records}, indent=2) + "\n"


def render_csv(n: int, records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["lambda", "mode", "num", "den"])
    for r in records:
        num, den = _num_den(r["value"], n)
        writer.writerow([",".join(map(str, r["lambda"])), r["mode"], num.to_text(), den.to_text()])
    return buf.getvalue()


def render_latex(n: int, records: list[dict]) -> str:
    lines = [r"\begin{tabular}{ll}", r"$\lambda$ & $\Omega(g_\lambda)$ \\", r"\hline"]
    for r in records:
        num, den = _num_den(r["value"], n)
        body = num.to_latex() if den == 1 else rf"\frac{{{num.to_latex()}}}{{{den.to_latex()}}}"
        lam = ",".join(map(str, r["lambda"]))
        lines.append(rf"$({lam})$ & ${body}$ \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def parse_csv_table(text: str, n: int) -> list[tuple[tuple[int, ...], str, RationalFn]]:
    """Read back :func:`render_csv` output."""
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        lam = tuple(int(v) for v in row["lambda"].split(","))
        out.append((lam, row["mode"], RationalFn(parse_poly(row["num"], n), parse_poly(row["den"], n))))
    return out


def parse_rational_list(text: str) -> list[Fraction | int]:
    try:
        return [parse_rational(s.strip()) for s in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise GuardViolation(f"cannot parse rational list {text!r}: {exc}") from None


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(s) for s in text.split(","))
    except ValueError:
        raise GuardViolation(f"cannot parse integer list {text!r}") from None


def u_from_q(q: Fraction | int) -> Fraction:
    """``u = q^{-1/2}``, accepted only when ``q`` is the square of a positive rational."""
    q = Fraction(q)
    if q <= 0:
        raise GuardViolation(f"q must be positive, got {q}")
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a != q.numerator or b * b != q.denominator:
        raise GuardViolation(f"q = {q} is not the square of a rational; pass --u instead")
    return Fraction(b, a)


def run_eval(n: int, lam: Sequence[int], xs: Sequence, u, mode: str) -> Fraction:
    check_guards(n, mode)
    if len(xs) != n:
        raise GuardViolation(f"--x needs {n} values, got {len(xs)}")
    # the assembled expression is evaluated as is, so its own poles are reported
    value = compute_value(n, mode, lam, cancel=False)
    return Fraction(value.eval_numeric(xs, u))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shalika", description="Exact spherical Shalika function of GL_2n.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="tabulate Omega(g_lambda) over a lambda budget")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--lambda-max", type=int, required=True)
    t.add_argument("--mode", choices=sorted(MODES), default="closed")
    t.add_argument("--format", choices=FORMATS, default="json")

    e = sub.add_parser("eval", help="evaluate at a rational point")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--lambda", dest="lam", required=True, help="comma separated, e.g. 1,0")
    e.add_argument("--x", required=True, help="comma separated rationals, e.g. 2,1/3")
    g = e.add_mutually_exclusive_group(required=True)
    g.add_argument("--u", help="u = q^(-1/2) as a rational")
    g.add_argument("--q", help="residue field size; must be a rational square")
    e.add_argument("--mode", choices=sorted(MODES), default="closed")

    v = sub.add_parser("verify", help="run verification suites and print a JSON report")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--n-max", type=int, default=2)
    v.add_argument("--lambda-budget", type=int, default=2)
    return p


def _dispatch(args: argparse.Namespace, out) -> int:
    if args.command == "table":
        records = table_records(args.n, args.lambda_max, args.mode)
        if args.format == "json":
            out.write(render_json(args.n, args.mode, records))
        elif args.format == "csv":
            out.write(render_csv(args.n, records))
        else:
            out.write(render_latex(args.n, records))
        return 0
    if args.command == "eval":
        lam = parse_int_list(args.lam)
        xs = parse_rational_list(args.x)
        if args.u is not None:
            u = parse_rational_list(args.u)[0]
        else:
            u = u_from_q(parse_rational_list(args.q)[0])
        out.write(str(run_eval(args.n, lam, xs, u, args.mode)) + "\n")
        return 0
    report = run_verify(args.suite, args.n_max, args.lambda_budget)
    out.write(json.dumps(report.to_json(), indent=2) + "\n")
    return 0 if report.passed else 1


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = io.StringIO()
    try:
        code = _dispatch(args, out)
    except DenominatorVanishes as exc:
        print(f"error: denominator vanishes: {exc}", file=sys.stderr)
        return 4
    except (NotDivisible, ConsistencyError) as exc:
        print(f"error: internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except (GuardViolation, RankTooLarge, RankMismatch, NotDominant, ZeroBase, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    # buffered so a failing request never emits a partial document
    sys.stdout.write(out.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
