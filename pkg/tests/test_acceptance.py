"""Acceptance criteria 1-8, one test each.

Every test prints ``criterion <k> PASS|FAIL: <title> (<detail>)``; the same
lines are repeated in the pytest terminal summary.  Run standalone with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time
from math import comb, factorial

import pytest

from shalika import cs_formula as cs
from shalika.exact_arith import LaurentPoly, Monomial, RationalFn, exact_div, rfn_eq
from shalika.oracles import sp_character_det, whittaker_gl2
from shalika.root_data import (
    collapse,
    delta_half,
    dominant_lambdas,
    monomial_of_weight,
    positive_roots_gl,
    positive_roots_sp,
)
from shalika.weyl import alternator, enumerate_gamma, gamma_generators, poincare_Q_inv


def weyl_denominator(n: int) -> LaurentPoly:
    return alternator(LaurentPoly.monomial(monomial_of_weight(cs.ModelContext(n).rho)), n)


def three_path_agreement():
    for n in (1, 2):
        ctx = cs.ModelContext(n)
        lams = dominant_lambdas(n, 3)
        for path in ("gamma_sum", "hecke"):
            ok, _ = cs.lambda_independent(path, ctx, lams)
            if not ok:
                return False, f"{path}/closed depends on lambda at n={n}"
    return True, "gamma_sum and hecke ratios constant at n=1,2, lambda_1<=3"


def gamma_vs_closed_rank3():
    ctx = cs.ModelContext(3)
    lams = dominant_lambdas(3, 2)
    ok, _ = cs.lambda_independent("gamma_sum", ctx, lams)
    return ok, f"{len(lams)} dominant lambdas, |Gamma|={len(ctx.gamma)}"


def casselman_identity():
    signs = {}
    for n in (1, 2):
        s = cs.cross_path_sign(cs.ModelContext(n), dominant_lambdas(n, 3))
        if s is None:
            return False, f"no global sign at n={n}"
        signs[n] = s
    return True, "per-rank signs " + ", ".join(f"n={n}: {s:+d}" for n, s in signs.items())


def t_zero_degeneration():
    count = 0
    for n in (1, 2, 3):
        ctx = cs.ModelContext(n)
        denom = weyl_denominator(n)
        for lam in dominant_lambdas(n, 3):
            delta = LaurentPoly.monomial(delta_half(lam))
            at_zero = exact_div(cs.omega_closed(lam, ctx), delta).specialize_u(0)
            if at_zero != sp_character_det(lam) * denom:
                return False, f"mismatch at {lam}"
            count += 1
    return True, f"{count} lambdas, determinant oracle vs group-sum alternator"


def divisibility():
    count = 0
    for n in (1, 2, 3):
        ctx = cs.ModelContext(n)
        denom = weyl_denominator(n)
        gens = gamma_generators(n)
        for lam in dominant_lambdas(n, 3):
            q = exact_div(cs.closed_alternant(lam, ctx), denom)
            for m, c in q.items():
                if not isinstance(c, int) or m.u < 0 or m.u % 2:
                    return False, f"coefficient {c} at u^{m.u} for {lam}"
            if any(s.act_poly(q) != q for s in gens):
                return False, f"quotient not Gamma-invariant at {lam}"
            count += 1
    return True, f"{count} quotients in Z[t][x^+-1]^Gamma"


def vanishing_locus():
    count = 0
    for n in (1, 2, 3):
        ctx = cs.ModelContext(n)
        for lam in dominant_lambdas(n, 2, -2):
            if lam[-1] >= 0:
                continue
            if cs.omega_closed(lam, ctx):
                return False, f"nonzero at {lam}"
            count += 1
    return True, f"{count} lambdas with lambda_n<0"


def whittaker_specialization():
    ctx = cs.ModelContext(1)
    x, t = LaurentPoly.var(1, 1), LaurentPoly.tvar(1)
    fixed = RationalFn((1 - t * x**2) * (x - x**-1))
    for lam in range(6):
        if not rfn_eq(RationalFn(cs.omega_closed((lam,), ctx), whittaker_gl2(lam)), fixed):
            return False, f"lambda={lam}"
    return True, "ratio (1 - t x^2)(x - x^-1) for lambda=0..5"


def group_invariants():
    start = time.perf_counter()
    for n in range(1, 5):
        group = enumerate_gamma(n)
        if len(group) != 2**n * factorial(n) or any(w.sign != w.determinant() for w in group):
            return False, f"parity fails at n={n}"
    for n in range(1, 4):
        t = LaurentPoly.tvar(n)
        expected = LaurentPoly.one(n)
        for i in range(1, 2 * n + 1):
            expected = expected * sum((t**k for k in range(i)), LaurentPoly.zero(n))
        if poincare_Q_inv(n) != expected:
            return False, f"Poincare product fails at 2n={2 * n}"
    for n in range(1, 7):
        fibres: dict = {}
        for a in positive_roots_gl(n):
            fibres.setdefault(collapse(a, n)[0], []).append(a)
        sp = positive_roots_sp(n)
        if len(fibres) != len(sp) or len(positive_roots_gl(n)) != comb(2 * n, 2):
            return False, f"collapse image wrong at n={n}"
        for a in sp:
            if len(fibres.get(a, ())) != (1 if a.is_long else 2):
                return False, f"fibre over {a.vec} at n={n}"
    elapsed = time.perf_counter() - start
    return elapsed < 10, f"parity n<=4, Poincare 2n<=6, collapse n<=6 in {elapsed:.2f}s"


CRITERIA = [
    (1, "three-path agreement", three_path_agreement),
    (2, "closed vs gamma sum at n=3", gamma_vs_closed_rank3),
    (3, "Casselman assembly equals closed form up to sign", casselman_identity),
    (4, "t=0 degeneration", t_zero_degeneration),
    (5, "Weyl-denominator divisibility", divisibility),
    (6, "vanishing locus", vanishing_locus),
    (7, "Whittaker specialization", whittaker_specialization),
    (8, "group-theory invariants", group_invariants),
]


def evaluate(k: int, title: str, fn) -> tuple[bool, str]:
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    line = f"criterion {k} {'PASS' if passed else 'FAIL'}: {title} ({detail}; {time.perf_counter() - start:.2f}s)"
    return passed, line


@pytest.mark.parametrize("k, title, fn", CRITERIA, ids=[f"criterion_{k}" for k, _, _ in CRITERIA])
def test_criterion(k, title, fn, record_property):
    passed, line = evaluate(k, title, fn)
    print(line)
    record_property("acceptance", line)
    assert passed, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(p for p, _ in results) else 1)
