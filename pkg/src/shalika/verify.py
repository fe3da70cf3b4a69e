"""Verification suites behind ``shalika verify``.

Each suite runs the stated invariants of one module at the requested
budget and returns a :class:`VerifyReport`.  Budgets are clipped per check
to that check's own guard (e.g. Gamma parity stops at n = 4).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import cs_formula as cs
from .errors import GuardViolation, NotDivisible
from .exact_arith import LaurentPoly, Monomial, RationalFn, eval_numeric, exact_div, rfn_eq
from .oracles import alternant_det, sp_character_det, weyl_dimension, whittaker_gl2
from .root_data import (
    chi_of_gl_root,
    collapse,
    delta_half,
    dominant_lambdas,
    monomial_of_weight,
    positive_roots_gl,
    positive_roots_sp,
    rho,
)
from .weyl import (
    alternator,
    embed_in_W,
    enumerate_gamma,
    gamma_generators,
    poincare_Q_inv,
)

SUITES = ("arith", "roots", "weyl", "paths", "oracles", "all")
N_MAX_LIMIT = 6
LAMBDA_BUDGET_LIMIT = 6


@dataclass
class Check:
    name: str
    passed: bool
    detail: object = None
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "detail": self.detail,
            "seconds": round(self.seconds, 4),
        }


@dataclass
class VerifyReport:
    suite: str
    n_max: int
    lambda_budget: int
    checks: list[Check] = field(default_factory=list)
    calibration: dict = field(default_factory=dict)
    roots: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "n_max": self.n_max,
            "lambda_budget": self.lambda_budget,
            "checks": [c.to_json() for c in self.checks],
            "calibration": self.calibration,
            "roots": self.roots,
        }


def _run(report: VerifyReport, name: str, fn: Callable[[], object]) -> None:
    start = time.perf_counter()
    try:
        result = fn()
        if isinstance(result, tuple):
            passed, detail = result
        else:
            passed, detail = bool(result), None
    except Exception as exc:  # a crashing check is a failing check
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    report.checks.append(Check(name, passed, detail, time.perf_counter() - start))


# -- arith --------------------------------------------------------------------

def random_poly(rng: random.Random, n: int, max_terms: int = 8, span: int = 5) -> LaurentPoly:
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        x = tuple(rng.randint(-span, span) for _ in range(n))
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        terms.append((Monomial(x, rng.randint(-span, span)), c))
    return LaurentPoly(n, terms)


def _suite_arith(report: VerifyReport) -> None:
    rng = random.Random(20240601)
    samples = [(n, [random_poly(rng, n) for _ in range(3)]) for n in (1, 2, 3) for _ in range(20)]

    def ring_axioms():
        for _, (a, b, c) in samples:
            if (a * b) * c != a * (b * c) or a * b != b * a or a * (b + c) != a * b + a * c:
                return False
            if (a + b) + c != a + (b + c) or a + b != b + a:
                return False
        return True

    def div_roundtrip():
        for _, (a, b, _c) in samples:
            if b and exact_div(a * b, b) != a:
                return False
        return True

    def eval_hom():
        for n, (a, b, _c) in samples:
            xs = [Fraction(rng.randint(1, 5), rng.randint(1, 5)) * rng.choice((1, -1)) for _ in range(n)]
            u = Fraction(rng.randint(1, 5), rng.randint(1, 5))
            ea, eb = eval_numeric(a, xs, u), eval_numeric(b, xs, u)
            if eval_numeric(a * b, xs, u) != ea * eb or eval_numeric(a + b, xs, u) != ea + eb:
                return False
        return True

    def json_roundtrip():
        for n, polys in samples:
            for p in polys:
                if LaurentPoly.from_json(p.to_json(), n) != p:
                    return False
        return True

    def not_divisible_example():
        x = LaurentPoly.var(1, 1)
        try:
            exact_div(x**2 + 1, x - x**-1)
        except NotDivisible:
            return True
        return False

    _run(report, "arith.ring_axioms", ring_axioms)
    _run(report, "arith.exact_div_roundtrip", div_roundtrip)
    _run(report, "arith.eval_homomorphism", eval_hom)
    _run(report, "arith.json_roundtrip", json_roundtrip)
    _run(report, "arith.not_divisible", not_divisible_example)


# -- roots --------------------------------------------------------------------

def _suite_roots(report: VerifyReport) -> None:
    ranks = range(1, min(report.n_max, N_MAX_LIMIT) + 1)

    def counts():
        return all(len(positive_roots_sp(n)) == n * n and len(positive_roots_gl(n)) == n * (2 * n - 1)
                   for n in ranks)

    def collapse_fibres():
        detail = {}
        for n in ranks:
            fibre: dict[tuple, list] = {}
            for a in positive_roots_gl(n):
                img, partner = collapse(a, n)
                if collapse(partner, n)[1] != a or collapse(partner, n)[0] != img:
                    return False, f"partner involution fails at n={n}, {a}"
                fibre.setdefault(img.vec, []).append(a)
            sp = {a.vec: a for a in positive_roots_sp(n)}
            if set(fibre) != set(sp):
                return False, f"image is not Phi_Sp^+ at n={n}"
            for vec, pre in fibre.items():
                want = 1 if sp[vec].is_long else 2
                if len(pre) != want:
                    return False, f"fibre over {vec} has {len(pre)} preimages"
            detail[str(n)] = {"short_fibres": 2, "long_fibres": 1}
        return True, detail

    def rho_half_sum():
        return all(rho(n) == tuple(range(n, 0, -1)) for n in ranks)

    def chi_consistency():
        return all(chi_of_gl_root(a, n) == monomial_of_weight(collapse(a, n)[0].vec)
                   for n in ranks for a in positive_roots_gl(n))

    def delta_multiplicative():
        for n in ranks:
            lams = dominant_lambdas(n, 2)
            for lam in lams:
                for mu in lams:
                    s = tuple(a + b for a, b in zip(lam, mu))
                    if delta_half(lam) * delta_half(mu) != delta_half(s):
                        return False
        return True

    _run(report, "roots.counts", counts)
    _run(report, "roots.collapse_fibres", collapse_fibres)
    _run(report, "roots.rho_half_sum", rho_half_sum)
    _run(report, "roots.chi_two_routes", chi_consistency)
    _run(report, "roots.delta_multiplicative", delta_multiplicative)
    for n in range(1, min(report.n_max, 3) + 1):
        report.roots[str(n)] = {
            "sp_positive": [{"vec": list(a.vec), "kind": a.kind} for a in positive_roots_sp(n)],
            "gl_positive": [
                {"i": a.i, "j": a.j, "collapse": list(collapse(a, n)[0].vec),
                 "partner": [collapse(a, n)[1].i, collapse(a, n)[1].j]}
                for a in positive_roots_gl(n)
            ],
            "rho": list(rho(n)),
        }


# -- weyl ---------------------------------------------------------------------

def _suite_weyl(report: VerifyReport) -> None:
    nmax = report.n_max

    def parity():
        counts = {}
        for n in range(1, min(nmax, 4) + 1):
            group = enumerate_gamma(n)
            if len(group) != 2**n * _fact(n) or len(set(group)) != len(group):
                return False, f"enumeration wrong at n={n}"
            if any(w.sign != w.determinant() for w in group):
                return False, f"parity fails at n={n}"
            counts[str(n)] = len(group)
        return True, {"group_orders": counts}

    def embedding():
        for n in range(1, min(nmax, 3) + 1):
            group = enumerate_gamma(n)
            emb = {w: embed_in_W(w) for w in group}
            m = 2 * n - 1
            for w, p in emb.items():
                if any(p.perm[m - i] != m - p.perm[i] for i in range(2 * n)):
                    return False, f"pairing broken at n={n}"
            for a in group:
                for b in group:
                    if emb[a * b] != emb[a] * emb[b]:
                        return False, f"not a homomorphism at n={n}"
        return True

    def anti_invariance():
        rng = random.Random(7)
        for n in range(1, min(nmax, 3) + 1):
            for _ in range(3):
                f = random_poly(rng, n, 5, 3)
                a = alternator(f, n)
                for s in gamma_generators(n):
                    if s.act_poly(a) != -a:
                        return False
        return True

    def alternant_agreement():
        for n in range(1, min(nmax, 3) + 1):
            r = rho(n)
            for lam in dominant_lambdas(n, min(report.lambda_budget, 3)):
                mu = tuple(a + b for a, b in zip(lam, r))
                if alternator(LaurentPoly.monomial(monomial_of_weight(mu)), n) != alternant_det(mu):
                    return False, f"mismatch at lambda={lam}"
        return True

    def poincare():
        for n in range(1, min(nmax, 3) + 1):
            t = LaurentPoly.tvar(n)
            prod = LaurentPoly.one(n)
            for i in range(1, 2 * n + 1):
                prod = prod * sum((t**k for k in range(i)), LaurentPoly.zero(n))
            if poincare_Q_inv(n) != prod:
                return False, f"n={n}"
        return True

    _run(report, "weyl.length_determinant_parity", parity)
    _run(report, "weyl.embedding_homomorphism", embedding)
    _run(report, "weyl.alternator_anti_invariant", anti_invariance)
    _run(report, "weyl.alternator_vs_determinant", alternant_agreement)
    _run(report, "weyl.poincare_product", poincare)


def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


# -- paths --------------------------------------------------------------------

def _rfn_report(r: RationalFn) -> dict:
    return {"text": r.to_text(), **r.to_json()}


def _suite_paths(report: VerifyReport) -> None:
    nmax, budget = report.n_max, report.lambda_budget

    def twist():
        passing = cs.resolve_twist_convention((1, 2) if nmax >= 2 else (1,), min(budget, 2))
        report.calibration["twist_convention"] = cs.RESOLVED_TWIST.value
        report.calibration["twist_candidates"] = [c.value for c in passing]
        return cs.RESOLVED_TWIST in passing and (nmax < 2 or passing == [cs.RESOLVED_TWIST]), \
            [c.value for c in passing]

    _run(report, "paths.twist_resolution", twist)

    ranks = report.calibration.setdefault("ranks", {})
    for n in range(1, min(nmax, 3) + 1):
        ctx = cs.ModelContext(n)
        info = ranks.setdefault(str(n), {})
        lam_cap = budget if n <= 2 else min(budget, 2)
        lambdas = dominant_lambdas(n, lam_cap)

        def gamma_indep(ctx=ctx, lambdas=lambdas, info=info):
            ok, ref = cs.lambda_independent("gamma_sum", ctx, lambdas)
            info["gamma_over_closed"] = _rfn_report(ref)
            return ok, {"lambdas": len(lambdas)}

        _run(report, f"paths.gamma_lambda_independent.n{n}", gamma_indep)
        if n <= 2:
            def hecke_indep(ctx=ctx, lambdas=lambdas, info=info):
                ok, ref = cs.lambda_independent("hecke", ctx, lambdas)
                info["hecke_over_closed"] = _rfn_report(ref)
                return ok, {"lambdas": len(lambdas)}

            def sign(ctx=ctx, lambdas=lambdas, info=info):
                s = cs.cross_path_sign(ctx, lambdas)
                info["casselman_vs_closed_sign"] = s
                return s is not None, s

            _run(report, f"paths.hecke_lambda_independent.n{n}", hecke_indep)
            _run(report, f"paths.casselman_identity_sign.n{n}", sign)

    def divisibility():
        for n in range(1, min(nmax, 3) + 1):
            ctx = cs.ModelContext(n)
            denom = alternator(LaurentPoly.monomial(monomial_of_weight(ctx.rho)), n)
            for lam in dominant_lambdas(n, min(budget, 3)):
                q = exact_div(cs.closed_alternant(lam, ctx), denom)
                if not quotient_is_integral_in_t(q):
                    return False, f"non-integral quotient at {lam}"
                if any(s.act_poly(q) != q for s in gamma_generators(n)):
                    return False, f"quotient not Gamma-invariant at {lam}"
        return True

    def t_zero():
        for n in range(1, min(nmax, 3) + 1):
            ctx = cs.ModelContext(n)
            denom = alternator(LaurentPoly.monomial(monomial_of_weight(ctx.rho)), n)
            for lam in dominant_lambdas(n, min(budget, 3)):
                if specialize_t_zero(cs.omega_closed(lam, ctx), lam) != \
                        LaurentPoly.monomial(delta_half(lam)) * sp_character_det(lam) * denom:
                    return False, f"mismatch at {lam}"
        return True

    def vanishing():
        for n in range(1, min(nmax, 3) + 1):
            ctx = cs.ModelContext(n)
            for lam in dominant_lambdas(n, 2, -2):
                if lam[-1] < 0 and cs.omega_closed(lam, ctx):
                    return False, f"nonzero at {lam}"
        return True

    _run(report, "paths.weyl_denominator_divisibility", divisibility)
    _run(report, "paths.t_zero_degeneration", t_zero)
    _run(report, "paths.vanishing_locus", vanishing)


def quotient_is_integral_in_t(q: LaurentPoly) -> bool:
    """Integer coefficients and only nonnegative even powers of u."""
    return all(isinstance(c, int) and m.u >= 0 and m.u % 2 == 0 for m, c in q.items())


def specialize_t_zero(value: LaurentPoly, lam) -> LaurentPoly:
    """Set ``t = 0`` in ``delta^{1/2}(g_lambda) * P(x, t)``, keeping the delta factor."""
    delta = LaurentPoly.monomial(delta_half(lam))
    return delta * exact_div(value, delta).specialize_u(0)


# -- oracles ------------------------------------------------------------------

def _suite_oracles(report: VerifyReport) -> None:
    nmax, budget = report.n_max, report.lambda_budget

    def dimension():
        for n in range(1, min(nmax, 3) + 1):
            for lam in dominant_lambdas(n, min(budget, 2)):
                chi = sp_character_det(lam)
                if eval_numeric(chi, [1] * n, 1) != weyl_dimension(lam):
                    return False, f"dimension mismatch at {lam}"
        return True

    def whittaker():
        ctx = cs.ModelContext(1)
        x = LaurentPoly.var(1, 1)
        fixed = (1 - LaurentPoly.tvar(1) * x**2) * (x - x**-1)
        for lam in range(0, 6):
            ratio = RationalFn(cs.omega_closed((lam,), ctx), whittaker_gl2(lam))
            if not rfn_eq(ratio, RationalFn(fixed)):
                return False, f"lambda={lam}"
        return True, {"ratio": fixed.to_text()}

    _run(report, "oracles.weyl_dimension", dimension)
    _run(report, "oracles.whittaker_gl2", whittaker)


_SUITE_FNS = {
    "arith": _suite_arith,
    "roots": _suite_roots,
    "weyl": _suite_weyl,
    "paths": _suite_paths,
    "oracles": _suite_oracles,
}


def run_verify(suite: str, n_max: int, lambda_budget: int) -> VerifyReport:
    if suite not in SUITES:
        raise GuardViolation(f"unknown suite {suite!r}; expected one of {SUITES}")
    if not 1 <= n_max <= N_MAX_LIMIT:
        raise GuardViolation(f"--n-max must be in 1..{N_MAX_LIMIT}, got {n_max}")
    if not 0 <= lambda_budget <= LAMBDA_BUDGET_LIMIT:
        raise GuardViolation(f"--lambda-budget must be in 0..{LAMBDA_BUDGET_LIMIT}, got {lambda_budget}")
    report = VerifyReport(suite, n_max, lambda_budget)
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    for name in names:
        _SUITE_FNS[name](report)
    return report
