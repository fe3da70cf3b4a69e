"""Three routes to the spherical Shalika function Omega(g_lambda).

``closed``     product/alternator closed form, a genuine Laurent polynomial.
``gamma_sum``  signed sum over Gamma of root-product weights and a torus twist.
``hecke``      Casselman-basis assembly: c-functions of GL_2n, the
               functional-equation constants d_alpha, and the Poincare
               constant Q^{-1} of S_2n.

The three agree up to a lambda-independent rational factor per rank; the
verification suites measure that factor rather than assume it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Sequence, Union

from .errors import RankMismatch, RankTooLarge
from .exact_arith import LaurentPoly, Monomial, RationalFn, product, rfn_eq, rfn_sum
from .root_data import (
    GLRoot,
    SpRoot,
    check_dominant,
    chi_of_gl_root,
    delta_half,
    eval_chi_at_glweight,
    gl_weight_of_g_lambda,
    is_positive_vector,
    monomial_of_weight,
    positive_roots_gl,
    positive_roots_sp,
    rho,
)
from .weyl import (
    GAMMA_MAX_RANK,
    W_MAX_RANK,
    PermW,
    SignedPerm,
    alternator,
    embed_in_W,
    enumerate_gamma,
    poincare_Q_inv,
)

PATHS = ("closed", "gamma_sum", "hecke")


class TwistConvention(Enum):
    """How ``w`` transports the GL weight of ``g_lambda`` before evaluating chi.

    ``PULL`` reads slot ``p`` from slot ``sigma(p)`` (giving ``e^{w^{-1} lambda}``),
    ``PUSH`` writes slot ``p`` into slot ``sigma(p)`` (giving ``e^{w lambda}``);
    ``INVERSE`` evaluates ``(^w chi)^{-1}`` instead of ``^w chi``.
    """

    PULL_INVERSE = "pull-inverse"
    PUSH_INVERSE = "push-inverse"
    PULL_DIRECT = "pull-direct"
    PUSH_DIRECT = "push-direct"

    @property
    def pull(self) -> bool:
        return self.name.startswith("PULL")

    @property
    def inverse(self) -> bool:
        return self.name.endswith("INVERSE")


# The unique convention under which gamma_sum / closed is lambda-independent
# for n = 2 (at n = 1 pull and push coincide).  Re-derived by
# ``resolve_twist_convention`` in the test suite and in ``verify --suite paths``.
RESOLVED_TWIST = TwistConvention.PULL_INVERSE


class ModelContext:
    """Rank ``n`` together with cached root data and Gamma."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("rank must be positive")
        if n > GAMMA_MAX_RANK:
            raise RankTooLarge(f"rank {n} exceeds the Gamma guard n <= {GAMMA_MAX_RANK}")
        self.n = n
        self.sp_roots: tuple[SpRoot, ...] = tuple(positive_roots_sp(n))
        self.short_roots: tuple[SpRoot, ...] = tuple(a for a in self.sp_roots if not a.is_long)
        self.gl_roots: tuple[GLRoot, ...] = tuple(positive_roots_gl(n))
        self.rho: tuple[int, ...] = rho(n)
        self._sp_neg: dict[SignedPerm, tuple[SpRoot, ...]] = {}
        self._embed: dict[SignedPerm, PermW] = {}

    def __repr__(self) -> str:
        return f"ModelContext(n={self.n})"

    @cached_property
    def gamma(self) -> tuple[SignedPerm, ...]:
        return enumerate_gamma(self.n)

    @cached_property
    def t(self) -> LaurentPoly:
        return LaurentPoly.tvar(self.n)

    @cached_property
    def one(self) -> LaurentPoly:
        return LaurentPoly.one(self.n)

    def mono(self, m: Monomial, c=1) -> LaurentPoly:
        return LaurentPoly.monomial(m, c)

    def one_minus_t(self, m: Monomial) -> LaurentPoly:
        """``1 - t * m``."""
        return self.one - self.t * self.mono(m)

    def sp_negated(self, w: SignedPerm) -> tuple[SpRoot, ...]:
        """Positive Sp roots sent to negative roots by ``w``."""
        try:
            return self._sp_neg[w]
        except KeyError:
            neg = tuple(a for a in self.sp_roots if not is_positive_vector(w.act(a.vec)))
            self._sp_neg[w] = neg
            return neg

    def embed(self, w: SignedPerm) -> PermW:
        try:
            return self._embed[w]
        except KeyError:
            p = self._embed[w] = embed_in_W(w)
            return p

    def check_lambda(self, lam: Sequence[int]) -> tuple[int, ...]:
        lam = check_dominant(lam)
        if len(lam) != self.n:
            raise RankMismatch(f"lambda {lam} has {len(lam)} parts, rank is {self.n}")
        return lam


def c_alpha(alpha: GLRoot, ctx: ModelContext) -> RationalFn:
    """``(1 - t chi(a_alpha)) / (1 - chi(a_alpha))``."""
    m = chi_of_gl_root(alpha, ctx.n)
    return RationalFn(ctx.one_minus_t(m), ctx.one - ctx.mono(m))


def d_alpha(alpha: SpRoot, ctx: ModelContext) -> RationalFn:
    """Functional-equation constant of a positive Sp root.

    Long roots: ``chi(a_alpha)``.  Short roots:
    ``chi(a_alpha) (1 - t chi(a_{-alpha})) / (1 - t chi(a_alpha))``.
    """
    if not alpha.positive:
        raise ValueError(f"d_alpha needs a positive root, got {alpha.vec}")
    m = monomial_of_weight(alpha.vec)
    if alpha.is_long:
        return RationalFn(ctx.mono(m))
    # m * (1 - t/m) = m - t
    return RationalFn(ctx.mono(m) - ctx.t, ctx.one_minus_t(m))


def twist_monomial(w: SignedPerm, lam: Sequence[int], ctx: ModelContext,
                   convention: TwistConvention = RESOLVED_TWIST) -> Monomial:
    """Value of the w-twisted character at ``g_lambda`` (without delta^{1/2})."""
    k = gl_weight_of_g_lambda(lam)
    sigma = ctx.embed(w).perm
    moved = [0] * len(k)
    if convention.pull:
        for p in range(len(k)):
            moved[p] = k[sigma[p]]
    else:
        for p in range(len(k)):
            moved[sigma[p]] = k[p]
    m = eval_chi_at_glweight(moved)
    return m.inverse() if convention.inverse else m


def closed_alternant(lam: Sequence[int], ctx: ModelContext) -> LaurentPoly:
    """``A(e^{rho+lambda} prod_{short alpha > 0} (1 - t e^{-alpha}))``."""
    shifted = tuple(r + l for r, l in zip(ctx.rho, lam))
    f = ctx.mono(monomial_of_weight(shifted))
    for a in ctx.short_roots:
        f = f * ctx.one_minus_t(monomial_of_weight(a.vec).inverse())
    return alternator(f, ctx.n)


def closed_factors(lam: Sequence[int], ctx: ModelContext) -> list[LaurentPoly]:
    """Factors whose product is the closed form (lambda_n >= 0 assumed)."""
    lam = ctx.check_lambda(lam)
    factors = [ctx.one_minus_t(monomial_of_weight(a.vec)) for a in ctx.sp_roots]
    factors.append(ctx.mono(delta_half(lam)))
    factors.append(closed_alternant(lam, ctx))
    return factors


def omega_closed(lam: Sequence[int], ctx: ModelContext) -> LaurentPoly:
    """Closed form: ``prod_{alpha>0}(1 - t e^alpha) delta^{1/2}(g_lambda) A(...)``; zero unless lambda_n >= 0."""
    lam = ctx.check_lambda(lam)
    if lam[-1] < 0:
        return LaurentPoly.zero(ctx.n)
    *root_part, delta, alt = closed_factors(lam, ctx)
    return product(root_part, ctx.n) * delta * alt


def omega_gamma_sum(lam: Sequence[int], ctx: ModelContext,
                    convention: TwistConvention = RESOLVED_TWIST) -> RationalFn:
    lam = ctx.check_lambda(lam)
    if lam[-1] < 0:
        return RationalFn(LaurentPoly.zero(ctx.n))
    delta = delta_half(lam)
    terms = []
    for w in ctx.gamma:
        neg = ctx.sp_negated(w)
        m = delta * twist_monomial(w, lam, ctx, convention)
        for a in neg:
            m = m * monomial_of_weight(a.vec)
        num = ctx.mono(m, w.sign)
        den = []
        for a in neg:
            if a.is_long:
                continue
            e = monomial_of_weight(a.vec)
            num = num * ctx.one_minus_t(e.inverse())
            den.append(ctx.one_minus_t(e))
        terms.append(RationalFn(num, den))
    return rfn_sum(terms)


def _check_hecke_rank(ctx: ModelContext) -> None:
    if ctx.n > W_MAX_RANK:
        raise RankTooLarge(f"the Poincare constant needs |S_2n| sums, guarded to n <= {W_MAX_RANK}")


def omega_hecke(lam: Sequence[int], ctx: ModelContext,
                convention: TwistConvention = RESOLVED_TWIST) -> RationalFn:
    """Casselman-basis assembly with the functional-equation constants.

    ``Q^{-1} sum_w [prod_{alpha>0, w alpha>0} c_alpha] ^w chi^{-1} delta^{1/2}(g_lambda)
    [(-1)^{l(w)} prod_{alpha>0, w alpha<0} c_alpha prod_{Sp alpha>0, w alpha<0} d_alpha]``,
    with ``w`` acting on GL roots through the embedding of Gamma in S_2n.
    """
    _check_hecke_rank(ctx)
    lam = ctx.check_lambda(lam)
    if lam[-1] < 0:
        return RationalFn(LaurentPoly.zero(ctx.n))
    c = {a: c_alpha(a, ctx) for a in ctx.gl_roots}
    d = {a: d_alpha(a, ctx) for a in ctx.sp_roots}
    delta = delta_half(lam)
    terms = []
    for w in ctx.gamma:
        sigma = ctx.embed(w)
        kept = RationalFn(ctx.one)
        flipped = RationalFn(ctx.mono(Monomial((0,) * ctx.n), w.sign))
        for a in ctx.gl_roots:
            if sigma.sends_negative(a.i, a.j):
                flipped = flipped * c[a]
            else:
                kept = kept * c[a]
        for a in ctx.sp_negated(w):
            flipped = flipped * d[a]
        twist = ctx.mono(delta * twist_monomial(w, lam, ctx, convention))
        terms.append(kept * twist * flipped)
    return poincare_Q_inv(ctx.n) * rfn_sum(terms)


def normalization_factor(ctx: ModelContext) -> RationalFn:
    """``Q e^{-rho} prod_{GL alpha>0} (1 - e^alpha)`` with ``Q = 1 / poincare_Q_inv``."""
    _check_hecke_rank(ctx)
    num = ctx.mono(monomial_of_weight(ctx.rho).inverse())
    for a in ctx.gl_roots:
        num = num * (ctx.one - ctx.mono(chi_of_gl_root(a, ctx.n)))
    return RationalFn(num, poincare_Q_inv(ctx.n))


def casselman_assembly(lam: Sequence[int], ctx: ModelContext,
                       convention: TwistConvention = RESOLVED_TWIST) -> RationalFn:
    """``Q^{-1} prod_{GL alpha>0} c_alpha * gamma_sum(lambda)``."""
    _check_hecke_rank(ctx)
    total = RationalFn(poincare_Q_inv(ctx.n))
    for a in ctx.gl_roots:
        total = total * c_alpha(a, ctx)
    return total * omega_gamma_sum(lam, ctx, convention)


def closed_over_normalization(lam: Sequence[int], ctx: ModelContext) -> RationalFn:
    """The closed form divided by the normalization factor, kept factored."""
    _check_hecke_rank(ctx)
    lam = ctx.check_lambda(lam)
    if lam[-1] < 0:
        return RationalFn(LaurentPoly.zero(ctx.n))
    num = poincare_Q_inv(ctx.n) * ctx.mono(monomial_of_weight(ctx.rho))
    num = num * omega_closed(lam, ctx)
    den = [ctx.one - ctx.mono(chi_of_gl_root(a, ctx.n)) for a in ctx.gl_roots]
    return RationalFn(num, den)


Value = Union[LaurentPoly, RationalFn]


@dataclass(frozen=True)
class OmegaValue:
    value: Value
    path: str
    lam: tuple[int, ...]


def omega(lam: Sequence[int], ctx: ModelContext, path: str = "closed",
          convention: TwistConvention = RESOLVED_TWIST) -> OmegaValue:
    lam = ctx.check_lambda(lam)
    if path == "closed":
        value: Value = omega_closed(lam, ctx)
    elif path == "gamma_sum":
        value = omega_gamma_sum(lam, ctx, convention)
    elif path == "hecke":
        value = omega_hecke(lam, ctx, convention)
    else:
        raise ValueError(f"unknown path {path!r}; expected one of {PATHS}")
    return OmegaValue(value, path, lam)


def ratio_to_closed(value: RationalFn, lam: Sequence[int], ctx: ModelContext) -> RationalFn:
    """``value / omega_closed(lambda)`` with the closed form kept as separate factors."""
    lam = ctx.check_lambda(lam)
    return RationalFn(value.num, value.factors + tuple(closed_factors(lam, ctx)))


def calibration_ratio(path: str, ctx: ModelContext,
                      convention: TwistConvention = RESOLVED_TWIST) -> RationalFn:
    """``omega_path(0) / omega_closed(0)`` with exactly-dividing factors cancelled."""
    zero = (0,) * ctx.n
    value = RationalFn.coerce(omega(zero, ctx, path, convention).value)
    return ratio_to_closed(value, zero, ctx).cancel()


def lambda_independent(path: str, ctx: ModelContext, lambdas: Sequence[Sequence[int]],
                       convention: TwistConvention = RESOLVED_TWIST) -> tuple[bool, RationalFn]:
    """Whether ``omega_path / omega_closed`` is the same rational function at every lambda."""
    ref = calibration_ratio(path, ctx, convention)
    for lam in lambdas:
        value = RationalFn.coerce(omega(lam, ctx, path, convention).value)
        if not rfn_eq(ratio_to_closed(value, lam, ctx), ref):
            return False, ref
    return True, ref


def resolve_twist_convention(ranks: Sequence[int] = (1, 2), lambda_max: int = 2) -> list[TwistConvention]:
    """Conventions under which gamma_sum / closed is lambda-independent at every given rank."""
    from .root_data import dominant_lambdas

    passing = []
    for conv in TwistConvention:
        ok = True
        for n in ranks:
            ctx = ModelContext(n)
            good, _ = lambda_independent("gamma_sum", ctx, dominant_lambdas(n, lambda_max), conv)
            if not good:
                ok = False
                break
        if ok:
            passing.append(conv)
    return passing


def cross_path_sign(ctx: ModelContext, lambdas: Sequence[Sequence[int]],
                    convention: TwistConvention = RESOLVED_TWIST) -> int | None:
    """Global sign s with ``casselman_assembly = s * closed_over_normalization`` for every lambda.

    The sign is fixed once at the first lambda; ``None`` if no single sign works.
    """
    sign = None
    for lam in lambdas:
        lhs = casselman_assembly(lam, ctx, convention)
        rhs = closed_over_normalization(lam, ctx)
        if sign is None:
            if rfn_eq(lhs, rhs):
                sign = 1
            elif rfn_eq(lhs, -rhs):
                sign = -1
            else:
                return None
        elif not rfn_eq(lhs, rhs if sign == 1 else -rhs):
            return None
    return sign
