from __future__ import annotations

import pytest

from shalika import cs_formula as cs
from shalika.errors import RankMismatch, RankTooLarge
from shalika.exact_arith import LaurentPoly, RationalFn, rfn_eq
from shalika.root_data import GLRoot, SpRoot, dominant_lambdas, positive_roots_gl


@pytest.fixture(scope="module")
def ctx1():
    return cs.ModelContext(1)


@pytest.fixture(scope="module")
def ctx2():
    return cs.ModelContext(2)


def _x(n, i):
    return LaurentPoly.var(n, i)


def test_c_alpha(ctx1, ctx2):
    x, t = _x(1, 1), LaurentPoly.tvar(1)
    assert rfn_eq(cs.c_alpha(GLRoot(1, 2), ctx1), RationalFn(1 - t * x**2, 1 - x**2))
    x1, x2, t2 = _x(2, 1), _x(2, 2), LaurentPoly.tvar(2)
    m = x1 * x2**-1
    assert rfn_eq(cs.c_alpha(GLRoot(1, 2), ctx2), RationalFn(1 - t2 * m, 1 - m))
    for a in positive_roots_gl(2):
        assert rfn_eq(cs.c_alpha(a, ctx2).specialize_u(1), RationalFn(LaurentPoly.one(2)))


def test_d_alpha(ctx1, ctx2):
    x = _x(1, 1)
    assert rfn_eq(cs.d_alpha(SpRoot.of((2,)), ctx1), RationalFn(x**2))
    x1, x2, t = _x(2, 1), _x(2, 2), LaurentPoly.tvar(2)
    m = x1 * x2**-1
    short = SpRoot.of((1, -1))
    assert rfn_eq(cs.d_alpha(short, ctx2), RationalFn(m * (1 - t * m**-1), 1 - t * m))
    assert rfn_eq(cs.d_alpha(short, ctx2).specialize_u(0), RationalFn(m))


def test_omega_closed_examples(ctx1):
    x, t, u = _x(1, 1), LaurentPoly.tvar(1), LaurentPoly.uvar(1)
    assert cs.omega_closed((0,), ctx1) == (1 - t * x**2) * (x - x**-1)
    assert cs.omega_closed((1,), ctx1) == u * (1 - t * x**2) * (x**2 - x**-2)
    assert cs.omega_closed((-1,), ctx1) == 0


def test_omega_gamma_sum_examples(ctx1):
    x, t, u = _x(1, 1), LaurentPoly.tvar(1), LaurentPoly.uvar(1)
    assert cs.omega_gamma_sum((0,), ctx1) == 1 - x**2
    assert cs.omega_gamma_sum((1,), ctx1) == u * (x**-1 - x**3)
    ref = RationalFn(-x, 1 - t * x**2)
    assert rfn_eq(cs.calibration_ratio("gamma_sum", ctx1), ref)
    for lam in range(5):
        value = cs.omega_gamma_sum((lam,), ctx1)
        assert rfn_eq(cs.ratio_to_closed(value, (lam,), ctx1), ref)


def test_omega_hecke_n1(ctx1):
    x, t = _x(1, 1), LaurentPoly.tvar(1)
    assert rfn_eq(cs.omega_hecke((0,), ctx1), RationalFn((1 + t) * (1 - t * x**2)))


def test_hecke_matches_calibrated_gamma_n2(ctx2):
    gamma = RationalFn.coerce(cs.omega_gamma_sum((0, 0), ctx2))
    hecke = cs.omega_hecke((0, 0), ctx2)
    factor = cs.calibration_ratio("hecke", ctx2) / cs.calibration_ratio("gamma_sum", ctx2)
    assert rfn_eq(hecke, gamma * factor)


def test_normalization_factor(ctx1):
    x, t = _x(1, 1), LaurentPoly.tvar(1)
    norm = cs.normalization_factor(ctx1)
    assert rfn_eq(norm, RationalFn(x**-1 * (1 - x**2), 1 + t))
    assert rfn_eq(norm.specialize_u(0), RationalFn(x**-1 * (1 - x**2)))


def test_twist_resolution_is_unique():
    assert cs.resolve_twist_convention((1, 2), 2) == [cs.RESOLVED_TWIST]


def test_pull_and_push_coincide_at_rank_one():
    passing = cs.resolve_twist_convention((1,), 2)
    assert cs.TwistConvention.PULL_INVERSE in passing and cs.TwistConvention.PUSH_INVERSE in passing


def test_vanishing_for_all_paths(ctx1, ctx2):
    for lam, ctx in (((-1,), ctx1), ((0, -1), ctx2), ((1, -2), ctx2)):
        for path in cs.PATHS:
            assert not cs.omega(lam, ctx, path).value


def test_guards():
    with pytest.raises(RankTooLarge):
        cs.omega_hecke((0,) * 4, cs.ModelContext(4))
    with pytest.raises(RankMismatch):
        cs.omega_closed((0, 0), cs.ModelContext(1))
    with pytest.raises(ValueError):
        cs.omega((0,), cs.ModelContext(1), "bogus")


def test_cross_path_sign_is_per_rank(ctx1, ctx2):
    assert cs.cross_path_sign(ctx1, dominant_lambdas(1, 3)) in (1, -1)
    assert cs.cross_path_sign(ctx2, dominant_lambdas(2, 2)) in (1, -1)
