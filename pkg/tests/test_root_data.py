from __future__ import annotations

import pytest

from shalika.errors import NotDominant
from shalika.exact_arith import Monomial
from shalika.root_data import (
    GLRoot,
    check_dominant,
    chi_of_gl_root,
    collapse,
    delta_half,
    dominant_lambdas,
    eval_chi_at_glweight,
    monomial_of_weight,
    positive_roots_gl,
    positive_roots_sp,
    rho,
)


def test_sp_roots():
    assert [a.vec for a in positive_roots_sp(1)] == [(2,)]
    assert {a.vec for a in positive_roots_sp(2)} == {(1, -1), (1, 1), (2, 0), (0, 2)}
    assert len(positive_roots_sp(3)) == 9


def test_gl_roots():
    assert positive_roots_gl(1) == [GLRoot(1, 2)]
    assert len(positive_roots_gl(2)) == 6
    assert len(positive_roots_gl(3)) == 15


@pytest.mark.parametrize(
    "alpha, vec, kind, partner",
    [((1, 2), (1, -1), "short", (3, 4)), ((1, 3), (1, 1), "short", (2, 4)), ((1, 4), (2, 0), "long", (1, 4))],
)
def test_collapse_examples(alpha, vec, kind, partner):
    img, p = collapse(GLRoot(*alpha), 2)
    assert img.vec == vec and img.kind == kind and p == GLRoot(*partner)


def test_rho():
    assert rho(1) == (1,)
    assert rho(2) == (2, 1)
    assert rho(3) == (3, 2, 1)


def test_monomial_of_weight():
    assert monomial_of_weight((2, 1)) == Monomial((2, 1))
    assert monomial_of_weight((0, 0, 0)).is_one()
    assert monomial_of_weight((1, -1)) == Monomial((1, -1))


def test_chi_of_gl_root():
    assert chi_of_gl_root(GLRoot(1, 2), 2) == Monomial((1, -1))
    assert chi_of_gl_root(GLRoot(1, 4), 2) == Monomial((2, 0))
    assert chi_of_gl_root(GLRoot(2, 3), 2) == Monomial((0, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chi_routes_agree(n):
    for a in positive_roots_gl(n):
        assert chi_of_gl_root(a, n) == monomial_of_weight(collapse(a, n)[0].vec)


def test_delta_half():
    assert delta_half((0, 0)).is_one()
    assert delta_half((1,)) == Monomial((0,), 1)
    assert delta_half((1, 0)) == Monomial((0, 0), 3)


def test_eval_chi_at_glweight():
    assert eval_chi_at_glweight((1, 0, 0, 0)) == Monomial((1, 0))
    assert eval_chi_at_glweight((0, 0, 0, 1)) == Monomial((-1, 0))
    assert eval_chi_at_glweight((1, 0, 0, 1)).is_one()


def test_dominance():
    assert check_dominant([2, 2, -1]) == (2, 2, -1)
    with pytest.raises(NotDominant):
        check_dominant((0, 1))


def test_dominant_lambdas_order():
    assert dominant_lambdas(2, 1) == [(0, 0), (1, 0), (1, 1)]
    assert len(dominant_lambdas(3, 2)) == 10
    assert (0, -2) in dominant_lambdas(2, 2, -2)
