"""Independent routes used to check the engine.

Nothing here touches the Gamma enumeration or the alternator: determinants
are expanded as plain permutation sums over S_n.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .errors import NotDivisible, RankTooLarge
from .exact_arith import LaurentPoly, Monomial, exact_div, tree_sum
from .root_data import check_dominant, positive_roots_sp, rho
from .weyl import permutation_sign

DET_MAX_RANK = 4


def _check_rank(n: int) -> None:
    if n < 1:
        raise ValueError("rank must be positive")
    if n > DET_MAX_RANK:
        raise RankTooLarge(f"determinant oracle is guarded to n <= {DET_MAX_RANK}")


def strict_weight(mu: Sequence[int]) -> tuple[int, ...]:
    """Validate ``mu_1 > mu_2 > ... > mu_n >= 1``."""
    mu = tuple(mu)
    if not mu or mu[-1] < 1 or any(a <= b for a, b in zip(mu, mu[1:])):
        raise ValueError(f"{mu} is not a strictly decreasing positive weight")
    return mu


def alternant_matrix_det(mu: Sequence[int]) -> LaurentPoly:
    """``det_{i,j}(x_j^{mu_i} - x_j^{-mu_i})`` with no check on ``mu``."""
    n = len(mu)
    _check_rank(n)
    zero = (0,) * n

    def entry(i: int, j: int) -> LaurentPoly:
        up = list(zero)
        up[j] = mu[i]
        down = list(zero)
        down[j] = -mu[i]
        return LaurentPoly.monomial(Monomial(tuple(up))) - LaurentPoly.monomial(Monomial(tuple(down)))

    rows = [[entry(i, j) for j in range(n)] for i in range(n)]
    terms = []
    for p in permutations(range(n)):
        term = LaurentPoly.const(n, permutation_sign(p))
        for i in range(n):
            term = term * rows[i][p[i]]
        terms.append(term)
    return tree_sum(terms, LaurentPoly.zero(n))


def alternant_det(mu: Sequence[int]) -> LaurentPoly:
    return alternant_matrix_det(strict_weight(mu))


def sp_character_det(lam: Sequence[int]) -> LaurentPoly:
    """Symplectic Weyl character: ``alternant(lambda + rho) / alternant(rho)``."""
    lam = check_dominant(lam)
    if lam[-1] < 0:
        raise ValueError("character needs lambda_n >= 0")
    n = len(lam)
    r = rho(n)
    top = alternant_det(tuple(a + b for a, b in zip(lam, r)))
    bottom = alternant_det(r)
    try:
        return exact_div(top, bottom)
    except NotDivisible as exc:
        raise NotDivisible(f"Weyl denominator does not divide the alternant for {lam}") from exc


def weyl_dimension(lam: Sequence[int]) -> Fraction:
    """``prod_{alpha > 0} <lambda + rho, alpha> / <rho, alpha>`` for C_n."""
    lam = check_dominant(lam)
    n = len(lam)
    r = rho(n)
    lr = [a + b for a, b in zip(lam, r)]
    value = Fraction(1)
    for a in positive_roots_sp(n):
        value *= Fraction(sum(x * y for x, y in zip(lr, a.vec)), sum(x * y for x, y in zip(r, a.vec)))
    return value


def whittaker_gl2(lam: int) -> LaurentPoly:
    """``u^lambda (x^{lambda+1} - x^{-lambda-1}) / (x - x^{-1})`` in rank 1."""
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    x = LaurentPoly.var(1, 1)
    top = x ** (lam + 1) - x ** (-lam - 1)
    return LaurentPoly.uvar(1) ** lam * exact_div(top, x - x ** -1)
