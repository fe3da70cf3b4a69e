"""Root systems of GL_2n (type A_{2n-1}) and Sp_2n (type C_n).

GL indices are 1-based slots ``1..2n``.  At the Satake point
``g_chi = diag(x_1, ..., x_n, x_n^{-1}, ..., x_1^{-1})`` slot ``p`` carries
``xi_p = x_p`` for ``p <= n`` and ``xi_p = x_{2n+1-p}^{-1}`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import NotDominant
from .exact_arith import Monomial


@dataclass(frozen=True, order=True)
class GLRoot:
    """The root ``t_i / t_j`` of the diagonal torus of GL_2n."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("a GL root needs i != j")

    @property
    def positive(self) -> bool:
        return self.i < self.j

    def __neg__(self) -> GLRoot:
        return GLRoot(self.j, self.i)


@dataclass(frozen=True)
class SpRoot:
    vec: tuple[int, ...]
    kind: str  # "short" or "long"

    @classmethod
    def of(cls, vec: Sequence[int]) -> SpRoot:
        vec = tuple(vec)
        nz = [v for v in vec if v]
        if len(nz) == 1 and abs(nz[0]) == 2:
            return cls(vec, "long")
        if len(nz) == 2 and all(abs(v) == 1 for v in nz):
            return cls(vec, "short")
        raise ValueError(f"{vec} is not a root of C_{len(vec)}")

    @property
    def positive(self) -> bool:
        return is_positive_vector(self.vec)

    @property
    def is_long(self) -> bool:
        return self.kind == "long"

    def __neg__(self) -> SpRoot:
        return SpRoot(tuple(-v for v in self.vec), self.kind)


def is_positive_vector(vec: Sequence[int]) -> bool:
    """Positive roots of C_n are exactly those whose first nonzero entry is positive."""
    for v in vec:
        if v:
            return v > 0
    raise ValueError("zero vector is not a root")


def _unit(n: int, i: int, scale: int = 1) -> list[int]:
    v = [0] * n
    v[i] = scale
    return v


def positive_roots_sp(n: int) -> list[SpRoot]:
    """The n^2 positive roots of C_n: e_i -+ e_j (i < j) first, then 2e_i."""
    if n < 1:
        raise ValueError("rank must be positive")
    roots = []
    for i, j in combinations(range(n), 2):
        minus = _unit(n, i)
        minus[j] = -1
        plus = _unit(n, i)
        plus[j] = 1
        roots.append(SpRoot(tuple(minus), "short"))
        roots.append(SpRoot(tuple(plus), "short"))
    roots.extend(SpRoot(tuple(_unit(n, i, 2)), "long") for i in range(n))
    return roots


def positive_short_roots_sp(n: int) -> list[SpRoot]:
    return [a for a in positive_roots_sp(n) if not a.is_long]


def positive_roots_gl(n: int) -> list[GLRoot]:
    """All ``(i, j)`` with ``1 <= i < j <= 2n``."""
    if n < 1:
        raise ValueError("rank must be positive")
    return [GLRoot(i, j) for i, j in combinations(range(1, 2 * n + 1), 2)]


def restrict_gl_weight(k: Sequence[int]) -> tuple[int, ...]:
    """Restriction to the Sp torus: ``(k_1 - k_2n, ..., k_n - k_{n+1})``."""
    m = len(k)
    if m % 2:
        raise ValueError("GL weight must have even length 2n")
    n = m // 2
    return tuple(k[i] - k[m - 1 - i] for i in range(n))


def gl_root_vector(alpha: GLRoot, n: int) -> tuple[int, ...]:
    v = [0] * (2 * n)
    v[alpha.i - 1] = 1
    v[alpha.j - 1] = -1
    return tuple(v)


def collapse(alpha: GLRoot, n: int) -> tuple[SpRoot, GLRoot]:
    """Image of a GL root in Phi_Sp, and its partner preimage (itself for long images)."""
    image = SpRoot.of(restrict_gl_weight(gl_root_vector(alpha, n)))
    m = 2 * n + 1
    partner = GLRoot(m - alpha.j, m - alpha.i)
    return image, partner


def rho(n: int) -> tuple[int, ...]:
    """Half the sum of the positive roots of C_n, i.e. ``(n, n-1, ..., 1)``."""
    total = [0] * n
    for a in positive_roots_sp(n):
        for i, v in enumerate(a.vec):
            total[i] += v
    if any(v % 2 for v in total):
        raise AssertionError("half-sum of C_n positive roots is integral")
    return tuple(v // 2 for v in total)


def monomial_of_weight(w: Sequence[int]) -> Monomial:
    """``e^w`` at ``g_chi``: the monomial ``prod x_i^{w_i}``."""
    return Monomial(tuple(w), 0)


def xi_slot(p: int, n: int) -> tuple[int, int]:
    """``(index, sign)`` with ``xi_p = x_index^sign`` (both 1-based/±1)."""
    if not 1 <= p <= 2 * n:
        raise IndexError(f"slot {p} out of range for GL_{2 * n}")
    if p <= n:
        return p, 1
    return 2 * n + 1 - p, -1


def eval_chi_at_glweight(k: Sequence[int]) -> Monomial:
    """``prod_p xi_p^{k_p}`` for a GL weight ``k`` of length 2n."""
    if len(k) % 2:
        raise ValueError("GL weight must have even length 2n")
    n = len(k) // 2
    x = [0] * n
    for p, kp in enumerate(k, start=1):
        if kp:
            idx, sign = xi_slot(p, n)
            x[idx - 1] += sign * kp
    return Monomial(tuple(x), 0)


def chi_of_gl_root(alpha: GLRoot, n: int) -> Monomial:
    """``chi(a_alpha) = xi_i / xi_j`` for ``alpha = (i, j)``."""
    i, si = xi_slot(alpha.i, n)
    j, sj = xi_slot(alpha.j, n)
    x = [0] * n
    x[i - 1] += si
    x[j - 1] -= sj
    return Monomial(tuple(x), 0)


def check_dominant(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(v) for v in lam)
    if not lam:
        raise NotDominant("lambda must have at least one part")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise NotDominant(f"{lam} is not weakly decreasing")
    return lam


def delta_half(lam: Sequence[int]) -> Monomial:
    """``delta^{1/2}(g_lambda) = u^E`` with ``E = sum_i lambda_i (2n - 2i + 1)``."""
    n = len(lam)
    e = sum(v * (2 * n - 2 * i + 1) for i, v in enumerate(lam, start=1))
    return Monomial((0,) * n, e)


def gl_weight_of_g_lambda(lam: Sequence[int]) -> tuple[int, ...]:
    """``g_lambda = diag(varpi^lambda, I)`` has GL weight ``(lambda_1..lambda_n, 0..0)``."""
    return tuple(lam) + (0,) * len(lam)


def dominant_lambdas(n: int, lambda_max: int, lambda_min: int = 0) -> list[tuple[int, ...]]:
    """Weakly decreasing tuples with entries in ``[lambda_min, lambda_max]``, lexicographic."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], cap: int) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(lambda_min, cap + 1):
            prefix.append(v)
            rec(prefix, v)
            prefix.pop()

    rec([], lambda_max)
    return sorted(out)
