"""The hyperoctahedral group Gamma = W(C_n), the symmetric group W = S_2n, and sums over them.

Permutations are stored 0-based internally: ``perm[i]`` is the image of
index ``i``.  A signed permutation ``w`` is the linear map
``e_i -> signs[i] * e_{perm[i]}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Sequence

from .errors import RankTooLarge
from .exact_arith import LaurentPoly, Monomial, tree_sum
from .root_data import is_positive_vector, positive_roots_sp

GAMMA_MAX_RANK = 6
W_MAX_RANK = 3


@dataclass(frozen=True)
class SignedPerm:
    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation of 0..{len(self.perm) - 1}")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be a ±1 vector matching perm")

    @classmethod
    def identity(cls, n: int) -> SignedPerm:
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def swap(cls, n: int, i: int) -> SignedPerm:
        """Simple reflection in the short root ``e_i - e_{i+1}`` (0-based ``i``)."""
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        return cls(tuple(p), (1,) * n)

    @classmethod
    def flip(cls, n: int, i: int) -> SignedPerm:
        """Negate coordinate ``i`` (0-based); ``i = n-1`` is the long simple reflection."""
        s = [1] * n
        s[i] = -1
        return cls(tuple(range(n)), tuple(s))

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: SignedPerm) -> SignedPerm:
        """Composition: ``(self * other)(v) = self(other(v))``."""
        if other.n != self.n:
            raise ValueError("rank mismatch")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(self.n))
        return SignedPerm(perm, signs)

    def inverse(self) -> SignedPerm:
        perm = [0] * self.n
        signs = [1] * self.n
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = i
            signs[p] = s
        return SignedPerm(tuple(perm), tuple(signs))

    def act(self, v: Sequence[int]) -> tuple[int, ...]:
        """Coordinate ``signs[i] * v[i]`` moves to slot ``perm[i]``."""
        out = [0] * self.n
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * v[i]
        return tuple(out)

    def act_poly(self, f: LaurentPoly) -> LaurentPoly:
        return f.map_x(self.act)

    @cached_property
    def length(self) -> int:
        return sum(1 for a in positive_roots_sp(self.n) if not is_positive_vector(self.act(a.vec)))

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def determinant(self) -> int:
        """Determinant of the signed permutation matrix."""
        d = permutation_sign(self.perm)
        for s in self.signs:
            d *= s
        return d


@dataclass(frozen=True)
class PermW:
    """An element of S_2n, 0-based."""

    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")

    def __mul__(self, other: PermW) -> PermW:
        return PermW(tuple(self.perm[other.perm[i]] for i in range(len(self.perm))))

    def one_based(self) -> tuple[int, ...]:
        return tuple(p + 1 for p in self.perm)

    def sends_negative(self, i: int, j: int) -> bool:
        """Whether the GL root ``(i, j)`` (1-based slots) maps to a negative root."""
        return self.perm[i - 1] > self.perm[j - 1]


def permutation_sign(perm: Sequence[int]) -> int:
    return -1 if inversions(perm) % 2 else 1


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for a, b in combinations(perm, 2) if a > b)


def _check_gamma_rank(n: int) -> None:
    if n < 1:
        raise ValueError("rank must be positive")
    if n > GAMMA_MAX_RANK:
        raise RankTooLarge(f"|Gamma| = 2^n n! is too large for n = {n} > {GAMMA_MAX_RANK}")


@lru_cache(maxsize=None)
def enumerate_gamma(n: int) -> tuple[SignedPerm, ...]:
    """All 2^n n! signed permutations, ordered by (perm word, sign bitmask)."""
    _check_gamma_rank(n)
    out = []
    for perm in permutations(range(n)):
        for mask in range(1 << n):
            signs = tuple(-1 if mask >> i & 1 else 1 for i in range(n))
            out.append(SignedPerm(perm, signs))
    return tuple(out)


def gamma_generators(n: int) -> list[SignedPerm]:
    """Simple reflections: swaps for the short simple roots, then the flip of the last coordinate."""
    return [SignedPerm.swap(n, i) for i in range(n - 1)] + [SignedPerm.flip(n, n - 1)]


def act_weight(w: SignedPerm, v: Sequence[int]) -> tuple[int, ...]:
    if len(v) != w.n:
        raise ValueError("rank mismatch")
    return w.act(v)


def length_gamma(w: SignedPerm) -> int:
    return w.length


def alternator(f: LaurentPoly, n: int) -> LaurentPoly:
    """``sum_{w in Gamma} (-1)^{l(w)} w(f)``, acting on x-exponents only."""
    if f.n != n:
        raise ValueError(f"polynomial of rank {f.n}, alternator of rank {n}")
    group = enumerate_gamma(n)
    terms = f.items()
    # one term dict per group element keeps collisions local; tree_sum fixes the order
    chunks = []
    for w in group:
        s = w.sign
        chunks.append(LaurentPoly(n, [(Monomial(w.act(m.x), m.u), s * c) for m, c in terms]))
    return tree_sum(chunks, LaurentPoly.zero(n))


def embed_in_W(w: SignedPerm) -> PermW:
    """Gamma as the subgroup of S_2n preserving the pairing ``p <-> 2n+1-p``.

    Slot ``i <= n`` goes to ``perm(i)`` or ``2n+1-perm(i)`` by sign, and the
    partner slot goes to the partner of that image.
    """
    n = w.n
    last = 2 * n - 1
    image = [0] * (2 * n)
    for i, (p, s) in enumerate(zip(w.perm, w.signs)):
        target = p if s == 1 else last - p
        image[i] = target
        image[last - i] = last - target
    return PermW(tuple(image))


def length_W(w: PermW) -> int:
    return inversions(w.perm)


@lru_cache(maxsize=None)
def poincare_Q_inv(n: int) -> LaurentPoly:
    """``sum_{w in S_2n} t^{l(w)}`` as a polynomial in ``u`` (``t = u^2``), rank-n ring."""
    if n < 1:
        raise ValueError("rank must be positive")
    if n > W_MAX_RANK:
        raise RankTooLarge(f"|S_{2 * n}| sum is guarded to n <= {W_MAX_RANK}")
    counts: dict[int, int] = {}
    for p in permutations(range(2 * n)):
        l = inversions(p)
        counts[l] = counts.get(l, 0) + 1
    zero = (0,) * n
    return LaurentPoly(n, {Monomial(zero, 2 * l): c for l, c in counts.items()})
