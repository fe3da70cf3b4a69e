"""Exact Laurent polynomials in ``x_1..x_n`` and ``u`` over the rationals.

The variable ``u`` stands for ``q^{-1/2}``; ``t = u**2 = q^{-1}``.  Keeping a
single half-power variable avoids a fractional exponent lattice.

Internally an exponent vector ``(u, x_1, ..., x_n)`` is packed into one Python
int with one 64-bit digit per variable, ``u`` most significant.  Multiplying
monomials is then integer addition, and the integer order of packed keys is
exactly the canonical lexicographic order on ``(u_exponent, x_exponents)``.
"""

from __future__ import annotations

import heapq
import operator
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import (
    DenominatorVanishes,
    DivisionByZeroPoly,
    NotDivisible,
    RankMismatch,
    ZeroBase,
)

Coeff = Union[int, Fraction]

_BITS = 64
_MASK = (1 << _BITS) - 1
_OFF = 1 << (_BITS - 1)
# Far below the digit boundary so sums of exponents never carry.
_EXP_LIMIT = 1 << 40

_ZERO_KEYS: dict[int, int] = {}


def _coeff(c) -> Coeff:
    # ints stay ints: integer arithmetic is much faster than Fraction.
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


def _pack(exps: Iterable[int]) -> int:
    k = 0
    for e in exps:
        e = operator.index(e)
        if not -_EXP_LIMIT < e < _EXP_LIMIT:
            raise OverflowError(f"exponent {e} out of range")
        k = (k << _BITS) | (e + _OFF)
    return k


def _unpack(k: int, width: int) -> tuple[int, ...]:
    out = [0] * width
    for i in range(width - 1, -1, -1):
        out[i] = (k & _MASK) - _OFF
        k >>= _BITS
    return tuple(out)


def _zero_key(n: int) -> int:
    """Packed key of the exponent vector 0; also the per-product offset."""
    try:
        return _ZERO_KEYS[n]
    except KeyError:
        k = _ZERO_KEYS[n] = _pack([0] * (n + 1))
        return k


def format_rational(c: Coeff) -> str:
    """Render a rational as ``p/q`` (always with a denominator)."""
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(s: str) -> Coeff:
    return _coeff(Fraction(s.strip()))


@dataclass(frozen=True)
class Monomial:
    """``x^x_exponents * u^u`` with unit coefficient."""

    x: tuple[int, ...]
    u: int = 0

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(operator.index(e) for e in self.x))
        object.__setattr__(self, "u", operator.index(self.u))

    @property
    def n(self) -> int:
        return len(self.x)

    def _check(self, other: Monomial) -> None:
        if other.n != self.n:
            raise RankMismatch(f"rank {self.n} vs rank {other.n}")

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.x, other.x)), self.u + other.u)

    def inverse(self) -> Monomial:
        return Monomial(tuple(-e for e in self.x), -self.u)

    def __truediv__(self, other: Monomial) -> Monomial:
        return self * other.inverse()

    def __pow__(self, k: int) -> Monomial:
        return Monomial(tuple(k * e for e in self.x), k * self.u)

    def is_one(self) -> bool:
        return self.u == 0 and not any(self.x)

    @property
    def key(self) -> int:
        return _pack((self.u, *self.x))


class LaurentPoly:
    """Immutable Laurent polynomial with exact rational coefficients.

    ``n`` is the rank (number of ``x`` variables) and is fixed per value;
    combining polynomials of different rank raises :class:`RankMismatch`.
    Zero coefficients are never stored.
    """

    __slots__ = ("n", "_t", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, Coeff] | Iterable[tuple[Monomial, Coeff]] = ()):
        if n < 0:
            raise ValueError("rank must be nonnegative")
        self.n = n
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[int, Coeff] = {}
        for m, c in terms:
            if m.n != n:
                raise RankMismatch(f"monomial of rank {m.n} in rank-{n} polynomial")
            k = m.key
            acc[k] = acc.get(k, 0) + _coeff(c)
        self._t = {k: _coeff(c) for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, packed: dict[int, Coeff]) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj.n = n
        obj._t = packed
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n: int) -> LaurentPoly:
        return cls._raw(n, {})

    @classmethod
    def const(cls, n: int, c: Coeff) -> LaurentPoly:
        c = _coeff(c)
        return cls._raw(n, {_zero_key(n): c} if c else {})

    @classmethod
    def one(cls, n: int) -> LaurentPoly:
        return cls.const(n, 1)

    @classmethod
    def monomial(cls, m: Monomial, c: Coeff = 1) -> LaurentPoly:
        c = _coeff(c)
        return cls._raw(m.n, {m.key: c} if c else {})

    @classmethod
    def var(cls, n: int, i: int) -> LaurentPoly:
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= n:
            raise IndexError(f"x_{i} not in rank {n}")
        x = [0] * n
        x[i - 1] = 1
        return cls.monomial(Monomial(tuple(x)))

    @classmethod
    def uvar(cls, n: int) -> LaurentPoly:
        return cls.monomial(Monomial((0,) * n, 1))

    @classmethod
    def tvar(cls, n: int) -> LaurentPoly:
        """``t = u^2 = q^{-1}``."""
        return cls.monomial(Monomial((0,) * n, 2))

    # -- inspection ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def items(self) -> list[tuple[Monomial, Coeff]]:
        """Terms in canonical (ascending lexicographic) order."""
        w = self.n + 1
        out = []
        for k in sorted(self._t):
            e = _unpack(k, w)
            out.append((Monomial(e[1:], e[0]), self._t[k]))
        return out

    def raw_items(self) -> list[tuple[tuple[int, ...], Coeff]]:
        """Terms as ``((u, x_1, ..., x_n), c)`` in canonical order."""
        w = self.n + 1
        return [(_unpack(k, w), self._t[k]) for k in sorted(self._t)]

    def coefficients(self) -> list[Coeff]:
        return [self._t[k] for k in sorted(self._t)]

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def as_monomial(self) -> tuple[Monomial, Coeff]:
        if len(self._t) != 1:
            raise ValueError("not a monomial")
        ((m, c),) = self.items()
        return m, c

    def min_exponents(self) -> tuple[int, ...]:
        """Componentwise minimum of ``(u, x_1..x_n)`` over all terms."""
        rows = [e for e, _ in self.raw_items()]
        if not rows:
            raise ValueError("zero polynomial has no exponents")
        return tuple(min(col) for col in zip(*rows))

    def max_exponents(self) -> tuple[int, ...]:
        rows = [e for e, _ in self.raw_items()]
        if not rows:
            raise ValueError("zero polynomial has no exponents")
        return tuple(max(col) for col in zip(*rows))

    # -- equality -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.n == other.n and self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == LaurentPoly.const(self.n, other)._t
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._t.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.n}, {self.to_text()!r})"

    # -- ring operations ----------------------------------------------------

    def _lift(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise RankMismatch(f"rank {self.n} vs rank {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(self.n, other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> LaurentPoly:
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        if len(other._t) > len(self._t):
            big, small = other._t, self._t
        else:
            big, small = self._t, other._t
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _coeff(v)
            else:
                del out[k]
        return LaurentPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.n, {k: -c for k, c in self._t.items()})

    def __sub__(self, other) -> LaurentPoly:
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if not c:
                return LaurentPoly.zero(self.n)
            return LaurentPoly._raw(self.n, {k: _coeff(v * c) for k, v in self._t.items()})
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        off = _zero_key(self.n)
        out: dict[int, Coeff] = {}
        get = out.get
        bitems = list(b.items())
        for ka, ca in a.items():
            base = ka - off
            for kb, cb in bitems:
                k = base + kb
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw(self.n, {k: _coeff(v) for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        k = operator.index(k)
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("only monomials have Laurent inverses")
            m, c = self.as_monomial()
            return LaurentPoly.monomial(m**k, Fraction(c) ** k)
        result = LaurentPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        return exact_div(self, other)

    # -- substitutions ------------------------------------------------------

    def map_x(self, fn: Callable[[tuple[int, ...]], tuple[int, ...]]) -> LaurentPoly:
        """Apply ``fn`` to every x-exponent vector (u untouched); sums collisions."""
        w = self.n + 1
        out: dict[int, Coeff] = {}
        for k, c in self._t.items():
            e = _unpack(k, w)
            nk = _pack((e[0], *fn(e[1:])))
            out[nk] = out.get(nk, 0) + c
        return LaurentPoly._raw(self.n, {k: _coeff(v) for k, v in out.items() if v})

    def specialize_u(self, value: Coeff) -> LaurentPoly:
        """Substitute a rational for ``u``; the result has no u-dependence."""
        value = _coeff(value)
        out: dict[Monomial, Coeff] = {}
        for m, c in self.items():
            if m.u < 0 and value == 0:
                raise ZeroBase("negative power of u at u = 0")
            f = Fraction(value) ** m.u if m.u else 1
            km = Monomial(m.x, 0)
            out[km] = out.get(km, 0) + c * f
        return LaurentPoly(self.n, out)

    def eval_numeric(self, x_values: Sequence[Coeff], u_value: Coeff) -> Coeff:
        return eval_numeric(self, x_values, u_value)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [
            {"c": format_rational(c), "x": list(m.x), "u": m.u}
            for m, c in self.items()
        ]

    @classmethod
    def from_json(cls, obj: Sequence[Mapping], n: int) -> LaurentPoly:
        return cls(n, [(Monomial(tuple(t["x"]), t["u"]), parse_rational(t["c"])) for t in obj])

    def to_text(self) -> str:
        """Human-readable form, e.g. ``x1^-1 - x1 + u^2*x1^3``; parsed by :func:`parse_poly`."""
        if not self._t:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.items()):
            factors = [f"x{j + 1}" + (f"^{e}" if e != 1 else "") for j, e in enumerate(m.x) if e]
            if m.u:
                factors.insert(0, "u" + (f"^{m.u}" if m.u != 1 else ""))
            neg = c < 0
            mag = -c if neg else c
            body = "*".join(factors)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def to_latex(self) -> str:
        """LaTeX rendering with ``u^m`` written as ``q^{-m/2}``; presentation only."""
        if not self._t:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.items()):
            factors = []
            if m.u:
                e = Fraction(-m.u, 2)
                factors.append("q^{%s}" % (e.numerator if e.denominator == 1 else f"{e.numerator}/{e.denominator}"))
            for j, e in enumerate(m.x):
                if e:
                    factors.append(f"x_{{{j + 1}}}" + (f"^{{{e}}}" if e != 1 else ""))
            neg = c < 0
            mag = Fraction(-c if neg else c)
            if mag.denominator != 1:
                coef = r"\frac{%d}{%d}" % (mag.numerator, mag.denominator)
            else:
                coef = str(mag.numerator)
            body = " ".join(factors)
            if not body:
                body = coef
            elif mag != 1:
                body = f"{coef} {body}"
            sign = "-" if neg else ("" if i == 0 else "+")
            parts.append(f"{sign} {body}".strip() if i else f"{sign}{body}")
        return " ".join(parts)


_TERM_SPLIT = re.compile(r"(?<!\^)(?=[+-])")
_FACTOR = re.compile(r"^(x(\d+)|u)(?:\^(-?\d+))?$")
_NUMBER = re.compile(r"^\d+(?:/\d+)?$")


def parse_poly(text: str, n: int) -> LaurentPoly:
    """Inverse of :meth:`LaurentPoly.to_text`."""
    s = text.replace(" ", "")
    if s == "0":
        return LaurentPoly.zero(n)
    terms = []
    for chunk in _TERM_SPLIT.split(s):
        if not chunk:
            continue
        sign = -1 if chunk[0] == "-" else 1
        chunk = chunk.lstrip("+-")
        c: Coeff = 1
        x = [0] * n
        u = 0
        for f in chunk.split("*"):
            if _NUMBER.match(f):
                c = c * _coeff(Fraction(f))
                continue
            mt = _FACTOR.match(f)
            if not mt:
                raise ValueError(f"cannot parse factor {f!r}")
            e = int(mt.group(3)) if mt.group(3) else 1
            if mt.group(1) == "u":
                u += e
            else:
                i = int(mt.group(2))
                if not 1 <= i <= n:
                    raise RankMismatch(f"x{i} in rank-{n} polynomial")
                x[i - 1] += e
        terms.append((Monomial(tuple(x), u), sign * c))
    return LaurentPoly(n, terms)


def arith(op: str, a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Ring operation by name: ``add``, ``sub`` or ``mul``."""
    if a.n != b.n:
        raise RankMismatch(f"rank {a.n} vs rank {b.n}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``q * b == a`` or raise :class:`NotDivisible`.

    Leading-term elimination under the canonical lex order.  Any quotient must
    have exponents inside the box ``[min(a) - min(b), max(a) - max(b)]``
    coordinatewise (the shift to ordinary polynomials), so the first
    candidate term outside it proves non-divisibility; this also bounds the
    loop.
    """
    if a.n != b.n:
        raise RankMismatch(f"rank {a.n} vs rank {b.n}")
    if not b:
        raise DivisionByZeroPoly("division by the zero polynomial")
    n = a.n
    if not a:
        return LaurentPoly.zero(n)
    w = n + 1
    lo = [p - q for p, q in zip(a.min_exponents(), b.min_exponents())]
    hi = [p - q for p, q in zip(a.max_exponents(), b.max_exponents())]
    if any(l > h for l, h in zip(lo, hi)):
        raise NotDivisible("exponent ranges incompatible")
    off = _zero_key(n)
    lead_b = max(b._t)
    lead_c = Fraction(b._t[lead_b])
    b_items = list(b._t.items())
    rem = dict(a._t)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot: dict[int, Coeff] = {}
    while rem:
        k = -heapq.heappop(heap)
        if k not in rem:
            continue
        mk = k - lead_b + off
        e = _unpack(mk, w)
        if any(not l <= v <= h for l, v, h in zip(lo, e, hi)):
            raise NotDivisible("remainder leaves the admissible quotient box")
        c = _coeff(rem[k] / lead_c)
        quot[mk] = c
        base = mk - off
        for kb, cb in b_items:
            kk = base + kb
            v = rem.get(kk, 0) - c * cb
            if v:
                if kk not in rem:
                    heapq.heappush(heap, -kk)
                rem[kk] = _coeff(v)
            else:
                rem.pop(kk, None)
    return LaurentPoly._raw(n, quot)


def eval_numeric(a: LaurentPoly, x_values: Sequence[Coeff], u_value: Coeff) -> Coeff:
    """Exact value of ``a`` at ``x = x_values``, ``u = u_value``."""
    if len(x_values) != a.n:
        raise RankMismatch(f"{len(x_values)} values for rank {a.n}")
    point = [Fraction(_coeff(v)) for v in (u_value, *x_values)]
    total = Fraction(0)
    for e, c in a.raw_items():
        term = Fraction(c)
        for base, k in zip(point, e):
            if k:
                if base == 0:
                    if k < 0:
                        raise ZeroBase("negative exponent at a zero value")
                    term = Fraction(0)
                    break
                term *= base**k
        total += term
    return _coeff(total)


def tree_sum(items: Sequence, zero):
    """Pairwise sum in a fixed order: reproducible and balanced."""
    items = list(items)
    if not items:
        return zero
    while len(items) > 1:
        nxt = [items[i] + items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def product(factors: Iterable[LaurentPoly], n: int) -> LaurentPoly:
    result = LaurentPoly.one(n)
    for f in factors:
        result = result * f
    return result


class RationalFn:
    """Formal quotient ``num / (f_1 * ... * f_k)``.

    The denominator is kept as a tuple of factors and never reduced by a GCD.
    Equality is cross-multiplication; factors common to both sides are
    cancelled first, which is valid in an integral domain and keeps the
    products small.
    """

    __slots__ = ("num", "factors", "_den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | Sequence[LaurentPoly] | None = None):
        if den is None:
            factors: tuple[LaurentPoly, ...] = ()
        elif isinstance(den, LaurentPoly):
            factors = (den,)
        else:
            factors = tuple(den)
        for f in factors:
            if f.n != num.n:
                raise RankMismatch(f"rank {num.n} vs rank {f.n}")
            if not f:
                raise DivisionByZeroPoly("zero denominator")
        # unit factors carry no information
        self.factors = tuple(f for f in factors if f != 1)
        self.num = num
        self._den = None

    @property
    def n(self) -> int:
        return self.num.n

    @property
    def den(self) -> LaurentPoly:
        if self._den is None:
            self._den = product(self.factors, self.n)
        return self._den

    @classmethod
    def coerce(cls, x, n: int | None = None) -> RationalFn:
        if isinstance(x, RationalFn):
            return x
        if isinstance(x, LaurentPoly):
            return cls(x)
        if isinstance(x, (int, Fraction)) and n is not None:
            return cls(LaurentPoly.const(n, x))
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalFn")

    def __repr__(self) -> str:
        den = " * ".join(f"({f.to_text()})" for f in self.factors) or "1"
        return f"RationalFn(({self.num.to_text()}) / {den})"

    def __bool__(self) -> bool:
        return bool(self.num)

    def __neg__(self) -> RationalFn:
        return RationalFn(-self.num, self.factors)

    def __mul__(self, other) -> RationalFn:
        try:
            other = RationalFn.coerce(other, self.n)
        except TypeError:
            return NotImplemented
        return RationalFn(self.num * other.num, self.factors + other.factors)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFn:
        try:
            other = RationalFn.coerce(other, self.n)
        except TypeError:
            return NotImplemented
        if not other.num:
            raise DivisionByZeroPoly("division by a zero rational function")
        return RationalFn(self.num * other.den, self.factors + (other.num,))

    def __rtruediv__(self, other) -> RationalFn:
        return RationalFn.coerce(other, self.n) / self

    def __add__(self, other) -> RationalFn:
        try:
            other = RationalFn.coerce(other, self.n)
        except TypeError:
            return NotImplemented
        return rfn_sum([self, other])

    __radd__ = __add__

    def __sub__(self, other) -> RationalFn:
        try:
            other = RationalFn.coerce(other, self.n)
        except TypeError:
            return NotImplemented
        return rfn_sum([self, -other])

    def __rsub__(self, other) -> RationalFn:
        return RationalFn.coerce(other, self.n) - self

    def __eq__(self, other) -> bool:
        if isinstance(other, (LaurentPoly, int, Fraction)):
            other = RationalFn.coerce(other, self.n)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return rfn_eq(self, other)

    __hash__ = None  # equality is not structural

    def cancel(self) -> RationalFn:
        """Divide the numerator by every denominator factor that divides it exactly."""
        num = self.num
        kept = []
        for f in self.factors:
            if num:
                try:
                    num = exact_div(num, f)
                    continue
                except NotDivisible:
                    pass
            kept.append(f)
        if not num:
            return RationalFn(num)
        return RationalFn(num, kept)

    def to_poly(self) -> LaurentPoly:
        """The numerator divided exactly by the denominator."""
        return exact_div(self.num, self.den)

    def clear_monomial(self) -> tuple[LaurentPoly, LaurentPoly]:
        """Expanded ``(num, den)`` with the monomial content of ``den`` divided out of both."""
        den = self.den
        shift = den.min_exponents()
        m = LaurentPoly.monomial(Monomial(tuple(-e for e in shift[1:]), -shift[0]))
        return self.num * m, den * m

    def eval_numeric(self, x_values: Sequence[Coeff], u_value: Coeff) -> Coeff:
        for f in self.factors:
            if eval_numeric(f, x_values, u_value) == 0:
                raise DenominatorVanishes(f"denominator factor {f.to_text()} vanishes")
        value = Fraction(eval_numeric(self.num, x_values, u_value))
        for f in self.factors:
            value /= eval_numeric(f, x_values, u_value)
        return _coeff(value)

    def specialize_u(self, value: Coeff) -> RationalFn:
        factors = [f.specialize_u(value) for f in self.factors]
        for f in factors:
            if not f:
                raise DenominatorVanishes("denominator vanishes after specializing u")
        return RationalFn(self.num.specialize_u(value), factors)

    def to_json(self) -> dict:
        num, den = self.clear_monomial()
        return {"num": num.to_json(), "den": den.to_json()}

    @classmethod
    def from_json(cls, obj: Mapping, n: int) -> RationalFn:
        return cls(LaurentPoly.from_json(obj["num"], n), LaurentPoly.from_json(obj["den"], n))

    def to_text(self) -> str:
        num, den = self.clear_monomial()
        return f"({num.to_text()}) / ({den.to_text()})"


def rfn_sum(terms: Sequence[RationalFn]) -> RationalFn:
    """Sum over the least common multiple of the factor multisets.

    Each term is lifted once by the factors it is missing, so a sum whose
    terms share factors never squares its denominator.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("empty sum needs a rank")
    n = terms[0].n
    lcm: Counter = Counter()
    for t in terms:
        if t.n != n:
            raise RankMismatch(f"rank {n} vs rank {t.n}")
        lcm |= Counter(t.factors)
    ordered = [f for f in _ordered_factors(terms) for _ in range(lcm[f])]
    lifted = []
    for t in terms:
        missing = lcm - Counter(t.factors)
        lifted.append(t.num * product(missing.elements(), n))
    return RationalFn(tree_sum(lifted, LaurentPoly.zero(n)), ordered)


def _ordered_factors(terms: Sequence[RationalFn]) -> list[LaurentPoly]:
    # first-appearance order, so the factor tuple is deterministic
    seen: dict[LaurentPoly, None] = {}
    for t in terms:
        for f in t.factors:
            seen.setdefault(f, None)
    return list(seen)


def rfn_eq(f: RationalFn, g: RationalFn) -> bool:
    """``f.num * g.den == g.num * f.den``, cancelling shared factors first."""
    if f.n != g.n:
        raise RankMismatch(f"rank {f.n} vs rank {g.n}")
    if not f.num or not g.num:
        return not f.num and not g.num
    fc, gc = Counter(f.factors), Counter(g.factors)
    common = fc & gc
    f_rest = product((fc - common).elements(), f.n)
    g_rest = product((gc - common).elements(), f.n)
    return f.num * g_rest == g.num * f_rest
