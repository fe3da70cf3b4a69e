"""Exception hierarchy shared by every module."""


class ShalikaError(Exception):
    """Base class for all errors raised by the engine."""


class RankMismatch(ShalikaError, ValueError):
    """Operands live in polynomial rings of different rank."""


class NotDivisible(ShalikaError, ArithmeticError):
    """Exact division has no polynomial quotient."""


class DivisionByZeroPoly(ShalikaError, ZeroDivisionError):
    pass


class ZeroBase(ShalikaError, ZeroDivisionError):
    """A negative exponent met a zero value during evaluation."""


class DenominatorVanishes(ShalikaError, ZeroDivisionError):
    """A rational function's denominator evaluates to zero at the point."""


class NotDominant(ShalikaError, ValueError):
    pass


class RankTooLarge(ShalikaError, ValueError):
    """A group sum would exceed the hard enumeration guard."""


class ConsistencyError(ShalikaError, RuntimeError):
    """Two computation paths that must agree did not."""


class GuardViolation(ShalikaError, ValueError):
    """A request falls outside the documented rank/budget guards."""
