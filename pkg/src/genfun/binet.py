"""Binet-type closed forms for two-term denominators, evaluated in Q(sqrt(D)).

All arithmetic is exact.  When the closed form is right the result has a zero
surd part, which is a sharper check than comparing floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateDenominator, NonRealSurd, RepeatedRoot
from .exact import Surd, as_rational


@dataclass(frozen=True)
class QuadraticRootData:
    """Roots of 1 + p1 w + p2 w^2 as elements of Q(sqrt(D)), D = p1^2 - 4 p2."""

    p1: Fraction
    p2: Fraction
    D: Fraction
    a1: Surd
    a2: Surd

    @classmethod
    def build(cls, p1, p2) -> "QuadraticRootData":
        p1, p2 = as_rational(p1), as_rational(p2)
        if p2 == 0:
            raise DegenerateDenominator("P2 = 0: the denominator has a single root")
        D = p1 * p1 - 4 * p2
        if D < 0:
            raise NonRealSurd(f"discriminant {D} is negative")
        if D == 0:
            raise RepeatedRoot("zero discriminant: the two roots coincide")
        root = Surd.sqrt(D)
        a1 = (root - p1) / (2 * p2)
        a2 = (-root - p1) / (2 * p2)
        data = cls(p1, p2, D, a1, a2)
        if a1 * a2 != 1 / p2 or a1 + a2 != -p1 / p2:
            raise ArithmeticError("root data failed the Vieta relations")
        return data

    @property
    def sqrtD(self) -> Surd:
        return Surd.sqrt(self.D)


def _parts(p1, p2):
    data = QuadraticRootData.build(p1, p2)
    return data.p1, data.p2, data.sqrtD


def binet_Y2(p1, p2, n: int) -> Surd:
    """Y_n(p1, p2) = 2^(n-1) p2^n / sqrt(D) * [(p1 + r)/(r - p1)^n - (p1 - r)/(-p1 - r)^n]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p1, p2, r = _parts(p1, p2)
    scale = Fraction(2) ** (n - 1) * p2**n / r
    first = (r + p1) / (r - p1) ** n
    second = (p1 - r) / (-p1 - r) ** n
    return scale * (first - second)


def binet_S2(p1, p2, q0, q1, n: int) -> Surd:
    """S_n for (q0 + q1 w)/(1 + p1 w + p2 w^2) in the same closed form."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p1, p2, r = _parts(p1, p2)
    q0, q1 = as_rational(q0), as_rational(q1)
    scale = Fraction(2) ** (n - 1) * p2**n / r
    first = ((r + p1) * q0 - 2 * q1) / (r - p1) ** n
    second = ((r - p1) * q0 + 2 * q1) / (-p1 - r) ** n
    return scale * (first + second)


_R5 = Surd.sqrt(5)
_R2 = Surd.sqrt(2)


def binet_fibonacci(n: int) -> Surd:
    """(-2)^n / sqrt(5) * (1/(1 - sqrt5)^n - 1/(1 + sqrt5)^n)."""
    return Fraction(-2) ** n / _R5 * (1 / (1 - _R5) ** n - 1 / (1 + _R5) ** n)


def binet_lucas_printed(n: int) -> Surd:
    """2^n (-1)^n (1/(1 + sqrt5)^n - 1/(1 - sqrt5)^n), as it is usually quoted.

    This does not give the Lucas numbers (n = 1 yields -sqrt5); use
    ``binet_S2(-1, -1, 2, -1, n)`` for those.
    """
    return Fraction(-2) ** n * (1 / (1 + _R5) ** n - 1 / (1 - _R5) ** n)


def binet_lucas(n: int) -> Surd:
    return binet_S2(-1, -1, 2, -1, n)


def binet_ternary_words(n: int) -> Surd:
    """(-1)^n / (2 sqrt2) * ((-2 + sqrt2)/(1 + sqrt2)^n + (2 + sqrt2)/(1 - sqrt2)^n)."""
    return Fraction(-1) ** n / (2 * _R2) * ((_R2 - 2) / (1 + _R2) ** n + (2 + _R2) / (1 - _R2) ** n)


def closed_form_gm(m: int) -> Fraction:
    """g_m = ((1 + sqrt2)^(m+1) + (1 - sqrt2)^(m+1)) / 2."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    value = ((1 + _R2) ** (m + 1) + (1 - _R2) ** (m + 1)) / 2
    if not value.is_rational():
        raise ArithmeticError("surd parts failed to cancel")
    return value.rational
