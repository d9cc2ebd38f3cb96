"""Exact scalars: rationals and elements of a real quadratic field Q(sqrt(D)).

Rationals are :class:`fractions.Fraction`, which already keeps numerator and
denominator reduced with a positive denominator.  Surd elements ``a + b*sqrt(D)``
are implemented here.
"""

from __future__ import annotations

import decimal
import math
import operator
import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from .errors import DegenerateInput, FieldMismatch, NonRealSurd

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
}


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or string like ``"-3/4"`` to a Fraction.

    Floats are refused because they would silently import rounding error.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DegenerateInput(f"not a rational number: {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def normalize(q: Fraction | int) -> Fraction | int:
    """Return an int when ``q`` is integral; keeps hot loops on int arithmetic."""
    if type(q) is int:
        return q
    if q.denominator == 1:
        return q.numerator
    return q


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    a, b = as_rational(a), as_rational(b)
    if op == "div":
        if b == 0:
            raise DegenerateInput("division by zero")
        return a / b
    try:
        return _OPS[op](a, b)
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    p, d = q.numerator, q.denominator
    rp, rd = math.isqrt(p), math.isqrt(d)
    if rp * rp == p and rd * rd == d:
        return Fraction(rp, rd)
    return None


class Surd:
    """An element ``rational + surd*sqrt(radicand)`` of a real quadratic field.

    A perfect-square radicand is absorbed into the rational part so that
    equality stays structural.
    """

    __slots__ = ("rational", "surd", "radicand")

    def __init__(self, rational: RationalLike = 0, surd: RationalLike = 0, radicand: RationalLike = 0):
        r, s, d = as_rational(rational), as_rational(surd), as_rational(radicand)
        if d < 0:
            raise NonRealSurd(f"negative radicand {format_rational(d)}")
        root = rational_sqrt(d)
        if root is not None and s != 0:
            r, s = r + s * root, Fraction(0)
        object.__setattr__(self, "rational", r)
        object.__setattr__(self, "surd", s)
        object.__setattr__(self, "radicand", d)

    def __setattr__(self, name, value):
        raise AttributeError("Surd is immutable")

    @classmethod
    def sqrt(cls, radicand: RationalLike) -> "Surd":
        return cls(0, 1, radicand)

    def _coerce(self, other) -> "Surd":
        if isinstance(other, Surd):
            if other.radicand != self.radicand:
                raise FieldMismatch(
                    f"radicands differ: {format_rational(self.radicand)} vs {format_rational(other.radicand)}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Surd(other, 0, self.radicand)
        return NotImplemented

    def conjugate(self) -> "Surd":
        return Surd(self.rational, -self.surd, self.radicand)

    def norm(self) -> Fraction:
        return self.rational**2 - self.radicand * self.surd**2

    def is_rational(self) -> bool:
        return self.surd == 0

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Surd(self.rational + o.rational, self.surd + o.surd, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.rational, -self.surd, self.radicand)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Surd(self.rational - o.rational, self.surd - o.surd, self.radicand)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.rational, self.surd, o.rational, o.surd
        return Surd(a * c + self.radicand * b * d, a * d + b * c, self.radicand)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise DegenerateInput("division by zero in quadratic field")
        num = self * o.conjugate()
        return Surd(num.rational / n, num.surd / n, self.radicand)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return Surd(1, 0, self.radicand) / (self**-e)
        result = Surd(1, 0, self.radicand)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Surd):
            if self.surd == 0 and other.surd == 0:
                return self.rational == other.rational
            return (self.rational, self.surd, self.radicand) == (other.rational, other.surd, other.radicand)
        if isinstance(other, (int, Fraction)):
            return self.surd == 0 and self.rational == other
        return NotImplemented

    def __hash__(self):
        if self.surd == 0:
            return hash(self.rational)
        return hash((self.rational, self.surd, self.radicand))

    def __float__(self):
        return float(surd_to_float(self, 64))

    def __repr__(self):
        return f"Surd({format_rational(self.rational)}, {format_rational(self.surd)}, {format_rational(self.radicand)})"

    def __str__(self):
        r = format_rational(self.rational)
        if self.surd == 0:
            return r
        s = self.surd
        sign = "-" if s < 0 else "+"
        return f"{r} {sign} {format_rational(abs(s))}*sqrt({format_rational(self.radicand)})"


def surd_arith(a: Surd, b: Surd, op: str) -> Surd:
    if a.radicand != b.radicand:
        raise FieldMismatch(
            f"radicands differ: {format_rational(a.radicand)} vs {format_rational(b.radicand)}"
        )
    if op == "div":
        return a / b
    try:
        return _OPS[op](a, b)
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


def _sqrt_approx(t: Fraction, bits: int) -> Fraction:
    # floor(sqrt(p*q*4^k)) / (q*2^k) is within 2^-k of sqrt(p/q)
    p, q = t.numerator, t.denominator
    return Fraction(math.isqrt(p * q << (2 * bits)), q << bits)


def surd_to_float(a: Surd | Fraction | int, precision: int = 53) -> decimal.Decimal:
    """Approximate ``a`` with absolute error below ``2**-precision``.

    Returns a :class:`decimal.Decimal` carrying enough digits for the requested
    precision; ``float()`` of the result is correctly rounded for ordinary use.
    """
    if not isinstance(a, Surd):
        a = Surd(a)
    if a.radicand < 0:
        raise NonRealSurd("negative radicand")
    if precision < 1:
        raise ValueError("precision must be a positive bit count")
    guard = precision + 3
    approx = a.rational
    if a.surd != 0:
        root = _sqrt_approx(a.surd * a.surd * a.radicand, guard)
        approx += root if a.surd > 0 else -root
    int_digits = len(str(abs(approx.numerator) // approx.denominator))
    digits = int_digits + math.ceil(guard * math.log10(2)) + 2
    ctx = decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN)
    return ctx.divide(decimal.Decimal(approx.numerator), decimal.Decimal(approx.denominator))


_SURD_RE = re.compile(
    r"^\s*(?:(?P<a>[+-]?\d+(?:/\d+)?)\s*)?"
    r"(?:(?P<sign>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(?P<d>\d+(?:/\d+)?)\s*\))?\s*$"
)


def parse_surd(text: str) -> Surd:
    """Parse ``"A"``, ``"A+B*sqrt(D)"`` or ``"-B*sqrt(D)"`` with rational A, B, D."""
    m = _SURD_RE.match(text)
    if not m or (m.group("a") is None and m.group("d") is None):
        raise DegenerateInput(f"cannot parse quadratic surd {text!r}")
    a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
    if m.group("d") is None:
        return Surd(a)
    if m.group("a") is not None and m.group("sign") is None:
        raise DegenerateInput(f"missing operator before sqrt in {text!r}")
    b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
    if m.group("sign") == "-":
        b = -b
    return Surd(a, b, Fraction(m.group("d")))
