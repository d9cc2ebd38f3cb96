"""Truncated power series in w with polynomial coefficients.

This module is the ground truth for the rest of the package: every closed form
and catalog identity is checked against the coefficients produced here by
plain series division.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, List, Mapping, Sequence, Tuple

from .errors import InvalidSpec, LengthMismatch, NonInvertibleSeries
from .exact import as_rational
from .polynomial import Polynomial, as_polynomial

_ZERO = Polynomial()
_ONE = Polynomial.constant(1)


class TruncatedSeries:
    """Coefficients ``c_0 .. c_N`` of a power series known modulo ``w^(N+1)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(as_polynomial(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_polynomial_in_w(cls, coeffs: Sequence, N: int) -> "TruncatedSeries":
        """Pad (or cut) a finite coefficient list to truncation ``N``."""
        cs = [as_polynomial(c) for c in coeffs[: N + 1]]
        cs += [_ZERO] * (N + 1 - len(cs))
        return cls(cs)

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls.from_polynomial_in_w([_ONE], N)

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _check(self, other: "TruncatedSeries"):
        if self.N != other.N:
            raise LengthMismatch(f"truncations differ: {self.N} vs {other.N}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return TruncatedSeries(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(a * other for a in self.coeffs)

    def __rmul__(self, other):
        return TruncatedSeries(a * other for a in self.coeffs)

    def map(self, fn) -> "TruncatedSeries":
        return TruncatedSeries(fn(c) for c in self.coeffs)

    def substitute(self, point: Mapping[int, object]) -> "TruncatedSeries":
        return self.map(lambda c: c.substitute(point))

    def evaluate(self, point: Mapping[int, object]) -> List[Fraction]:
        return [c.eval(point) for c in self.coeffs]

    def values(self) -> List[Fraction]:
        """Coefficients as rationals; every coefficient must be constant."""
        return [c.constant_value() for c in self.coeffs]

    def truncate(self, N: int) -> "TruncatedSeries":
        if N > self.N:
            raise LengthMismatch(f"cannot extend truncation {self.N} to {N}")
        return TruncatedSeries(self.coeffs[: N + 1])

    def __repr__(self):
        return "TruncatedSeries([" + ", ".join(str(c) for c in self.coeffs) + "])"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    N = a.N
    ac, bc = a.coeffs, b.coeffs
    out = []
    for n in range(N + 1):
        acc = _ZERO
        for i in range(n + 1):
            if ac[i].is_zero() or bc[n - i].is_zero():
                continue
            acc = acc + ac[i] * bc[n - i]
        out.append(acc)
    return TruncatedSeries(out)


def _unit_constant(a: TruncatedSeries) -> Fraction:
    c0 = a.coeffs[0]
    if not c0.is_constant() or c0.is_zero():
        raise NonInvertibleSeries(f"constant term {c0} is not a nonzero rational")
    return c0.constant_value()


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    inv0 = 1 / _unit_constant(a)
    ac = a.coeffs
    support = [i for i in range(1, len(ac)) if not ac[i].is_zero()]
    b = [Polynomial.constant(inv0)]
    for n in range(1, a.N + 1):
        acc = _ZERO
        for i in support:
            if i > n:
                break
            acc = acc + ac[i] * b[n - i]
        b.append(acc * (-inv0))
    return TruncatedSeries(b)


def series_pow_rational(a: TruncatedSeries, beta) -> TruncatedSeries:
    """``a**beta`` for ``a`` with constant term exactly 1 and rational ``beta``.

    Uses the recurrence obtained from ``b' a = beta a' b``:
    ``(n+1) b_{n+1} = sum_j a_j (beta*j - (n+1-j)) b_{n+1-j}``.
    """
    beta = as_rational(beta)
    c0 = a.coeffs[0]
    if c0 != 1:
        raise NonInvertibleSeries(f"constant term must be 1, got {c0}")
    ac = a.coeffs
    support = [j for j in range(1, len(ac)) if not ac[j].is_zero()]
    b = [_ONE]
    for n in range(a.N):
        k = n + 1
        acc = _ZERO
        for j in support:
            if j > k:
                break
            w = beta * j - (k - j)
            if w:
                acc = acc + ac[j] * b[k - j] * w
        b.append(acc / k)
    return TruncatedSeries(b)


@dataclass(frozen=True)
class FamilySpec:
    """One generating-function instance.

    ``(Q_0 + Q_1 w + ... + Q_k w^k)^alpha / (1 + P_1 w + ... + P_m w^m)^beta``
    truncated at ``w^N``.  An empty ``numer`` means numerator 1.
    """

    denom: Tuple[Polynomial, ...]
    numer: Tuple[Polynomial, ...] = ()
    alpha: int = 1
    beta: Fraction = Fraction(1)
    N: int = 16

    def __init__(self, denom, numer=(), alpha: int = 1, beta=1, N: int = 16):
        denom = tuple(as_polynomial(p) for p in denom)
        numer = tuple(as_polynomial(q) for q in numer)
        if len(denom) < 1:
            raise InvalidSpec("at least one denominator polynomial P_1 is required")
        if not isinstance(alpha, int) or isinstance(alpha, bool) or alpha < 0:
            raise InvalidSpec("alpha must be a nonnegative integer")
        if not isinstance(N, int) or isinstance(N, bool) or N < 0:
            raise InvalidSpec("truncation N must be a nonnegative integer")
        object.__setattr__(self, "denom", denom)
        object.__setattr__(self, "numer", numer)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", as_rational(beta))
        object.__setattr__(self, "N", N)

    @property
    def m(self) -> int:
        return len(self.denom)

    @property
    def k(self) -> int:
        return len(self.numer) - 1

    def denominator_series(self) -> TruncatedSeries:
        return TruncatedSeries.from_polynomial_in_w([_ONE, *self.denom], self.N)

    def numerator_series(self) -> TruncatedSeries:
        return TruncatedSeries.from_polynomial_in_w(list(self.numer) or [_ONE], self.N)

    def with_N(self, N: int) -> "FamilySpec":
        return FamilySpec(self.denom, self.numer, self.alpha, self.beta, N)


def expand_Y(spec: FamilySpec) -> TruncatedSeries:
    if spec.beta != 1:
        raise InvalidSpec("expand_Y needs beta = 1; use expand_Y_higher")
    return series_reciprocal(spec.denominator_series())


def expand_S(spec: FamilySpec) -> TruncatedSeries:
    if spec.alpha != 1 or spec.beta != 1:
        raise InvalidSpec("expand_S needs alpha = beta = 1; use expand_S_higher")
    return series_mul(spec.numerator_series(), expand_Y(spec))


def expand_Y_higher(spec: FamilySpec) -> TruncatedSeries:
    return series_pow_rational(spec.denominator_series(), -spec.beta)


def expand_S_higher(spec: FamilySpec) -> TruncatedSeries:
    result = expand_Y_higher(spec)
    q = spec.numerator_series()
    for _ in range(spec.alpha):
        result = series_mul(result, q)
    return result


def expand(spec: FamilySpec) -> TruncatedSeries:
    """Pick the right expansion for ``spec`` (Y when there is no numerator)."""
    if spec.beta == 1 and spec.alpha == 1:
        return expand_S(spec) if spec.numer else expand_Y(spec)
    return expand_S_higher(spec)


def expand_general_rational(numer: TruncatedSeries, denom: TruncatedSeries) -> TruncatedSeries:
    return series_mul(numer, series_reciprocal(denom))
