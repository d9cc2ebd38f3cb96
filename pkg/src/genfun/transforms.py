"""Euler (binomial) transform on truncated series and a few numeric series.

The numeric evaluators work in :mod:`decimal` at a fixed working precision
and report a plain float, together with how many terms were used.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .errors import DivergentArgument
from .exact import Surd, as_rational, surd_to_float
from .polynomial import Polynomial, as_polynomial
from .series import FamilySpec, TruncatedSeries, expand_S

_CTX = decimal.Context(prec=50)
_PHI = (1 + math.sqrt(5)) / 2


def euler_transform(u: TruncatedSeries, theta) -> TruncatedSeries:
    """T^theta(u)_j = sum_{v=0}^{j} C(j, v) theta^(j-v) u_v."""
    theta = as_polynomial(theta)
    powers = [Polynomial.constant(1)]
    for _ in range(u.N):
        powers.append(powers[-1] * theta)
    out = []
    for j in range(u.N + 1):
        acc = Polynomial()
        for v in range(j + 1):
            if u[v].is_zero() or powers[j - v].is_zero():
                continue
            acc = acc + u[v] * powers[j - v] * math.comb(j, v)
        out.append(acc)
    return TruncatedSeries(out)


def euler_inverse(u: TruncatedSeries, theta) -> TruncatedSeries:
    return euler_transform(u, -as_polynomial(theta))


@dataclass(frozen=True)
class NumericSum:
    value: float
    terms_used: int
    last_term_magnitude: float


def _to_decimal(x) -> decimal.Decimal:
    if isinstance(x, decimal.Decimal):
        return x
    if isinstance(x, Surd):
        return surd_to_float(x, 160)
    if isinstance(x, float):
        return decimal.Decimal(x)
    q = as_rational(x)
    return _CTX.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator))


def lambert_partial(x, tol: float = 1e-12, max_terms: int = 100000) -> NumericSum:
    """L(x) = sum_{j>=1} x^j / (1 - x^j), summed until the tail is below ``tol``.

    After j terms the remainder is at most |x|^(j+1) / ((1-|x|)(1-|x|^(j+1))),
    which is what the stopping rule checks.
    """
    xd = _to_decimal(x)
    ax = abs(xd)
    if ax >= 1:
        raise DivergentArgument(f"Lambert series diverges at |x| = {float(ax)}")
    tol_d = decimal.Decimal(tol)
    total = decimal.Decimal(0)
    power = decimal.Decimal(1)
    apower = decimal.Decimal(1)
    last = decimal.Decimal(0)
    j = 0
    with decimal.localcontext(_CTX):
        if ax == 0:
            return NumericSum(0.0, 0, 0.0)
        while j < max_terms:
            j += 1
            power *= xd
            apower *= ax
            term = power / (1 - power)
            total += term
            last = abs(term)
            nxt = apower * ax
            tail = nxt / ((1 - ax) * (1 - nxt))
            if tail < tol_d and last < tol_d:
                break
        else:
            raise DivergentArgument("Lambert series did not reach the tolerance")
    return NumericSum(float(total), j, float(last))


def fibonacci_numbers(count: int) -> List[int]:
    """F_0 .. F_{count-1} with F_0 = 0, F_1 = 1."""
    out = [0, 1]
    while len(out) < count:
        out.append(out[-1] + out[-2])
    return out[:count]


def lucas_numbers(count: int) -> List[int]:
    out = [2, 1]
    while len(out) < count:
        out.append(out[-1] + out[-2])
    return out[:count]


def reciprocal_fib_sum(m: int, w, terms: int) -> Fraction:
    """Exact partial sum sum_{j=1}^{terms} w^j / F_{mj} for rational w."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    w = as_rational(w)
    F = fibonacci_numbers(m * terms + 1)
    return sum((w**j / F[m * j] for j in range(1, terms + 1)), Fraction(0))


def reciprocal_fib_partial(m: int, w, tol: float = 1e-12, max_terms: int = 100000) -> NumericSum:
    """R_m(w) = sum_{j>=1} w^j / F_{mj}, stopping once terms are small and shrinking."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    wd = _to_decimal(w)
    if abs(wd) >= decimal.Decimal(_PHI) ** m:
        raise DivergentArgument(f"|w| must stay below phi^{m}")
    tol_d = decimal.Decimal(tol)
    total = decimal.Decimal(0)
    a, b = 0, 1  # F_i, F_{i+1}
    index = 0
    prev = None
    last = decimal.Decimal(0)
    power = decimal.Decimal(1)
    j = 0
    with decimal.localcontext(_CTX):
        if wd == 0:
            return NumericSum(0.0, 0, 0.0)
        while j < max_terms:
            j += 1
            while index < m * j:
                a, b = b, a + b
                index += 1
            power *= wd
            term = power / a
            total += term
            last = abs(term)
            if prev is not None and last < tol_d and last <= prev:
                break
            if prev is not None and j > 50 and last > prev:
                raise DivergentArgument("terms are growing")
            prev = last
        else:
            raise DivergentArgument("series did not reach the tolerance")
    return NumericSum(float(total), j, float(last))


def lambert_fibonacci_pair(tol: float = 1e-15) -> float:
    """L((3 - sqrt5)/2) - L((7 - 3 sqrt5)/2)."""
    a = Surd(Fraction(3, 2), Fraction(-1, 2), 5)
    b = Surd(Fraction(7, 2), Fraction(-3, 2), 5)
    with decimal.localcontext(_CTX):
        return lambert_partial(a, tol).value - lambert_partial(b, tol).value


def ys2_termwise(m: int, w, terms: int) -> bool:
    """Check (lambda^(2j) - mu^(2j)) w^j / F_{mj} = sqrt5 F_{2j} w^j / F_{mj} for j <= terms.

    lambda and mu are (1 +- sqrt5)/2; each term is compared exactly in Q(sqrt5).
    """
    lam = Surd(Fraction(1, 2), Fraction(1, 2), 5)
    mu = lam.conjugate()
    w = as_rational(w)
    F = fibonacci_numbers(max(m, 2) * terms + 1)
    r5 = Surd.sqrt(5)
    for j in range(1, terms + 1):
        lhs = (lam ** (2 * j) - mu ** (2 * j)) * w**j / F[m * j]
        rhs = r5 * F[2 * j] * w**j / F[m * j]
        if lhs != rhs:
            return False
    return True


@dataclass(frozen=True)
class RatioCheck:
    j: int
    coefficient: Fraction
    ratio: Fraction
    same_index: bool
    shifted: bool


def verify_F2j_over_Fj(jmax: int) -> List[RatioCheck]:
    """Compare the coefficients of (1 + 2w)/(1 - w - w^2) with F_{2j}/F_j.

    ``same_index`` compares coefficient j, ``shifted`` compares coefficient
    j - 1; the second is the one that holds for every j >= 1.
    """
    if jmax < 1:
        raise ValueError("jmax must be at least 1")
    S = expand_S(FamilySpec([-1, -1], [1, 2], N=jmax)).values()
    F = fibonacci_numbers(2 * jmax + 1)
    rows = []
    for j in range(1, jmax + 1):
        ratio = Fraction(F[2 * j], F[j])
        rows.append(RatioCheck(j, S[j], ratio, S[j] == ratio, S[j - 1] == ratio))
    return rows
