"""Explicit finite-sum formulas, convolutions and derivative recurrences.

Nothing here calls the series engine: these are independent routes to the
same coefficients, so comparing the two catches mistakes on either side.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import DegenerateInput, TruncationExceeded
from .exact import as_rational
from .polynomial import Polynomial, as_polynomial

_ZERO = Polynomial()
_ONE = Polynomial.constant(1)
X = Polynomial.var(1)


# -- scalar helpers -------------------------------------------------------


def binomial(n: int, k: int) -> int:
    """C(n, k) for nonnegative integers; 0 when k > n."""
    if n < 0 or k < 0:
        raise DegenerateInput(f"binomial needs nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


def _binom0(n: int, k: int) -> int:
    # summation convention: anything outside 0 <= k <= n contributes nothing
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer(beta, n: int) -> Fraction:
    """Rising factorial beta (beta+1) ... (beta+n-1)."""
    if n < 0:
        raise DegenerateInput("pochhammer index must be nonnegative")
    beta = as_rational(beta)
    out = Fraction(1)
    for i in range(n):
        out *= beta + i
    return out


def rational_binomial(beta, n: int) -> Fraction:
    """Generalized C(beta, n) = beta (beta-1) ... (beta-n+1) / n!."""
    if n < 0:
        raise DegenerateInput("binomial index must be nonnegative")
    beta = as_rational(beta)
    out = Fraction(1)
    for i in range(n):
        out *= (beta - i) / (i + 1)
    return out


def multinomial_weight(b: Sequence[int]) -> int:
    """prod_{d>=2} C(b_1 + ... + b_d, b_d), the multinomial of the parts."""
    total, weight = b[0], 1
    for part in b[1:]:
        total += part
        weight *= math.comb(total, part)
    return weight


# -- nested sums ----------------------------------------------------------


class NestedSumIndex:
    """Index vectors (n_2, ..., n_m) with 0 <= n_j <= floor(n_{j-1} / j).

    ``top`` plays the role of n_1 for the level-2 bound.  Iteration is
    depth-first with the last index moving fastest.
    """

    def __init__(self, m: int, top: int):
        if m < 2:
            raise DegenerateInput("nested sums need at least two levels")
        if top < 0:
            raise DegenerateInput("top index must be nonnegative")
        self.m = m
        self.top = top
        self.current: Tuple[int, ...] = ()

    def bounds(self, prefix: Sequence[int]) -> int:
        """Upper limit for the next level given the indices chosen so far."""
        level = len(prefix) + 2
        prev = prefix[-1] if prefix else self.top
        return prev // level

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        stack: List[int] = []

        def walk():
            if len(stack) == self.m - 1:
                self.current = tuple(stack)
                yield self.current
                return
            for v in range(self.bounds(stack) + 1):
                stack.append(v)
                yield from walk()
                stack.pop()

        return walk()

    def __len__(self):
        return sum(1 for _ in self)


class _Powers:
    """Cached powers of each P_v."""

    def __init__(self, P: Sequence[Polynomial]):
        self.P = [as_polynomial(p) for p in P]
        self.cache: Dict[Tuple[int, int], Polynomial] = {}

    def __call__(self, v: int, e: int) -> Polynomial:
        key = (v, e)
        got = self.cache.get(key)
        if got is None:
            if e == 0:
                got = _ONE
            elif e == 1:
                got = self.P[v]
            else:
                got = self(v, e // 2) * self(v, e - e // 2)
            self.cache[key] = got
        return got

    def product(self, exps: Sequence[int]) -> Polynomial:
        out = _ONE
        for v, e in enumerate(exps):
            if e:
                if self.P[v].is_zero():
                    return _ZERO
                out = out * self(v, e)
        return out


def explicit_Y_m2(P1, P2, n: int) -> Polynomial:
    """Two-term denominator: sum over n2 of (-1)^(n-n2) C(n-n2, n2) P1^(n-2n2) P2^n2."""
    pw = _Powers([P1, P2])
    acc = _ZERO
    for n2 in range(n // 2 + 1):
        sign = -1 if (n - n2) % 2 else 1
        acc = acc + pw.product((n - 2 * n2, n2)) * (sign * math.comb(n - n2, n2))
    return acc


def _lemma_m3_term(pw, n1, n2, n3):
    e1 = n1 - 2 * n2 + n3
    e2 = n2 - 2 * n3
    if e1 < 0 or e2 < 0:
        return None
    c = _binom0(n1 - n2 - n3, n2 - 2 * n3) * _binom0(n1 - n2, n3)
    if not c:
        return None
    sign = -1 if (n1 - n2) % 2 else 1
    return pw.product((e1, e2, n3)) * (sign * c)


def explicit_Y_m3(P1, P2, P3, n: int) -> Polynomial:
    """Three-term denominator via the double sum over (n2, n3).

    The exponents are P1^(n-2n2+n3) P2^(n2-2n3) P3^n3.  Every admissible pair
    has n3 <= n2/2 and n2 <= n, and the terms with a negative P1 exponent are
    skipped.
    """
    pw = _Powers([P1, P2, P3])
    acc = _ZERO
    for n2 in range(n + 1):
        for n3 in range(n2 // 2 + 1):
            t = _lemma_m3_term(pw, n, n2, n3)
            if t is not None:
                acc = acc + t
    return acc


def explicit_Y_m3_printed_bounds(P1, P2, P3, n: int) -> Polynomial:
    """Same double sum restricted to n2 <= n/2 and n3 <= n2/3.

    Kept to show that these tighter limits drop terms (for P = (-1,-1,-1)
    and n = 3 it gives 3 instead of 4).
    """
    pw = _Powers([P1, P2, P3])
    acc = _ZERO
    for n2 in range(n // 2 + 1):
        for n3 in range(n2 // 3 + 1):
            t = _lemma_m3_term(pw, n, n2, n3)
            if t is not None:
                acc = acc + t
    return acc


def _parts_from_nested(N: int, nested: Sequence[int]) -> Tuple[int, ...] | None:
    # undo n_j -> n_j - (j+1) n_{j+1}: parts b_2..b_m, then b_1 from the total
    m = len(nested) + 1
    b = [0] * (m + 1)
    for j in range(2, m + 1):
        nj = nested[j - 2]
        nxt = nested[j - 1] if j < m else 0
        b[j] = nj - (j + 1) * nxt
        if b[j] < 0:
            return None
    b1 = N - sum(j * b[j] for j in range(2, m + 1))
    if b1 < 0:
        return None
    b[1] = b1
    return tuple(b[1:])


def nested_parts(m: int, N: int) -> Iterator[Tuple[int, ...]]:
    """All (b_1..b_m) >= 0 with sum j*b_j = N, reached through NestedSumIndex.

    The level-2 ceiling is N*(m-1)!, which is the largest value n_2 can take
    under the substitution; for m = 2 it is just N.
    """
    top = N * math.factorial(m - 1)
    for nested in NestedSumIndex(m, top):
        parts = _parts_from_nested(N, nested)
        if parts is not None:
            yield parts


def explicit_Y_general(P: Sequence, n: int) -> Polynomial:
    """Coefficient of w^n in 1/(1 + sum P_j w^j) as a finite nested sum."""
    P = [as_polynomial(p) for p in P]
    if len(P) < 2:
        warnings.warn("single-term denominator: using (-P1)^n", RuntimeWarning, stacklevel=2)
        return (-P[0]) ** n
    pw = _Powers(P)
    acc = _ZERO
    for b in nested_parts(len(P), n):
        sign = -1 if sum(b) % 2 else 1
        acc = acc + pw.product(b) * (sign * multinomial_weight(b))
    return acc


def _weighted_sum(m: int, n: int, term) -> Polynomial:
    acc = _ZERO
    for b in nested_parts(m, n):
        acc = acc + term(b) * multinomial_weight(b)
    return acc


def corollary_variables(m: int, n: int) -> Polynomial:
    """Y_n(x1, x2, ..., xm): each coefficient is its own variable."""
    return explicit_Y_general([Polynomial.var(j) for j in range(1, m + 1)], n)


def corollary_powers(m: int, n: int) -> Polynomial:
    """Y_n(x, x^2, ..., x^m) with x = x1, written with the exponent sum j*b_j."""
    def term(b):
        sign = -1 if sum(b) % 2 else 1
        return X ** sum((j + 1) * e for j, e in enumerate(b)) * sign

    return _weighted_sum(m, n, term)


def corollary_constant(m: int, n: int) -> Polynomial:
    """Y_n(x, x, ..., x) with x = x1, written with the exponent sum b_j."""
    def term(b):
        sign = -1 if sum(b) % 2 else 1
        return X ** sum(b) * sign

    return _weighted_sum(m, n, term)


def corollary_ones(m: int, n: int) -> int:
    """Y_n(1, 1, ..., 1)."""
    return _weighted_sum(m, n, lambda b: Polynomial.constant(-1 if sum(b) % 2 else 1)).constant_value()


def corollary_alternating(m: int, n: int) -> int:
    """The signed sum with sign (-1)^(sum b_j + sum j*b_j).

    This is the x = -1 specialization of :func:`corollary_powers`, hence it
    equals Y_n(-1, 1, -1, ...) with P_j = (-1)^j.
    """
    def term(b):
        e = sum(b) + sum((j + 1) * x for j, x in enumerate(b))
        return Polynomial.constant(-1 if e % 2 else 1)

    return _weighted_sum(m, n, term).constant_value()


def order_m_fibonacci(n: int, m: int) -> int:
    """F_{n,m}: coefficient of w^n in 1/(1 - w - ... - w^m), via the nested sum."""
    if m == 1:
        return 1
    return explicit_Y_general([-1] * m, n).constant_value()


def order_m_fibonacci_recurrence(nmax: int, m: int) -> List[int]:
    """F_{0..nmax, m} from F_{n,m} = sum_{v=1}^{min(n,m)} F_{n-v,m} with F_0 = 1."""
    F = [1]
    for n in range(1, nmax + 1):
        F.append(sum(F[n - v] for v in range(1, min(n, m) + 1)))
    return F


# -- convolutions ---------------------------------------------------------


def convolution_S_from_Y(Yseq, Q: Sequence, n: int) -> Polynomial:
    """S_n = sum_{j=0}^{min(k,n)} Q_j Y_{n-j}."""
    if n >= len(Yseq):
        raise TruncationExceeded(f"index {n} is beyond the available {len(Yseq) - 1}")
    Q = [as_polynomial(q) for q in Q] or [_ONE]
    acc = _ZERO
    for j in range(min(len(Q) - 1, n) + 1):
        if not Q[j].is_zero():
            acc = acc + Q[j] * as_polynomial(Yseq[n - j])
    return acc


def convolution_S_higher(Ybeta, Q: Sequence, n: int) -> Polynomial:
    """S^(1,beta)_n from the order-beta Y coefficients; same shape as above."""
    return convolution_S_from_Y(Ybeta, Q, n)


def order_addition(Yb, Yg, n: int) -> Polynomial:
    """Coefficient n of the Cauchy product: sum_j Yb_j Yg_{n-j}."""
    if n >= len(Yb) or n >= len(Yg):
        raise TruncationExceeded(f"index {n} is beyond the available coefficients")
    acc = _ZERO
    for j in range(n + 1):
        acc = acc + as_polynomial(Yb[j]) * as_polynomial(Yg[n - j])
    return acc


def order_addition_printed(Yb, Yg, n: int) -> Polynomial:
    """The variant that keeps Yb at index n in every term: Yb_n * sum_j Yg_{n-j}."""
    if n >= len(Yb) or n >= len(Yg):
        raise TruncationExceeded(f"index {n} is beyond the available coefficients")
    acc = _ZERO
    for j in range(n + 1):
        acc = acc + as_polynomial(Yb[n]) * as_polynomial(Yg[n - j])
    return acc


# -- recurrences from the w-derivative ------------------------------------


def recurrence_Y_next(P: Sequence, Ysq, n: int) -> Polynomial:
    """Y_{n+1} = -(1/(n+1)) sum_{j=1}^{min(m,n+1)} j P_j Y^(2)_{n+1-j}."""
    if n >= len(Ysq):
        raise TruncationExceeded(f"order-2 coefficients only reach {len(Ysq) - 1}")
    P = [as_polynomial(p) for p in P]
    acc = _ZERO
    for j in range(1, min(len(P), n + 1) + 1):
        if not P[j - 1].is_zero():
            acc = acc + P[j - 1] * as_polynomial(Ysq[n + 1 - j]) * j
    return acc * Fraction(-1, n + 1)


def _s_next(Q, Yseq, n, sign):
    if n + 1 >= len(Yseq):
        raise TruncationExceeded(f"Y coefficients only reach {len(Yseq) - 1}")
    Q = [as_polynomial(q) for q in Q] or [_ONE]
    k = len(Q) - 1
    first = _ZERO
    for l in range(1, min(k, n + 1) + 1):
        first = first + Q[l] * as_polynomial(Yseq[n + 1 - l]) * l
    second = _ZERO
    for l in range(0, min(k, n + 1) + 1):
        second = second + Q[l] * as_polynomial(Yseq[n + 1 - l]) * Fraction(n + 1 - l, n + 1)
    return first * Fraction(1, n + 1) + second * sign


def recurrence_S_next(P: Sequence, Q: Sequence, Yseq, n: int) -> Polynomial:
    """S_{n+1} from G' = Q'F + QF'.

    S_{n+1} = (1/(n+1)) sum_{l>=1} l Q_l Y_{n+1-l}
              + sum_{l>=0} ((n+1-l)/(n+1)) Q_l Y_{n+1-l}.
    ``P`` is accepted for symmetry with :func:`recurrence_Y_next`; the
    denominator enters only through ``Yseq``.
    """
    return _s_next(Q, Yseq, n, 1)


def recurrence_S_next_printed(P: Sequence, Q: Sequence, Yseq, n: int) -> Polynomial:
    """The same expression with the second sum subtracted instead of added."""
    return _s_next(Q, Yseq, n, -1)


# -- two-variable Fibonacci type ------------------------------------------


def explicit_twovar_G(k: int, m: int, n: int, j: int) -> Polynomial:
    """Coefficient of t^j in 1/(1 - x^k t - y^m t^(m+n)) with x = x1, y = x2.

    sum_{c=0}^{floor(j/(m+n))} C(j - c(m+n-1), c) y^(mc) x^(jk - mck - nck).
    """
    for name, v in (("k", k), ("m", m), ("n", n), ("j", j)):
        if v < 0:
            raise DegenerateInput(f"{name} must be nonnegative")
    s = m + n
    if s == 0:
        raise DegenerateInput("m + n = 0 leaves no t-power for the second term")
    x, y = Polynomial.var(1), Polynomial.var(2)
    acc = _ZERO
    for c in range(j // s + 1):
        coeff = _binom0(j - c * (s - 1), c)
        if coeff:
            acc = acc + (y ** (m * c)) * (x ** (j * k - s * c * k)) * coeff
    return acc
