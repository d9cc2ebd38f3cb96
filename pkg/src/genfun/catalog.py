"""Named sequence and polynomial families expressed as generating-function specs.

Each entry knows how to build its :class:`FamilySpec` (or, for a couple of
entries, its series directly) and, where one exists, an independent reference
computation: a classical recurrence, an explicit sum, a closed form, or a
brute-force count.  Entries marked ``suspect`` use a parameterization whose
output is known not to match the reference; they are kept as given so the
mismatch shows up in the verification report.

Single-variable polynomial entries use ``x1`` as their variable.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .closed_forms import (
    explicit_twovar_G,
    order_m_fibonacci_recurrence,
    pochhammer,
    rational_binomial,
)
from .errors import InvalidParameter, UnknownEntry
from .exact import as_rational
from .polynomial import Polynomial, X1, X2, as_polynomial
from .series import (
    FamilySpec,
    TruncatedSeries,
    expand,
    expand_general_rational,
)

_ZERO = Polynomial()
_ONE = Polynomial.constant(1)


@dataclass(frozen=True)
class Param:
    name: str
    kind: str  # "int" or "rational"
    default: object
    minimum: Optional[Fraction] = None
    check: Optional[Callable[[object], Optional[str]]] = None
    description: str = ""

    def coerce(self, raw) -> object:
        try:
            if self.kind == "int":
                if isinstance(raw, str):
                    value = int(raw.strip())
                elif isinstance(raw, bool) or not isinstance(raw, int):
                    q = as_rational(raw)
                    if q.denominator != 1:
                        raise ValueError
                    value = q.numerator
                else:
                    value = raw
            else:
                value = as_rational(raw)
        except (ValueError, TypeError, ArithmeticError):
            raise InvalidParameter(f"{self.name}: cannot read {raw!r} as {self.kind}") from None
        if self.minimum is not None and value < self.minimum:
            raise InvalidParameter(f"{self.name} must be at least {self.minimum}, got {value}")
        if self.check is not None:
            problem = self.check(value)
            if problem:
                raise InvalidParameter(f"{self.name}: {problem}")
        return value


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "poly" or "number"
    description: str
    params: Tuple[Param, ...] = ()
    spec: Optional[Callable[..., FamilySpec]] = None
    series: Optional[Callable[..., TruncatedSeries]] = None
    reference: Optional[Callable[..., List]] = None
    suspect: bool = False
    grid: Tuple[Dict[str, object], ...] = ({},)

    def resolve(self, params: Optional[Mapping[str, object]] = None) -> Dict[str, object]:
        params = dict(params or {})
        known = {p.name for p in self.params}
        extra = set(params) - known
        if extra:
            raise InvalidParameter(f"{self.name} has no parameter(s) {', '.join(sorted(extra))}")
        out = {}
        for p in self.params:
            out[p.name] = p.coerce(params[p.name]) if p.name in params else p.default
        return out

    def build_spec(self, params=None, N: int = 16) -> Optional[FamilySpec]:
        if self.spec is None:
            return None
        return self.spec(N=N, **self.resolve(params))

    def expand(self, params=None, N: int = 16) -> TruncatedSeries:
        resolved = self.resolve(params)
        if self.series is not None:
            return self.series(N=N, **resolved)
        return expand(self.spec(N=N, **resolved))

    def values(self, params=None, N: int = 16) -> List:
        s = self.expand(params, N)
        if self.kind == "number":
            return s.values()
        return list(s)

    def reference_values(self, params=None, N: int = 16) -> Optional[List]:
        if self.reference is None:
            return None
        out = self.reference(N=N, **self.resolve(params))
        if self.kind == "number":
            return [as_polynomial(v).constant_value() for v in out]
        return [as_polynomial(v) for v in out]


_REGISTRY: Dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> CatalogEntry:
    if entry.name in _REGISTRY:
        raise ValueError(f"duplicate catalog entry {entry.name}")
    _REGISTRY[entry.name] = entry
    return entry


def catalog_names() -> List[str]:
    return sorted(_REGISTRY)


def catalog_lookup(name: str) -> CatalogEntry:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownEntry(f"no catalog entry named {name!r}") from None


def catalog_eval(name: str, params: Optional[Mapping[str, object]] = None, n_range=range(0, 11)) -> List:
    """Series coefficients of entry ``name`` for every n in ``n_range``."""
    entry = catalog_lookup(name)
    n_values = list(n_range)
    if not n_values:
        return []
    if min(n_values) < 0:
        raise InvalidParameter("indices must be nonnegative")
    values = entry.values(params, N=max(n_values))
    return [values[n] for n in n_values]


def catalog_check(name: str, params=None, nmax: int = 10) -> Optional[bool]:
    """True when the reference agrees with the series up to ``nmax``; None without a reference."""
    entry = catalog_lookup(name)
    ref = entry.reference_values(params, N=nmax)
    if ref is None:
        return None
    return entry.values(params, N=nmax)[: nmax + 1] == ref[: nmax + 1]


# -- helpers ---------------------------------------------------------------


def _linear(first: Sequence, coeffs: Sequence, N: int) -> List:
    """Terms of a_n = sum_i coeffs[i] * a_{n-1-i} from the given first terms."""
    out = [as_polynomial(v) for v in first]
    coeffs = [as_polynomial(c) for c in coeffs]
    while len(out) <= N:
        acc = _ZERO
        for i, c in enumerate(coeffs):
            if len(out) - 1 - i >= 0:
                acc = acc + c * out[-1 - i]
        out.append(acc)
    return out[: N + 1]


def _s(P, Q=(), N=16, beta=1, alpha=1) -> FamilySpec:
    return FamilySpec(P, Q, alpha=alpha, beta=beta, N=N)


def _poisoned_beta(beta) -> Optional[str]:
    # (2 beta)_n and (1/2 + beta)_n must not vanish
    for v in (2 * beta, Fraction(1, 2) + beta):
        if v <= 0 and v.denominator == 1:
            return "makes a Pochhammer normalizer vanish"
    return None


def _not_one(v) -> Optional[str]:
    return "must differ from 1" if v == 1 else None


# -- Fibonacci / Lucas families ---------------------------------------------


_register(CatalogEntry(
    "fibonacci_poly", "poly", "Fibonacci polynomials F_n(x)",
    spec=lambda N: _s([-X1, -1], [0, 1], N),
    reference=lambda N: _linear([0, 1], [X1, 1], N),
))
_register(CatalogEntry(
    "lucas_poly", "poly", "Lucas polynomials L_n(x)",
    spec=lambda N: _s([-X1, -1], [2, -X1], N),
    reference=lambda N: _linear([2, X1], [X1, 1], N),
))
_register(CatalogEntry(
    "fibonacci", "number", "Fibonacci numbers, F_0 = 0",
    spec=lambda N: _s([-1, -1], [0, 1], N),
    reference=lambda N: _linear([0, 1], [1, 1], N),
))
_register(CatalogEntry(
    "lucas", "number", "Lucas numbers, L_0 = 2",
    spec=lambda N: _s([-1, -1], [2, -1], N),
    reference=lambda N: _linear([2, 1], [1, 1], N),
))
_register(CatalogEntry(
    "pell", "number", "Pell numbers 0, 1, 2, 5, 12, ...",
    spec=lambda N: _s([-2, -1], [0, 1], N),
    reference=lambda N: _linear([0, 1], [2, 1], N),
))
_register(CatalogEntry(
    "pell_lucas", "number",
    "Pell-Lucas numbers 2, 2, 6, 14, ... with the parameters (-1,-1; 2,-2)",
    spec=lambda N: _s([-1, -1], [2, -2], N),
    reference=lambda N: _linear([2, 2], [2, 1], N),
    suspect=True,
))
_register(CatalogEntry(
    "fibonacci_order_m", "number", "Fibonacci numbers of order m, F_{0,m} = F_{1,m} = 1",
    params=(Param("m", "int", 2, minimum=1),),
    spec=lambda N, m: _s([-1] * m, (), N),
    reference=lambda N, m: order_m_fibonacci_recurrence(N, m),
    grid=({"m": 2}, {"m": 3}, {"m": 4}, {"m": 5}),
))

# -- Chebyshev --------------------------------------------------------------

_register(CatalogEntry(
    "chebyshev_U", "poly", "Chebyshev polynomials of the second kind",
    spec=lambda N: _s([-2 * X1, 1], (), N),
    reference=lambda N: _linear([1, 2 * X1], [2 * X1, -1], N),
))
_register(CatalogEntry(
    "chebyshev_T", "poly", "Chebyshev polynomials of the first kind",
    spec=lambda N: _s([-2 * X1, 1], [1, -X1], N),
    reference=lambda N: _linear([1, X1], [2 * X1, -1], N),
))
_register(CatalogEntry(
    "chebyshev_third", "poly", "Chebyshev polynomials of the third kind, V_1 = 2x - 1",
    spec=lambda N: _s([-2 * X1, 1], [1, -1], N),
    reference=lambda N: _linear([1, 2 * X1 - 1], [2 * X1, -1], N),
))
_register(CatalogEntry(
    "chebyshev_fourth", "poly", "Chebyshev polynomials of the fourth kind, W_1 = 2x + 1",
    spec=lambda N: _s([-2 * X1, 1], [1, 1], N),
    reference=lambda N: _linear([1, 2 * X1 + 1], [2 * X1, -1], N),
))
_register(CatalogEntry(
    "chebyshev_2orthogonal", "poly",
    "Three-term family with P = (x, alpha, gamma); no independent reference",
    params=(Param("alpha", "rational", Fraction(1)), Param("gamma", "rational", Fraction(1))),
    spec=lambda N, alpha, gamma: _s([X1, alpha, gamma], (), N),
    grid=({"alpha": 1, "gamma": 1}, {"alpha": "1/2", "gamma": -3}),
))

# -- Tribonacci -----------------------------------------------------------

_TRIB_P = [-X1**2, -X1, -1]

_register(CatalogEntry(
    "tribonacci", "poly",
    "Tribonacci polynomials, numerator (3, 0, 1) against the recurrence with T_0 = 0, T_1 = 1",
    spec=lambda N: _s(_TRIB_P, [3, 0, 1], N),
    reference=lambda N: _linear([0, 1, X1**2], [X1**2, X1, 1], N),
    suspect=True,
))
_register(CatalogEntry(
    "tribonacci_lucas", "poly",
    "Tribonacci-Lucas polynomials, numerator (3, -2x^2, x) against t_0 = 3, t_1 = x^2, t_2 = x^4 + 2x",
    spec=lambda N: _s(_TRIB_P, [3, -2 * X1**2, X1], N),
    reference=lambda N: _linear([3, X1**2, X1**4 + 2 * X1], [X1**2, X1, 1], N),
    suspect=True,
))

# -- Padovan --------------------------------------------------------------


def _padovan_reference(N, m):
    # coefficient n of (w + w^2)/(1 - w^2 - ... - w^(m+1)) counts compositions
    # of n-1 and n-2 into parts 2..m+1
    parts = range(2, m + 2)
    counts = [0] * (N + 1)
    for n in range(N + 1):
        total = 0
        for length in range(0, n // 2 + 1):
            for combo in itertools.product(parts, repeat=length):
                if sum(combo) == n:
                    total += 1
        counts[n] = total
    return [0] + [counts[n - 1] + (counts[n - 2] if n >= 2 else 0) for n in range(1, N + 1)]


_register(CatalogEntry(
    "padovan_m", "number", "m-Padovan numbers, P = (0, -1 repeated m times), Q = (0, 1, 1)",
    params=(Param("m", "int", 2, minimum=1),),
    spec=lambda N, m: _s([0] + [-1] * m, [0, 1, 1], N),
    reference=_padovan_reference,
    grid=({"m": 1}, {"m": 2}, {"m": 3}),
))

# -- sextet, garlands, anti-chains ------------------------------------------

_SEXTET_P1 = -X1**2 - 4 * X1 - 1


def _sextet_reference(N):
    out = []
    for n in range(N + 1):
        acc = _ZERO
        for n2 in range(n // 2 + 1):
            sign = -1 if (2 * n - 3 * n2) % 2 else 1
            acc = acc + (X1**2 + 4 * X1 + 1) ** (n - 2 * n2) * X1 ** (2 * n2) * (sign * math.comb(n - n2, n2))
        out.append(acc)
    return out


_register(CatalogEntry(
    "sextet", "poly", "Sextet polynomials, P = (-x^2 - 4x - 1, x^2)",
    spec=lambda N: _s([_SEXTET_P1, X1**2], (), N),
    reference=_sextet_reference,
))


def garland_covers(m: int) -> List[List[int]]:
    """For each x_j (0-based) the y's it lies below: y_{j-1}, y_j, y_{j+1} within range."""
    return [[i for i in (j - 1, j, j + 1) if 0 <= i < m] for j in range(m)]


def garland_rank_polynomial(m: int) -> Polynomial:
    """Ideals of the garland of order m counted by size, by enumeration.

    An ideal is a set X of bottom elements plus any set of top elements whose
    lower covers all lie in X.
    """
    if m == 0:
        return _ONE
    below: List[List[int]] = [[] for _ in range(m)]
    for j, ys in enumerate(garland_covers(m)):
        for i in ys:
            below[i].append(j)
    acc = _ZERO
    for mask in range(1 << m):
        size = bin(mask).count("1")
        free = sum(1 for i in range(m) if all(mask >> j & 1 for j in below[i]))
        acc = acc + X1**size * (1 + X1) ** free
    return acc


_register(CatalogEntry(
    "rank_garland", "poly",
    "Rank polynomials of garland ideal lattices with P = (-1-x-x^2, x^2, x^3), Q = (1, -x^2)",
    spec=lambda N: _s([-1 - X1 - X1**2, X1**2, X1**3], [1, -X1**2], N),
    reference=lambda N: [garland_rank_polynomial(m) for m in range(N + 1)],
    suspect=True,
))
_register(CatalogEntry(
    "garland_ideals", "number", "Number g_m of ideals of the garland of order m",
    spec=lambda N: _s([-2, -1], [1, 1], N),
    reference=lambda N: [garland_rank_polynomial(m).eval({1: 1}) for m in range(N + 1)],
))

ANTICHAIN_ROWS = (
    (1,),
    (1, 2),
    (1, 4, 2),
    (1, 6, 8, 2),
    (1, 8, 18, 12, 2),
    (1, 10, 32, 38, 16, 2),
    (1, 12, 50, 88, 66, 20, 2),
)


def _row_poly(row):
    return sum((X1**k * c for k, c in enumerate(row)), _ZERO)


def _antichain_reference(N):
    out = [_row_poly(r) for r in ANTICHAIN_ROWS[: N + 1]]
    if N + 1 > len(out):
        # continue the rows with a_n = (1 + x) a_{n-1} + x a_{n-2}
        out = _linear(out, [1 + X1, X1], N)
    return out


_register(CatalogEntry(
    "antichain", "poly", "Anti-chain polynomials a_n(x), P = (-1-x, -x), Q = (1, x)",
    spec=lambda N: _s([-1 - X1, -X1], [1, X1], N),
    reference=_antichain_reference,
))
_register(CatalogEntry(
    "antichain_diagonal_matrix", "poly",
    "P = (-1-4x-x^2, x^2), Q = (1, x^2); coefficient n equals a_{2n}(x)",
    spec=lambda N: _s([-1 - 4 * X1 - X1**2, X1**2], [1, X1**2], N),
    reference=lambda N: _antichain_reference(2 * N)[::2],
))

# -- figurate numbers -------------------------------------------------------

_CUBE = [-4, 6, -4, 1]


def _centered(f):
    return lambda N: [Fraction(0)] + [f(n) for n in range(1, N + 1)]


_register(CatalogEntry(
    "jgonal", "number", "j-gonal numbers n((j-2)n - (j-4))/2",
    params=(Param("j", "int", 3, minimum=3),),
    spec=lambda N, j: _s([-3, 3, -1], [0, 1, j - 3], N),
    reference=lambda N, j: [Fraction(n * ((j - 2) * n - (j - 4)), 2) for n in range(N + 1)],
    grid=({"j": 3}, {"j": 4}, {"j": 5}, {"j": 6}),
))
_register(CatalogEntry(
    "hexagonal_prism", "number", "Hexagonal prism numbers n(3n^2 - 3n + 1)",
    spec=lambda N: _s(_CUBE, [0, 1, 10, 7], N),
    reference=lambda N: [n * (3 * n * n - 3 * n + 1) for n in range(N + 1)],
))
_register(CatalogEntry(
    "centered_pyramidal", "number", "Centered j-pyramidal numbers n(jn^2 - j + 6)/6",
    params=(Param("j", "int", 3, minimum=3),),
    spec=lambda N, j: _s(_CUBE, [0, 1, j - 2, 1], N),
    reference=lambda N, j: [Fraction(n * (j * n * n - j + 6), 6) for n in range(N + 1)],
    grid=({"j": 3}, {"j": 4}, {"j": 5}, {"j": 6}),
))
_register(CatalogEntry(
    "centered_dodecahedron", "number",
    "Centered dodecahedral numbers (2n-1)(5n^2-5n+1), numerator (0, 1, 17, 17, 1)",
    spec=lambda N: _s(_CUBE, [0, 1, 17, 17, 1], N),
    reference=_centered(lambda n: (2 * n - 1) * (5 * n * n - 5 * n + 1)),
    suspect=True,
))
_register(CatalogEntry(
    "centered_icosahedron", "number",
    "Centered icosahedral numbers (2n-1)(5n^2-5n+3)/3",
    spec=lambda N: _s(_CUBE, [0, 1, 9, 9, 1], N),
    reference=_centered(lambda n: Fraction((2 * n - 1) * (5 * n * n - 5 * n + 3), 3)),
))
_register(CatalogEntry(
    "centered_octahedron", "number",
    "Centered octahedral numbers (2n-1)(2n^2-2n+3)/3",
    spec=lambda N: _s(_CUBE, [0, 1, 3, 3, 1], N),
    reference=_centered(lambda n: Fraction((2 * n - 1) * (2 * n * n - 2 * n + 3), 3)),
))

# -- higher order: Humbert, Gegenbauer and relatives --------------------------


def humbert_reference(N, m, beta):
    """Pi^beta_{n,m}(x) = sum_k (beta)_{n-(m-1)k} (-1)^k (mx)^(n-mk) / (k! (n-mk)!)."""
    out = []
    for n in range(N + 1):
        acc = _ZERO
        for k in range(n // m + 1):
            j = n - (m - 1) * k
            c = pochhammer(beta, j) / (math.factorial(k) * math.factorial(n - m * k))
            acc = acc + (m * X1) ** (n - m * k) * (c * (-1) ** k)
        out.append(acc)
    return out


def _humbert_P(m):
    return [-m * X1] + [0] * (m - 2) + [1]


_register(CatalogEntry(
    "humbert", "poly", "Humbert polynomials: denominator (1 - m x w + w^m)^beta",
    params=(Param("m", "int", 3, minimum=2), Param("beta", "rational", Fraction(1))),
    spec=lambda N, m, beta: _s(_humbert_P(m), (), N, beta=beta),
    reference=humbert_reference,
    grid=({"m": 2, "beta": 1}, {"m": 3, "beta": "1/2"}, {"m": 4, "beta": 2}, {"m": 3, "beta": "-2/3"}),
))
_register(CatalogEntry(
    "pincherle", "poly", "Pincherle polynomials: (1 - 3xw + w^3)^(1/2)",
    spec=lambda N: _s(_humbert_P(3), (), N, beta=Fraction(-1, 2)),
    reference=lambda N: humbert_reference(N, 3, Fraction(-1, 2)),
))


def _gegenbauer_reference(N, beta):
    # three-term recurrence n C_n = 2x(n + beta - 1) C_{n-1} - (n + 2 beta - 2) C_{n-2}
    out = [_ONE, X1 * (2 * beta)]
    for n in range(2, N + 1):
        out.append((X1 * out[-1] * (2 * (n + beta - 1)) - out[-2] * (n + 2 * beta - 2)) * Fraction(1, n))
    return out[: N + 1]


_register(CatalogEntry(
    "gegenbauer", "poly", "Gegenbauer polynomials C_n^(beta)(x): (1 - 2xw + w^2)^(-beta)",
    params=(Param("beta", "rational", Fraction(1)),),
    spec=lambda N, beta: _s([-2 * X1, 1], (), N, beta=beta),
    reference=_gegenbauer_reference,
    grid=({"beta": 1}, {"beta": "1/2"}, {"beta": 2}, {"beta": "3/2"}, {"beta": "-1/3"}),
))


def _legendre_reference(N):
    out = [_ONE, X1]
    for n in range(1, N):
        out.append((X1 * out[n] * (2 * n + 1) - out[n - 1] * n) * Fraction(1, n + 1))
    return out[: N + 1]


_register(CatalogEntry(
    "legendre", "poly", "Legendre polynomials: (1 - 2xw + w^2)^(-1/2)",
    spec=lambda N: _s([-2 * X1, 1], (), N, beta=Fraction(1, 2)),
    reference=_legendre_reference,
))


def jacobi_explicit(n: int, a, b) -> Polynomial:
    """P_n^(a,b)(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)."""
    lo, hi = (X1 - 1) * Fraction(1, 2), (X1 + 1) * Fraction(1, 2)
    acc = _ZERO
    for s in range(n + 1):
        c = rational_binomial(n + a, n - s) * rational_binomial(n + b, s)
        if c:
            acc = acc + lo**s * hi ** (n - s) * c
    return acc


def _jacobi_series(N, beta):
    C = expand(_s([-2 * X1, 1], (), N, beta=beta))
    half = Fraction(1, 2)
    return TruncatedSeries(
        C[n] * (pochhammer(half + beta, n) / pochhammer(2 * beta, n)) for n in range(N + 1)
    )


_register(CatalogEntry(
    "jacobi_special", "poly",
    "Symmetric Jacobi P_n^(beta-1/2, beta-1/2) as ((1/2+beta)_n / (2beta)_n) C_n^(beta)",
    params=(Param("beta", "rational", Fraction(1), check=_poisoned_beta),),
    series=_jacobi_series,
    reference=lambda N, beta: [jacobi_explicit(n, beta - Fraction(1, 2), beta - Fraction(1, 2)) for n in range(N + 1)],
    grid=({"beta": 1}, {"beta": "1/2"}, {"beta": 2}, {"beta": "3/4"}),
))

# -- two-variable Fibonacci type ---------------------------------------------


def twovar_P(k: int, m: int, n: int) -> List[Polynomial]:
    """Denominator list for 1 - x1^k t - x2^m t^(m+n)."""
    s = m + n
    if s < 1:
        raise InvalidParameter("m + n must be positive")
    P = [_ZERO] * s
    P[0] = P[0] - X1**k
    P[s - 1] = P[s - 1] - X2**m
    return P


def _twovar_higher_reference(N, k, m, n, h):
    # (1 - X - Y)^(-h) = sum_j C(h+j-1, j) (X + Y)^j with X = x^k t, Y = y^m t^(m+n)
    s = m + n
    out = [_ZERO] * (N + 1)
    for j in range(N + 1):
        w = math.comb(h + j - 1, j)
        for c in range(j + 1):
            deg = (j - c) + s * c
            if deg <= N:
                out[deg] = out[deg] + X1 ** (k * (j - c)) * X2 ** (m * c) * (w * math.comb(j, c))
    return out


_TWOVAR_PARAMS = (Param("k", "int", 1, minimum=0), Param("m", "int", 1, minimum=0), Param("n", "int", 1, minimum=0))

_register(CatalogEntry(
    "twovar_fibonacci_type", "poly", "G_j(x, y; k, m, n): 1/(1 - x^k t - y^m t^(m+n)), x = x1, y = x2",
    params=_TWOVAR_PARAMS,
    spec=lambda N, k, m, n: _s(twovar_P(k, m, n), (), N),
    reference=lambda N, k, m, n: [explicit_twovar_G(k, m, n, j) for j in range(N + 1)],
    grid=({"k": 1, "m": 1, "n": 1}, {"k": 2, "m": 1, "n": 2}, {"k": 1, "m": 2, "n": 0}, {"k": 0, "m": 3, "n": 1}),
))
_register(CatalogEntry(
    "twovar_fibonacci_higher", "poly", "G_j^(h)(x, y; k, m, n): the same denominator raised to h",
    params=_TWOVAR_PARAMS + (Param("h", "int", 2, minimum=1),),
    spec=lambda N, k, m, n, h: _s(twovar_P(k, m, n), (), N, beta=h),
    reference=_twovar_higher_reference,
    grid=({"k": 1, "m": 1, "n": 1, "h": 1}, {"k": 1, "m": 1, "n": 1, "h": 2}, {"k": 2, "m": 1, "n": 2, "h": 3}),
))

# -- generalized Catalan, Simsek, binomial rows, words ------------------------


def _catalan_reference(N, m, h, q):
    # Y^(h) of 1 - m w - x w^(m+1): sum over j, c of C(h+j-1, j) C(j, c) m^(j-c) x^c at degree j + m c
    Y = [_ZERO] * (N + 1)
    for j in range(N + 1):
        w = math.comb(h + j - 1, j)
        for c in range(j + 1):
            deg = j + m * c
            if deg <= N:
                Y[deg] = Y[deg] + X1**c * (w * math.comb(j, c) * m ** (j - c))
    return [Y[n] + (Y[n - 1] * q if n else _ZERO) for n in range(N + 1)]


_register(CatalogEntry(
    "catalan_generalized", "poly",
    "Generalized Catalan polynomials: (1 + q w) / (1 - m w - x w^(m+1))^h",
    params=(Param("m", "int", 1, minimum=1), Param("h", "int", 1, minimum=1), Param("q", "rational", Fraction(1))),
    spec=lambda N, m, h, q: _s([-m] + [0] * (m - 1) + [-X1], [1, q], N, beta=h),
    reference=_catalan_reference,
    grid=({"m": 1, "h": 1, "q": 1}, {"m": 2, "h": 2, "q": -1}, {"m": 3, "h": 1, "q": "1/2"}),
))


def _simsek_series(N, a1, a2, lam, delta):
    numer = TruncatedSeries.one(N)
    for _ in range(a1):
        numer = numer * TruncatedSeries.from_polynomial_in_w([1, lam], N)
    for _ in range(a2):
        numer = numer * TruncatedSeries.from_polynomial_in_w([1, 0, delta], N)
    denom = TruncatedSeries.from_polynomial_in_w([lam - 1, lam * lam], N)
    return expand_general_rational(numer, denom)


def _simsek_reference(N, a1, a2, lam, delta):
    out = []
    for n in range(N + 1):
        acc = Fraction(0)
        for b in range(min(a2, n // 2) + 1):
            for a in range(min(a1, n - 2 * b) + 1):
                c = n - a - 2 * b
                acc += (math.comb(a1, a) * lam**a * math.comb(a2, b) * delta**b
                        * (-lam * lam) ** c / (lam - 1) ** (c + 1))
        out.append(acc)
    return out


_register(CatalogEntry(
    "simsek", "number",
    "Two-parameter Simsek polynomials: (1 + lam w)^a1 (1 + delta w^2)^a2 / (lam - 1 + lam^2 w)",
    params=(
        Param("a1", "int", 1, minimum=0),
        Param("a2", "int", 0, minimum=0),
        Param("lam", "rational", Fraction(2), check=_not_one),
        Param("delta", "rational", Fraction(1)),
    ),
    series=_simsek_series,
    reference=_simsek_reference,
    grid=({"a1": 0, "a2": 0, "lam": 2, "delta": 1}, {"a1": 2, "a2": 1, "lam": 3, "delta": -1},
          {"a1": 1, "a2": 2, "lam": "1/2", "delta": "2/3"}),
))
_register(CatalogEntry(
    "binomial_row", "poly", "Binomial rows: 1/(1 - (1 + x) w) gives sum_k C(n, k) x^k",
    spec=lambda N: _s([-1 - X1], (), N),
    reference=lambda N: [sum((X1**k * math.comb(n, k) for k in range(n + 1)), _ZERO) for n in range(N + 1)],
))


def words_without_run(n: int, m: int) -> int:
    """Words over {a, b} of length n with no factor a^m, by enumeration."""
    bad = "a" * m
    return sum(1 for w in itertools.product("ab", repeat=n) if bad not in "".join(w))


_register(CatalogEntry(
    "words_no_factor", "number", "Words over {a, b} avoiding a^m: (1 - z^m)/(1 - 2z + z^(m+1))",
    params=(Param("m", "int", 2, minimum=1),),
    spec=lambda N, m: _s([-2] + [0] * (m - 1) + [1], [1] + [0] * (m - 1) + [-1], N),
    reference=lambda N, m: [words_without_run(n, m) for n in range(N + 1)],
    grid=({"m": 1}, {"m": 2}, {"m": 3}),
))


# -- Gegenbauer through a terminating hypergeometric sum -----------------------


def gegenbauer_2F1_crosscheck(beta, x, n: int) -> Fraction:
    """((2beta)_n / n!) 2F1(-n, 2beta + n; 1/2 + beta; (1 - x)/2), summed exactly."""
    beta, x = as_rational(beta), as_rational(x)
    if n < 0:
        raise InvalidParameter("n must be nonnegative")
    c = Fraction(1, 2) + beta
    if c <= 0 and c.denominator == 1 and -c < n:
        raise InvalidParameter(f"lower parameter 1/2 + beta = {c} hits zero inside the sum")
    z = (1 - x) / 2
    total = Fraction(0)
    term = Fraction(1)
    for s in range(n + 1):
        total += term
        term = term * (-n + s) * (2 * beta + n + s) / ((c + s) * (s + 1)) * z if s < n else term
    return pochhammer(2 * beta, n) / math.factorial(n) * total
