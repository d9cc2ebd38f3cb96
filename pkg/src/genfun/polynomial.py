"""Sparse multivariate polynomials over the rationals in variables x1, x2, ...

A monomial is stored as a tuple of exponents ``(e1, e2, ..., ek)`` for
``x1^e1 * x2^e2 * ... * xk^ek`` with trailing zeros stripped, so the empty tuple
is the constant monomial and every monomial has exactly one encoding.
Coefficients are kept as ``int`` when integral and ``Fraction`` otherwise.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from itertools import zip_longest
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from .errors import UnboundVariable
from .exact import as_rational, format_rational, normalize

Monomial = Tuple[int, ...]
Coeff = Union[int, Fraction]


def _strip(exps: Iterable[int]) -> Monomial:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    if len(a) == len(b):
        return tuple(map(operator.add, a, b))
    return tuple(x + y for x, y in zip_longest(a, b, fillvalue=0))


def _glex_key(mono: Monomial, width: int):
    padded = mono + (0,) * (width - len(mono))
    return (-sum(mono), tuple(-e for e in padded))


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean: Dict[Monomial, Coeff] = {}
        if terms:
            for mono, c in terms.items():
                if any(e < 0 for e in mono):
                    raise ValueError("negative exponent in monomial")
                if isinstance(c, bool) or not isinstance(c, int):
                    c = normalize(as_rational(c))
                if c != 0:
                    key = _strip(mono)
                    c = normalize(clean.get(key, 0) + c)
                    if c:
                        clean[key] = c
                    else:
                        clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Coeff]) -> "Polynomial":
        # trusted constructor: keys stripped, coefficients normalized and nonzero
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        c = normalize(as_rational(c))
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, index: int, exponent: int = 1) -> "Polynomial":
        if index < 1:
            raise ValueError("variables are indexed from 1")
        if exponent < 0:
            raise ValueError("negative exponent")
        if exponent == 0:
            return cls.constant(1)
        return cls._raw({(0,) * (index - 1) + (exponent,): 1})

    @classmethod
    def from_exponent_maps(cls, terms: Mapping[Tuple[Tuple[int, int], ...], Coeff]) -> "Polynomial":
        """Build from ``{((var, exp), ...): coeff}`` with 1-based variable indices."""
        out: Dict[Monomial, Coeff] = {}
        for pairs, c in terms.items():
            width = max((v for v, _ in pairs), default=0)
            exps = [0] * width
            for v, e in pairs:
                exps[v - 1] += e
            out[tuple(exps)] = c
        return cls(out)

    # -- inspection -------------------------------------------------------

    def terms(self) -> Iterator[Tuple[Dict[int, int], Fraction]]:
        """Yield ``({var: exponent}, coefficient)`` in graded-lex order."""
        for mono, c in self.sorted_terms():
            yield {i + 1: e for i, e in enumerate(mono) if e}, Fraction(c)

    def sorted_terms(self):
        width = max((len(m) for m in self._terms), default=0)
        return sorted(self._terms.items(), key=lambda kv: _glex_key(kv[0], width))

    def raw_terms(self) -> Dict[Monomial, Coeff]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self._terms.get((), 0))

    def constant_term(self) -> Fraction:
        return Fraction(self._terms.get((), 0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def variables(self) -> frozenset:
        return frozenset(i + 1 for m in self._terms for i, e in enumerate(m) if e)

    def __len__(self):
        return len(self._terms)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _lift(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not o._terms:
            return self
        out = dict(self._terms)
        for m, c in o._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = normalize(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def scale(self, c) -> "Polynomial":
        c = normalize(as_rational(c)) if not isinstance(c, int) else c
        if c == 0:
            return Polynomial._raw({})
        if c == 1:
            return self
        return Polynomial._raw({m: normalize(v * c) for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self._terms, o._terms
        if not a or not b:
            return Polynomial._raw({})
        if len(a) < len(b):
            a, b = b, a
        # pad to a common width so the inner loop is a plain map(add)
        width = max(max(map(len, a)), max(map(len, b)))
        pa = [(m + (0,) * (width - len(m)), c) for m, c in a.items()]
        pb = [(m + (0,) * (width - len(m)), c) for m, c in b.items()]
        out: Dict[Monomial, Coeff] = {}
        get = out.get
        add = operator.add
        for mb, cb in pb:
            for ma, ca in pa:
                m = tuple(map(add, ma, mb))
                out[m] = get(m, 0) + ca * cb
        clean: Dict[Monomial, Coeff] = {}
        for m, c in out.items():
            if c:
                if m and m[-1] == 0:
                    m = _strip(m)
                clean[m] = normalize(c)
        return Polynomial._raw(clean)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational constant only."""
        if isinstance(other, Polynomial):
            other = other.constant_value()
        c = as_rational(other)
        if c == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return self.scale(1 / c)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation -------------------------------------------------------

    def substitute(self, point: Mapping[int, object]) -> "Polynomial":
        """Replace the listed variables by rationals; others stay symbolic."""
        values = {int(k): normalize(as_rational(v)) for k, v in point.items()}
        out: Dict[Monomial, Coeff] = {}
        for mono, c in self._terms.items():
            keep = []
            for i, e in enumerate(mono):
                if e and (i + 1) in values:
                    c = c * values[i + 1] ** e
                    keep.append(0)
                else:
                    keep.append(e)
            key = _strip(keep)
            out[key] = out.get(key, 0) + c
        return Polynomial(out)

    def eval(self, point: Mapping[int, object]) -> Fraction:
        missing = self.variables() - {int(k) for k in point}
        if missing:
            names = ", ".join(f"x{i}" for i in sorted(missing))
            raise UnboundVariable(f"no value given for {names}")
        return self.substitute(point).constant_value()

    def __call__(self, *args) -> Fraction:
        return self.eval({i + 1: v for i, v in enumerate(args)})

    # -- text -------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, (mono, c) in enumerate(self.sorted_terms()):
            factors = []
            for i, e in enumerate(mono):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            mag = abs(Fraction(c))
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_rational(mag) + "*" + "*".join(factors)
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def as_polynomial(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, str):
        from .expr import parse_polynomial

        return parse_polynomial(value)
    return Polynomial.constant(value)


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def poly_pow(p: Polynomial, e: int) -> Polynomial:
    return p**e


def poly_eval(p: Polynomial, point: Mapping[int, object]) -> Fraction:
    return p.eval(point)


X1 = Polynomial.var(1)
X2 = Polynomial.var(2)
