"""Text forms: a small polynomial expression grammar and JSON spec documents.

Grammar (whitespace is ignored, multiplication is always explicit)::

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := ('+' | '-') unary | power
    power := atom ('^' INTEGER)?
    atom  := NUMBER | 'x' INDEX | '(' expr ')'

Division is only allowed by a nonzero constant, so ``3/2*x1^2`` works and
``x1/x2`` does not.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from .errors import GenfunError, ParseError
from .exact import as_rational, format_rational
from .polynomial import Polynomial
from .series import FamilySpec


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("num", text[i:j], line, start_col))
            col += j - i
            i = j
        elif ch == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("variable name needs an index, as in x1", line, start_col)
            index = int(text[i + 1 : j])
            if index < 1:
                raise ParseError("variables are numbered from x1", line, start_col)
            tokens.append(_Token("var", text[i:j], line, start_col))
            col += j - i
            i = j
        elif ch in "+-*/^()":
            tokens.append(_Token(ch, ch, line, start_col))
            i, col = i + 1, col + 1
        else:
            raise ParseError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.col)

    def parse(self) -> Polynomial:
        if self.tok.kind == "end":
            raise self.error("empty expression")
        result = self.expr()
        if self.tok.kind != "end":
            if self.tok.kind in ("num", "var", "("):
                raise self.error("implicit multiplication is not allowed; write '*'")
            raise self.error(f"unexpected {self.tok.text!r}")
        return result

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while self.tok.kind in ("*", "/"):
            op_tok = self.advance()
            rhs_tok = self.tok
            rhs = self.unary()
            if op_tok.kind == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant():
                    raise self.error("can only divide by a constant", rhs_tok)
                if rhs.is_zero():
                    raise self.error("division by zero", rhs_tok)
                acc = acc / rhs.constant_value()
        return acc

    def unary(self) -> Polynomial:
        if self.tok.kind == "-":
            self.advance()
            return -self.unary()
        if self.tok.kind == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.tok.kind == "^":
            self.advance()
            t = self.tok
            if t.kind == "-":
                raise self.error("exponent must be a nonnegative integer")
            if t.kind != "num":
                raise self.error("exponent must be an integer literal")
            self.advance()
            base = base ** int(t.text)
            if self.tok.kind == "^":
                raise self.error("chained exponents need parentheses")
        return base

    def atom(self) -> Polynomial:
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Polynomial.constant(int(t.text))
        if t.kind == "var":
            self.advance()
            return Polynomial.var(int(t.text[1:]))
        if t.kind == "(":
            self.advance()
            inner = self.expr()
            if self.tok.kind != ")":
                raise self.error("expected ')'")
            self.advance()
            return inner
        if t.kind == "end":
            raise self.error("unexpected end of expression")
        raise self.error(f"unexpected {t.text!r}")


def parse_polynomial(text: str) -> Polynomial:
    """Parse ``text`` into a :class:`Polynomial`; raises ParseError on bad input."""
    if not isinstance(text, str):
        raise TypeError("expected a string")
    return _Parser(text).parse()


def format_polynomial(p: Polynomial) -> str:
    return str(p)


# -- spec documents -------------------------------------------------------

_KEYS = ("P", "Q", "alpha", "beta", "N", "eval")


def _locate(text: str, needle: str) -> Tuple[int, int]:
    # best-effort position of a key for error messages
    idx = text.find(needle)
    if idx < 0:
        return 1, 1
    line = text.count("\n", 0, idx) + 1
    col = idx - (text.rfind("\n", 0, idx) + 1) + 1
    return line, col


def _poly_field(text, key, i, value) -> Polynomial:
    line, col = _locate(text, f'"{key}"')
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"{key}[{i}] must be a string or integer", line, col)
    if isinstance(value, int):
        return Polynomial.constant(value)
    try:
        return parse_polynomial(value)
    except ParseError as exc:
        raise ParseError(f"{key}[{i}]: {exc.message} at column {exc.column} of the expression", line, col) from None


def _rational_field(text, key, value) -> Fraction:
    line, col = _locate(text, f'"{key}"')
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"{key} must be an integer or a string like \"p/q\"", line, col)
    try:
        return as_rational(value)
    except GenfunError:
        raise ParseError(f"{key}: not a rational number: {value!r}", line, col) from None


def parse_spec_document(text: str) -> Tuple[FamilySpec, Dict[int, Fraction]]:
    """Read a JSON spec document; returns the family and the evaluation point."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("spec document must be a JSON object")
    for key in doc:
        if key not in _KEYS:
            line, col = _locate(text, f'"{key}"')
            raise ParseError(f"unknown key {key!r}", line, col)
    if "P" not in doc:
        raise ParseError("missing required key 'P'")
    P = doc["P"]
    if not isinstance(P, list) or not P:
        raise ParseError("P must be a nonempty list", *_locate(text, '"P"'))
    Q = doc.get("Q", [])
    if not isinstance(Q, list):
        raise ParseError("Q must be a list", *_locate(text, '"Q"'))
    denom = [_poly_field(text, "P", i, v) for i, v in enumerate(P)]
    numer = [_poly_field(text, "Q", i, v) for i, v in enumerate(Q)]
    alpha = doc.get("alpha", 1)
    if isinstance(alpha, bool) or not isinstance(alpha, int) or alpha < 0:
        raise ParseError("alpha must be a nonnegative integer", *_locate(text, '"alpha"'))
    beta = _rational_field(text, "beta", doc.get("beta", 1))
    N = doc.get("N", 16)
    if isinstance(N, bool) or not isinstance(N, int) or N < 0:
        raise ParseError("N must be a nonnegative integer", *_locate(text, '"N"'))
    point: Dict[int, Fraction] = {}
    raw_eval = doc.get("eval", {})
    if not isinstance(raw_eval, dict):
        raise ParseError("eval must be an object", *_locate(text, '"eval"'))
    for var, value in raw_eval.items():
        name = var.strip()
        if not (name.startswith("x") and name[1:].isdigit() and int(name[1:]) >= 1):
            raise ParseError(f"eval key {var!r} is not a variable like x1", *_locate(text, f'"{var}"'))
        point[int(name[1:])] = _rational_field(text, var, value)
    spec = FamilySpec(denom, numer, alpha=alpha, beta=beta, N=N)
    return spec, point


def serialize_spec(spec: FamilySpec, point: Optional[Mapping[int, object]] = None) -> str:
    """Canonical JSON text for ``spec``: fixed key order and canonical polynomials."""
    doc = {"P": [str(p) for p in spec.denom]}
    if spec.numer:
        doc["Q"] = [str(q) for q in spec.numer]
    doc["alpha"] = spec.alpha
    doc["beta"] = format_rational(spec.beta)
    doc["N"] = spec.N
    if point:
        doc["eval"] = {f"x{k}": format_rational(as_rational(point[k])) for k in sorted(point)}
    return json.dumps(doc, indent=2) + "\n"
