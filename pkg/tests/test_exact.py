from decimal import Decimal
from fractions import Fraction

import pytest

from genfun.errors import DegenerateInput, FieldMismatch, NonRealSurd
from genfun.exact import (
    Surd,
    as_rational,
    format_rational,
    parse_surd,
    rational_arith,
    surd_arith,
    surd_to_float,
)


def test_rational_arith_examples():
    assert rational_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert rational_arith(Fraction(7, 7), 1, "mul") == 1
    with pytest.raises(DegenerateInput):
        rational_arith(Fraction(3, 4), 0, "div")


def test_rationals_are_reduced():
    q = as_rational("6/8")
    assert (q.numerator, q.denominator) == (3, 4)
    assert as_rational("0/5") == Fraction(0, 1)
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"


def test_floats_and_junk_refused():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)
    with pytest.raises(DegenerateInput):
        as_rational("1/0")


def test_surd_arith_examples():
    r5 = Surd.sqrt(5)
    assert surd_arith(1 + r5, 1 - r5, "mul") == Surd(-4, 0, 5)
    r2 = Surd(0, 1, 2)
    prod = surd_arith(r2, r2, "mul")
    assert prod.is_rational() and prod.rational == 2
    q = surd_arith(Surd(1, 0, 5), 1 + r5, "div")
    assert q == Surd(Fraction(-1, 4), Fraction(1, 4), 5)
    assert q * (1 + r5) == 1


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        surd_arith(Surd.sqrt(5), Surd.sqrt(2), "add")


def test_perfect_square_radicand_collapses():
    s = Surd(1, 3, Fraction(9, 4))
    assert s.is_rational() and s.rational == Fraction(11, 2)


def test_negative_radicand():
    with pytest.raises(NonRealSurd):
        Surd(0, 1, -5)


def test_surd_to_float_examples():
    assert abs(surd_to_float(Surd.sqrt(5)) - Decimal("2.2360679774997896964")) < Decimal(2) ** -53
    assert abs(float(surd_to_float(Surd(Fraction(3, 2), Fraction(-1, 2), 5))) - 0.3819660112501051) < 1e-15
    assert surd_to_float(Surd(0, 0, 5)) == 0


def test_surd_text_round_trip():
    s = Surd(Fraction(-1, 4), Fraction(1, 4), 5)
    assert str(s) == "-1/4 + 1/4*sqrt(5)"
    assert parse_surd(str(s)) == s
    assert parse_surd("-sqrt(2)") == Surd(0, -1, 2)
    with pytest.raises(DegenerateInput):
        parse_surd("1 2*sqrt(2)")
