from fractions import Fraction

import pytest

from genfun import binet as bn
from genfun.errors import DegenerateDenominator, NonRealSurd, RepeatedRoot
from genfun.exact import Surd
from genfun.series import FamilySpec, expand_S, expand_Y


def test_root_data_vieta():
    data = bn.QuadraticRootData.build(-1, -1)
    assert data.a1 * data.a2 == -1
    assert data.a1 + data.a2 == -1
    assert data.D == 5


def test_Y2_examples():
    v = bn.binet_Y2(-1, -1, 5)
    assert v == 8 and v.surd == 0
    assert bn.binet_Y2(Fraction(3, 2), Fraction(-7, 3), 0) == 1


def test_repeated_root_raises():
    # p1 = -2, p2 = 1 is U_n(1): the discriminant vanishes, so only the series applies
    with pytest.raises(RepeatedRoot):
        bn.binet_Y2(-2, 1, 2)
    assert expand_Y(FamilySpec([-2, 1], N=2)).values()[2] == 3


def test_other_degenerate_inputs():
    with pytest.raises(DegenerateDenominator):
        bn.binet_Y2(3, 0, 2)
    with pytest.raises(NonRealSurd):
        bn.binet_Y2(1, 1, 2)


def test_perfect_square_discriminant():
    # roots 1 and 1/2: D = 1
    vals = expand_Y(FamilySpec([-3, 2], N=8)).values()
    assert [bn.binet_Y2(-3, 2, n) for n in range(9)] == vals


def test_S2_examples():
    assert bn.binet_S2(-1, -1, 0, 1, 7) == 13
    assert bn.binet_S2(-2, -1, 1, 1, 3) == 17
    assert bn.binet_S2(-2, -1, 0, 1, 4) == 12


def test_conjugation_symmetry():
    # the value is rational, so it is fixed by sqrt(D) -> -sqrt(D)
    for n in range(6):
        v = bn.binet_S2(Fraction(1, 2), -3, 2, 5, n)
        assert v.conjugate() == v


def test_named_forms():
    fib = expand_S(FamilySpec([-1, -1], [0, 1], N=10)).values()
    luc = expand_S(FamilySpec([-1, -1], [2, -1], N=10)).values()
    assert [bn.binet_fibonacci(n) for n in range(11)] == fib
    assert [bn.binet_lucas(n) for n in range(11)] == luc
    assert bn.binet_lucas_printed(1) == Surd(0, -1, 5)
    assert [bn.binet_ternary_words(n) for n in range(6)] == [1, 3, 7, 17, 41, 99]


def test_gm_examples():
    assert [bn.closed_form_gm(m) for m in (0, 1, 4)] == [1, 3, 41]
