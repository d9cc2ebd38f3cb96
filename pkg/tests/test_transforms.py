import math
from fractions import Fraction

import pytest

from genfun import transforms as tr
from genfun.errors import DivergentArgument
from genfun.exact import Surd
from genfun.polynomial import X1
from genfun.series import FamilySpec, TruncatedSeries, expand_S, expand_Y


def test_euler_examples():
    ones = TruncatedSeries([1] * 9)
    assert tr.euler_transform(ones, 1).values() == [2**j for j in range(9)]
    s = TruncatedSeries([3, X1, 0, -2])
    assert tr.euler_transform(s, 0) == s
    assert tr.euler_inverse(s, 0) == s


def test_antichain_image():
    anti = expand_S(FamilySpec([-1 - X1, -X1], [1, X1], N=12))
    image = expand_Y(FamilySpec([-1 - 3 * X1, 2 * X1**2], N=12))
    assert tr.euler_transform(anti, X1) == image
    assert tr.euler_inverse(image, X1) == anti


def test_lambert_examples():
    assert abs(tr.lambert_partial(Fraction(1, 2)).value - 1.606695152415292) < 1e-10
    assert tr.lambert_partial(0).value == 0
    with pytest.raises(DivergentArgument):
        tr.lambert_partial(1)
    with pytest.raises(DivergentArgument):
        tr.lambert_partial(Fraction(-3, 2))


def test_lambert_pair_value():
    # the difference is (sum 1/F_2j)/sqrt5, not the sum itself
    direct = float(tr.reciprocal_fib_sum(2, 1, 60))
    assert abs(direct - 1.5353705088362) < 1e-12
    assert abs(tr.lambert_fibonacci_pair() - direct / math.sqrt(5)) < 1e-12


def test_lambert_accepts_surds():
    x = Surd(Fraction(3, 2), Fraction(-1, 2), 5)
    s = tr.lambert_partial(x, 1e-12)
    assert s.last_term_magnitude < 1e-12


def test_reciprocal_fib_examples():
    assert abs(tr.reciprocal_fib_partial(2, 1).value - 1.5353705088362) < 1e-10
    assert tr.reciprocal_fib_partial(1, 0).value == 0
    with pytest.raises(DivergentArgument):
        tr.reciprocal_fib_partial(1, 2)
    F, L = tr.fibonacci_numbers(250), tr.lucas_numbers(250)
    lucas_sum = float(sum(Fraction(L[2 * j], F[4 * j]) for j in range(1, 61)))
    assert abs(lucas_sum - tr.reciprocal_fib_partial(2, 1).value) < 1e-10


def test_termwise_identity():
    assert tr.ys2_termwise(3, Fraction(1, 2), 15)


def test_ratio_report():
    rows = tr.verify_F2j_over_Fj(8)
    assert [r.coefficient for r in rows[:3]] == [3, 4, 7]
    assert not any(r.same_index for r in rows)
    assert all(r.shifted for r in rows)
    with pytest.raises(ValueError):
        tr.verify_F2j_over_Fj(0)
