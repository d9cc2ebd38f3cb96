import math
import warnings
from fractions import Fraction

import pytest

from genfun import closed_forms as cf
from genfun.errors import DegenerateInput, TruncationExceeded
from genfun.polynomial import Polynomial, X1, X2
from genfun.series import FamilySpec, expand_S, expand_Y, expand_Y_higher


def test_binomial_and_pochhammer():
    assert cf.binomial(5, 2) == 10
    assert cf.pochhammer(Fraction(7, 3), 0) == 1
    for n in range(8):
        assert cf.pochhammer(3, n) / math.factorial(n) == Fraction((n + 1) * (n + 2), 2)
    with pytest.raises(DegenerateInput):
        cf.binomial(-1, 0)
    with pytest.raises(DegenerateInput):
        cf.binomial(3, -1)


def test_two_term_examples():
    assert cf.explicit_Y_m2(-X1, -1, 3) == X1**3 + 2 * X1
    assert cf.explicit_Y_m2(X1 * X2, 7, 0) == 1
    p1 = -X1**2 - 4 * X1 - 1
    assert cf.explicit_Y_m2(p1, X1**2, 2) == (X1**2 + 4 * X1 + 1) ** 2 - X1**2


def test_three_term_examples():
    assert cf.explicit_Y_m3(X1, X2, 1, 0) == 1
    assert cf.explicit_Y_m3(-1, -1, -1, 4) == 7
    assert cf.explicit_Y_m3(-X1, 0, 0, 2) == X1**2


def test_three_term_tighter_limits_lose_terms():
    assert cf.explicit_Y_m3_printed_bounds(-1, -1, -1, 3) == 3
    assert cf.explicit_Y_m3(-1, -1, -1, 3) == 4


def test_nested_index_bounds():
    idx = cf.NestedSumIndex(3, 6)
    seen = list(idx)
    assert len(seen) == len(set(seen))
    for n2, n3 in seen:
        assert 0 <= n2 <= 6 and 0 <= n3 <= n2 // 3


def test_general_examples():
    for m in (2, 3, 4, 5):
        F = cf.order_m_fibonacci_recurrence(12, m)
        assert [cf.explicit_Y_general([-1] * m, n) for n in range(13)] == F
        assert F[0] == F[1] == 1
    P = [X1, -2, X2]
    for n in range(8):
        assert cf.explicit_Y_general(P[:2], n) == cf.explicit_Y_m2(*P[:2], n)
        assert cf.explicit_Y_general(P, n) == cf.explicit_Y_m3(*P, n)


def test_general_single_term_warns():
    with pytest.warns(RuntimeWarning):
        assert cf.explicit_Y_general([X1], 3) == -(X1**3)


def test_corollaries_match_series():
    m = 3
    assert [cf.corollary_powers(m, n) for n in range(8)] == list(expand_Y(FamilySpec([X1, X1**2, X1**3], N=7)))
    assert [cf.corollary_constant(m, n) for n in range(8)] == list(expand_Y(FamilySpec([X1] * 3, N=7)))
    assert [cf.corollary_alternating(m, n) for n in range(8)] == expand_Y(FamilySpec([-1, 1, -1], N=7)).values()
    assert [cf.corollary_ones(m, n) for n in range(8)] == expand_Y(FamilySpec([1, 1, 1], N=7)).values()
    assert cf.corollary_variables(2, 2) == Polynomial.var(1) ** 2 - Polynomial.var(2)


def test_convolution_examples():
    Y = expand_Y(FamilySpec([-X1, -1], N=6))
    for n in range(1, 7):
        assert cf.convolution_S_from_Y(Y, [0, 1], n) == Y[n - 1]
        assert cf.convolution_S_from_Y(Y, [1], n) == Y[n]
    assert cf.convolution_S_from_Y(Y, [2, -X1], 2) == X1**2 + 2
    with pytest.raises(TruncationExceeded):
        cf.convolution_S_from_Y(Y, [1], 7)


def test_convolution_higher():
    spec = FamilySpec([-2, 0, -X1], [1, 5], beta=3, N=8)
    from genfun.series import expand_S_higher

    Yb = expand_Y_higher(spec)
    S = expand_S_higher(spec)
    assert all(cf.convolution_S_higher(Yb, [1, 5], n) == S[n] for n in range(9))
    assert cf.convolution_S_higher(Yb, [1, 5, 7, 9], 1) == Yb[1] + 5 * Yb[0]


def test_recurrence_Y_examples():
    Y2 = expand_Y_higher(FamilySpec([-1, -1], beta=2, N=6))
    assert Y2.values()[:3] == [1, 2, 5]
    assert cf.recurrence_Y_next([-1, -1], Y2, 1) == 2
    assert cf.recurrence_Y_next([X1], expand_Y_higher(FamilySpec([X1], beta=2, N=3)), 0) == -X1
    for n in range(3):
        Ysq = expand_Y_higher(FamilySpec([X1], beta=2, N=3))
        assert cf.recurrence_Y_next([X1], Ysq, n) == (-X1) ** (n + 1)


def test_recurrence_S_examples():
    Y = expand_Y(FamilySpec([-1, -1], N=6))
    assert cf.recurrence_S_next([-1, -1], [0, 1], Y, 4) == 5
    assert cf.recurrence_S_next([-1, -1], [2, -1], Y, 0) == 1
    assert all(cf.recurrence_S_next([-1, -1], [1], Y, n) == Y[n + 1] for n in range(5))
    # the subtracted variant already misses F_5
    assert cf.recurrence_S_next_printed([-1, -1], [0, 1], Y, 4) != 5


def test_order_addition():
    P = [-X1, 1]
    Yb = expand_Y_higher(FamilySpec(P, beta=Fraction(1, 2), N=5))
    Yg = expand_Y_higher(FamilySpec(P, beta=Fraction(3, 2), N=5))
    Y2 = expand_Y_higher(FamilySpec(P, beta=2, N=5))
    assert all(cf.order_addition(Yb, Yg, n) == Y2[n] for n in range(6))
    assert cf.order_addition_printed(Yb, Yg, 2) != Y2[2]


def test_twovar_examples():
    assert cf.explicit_twovar_G(1, 1, 1, 3) == X1**3 + 2 * X1 * X2
    assert cf.explicit_twovar_G(2, 3, 1, 0) == 1
    with pytest.raises(DegenerateInput):
        cf.explicit_twovar_G(1, 0, 0, 2)


def test_twovar_humbert_reduction():
    # 1 - a x t + t^a at y = -1, k = m = 1, n = a - 1
    for a in (2, 3, 4):
        humbert = expand_Y(FamilySpec([-a * X1] + [0] * (a - 2) + [1], N=8))
        for j in range(9):
            g = cf.explicit_twovar_G(1, 1, a - 1, j).substitute({2: -1})
            assert g.substitute({1: 1}) == humbert[j].substitute({1: Fraction(1, a)})


def test_twovar_against_series_small_grid():
    for k in range(4):
        for m in range(4):
            for n in range(4):
                if m + n == 0:
                    continue
                s = m + n
                P = [Polynomial()] * s
                P[0] = P[0] - X1**k
                P[s - 1] = P[s - 1] - X2**m
                Y = expand_Y(FamilySpec(P, N=10))
                assert all(cf.explicit_twovar_G(k, m, n, j) == Y[j] for j in range(11))
