from fractions import Fraction

import pytest

from genfun.catalog import (
    catalog_check,
    catalog_eval,
    catalog_lookup,
    catalog_names,
    garland_rank_polynomial,
    gegenbauer_2F1_crosscheck,
)
from genfun.errors import InvalidParameter, UnknownEntry
from genfun.polynomial import X1

SUSPECT = {"pell_lucas", "tribonacci", "tribonacci_lucas", "rank_garland", "centered_dodecahedron"}


def test_lookup_examples():
    fp = catalog_lookup("fibonacci_poly").build_spec()
    assert fp.denom == (-X1, -1 + 0 * X1) and list(fp.numer) == [0, 1]
    g = catalog_lookup("gegenbauer").build_spec({"beta": "3/2"})
    assert list(g.denom) == [-2 * X1, 1] and g.beta == Fraction(3, 2)
    with pytest.raises(UnknownEntry):
        catalog_lookup("nosuch")


def test_eval_examples():
    assert catalog_eval("pell", {}, range(6)) == [0, 1, 2, 5, 12, 29]
    assert catalog_eval("legendre", {}, [2]) == [(3 * X1**2 - 1) * Fraction(1, 2)]
    assert catalog_eval("words_no_factor", {"m": 2}, range(5)) == [1, 2, 3, 5, 8]


def test_invalid_parameters():
    with pytest.raises(InvalidParameter):
        catalog_eval("humbert", {"m": 1})
    with pytest.raises(InvalidParameter):
        catalog_eval("simsek", {"lam": 1})
    with pytest.raises(InvalidParameter):
        catalog_eval("jacobi_special", {"beta": "-1/2"})
    with pytest.raises(InvalidParameter):
        catalog_eval("pell", {"q": 2})
    with pytest.raises(InvalidParameter):
        catalog_eval("jgonal", {"j": "7/2"})


@pytest.mark.parametrize("name", catalog_names())
def test_entries_against_references(name):
    entry = catalog_lookup(name)
    results = [catalog_check(name, params, 12) for params in entry.grid]
    if entry.reference is None:
        assert results == [None] * len(entry.grid)
    elif name in SUSPECT:
        assert entry.suspect and not all(results)
    else:
        assert all(results), name


def test_classical_values():
    U = catalog_eval("chebyshev_U", {}, range(13))
    assert [u.eval({1: 1}) for u in U] == list(range(1, 14))
    assert catalog_eval("jgonal", {"j": 3}, range(1, 5)) == [1, 3, 6, 10]
    rows = catalog_eval("binomial_row", {}, range(11))
    assert [r.eval({1: 1}) for r in rows] == [2**n for n in range(11)]


def test_garland_rank_polynomials():
    assert [str(garland_rank_polynomial(m)) for m in range(3)] == ["1", "x1^2 + x1 + 1", "x1^4 + 2*x1^3 + x1^2 + 2*x1 + 1"]
    assert [garland_rank_polynomial(m).eval({1: 1}) for m in range(6)] == [1, 3, 7, 17, 41, 99]


def test_gegenbauer_crosscheck_examples():
    assert gegenbauer_2F1_crosscheck(1, 1, 3) == 4
    assert gegenbauer_2F1_crosscheck(Fraction(2, 7), Fraction(5, 3), 0) == 1
    assert gegenbauer_2F1_crosscheck(Fraction(1, 2), 0, 2) == Fraction(-1, 2)
    with pytest.raises(InvalidParameter):
        gegenbauer_2F1_crosscheck(Fraction(-5, 2), 0, 4)


def test_gegenbauer_crosscheck_grid():
    for beta in (Fraction(1), Fraction(1, 2), Fraction(-1, 3)):
        C = catalog_eval("gegenbauer", {"beta": beta}, range(9))
        for x in (Fraction(-2), Fraction(-1, 2), Fraction(0), Fraction(1, 3), Fraction(1)):
            assert [gegenbauer_2F1_crosscheck(beta, x, n) for n in range(9)] == [c.eval({1: x}) for c in C]


def test_humbert_matches_twovar_at_beta_one():
    for m in (2, 3):
        h = catalog_eval("humbert", {"m": m, "beta": 1}, range(9))
        g = catalog_eval("twovar_fibonacci_type", {"k": 1, "m": 1, "n": m - 1}, range(9))
        for x in (Fraction(1, 2), Fraction(-2)):
            assert [p.eval({1: x}) for p in h] == [q.eval({1: m * x, 2: -1}) for q in g]
