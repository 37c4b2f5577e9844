import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bpskalc.dtseries import (a_d_enumerate, dt_series, macmahon,
                              product_formula, series_exp, slope_bijection_all,
                              slope_bijection_check, wallcrossing_holds)

from .oracles import plane_partitions, product_series

# plane partition counts, OEIS A000219
MACMAHON_12 = (1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859, 1479)


def test_macmahon_values():
    assert macmahon(12).coeffs == MACMAHON_12


def test_macmahon_brute_force():
    assert list(macmahon(8).coeffs) == plane_partitions(8)


@settings(max_examples=15, deadline=None)
@given(st.dictionaries(st.integers(1, 4), st.integers(-3, 3), max_size=3), st.sampled_from([1, -1]))
def test_product_formula_against_sympy(exps, sign):
    assert list(product_formula(exps, sign, 8).coeffs) == product_series(exps, sign, 8)


def test_dt_alternates():
    dt = dt_series(12)
    assert [(-1) ** d * dt[d] for d in range(13)] == list(MACMAHON_12)
    assert wallcrossing_holds(12)


def test_a_d():
    assert a_d_enumerate(12) == list(MACMAHON_12)
    assert a_d_enumerate(20) == list(macmahon(20).coeffs)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 10 ** 4))
def test_slope_count(d):
    assert slope_bijection_check(d)


def test_slope_count_all():
    assert slope_bijection_all(2000)


def test_series_exp_keeps_fractions():
    from fractions import Fraction
    F = series_exp([Fraction(0), Fraction(1, 2), Fraction(0)], 2)
    assert F[1] == Fraction(1, 2)


def test_bounds():
    with pytest.raises(ValueError):
        product_formula({1: 1}, 1, 65)
    with pytest.raises(ValueError):
        product_formula({1: 1}, 2, 3)
    with pytest.raises(ValueError):
        a_d_enumerate(21)
    with pytest.raises(ValueError):
        slope_bijection_check(0)
