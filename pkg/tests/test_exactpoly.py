from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from bpskalc.exactpoly import (BinFraction, K, LaurentPoly, NotDivisible, NotPolynomial,
                               Q, Q1, Q2, divides, exact_divide)

from .oracles import q1, q2, same, to_sympy, zs
from .strategies import k_elements, laurent

FAST = settings(max_examples=40, deadline=None)


@FAST
@given(laurent(2), laurent(2), laurent(2))
def test_ring_laws(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == LaurentPoly.zero(2)
    assert f + LaurentPoly.zero(2) == f


@FAST
@given(laurent(2), laurent(2))
def test_product_matches_sympy(f, g):
    assert same(to_sympy(f * g), to_sympy(f) * to_sympy(g))


@FAST
@given(laurent(3))
def test_json_and_text_round_trip(f):
    assert LaurentPoly.from_json(f.to_json()) == f
    assert LaurentPoly.from_text(f.to_text(), 3) == f


@FAST
@given(laurent(2, max_terms=3), st.sampled_from([(0, 1, (0, 0)), (1, 0, (-1, 0)), (0, 1, (1, 1))]))
def test_divide_out_binomial(f, bino):
    i, j, c = bino
    g = LaurentPoly.binomial(2, i, j, c)
    assert exact_divide(f * g, g) == f


@FAST
@given(k_elements(), st.sampled_from(["q1", "q2", "q"]))
def test_divide_in_K(f, which):
    g = {"q1": Q1 - 1, "q2": Q2 - 1, "q": Q - 1}[which]
    assert exact_divide(f * g, g) == f
    assert divides(g, f * g)


def test_non_divisible_raises():
    with pytest.raises(NotDivisible):
        exact_divide(Q1 + 1, Q1 - 1)
    assert not divides(Q - 1, Q1 - 1)


def test_binomial_convention():
    z1, z2 = zs(2)
    b = LaurentPoly.binomial(2, 0, 1, (1, -1))
    assert same(to_sympy(b), z2 - q1 / q2 * z1)


@FAST
@given(laurent(3, max_terms=3), st.integers(-2, 2), st.integers(-1, 1))
def test_substitute_matches_sympy(f, e, a):
    z1, z2, z3 = zs(3)
    key = (a, 0, e, 0, 1)       # z1 -> q1^a z1^e z3
    got = f.substitute_z({0: key})
    want = to_sympy(f).subs(z1, q1 ** a * z1 ** e * z3)
    assert same(to_sympy(got), want)


@FAST
@given(laurent(2, max_terms=3))
def test_evaluate_q(f):
    vals = f.evaluate_q(Fraction(2), Fraction(-1, 3))
    expr = to_sympy(f).subs({q1: 2, q2: sp.Rational(-1, 3)})
    back = sum(sp.Rational(c.numerator, c.denominator) * sp.prod([zi ** e for zi, e in zip(zs(2), k)])
               for k, c in vals.items())
    assert sp.expand(expr - back) == 0


def test_content():
    f = (LaurentPoly.zvar(0, 2) * 6 + K(-4, 1, 0).with_nz(2))
    assert f.content() == 2


def test_binfraction_sum_becomes_polynomial():
    # 1/(z2 - z1) + 1/(z1 - z2) = 0 and (z2^2 - z1^2)/(z2 - z1) = z1 + z2
    a = BinFraction.from_factors(2, LaurentPoly.one(2), [], [(0, 1, (0, 0))])
    b = BinFraction.from_factors(2, -LaurentPoly.one(2), [], [(0, 1, (0, 0))])
    assert (a + b).to_laurent().is_zero()
    num = LaurentPoly.mono(2, z=(0, 2)) - LaurentPoly.mono(2, z=(2, 0))
    c = BinFraction.from_factors(2, num, [], [(0, 1, (0, 0))])
    assert c.to_laurent() == LaurentPoly.zvar(0, 2) + LaurentPoly.zvar(1, 2)


def test_binfraction_not_polynomial():
    a = BinFraction.from_factors(2, LaurentPoly.one(2), [], [(0, 1, (0, 0))])
    with pytest.raises(NotPolynomial):
        a.to_laurent()


@FAST
@given(laurent(2, max_terms=3))
def test_permute_twice(f):
    assert f.permute_z((1, 0)).permute_z((1, 0)) == f
    assert (f + f.permute_z((1, 0))).is_symmetric()
