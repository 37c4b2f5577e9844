import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bpskalc.exactpoly import BinFraction, K, LaurentPoly, Q, Q1, Q2
from bpskalc.shuffle import (ShuffleElement, a_element, a_element_vandermonde, a_hat,
                             e_class, m_exponents, p_element, p_exponents, shuffle_mul,
                             shuffle_product, sym_g_element, sym_g_vandermonde)

from .oracles import a_generator, same, shuffle, to_sympy

SLOW = settings(max_examples=12, deadline=None)


def mono(*z):
    return LaurentPoly.mono(len(z), z=z)


@SLOW
@given(st.integers(-2, 2), st.integers(-2, 2), st.sampled_from(["xi", "xip"]))
def test_one_by_one_against_sympy(x, y, kernel):
    got = shuffle_mul(mono(x), mono(y), kernel)
    assert same(to_sympy(got), shuffle(to_sympy(mono(x)), 1, to_sympy(mono(y)), 1, kernel))


@settings(max_examples=6, deadline=None)
@given(st.integers(-1, 1), st.integers(-1, 1), st.sampled_from(["xi", "xip"]))
def test_one_by_two_against_sympy(x, y, kernel):
    g = mono(y, 0) + mono(0, y)
    got = shuffle_mul(mono(x), g, kernel)
    assert same(to_sympy(got), shuffle(to_sympy(mono(x)), 1, to_sympy(g), 2, kernel))


def test_w_kernel_is_a_fraction():
    r = shuffle_mul(mono(1), mono(1), "w")
    assert isinstance(r, BinFraction)
    assert same(to_sympy(r.num) / to_sympy(r.expanded_denominator()),
                shuffle(to_sympy(mono(1)), 1, to_sympy(mono(1)), 1, "w"))


@pytest.mark.parametrize("d,v", [(2, -1), (2, 0), (2, 1), (2, 2), (3, -1), (3, 1), (3, 2)])
def test_generator_against_sympy(d, v):
    assert same(to_sympy(a_element(d, v).value), a_generator(d, v))


@pytest.mark.parametrize("d,v", [(2, 0), (2, 1), (3, 1), (3, 2), (3, 0)])
def test_generator_shape(d, v):
    a_element(d, v).check()


@pytest.mark.parametrize("d,v", [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2)])
def test_vandermonde_route(d, v):
    assert a_element_vandermonde(d, v) == a_element(d, v).value


@pytest.mark.parametrize("d,v", [(2, 1), (3, 1), (3, 2)])
def test_g_assembly(d, v):
    assert sym_g_element(d, v) == sym_g_vandermonde(d, v)


def test_closed_forms_d2():
    # E_{2,0} and E_{2,1}, the two-variable closed forms
    sl = LaurentPoly.one(2) + mono(-1, 1) + mono(1, -1)
    one_q1, one_q2 = 1 - K(1, -1, 0), 1 - K(1, 0, -1)
    want20 = (one_q1 * one_q2).with_nz(2) * (sl - (K(1, -1, 0) + K(1, 0, -1) + K(1, -1, -1)).with_nz(2))
    want21 = (one_q1 * one_q2 * (1 - K(1, -1, -1))).with_nz(2) * (mono(1, 0) + mono(0, 1))
    assert e_class(2, 0).value == want20
    assert e_class(2, 1).value == want21


def test_one_times_one():
    from bpskalc.divisibility import m_classes
    m1, m2 = m_classes()
    r = shuffle_mul(LaurentPoly.one(1), LaurentPoly.one(1))
    assert r == (m1 + m2) * K(1, -1, -1)


def test_p_element_d2():
    assert p_element(1, 0, 2).value == (K(1, -2, -2) * (Q1 - 1) * (Q2 - 1) * (Q - 1)).with_nz(2)


@pytest.mark.parametrize("d,v", [(1, 0), (1, 1), (2, 1), (3, 1), (3, 2)])
def test_p_element_single(d, v):
    assert p_element(d, v, 1).value == e_class(d, v).value


def test_exponent_vectors():
    assert m_exponents(2, 0) == (-1, 1)
    assert m_exponents(3, 1) == (0, 0, 1)
    assert sum(m_exponents(4, 3)) == 3
    assert p_exponents(2, 1, 2) == (0, 1, 0, 1)


def test_a_hat_scaling():
    assert a_hat(1, 0, 2).value == a_element(2, 0).value * K(-1, -1, -1)


def test_shuffle_elements_compose():
    x = a_element(1, 0)
    y = shuffle_mul(x, x)
    assert isinstance(y, ShuffleElement) and (y.d, y.v) == (2, 0)
    assert shuffle_product([x, x, x]).value.nz == 3


def test_bounds():
    with pytest.raises(ValueError):
        a_element(6, 1)
    with pytest.raises(ValueError):
        shuffle_mul(mono(0), mono(0), "nope")
    with pytest.raises(ValueError):
        p_element(2, 0, 1)


def test_jobs_gives_same_answer():
    from bpskalc.shuffle import _a_value
    assert _a_value(4, 1, 2) == _a_value(4, 1, 1)
