import pytest

from bpskalc.divisibility import (AllEqual, check_divisible, m_classes, primitivity_check,
                                  q1_minus_q2_probe, specialization_probe, wheel_factor,
                                  wheel_substitute)
from bpskalc.exactpoly import K, LaurentPoly, Q1, Q2
from bpskalc.shuffle import a_element, e_class, shuffle_mul


@pytest.mark.parametrize("d,v", [(2, 1), (2, -1), (3, 1), (3, 2), (3, -1)])
def test_divisible_and_primitive(d, v):
    r = check_divisible(e_class(d, v), d)
    assert r
    assert r.quotient * wheel_factor(d).with_nz(d) == e_class(d, v).value
    assert primitivity_check(r.quotient)


def test_non_coprime_fails_at_first_q_factor():
    r = check_divisible(e_class(2, 0), 2)
    assert not r and r.factor == "q1q2-1" and r.times == 0


# frozen from one run (DERIVED); the z_i = q1^i probe of the quotient
PROBE_21 = K(1, -1, -2) + K(1, 0, -2)


def test_frozen_probe():
    q = check_divisible(e_class(2, 1), 2).quotient
    assert len(q) == 2
    assert specialization_probe(q, "q1pow") == PROBE_21
    assert len(check_divisible(e_class(3, 1), 3).quotient) == 30


@pytest.mark.parametrize("d,v", [(2, 1), (3, 1)])
def test_q1_minus_q2(d, v):
    assert q1_minus_q2_probe(d, v)


def test_primitivity_rejects_multiples():
    f = LaurentPoly.zvar(0, 1)
    assert primitivity_check(f)
    assert not primitivity_check(f * 2)
    assert not primitivity_check(f * (Q1 - Q2))
    assert not primitivity_check(LaurentPoly.zero(1))


@pytest.mark.parametrize("variant", ["q1", "q2"])
def test_wheel_on_relations(variant):
    m1, m2 = m_classes()
    # two-variable classes, coincident index i = k
    assert wheel_substitute(m1, 0, 1, 0, variant).is_zero() or wheel_substitute(m2, 0, 1, 0, variant).is_zero()


@pytest.mark.parametrize("variant", ["q1", "q2"])
@pytest.mark.parametrize("v", [0, 1])
def test_wheel_on_three_variables(variant, v):
    f = e_class(3, v).value
    for ijk in [(0, 1, 2), (2, 0, 1), (1, 2, 0)]:
        assert wheel_substitute(f, *ijk, variant).is_zero()


def test_wheel_on_product():
    x = a_element(1, 0)
    f = shuffle_mul(shuffle_mul(x, x), x).value
    assert wheel_substitute(f, 0, 1, 2, "q1").is_zero()


def test_wheel_fails_on_generic_polynomial():
    f = LaurentPoly.one(3)
    assert not wheel_substitute(f, 0, 1, 2).is_zero()


def test_wheel_errors():
    f = LaurentPoly.one(3)
    with pytest.raises(AllEqual):
        wheel_substitute(f, 1, 1, 1)
    with pytest.raises(IndexError):
        wheel_substitute(f, 0, 1, 3)
    with pytest.raises(ValueError):
        wheel_substitute(f, 0, 1, 2, "q3")
    with pytest.raises(ValueError):
        specialization_probe(f, "nope")
