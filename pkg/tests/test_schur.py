import pytest
from hypothesis import given, settings

from bpskalc.exactpoly import K, LaurentPoly
from bpskalc.schur import (NotSymmetric, divide_vandermonde, expand_in_schur,
                           from_schur, vandermonde, weyl_character)

from .oracles import same, schur, to_sympy
from .strategies import increasing, k_elements

FAST = settings(max_examples=25, deadline=None)


@FAST
@given(increasing(3))
def test_weyl_character_against_bialternant(chi):
    # the oracle takes the decreasing form
    assert same(to_sympy(weyl_character(chi)), schur(tuple(reversed(chi))))


@FAST
@given(increasing(2, -3, 3), increasing(2, -3, 3), k_elements(), k_elements())
def test_expansion_round_trip(c1, c2, a, b):
    f = weyl_character(c1) * a + weyl_character(c2) * b
    exp = expand_in_schur(f)
    assert from_schur(exp, 2) == f
    assert all(list(k) == sorted(k) for k in exp)


def test_small_characters():
    z1 = LaurentPoly.zvar(0, 2)
    z2 = LaurentPoly.zvar(1, 2)
    assert weyl_character((0, 1)) == z1 + z2
    assert weyl_character((0, 2)) == z1 * z1 + z1 * z2 + z2 * z2
    assert weyl_character((-1, 1)) == LaurentPoly.mono(2, z=(-1, 1)) + LaurentPoly.one(2) \
        + LaurentPoly.mono(2, z=(1, -1))


def test_non_dominant_and_non_symmetric():
    with pytest.raises(ValueError):
        weyl_character((1, 0))
    with pytest.raises(NotSymmetric):
        expand_in_schur(LaurentPoly.zvar(0, 2))


def test_vandermonde_division():
    v = vandermonde(3)
    f = weyl_character((0, 1, 3)) * K(1, 1, 0)
    assert divide_vandermonde(f * v, 3) == f
