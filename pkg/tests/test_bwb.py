from fractions import Fraction

import pytest

from bpskalc.bwb import a_via_bwb, a_via_bwb_expansion, block_weights, chi_n, induction_class, l_set, product_class
from bpskalc.schur import from_schur
from bpskalc.shuffle import a_element, shuffle_mul


def test_chi_examples():
    assert chi_n(2, 1, 0) == (Fraction(-1), Fraction(1))
    assert chi_n(1, 3, 1) == (0, 0, 1)
    assert sum(chi_n(2, 3, 1)) == 2


def test_l_set_roots_are_roots():
    for e in l_set(3):
        r = e.root(3)
        assert sum(r) == 0 and sorted(r)[0] == -1 and sorted(r)[-1] == 1


@pytest.mark.parametrize("n,d,v", [(1, 1, 0), (2, 1, 0), (2, 1, 1), (1, 2, 1), (1, 3, 1), (3, 1, -1), (1, 3, 2), (2, 2, 1)])
def test_bwb_matches_symmetrization(n, d, v):
    assert a_via_bwb(n, d, v) == a_element(n * d, n * v).value


def test_expansion_is_in_K():
    exp = a_via_bwb_expansion(2, 1, 0)
    assert all(c.nz == 0 for c in exp.values())
    assert from_schur(exp, 2) == a_element(2, 0).value


@pytest.mark.parametrize("kernel", ["xi", "xip"])
@pytest.mark.parametrize("ca,cb", [((0,), (0,)), ((1,), (-1,)), ((0,), (0, 1)), ((-1, 1), (2,)), ((0, 0), (0, 1))])
def test_product_class_matches_shuffle(ca, cb, kernel):
    from bpskalc.schur import weyl_character
    lhs = from_schur(product_class(ca, cb, kernel), len(ca) + len(cb))
    assert lhs == shuffle_mul(weyl_character(ca), weyl_character(cb), kernel)


def test_induction_rejects_bad_weights():
    lam = (1, 0)
    with pytest.raises(ValueError):
        induction_class(lam, (0, 0), [((1, 0), (0, 0))])
    assert len(block_weights(1, 1)) > 0
