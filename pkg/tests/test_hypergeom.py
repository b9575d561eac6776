from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from squareice.exact import LaurentPoly
from squareice.hypergeom import (HypergeometricPole, HypergeomTerm, hyper_coefficients,
                                 hyper_homogeneous, hyper_sum, hyper_terminating, pochhammer)


def test_chu_vandermonde_example():
    term = HypergeomTerm((-2, Fraction(1, 3)), (Fraction(2, 3),), 1)
    assert hyper_terminating(term) == Fraction(2, 5)


@given(st.integers(0, 8), st.fractions(-5, 5, max_denominator=7),
       st.fractions(Fraction(1, 7), 6, max_denominator=7))
def test_chu_vandermonde(m, b, c):
    assert hyper_sum([-m, b], [c], 1) == pochhammer(c - b, m) / pochhammer(c, m)


def test_one_step_and_empty_series():
    w = LaurentPoly.variable()
    assert hyper_sum([-1, 3], [-3], w) == 1 + w
    assert hyper_sum([0, Fraction(1, 2)], [Fraction(5, 2)], Fraction(7)) == 1


def test_nonterminating_and_pole():
    with pytest.raises(ValueError):
        HypergeomTerm((Fraction(1, 2), 1), (2,), Fraction(1, 2))
    with pytest.raises(HypergeometricPole):
        hyper_sum([-3, 1], [-1], 2)


def test_lower_pole_after_termination_is_fine():
    # 2F1(1-N, N; 2-2N; z) stops at z^(N-1) before (2-2N)_k vanishes
    assert len(hyper_coefficients([-3, 4], [-6])) == 4


def test_homogeneous_form():
    x = LaurentPoly.variable()
    num, den = x + 1, LaurentPoly.constant(2)
    # 2^2 * 2F1(-2, 1; 1; (x+1)/2) = (2 - (x+1))^2
    assert hyper_homogeneous([-2, 1], [1], num, den, 2) == (1 - x) ** 2
    with pytest.raises(ValueError):
        hyper_homogeneous([-3, 1], [1], num, den, 2)


def test_pochhammer():
    assert pochhammer(Fraction(1, 3), 3) == Fraction(1, 3) * Fraction(4, 3) * Fraction(7, 3)
    assert pochhammer(-2, 3) == 0
    assert pochhammer(5, 0) == 1
