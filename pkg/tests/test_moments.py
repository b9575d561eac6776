from fractions import Fraction

import pytest

from squareice.moments import (FREE_FERMION, ICE, MINUS_HALF, POINTS, cot_derivative_moments,
                               cot_derivative_poly, even_subsequence, moment_polynomial,
                               point_for_weight)


def test_small_examples():
    assert cot_derivative_moments(ICE, 2).reduced_moments == (2, 0, Fraction(16, 3))
    assert cot_derivative_moments(FREE_FERMION, 2).reduced_moments == (2, 0, 8)
    assert cot_derivative_moments(MINUS_HALF, 2).reduced_moments == (2, 0, 16)
    for p in POINTS:
        assert cot_derivative_moments(p, 1)[1] == 0


@pytest.mark.parametrize("point", POINTS, ids=str)
def test_against_symbolic_differentiation(point):
    sympy = pytest.importorskip("sympy")
    lam = sympy.symbols("lam")
    eta = {ICE.tag: sympy.pi / 6, FREE_FERMION.tag: sympy.pi / 4, MINUS_HALF.tag: sympy.pi / 3}[point.tag]
    f = sympy.sin(2 * eta) / (sympy.sin(lam - eta) * sympy.sin(lam + eta))
    ms = cot_derivative_moments(point, 8)
    t = sympy.sqrt(point.tan_eta_squared.numerator) / sympy.sqrt(point.tan_eta_squared.denominator)
    for k in range(9):
        ref = sympy.diff(f, lam, k).subs(lam, sympy.pi / 2)
        q = ms[k]
        assert sympy.simplify(ref - t * sympy.Rational(q.numerator, q.denominator)) == 0


@pytest.mark.parametrize("point", POINTS, ids=str)
def test_chessboard_and_positivity(point):
    ms = cot_derivative_moments(point, 30)
    assert ms[0] == 2
    assert all(ms[k] == 0 for k in range(1, 31, 2))
    assert all(ms[k] > 0 for k in range(0, 31, 2))


def test_same_polynomial_at_every_point():
    for k in range(0, 21, 2):
        coeffs = moment_polynomial(k)
        assert all(isinstance(c, int) for c in coeffs)
        for p in POINTS:
            s = p.tan_eta_squared
            assert sum(c * s ** i for i, c in enumerate(coeffs)) == cot_derivative_moments(p, k)[k]


def test_cot_polys_follow_the_riccati_rule():
    # d/dl cot = -1 - cot^2
    assert cot_derivative_poly(1) == [-1, 0, -1]
    assert cot_derivative_poly(2) == [0, 2, 0, 2]


def test_moment_is_tan_times_reduced():
    ms = cot_derivative_moments(ICE, 4)
    assert ms.moment(0) ** 2 == Fraction(4, 3)
    assert ms.moment(2) == ICE.tan_eta * Fraction(16, 3)


def test_even_subsequence():
    ms = cot_derivative_moments(MINUS_HALF, 6)
    assert even_subsequence(ms, 0, 1) == [2]
    assert even_subsequence(ms, 1, 1) == [16]
    ice = cot_derivative_moments(ICE, 4)
    assert even_subsequence(ice, 0, 2) == [2, Fraction(16, 3), ice[4]]
    with pytest.raises(ValueError):
        even_subsequence(ice, 1, 2)


def test_special_point_data():
    for p, x in zip(POINTS, (1, 2, 3)):
        assert point_for_weight(x) is p
        assert p.sin_eta ** 2 + p.cos_eta ** 2 == 1
    assert [p.delta for p in POINTS] == [Fraction(1, 2), 0, Fraction(-1, 2)]
    with pytest.raises(ValueError):
        point_for_weight(4)


def test_concurrent_fill_is_consistent():
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(8) as pool:
        results = list(pool.map(lambda K: cot_derivative_moments(MINUS_HALF, K), range(40, 0, -1)))
    longest = results[0].reduced_moments
    assert all(r.reduced_moments == longest[:len(r)] for r in results)
