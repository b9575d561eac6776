from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from squareice.exact import (LaurentPoly, QuadScalar, RadicandMismatch, TaylorSeries,
                             derivative_at_zero, laurent_ops, series_combine, trig_series)

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=30)
radicands = st.sampled_from([-3, -1, 2, 3])


@st.composite
def quad_triples(draw):
    d = draw(radicands)
    return tuple(QuadScalar(draw(fracs), draw(fracs), d) for _ in range(3))


@given(quad_triples())
@settings(max_examples=200)
def test_field_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if a != 0:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(fracs, fracs)
def test_norm_is_multiplicative_and_conjugate_product(x, y):
    a = QuadScalar(x, y, 3)
    assert a * a.conjugate() == a.norm()
    assert (a * a).norm() == a.norm() ** 2


def test_mixed_radicands_rejected():
    with pytest.raises(RadicandMismatch):
        QuadScalar(0, 1, 2) + QuadScalar(0, 1, 3)


def test_rational_interop():
    s = QuadScalar(Fraction(3, 4), 0, 3)
    assert s == Fraction(3, 4) and s.is_rational() and s.to_fraction() == Fraction(3, 4)
    assert hash(s) == hash(Fraction(3, 4))
    assert QuadScalar(0, 1, 3) ** 2 == 3
    assert QuadScalar(0, 1, -1) ** 4 == 1
    assert QuadScalar(0, 1, 2) ** -2 == Fraction(1, 2)


def test_sign_of_real_surds():
    assert QuadScalar(1, -1, 2).sign() == -1      # 1 - sqrt2
    assert QuadScalar(-1, 1, 3).sign() == 1       # sqrt3 - 1
    assert QuadScalar(0, 0, 3).sign() == 0


def test_trig_series_examples():
    assert trig_series("sin", 0, 1, 3).coeffs == (0, 1, 0, Fraction(-1, 6))
    half, r3 = Fraction(1, 2), QuadScalar(0, Fraction(1, 2), 3)
    assert list(trig_series("cos", half, r3, 1).coeffs) == [r3, -half]
    assert list(trig_series("sin", -r3, half, 0).coeffs) == [-r3]


def test_trig_series_rejects_unnormalized_phase():
    with pytest.raises(ValueError):
        trig_series("sin", 1, 1, 2)


def _to_sympy(sympy, c, d):
    if isinstance(c, QuadScalar):
        return sympy.Rational(c.a.numerator, c.a.denominator) + \
            sympy.Rational(c.b.numerator, c.b.denominator) * sympy.sqrt(d)
    c = Fraction(c)
    return sympy.Rational(c.numerator, c.denominator)


def test_trig_series_against_sympy():
    sympy = pytest.importorskip("sympy")
    e = sympy.symbols("e")
    ref = sympy.series(sympy.sin(e - sympy.pi / 3), e, 0, 7).removeO()
    s = trig_series("sin", QuadScalar(0, Fraction(-1, 2), 3), Fraction(1, 2), 6)
    for n in range(7):
        assert sympy.simplify(ref.coeff(e, n) - _to_sympy(sympy, s.coeffs[n], 3)) == 0


def test_series_combine_examples():
    one_plus = TaylorSeries([1, 1], 1)
    assert series_combine(one_plus, TaylorSeries([1, 0], 1), "div").coeffs == (1, 1)
    eps = TaylorSeries([0, 1], 2)
    assert series_combine(eps, eps, "mul", 2).coeffs == (0, 0, 1)
    geo = series_combine(TaylorSeries([1], 2), TaylorSeries([1, 1], 2), "div", 2)
    assert geo.coeffs == (1, -1, 1)
    assert series_combine(geo, TaylorSeries([1, 1], 2), "mul").coeffs == (1, 0, 0)


def test_series_division_by_zero_constant():
    with pytest.raises(ZeroDivisionError):
        series_combine(TaylorSeries([1], 2), TaylorSeries([0, 1], 2), "div")


def test_series_order_cannot_be_exceeded():
    with pytest.raises(ValueError):
        series_combine(TaylorSeries([1, 1], 1), TaylorSeries([1, 1], 1), "mul", 3)


@given(st.lists(fracs, min_size=1, max_size=6), st.lists(fracs, min_size=1, max_size=6))
def test_product_is_truncated_convolution(a, b):
    K = min(len(a), len(b)) - 1
    p = TaylorSeries(a[:K + 1], K) * TaylorSeries(b[:K + 1], K)
    full = [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(K + 1)]
    assert list(p.coeffs) == full


def test_derivative_at_zero():
    assert derivative_at_zero(TaylorSeries([0, 1, 0, Fraction(-1, 6)], 3), 3) == -1
    assert derivative_at_zero(TaylorSeries([1, -1, 1], 2), 2) == 2
    assert derivative_at_zero(TaylorSeries([7, 3], 1), 0) == 7
    with pytest.raises(ValueError):
        derivative_at_zero(TaylorSeries([1, 2], 1), 2)


@pytest.mark.parametrize("K", [1, 4, 7])
def test_sine_derivatives(K):
    s = trig_series("sin", 0, 1, K)
    for j in range(K + 1):
        expected = 0 if j % 2 == 0 else (-1) ** ((j - 1) // 2)
        assert derivative_at_zero(s, j) == expected


def test_laurent_examples():
    p = LaurentPoly({1: 1, -1: -1})
    assert laurent_ops(p, None, "invert-variable") == LaurentPoly({-1: 1, 1: -1})
    assert laurent_ops(LaurentPoly({1: 1, 0: 3, -1: 1}), 1, "evaluate-at") == 5
    assert laurent_ops(p, p, "mul") == LaurentPoly({2: 1, 0: -2, -2: 1})
    assert laurent_ops(p, p, "add") == LaurentPoly({1: 2, -1: -2})


def test_laurent_no_stored_zeros_and_exact_evaluation():
    p = LaurentPoly({1: 1, 0: 0, -1: -1}) + LaurentPoly({1: -1})
    assert p.exponents() == [-1]
    v = LaurentPoly({-2: 1}).evaluate(2)
    assert v == Fraction(1, 4) and isinstance(v, Fraction)
    with pytest.raises(ZeroDivisionError):
        LaurentPoly({-1: 1}).evaluate(0)


@given(st.dictionaries(st.integers(-6, 6), fracs, max_size=6))
def test_invert_variable_is_involution(c):
    p = LaurentPoly(c)
    assert p.invert_variable().invert_variable() == p


@given(st.dictionaries(st.integers(-4, 4), fracs, max_size=4),
       st.dictionaries(st.integers(-4, 4), fracs, max_size=4),
       st.fractions(min_value=1, max_value=5, max_denominator=5))
def test_evaluation_is_a_ring_map(a, b, x):
    p, q = LaurentPoly(a), LaurentPoly(b)
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)


def test_shift_over_gaussian_rationals():
    i = QuadScalar(0, 1, -1)
    p = LaurentPoly({2: 1}, -1)       # x^2
    assert p.shift(i) == LaurentPoly({2: 1, 1: 2 * i, 0: -1}, -1)
