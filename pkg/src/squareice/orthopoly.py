"""Meixner-Pollaczek, continuous Hahn and continuous dual Hahn polynomials.

Each family is stored in the moment variable ``x`` (so the moment functional
is just ``sum c_k m_k``) with real rational coefficients.  The complex
hypergeometric representations are evaluated over radicand -1 and the
imaginary part is required to vanish.

Family ↔ point:

    MP       FreeFermion   P_n^(1/2)(x/4; pi/2)
    CH       Ice           p_n(x/6; 1/3, 2/3, 1/3, 2/3)
    CDH0     MinusHalf     S_n(x^2/36; 0, 1/3, 2/3), even moments
    CDH1     MinusHalf     S_n(x^2/36; 1, 1/3, 2/3), even moments shifted by 2
    CDHtilde (none)        S_n(x^2/36; 1/2, -1/6, 1/6)
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import LaurentPoly, QuadScalar
from .hankel import det_z
from .hypergeom import HypergeomTerm, hyper_sum, hyper_terminating, pochhammer
from .moments import (FREE_FERMION, ICE, MINUS_HALF, MomentSequence, SpecialPoint,
                      cot_derivative_moments)

__all__ = [
    "Family", "PolyFamily", "HypergeomTerm", "hyper_terminating", "family_polynomials",
    "meixner_pollaczek", "continuous_hahn", "continuous_dual_hahn", "moment_functional",
    "product_determinant", "block_product", "block_closed_form", "difference_equation_residual",
    "shift_identities", "product_route_agrees", "family_norm", "family_leading",
]

I = QuadScalar(0, 1, -1)
SQRT3 = QuadScalar(0, 1, 3)


class Family(str, enum.Enum):
    MP = "MP"
    CH = "CH"
    CDH0 = "CDH0"
    CDH1 = "CDH1"
    CDHTILDE = "CDHtilde"


CDH_PARAMS = {
    Family.CDH0: (Fraction(0), Fraction(1, 3), Fraction(2, 3)),
    Family.CDH1: (Fraction(1), Fraction(1, 3), Fraction(2, 3)),
    Family.CDHTILDE: (Fraction(1, 2), Fraction(-1, 6), Fraction(1, 6)),
}
CH_PARAMS = (Fraction(1, 3), Fraction(2, 3), Fraction(1, 3), Fraction(2, 3))
MP_ALPHA = Fraction(1, 2)


def _as_poly(v) -> LaurentPoly:
    return v if isinstance(v, LaurentPoly) else LaurentPoly.constant(v)


def _real(p: LaurentPoly, what: str) -> LaurentPoly:
    try:
        return p.to_rational()
    except ValueError:
        raise ArithmeticError(f"{what}: imaginary residue {p.surd_part()}") from None


# -- native-variable constructions (radicand -1) ----------------------------

def meixner_pollaczek(n: int, alpha=MP_ALPHA) -> LaurentPoly:
    """``P_n^(alpha)(X; pi/2) = (2 alpha)_n/n! i^n 2F1(-n, alpha + iX; 2 alpha; 2)``."""
    upper = [-n, LaurentPoly({0: alpha, 1: I})]
    series = _as_poly(hyper_sum(upper, [2 * alpha], 2))
    return series * (I ** n * (pochhammer(2 * alpha, n) / factorial(n)))


def continuous_hahn(n: int, a=CH_PARAMS[0], b=CH_PARAMS[1], c=CH_PARAMS[2],
                    d=CH_PARAMS[3]) -> LaurentPoly:
    """``p_n(X; a,b,c,d)`` in the standard normalization, over radicand -1."""
    upper = [-n, n + a + b + c + d - 1, LaurentPoly({0: a, 1: I})]
    series = _as_poly(hyper_sum(upper, [a + c, a + d], 1))
    return series * (I ** n * (pochhammer(a + c, n) * pochhammer(a + d, n) / factorial(n)))


def continuous_dual_hahn(n: int, a, b, c) -> LaurentPoly:
    """``S_n(y; a, b, c)`` as a rational polynomial in ``y``.

    Uses ``(a + iX)_k (a - iX)_k = prod_{j<k} ((a+j)^2 + y)`` with ``y = X^2``.
    """
    total = LaurentPoly()
    prod = LaurentPoly.constant(1)
    for k in range(n + 1):
        coef = pochhammer(-n, k) / (pochhammer(a + b, k) * pochhammer(a + c, k) * factorial(k))
        total = total + prod * coef
        prod = prod * LaurentPoly({0: (a + k) ** 2, 1: 1})
    return total * (pochhammer(a + b, n) * pochhammer(a + c, n))


def _square_arg(p: LaurentPoly, scale) -> LaurentPoly:
    """``p(y) -> p(scale * x^2)``."""
    return LaurentPoly({2 * e: v * scale ** e for e, v in p.items()}, p.radicand)


# -- families in the moment variable ----------------------------------------

@dataclass(frozen=True)
class PolyFamily:
    """Polynomials ``p_0..p_n`` in the moment variable with printed norms and leading terms.

    For the CDH variants ``p_n`` has degree ``2n`` in ``x`` (only even powers).
    ``norms`` is ``None`` for CDHtilde, which is not tied to a moment functional.
    """

    tag: Family
    polys: tuple
    norms: tuple | None
    leading: tuple

    def __post_init__(self):
        step = 2 if self.tag in CDH_PARAMS else 1
        for n, (p, k) in enumerate(zip(self.polys, self.leading)):
            if p.degree() != step * n or p.leading_coeff() != k:
                raise ArithmeticError(f"{self.tag.value} p_{n}: degree/leading coefficient mismatch")

    @property
    def point(self) -> SpecialPoint | None:
        return {Family.MP: FREE_FERMION, Family.CH: ICE, Family.CDH0: MINUS_HALF,
                Family.CDH1: MINUS_HALF}.get(self.tag)

    @property
    def sigma(self) -> int | None:
        return {Family.CDH0: 0, Family.CDH1: 1}.get(self.tag)


def family_norm(tag: Family, n: int):
    """Printed ``h_n``, including the surd factors."""
    tag = Family(tag)
    if tag is Family.MP:
        return Fraction(2)
    if tag is Family.CH:
        r = Fraction(2 * factorial(3 * n + 1), (2 * n + 1) * 3 ** (3 * n) * factorial(n))
        return r / SQRT3
    if tag is Family.CDH0:
        return Fraction(2 * factorial(n) * factorial(3 * n), 3 ** (3 * n)) * SQRT3
    if tag is Family.CDH1:
        return Fraction(8 * factorial(n) * factorial(3 * n + 2), 3 ** (3 * n)) * SQRT3
    return None


def family_leading(tag: Family, n: int) -> Fraction:
    tag = Family(tag)
    if tag is Family.MP:
        return Fraction(1, 2 ** n * factorial(n))
    if tag is Family.CH:
        return Fraction(factorial(2 * n), 6 ** n * factorial(n) ** 2)
    return Fraction(-1, 36) ** n


def family_polynomials(tag, n_max: int) -> PolyFamily:
    tag = Family(tag)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    polys = []
    for n in range(n_max + 1):
        if tag is Family.MP:
            p = _real(meixner_pollaczek(n), f"MP p_{n}").scale(Fraction(1, 4))
        elif tag is Family.CH:
            p = _real(continuous_hahn(n), f"CH p_{n}").scale(Fraction(1, 6))
        else:
            p = _square_arg(continuous_dual_hahn(n, *CDH_PARAMS[tag]), Fraction(1, 36))
        polys.append(p)
    norms = None if tag is Family.CDHTILDE else tuple(family_norm(tag, n) for n in range(n_max + 1))
    leading = tuple(family_leading(tag, n) for n in range(n_max + 1))
    return PolyFamily(tag, tuple(polys), norms, leading)


def moment_functional(ms: MomentSequence, p: LaurentPoly, q: LaurentPoly,
                      sigma: int | None = None):
    """``L[p q]`` with ``L[x^k] = m_k``, or ``L[x^(2n)] = m_(2n + 2 sigma)`` for the CDH blocks."""
    prod = p * q
    if prod.is_zero():
        return QuadScalar(0, 0, ms.point.radicand)
    if prod.low_degree() < 0:
        raise ValueError("moment functional needs an ordinary polynomial")
    shift = 0 if sigma is None else 2 * sigma
    if sigma is not None and any(e % 2 for e in prod.exponents()):
        raise ValueError("even-moment functional applied to an odd polynomial")
    need = prod.degree() + shift
    if need >= len(ms):
        raise ValueError(f"need moments up to index {need}, have {len(ms) - 1}")
    total = Fraction(0)
    for e, c in prod.items():
        total = total + c * ms[e + shift]
    return ms.point.tan_eta * total


def _family_product(tag: Family, count: int):
    out = Fraction(1)
    for n in range(count):
        out = out * family_norm(tag, n) / family_leading(tag, n) ** 2
    return out


def block_product(sigma: int, m: int) -> QuadScalar:
    """``D^(sigma)_m`` as ``prod h^(sigma)_n / kappa_n^2``."""
    value = _family_product(Family.CDH1 if sigma else Family.CDH0, m)
    return value if isinstance(value, QuadScalar) else QuadScalar(value, 0, 3)


def block_closed_form(sigma: int, m: int) -> QuadScalar:
    """Printed products for ``D^(0)_m`` and ``D^(1)_m``."""
    prod = 1
    for k in range(m):
        prod *= factorial(k) * factorial(3 * k + 2 * sigma)
    power2 = 2 * m * m + (m if sigma else -m)
    half, odd = divmod(m * m, 2)
    value = QuadScalar(Fraction(2) ** power2 * 3 ** half * prod, 0, 3)
    return value * SQRT3 if odd else value


def product_determinant(point: SpecialPoint, N: int) -> QuadScalar:
    """``det Z = prod_{n<N} h_n / kappa_n^2``; block products at the MinusHalf point."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if point.tag == MINUS_HALF.tag:
        m, odd = divmod(N, 2)
        return block_product(0, m + odd) * block_product(1, m)
    tag = Family.MP if point.tag == FREE_FERMION.tag else Family.CH
    value = _family_product(tag, N)
    return value if isinstance(value, QuadScalar) else QuadScalar(value, 0, point.radicand)


def product_route_agrees(point: SpecialPoint, N: int) -> bool:
    return product_determinant(point, N) == det_z(point, N)


# -- difference equations, native variable ----------------------------------

def _shifted(y: LaurentPoly, c) -> LaurentPoly:
    return y.with_radicand(-1).shift(c) if y.radicand is None else y.shift(c)


def difference_equation_residual(tag, n: int) -> LaurentPoly:
    """Residual of the family's difference equation, cleared of denominators.

    Works in each family's own variable ``X``; the zero polynomial means the
    equation holds identically.
    """
    tag = Family(tag)
    X = LaurentPoly({1: 1}, -1)
    if tag is Family.MP:
        a = MP_ALPHA
        y = meixner_pollaczek(n, a)
        return (I * (a - I * X) * _shifted(y, I) - 2 * I * (n + a) * y
                + I * (a + I * X) * _shifted(y, -I))
    if tag is Family.CH:
        a, b, c, d = CH_PARAMS
        y = continuous_hahn(n, a, b, c, d)
        B = (c - I * X) * (d - I * X)
        D = (a + I * X) * (b + I * X)
        lam = n * (n + a + b + c + d - 1)
        return B * _shifted(y, I) - (B + D + lam) * y + D * _shifted(y, -I)
    a, b, c = CDH_PARAMS[tag]
    s = continuous_dual_hahn(n, a, b, c)
    y = LaurentPoly({2 * e: v for e, v in s.items()}).with_radicand(-1)
    two_ix = 2 * I * X
    # multiply through by 2iX (2iX - 1)(2iX + 1)
    B = (a - I * X) * (b - I * X) * (c - I * X) * (two_ix + 1)
    D = (a + I * X) * (b + I * X) * (c + I * X) * (two_ix - 1)
    W = two_ix * (two_ix - 1) * (two_ix + 1)
    return B * _shifted(y, I) - (B + D + n * W) * y + D * _shifted(y, -I)


def _u(tag: Family, m: int) -> LaurentPoly:
    s = continuous_dual_hahn(m, *CDH_PARAMS[tag])
    return _square_arg(s, Fraction(1, 36)).with_radicand(-1)


def shift_identities(m: int) -> bool:
    """Forward-shift (difference) and sum identities tying CDHtilde to CDH1 and CDH0."""
    if m < 0:
        raise ValueError("m must be >= 0")
    three_i = 3 * I
    x = LaurentPoly({1: 1}, -1)
    ut = _u(Family.CDHTILDE, m + 1)
    lhs_diff = ut.shift(three_i) - ut.shift(-three_i)
    rhs_diff = -I * (m + 1) * (x / 3) * _u(Family.CDH1, m)
    ut_m = _u(Family.CDHTILDE, m)
    lhs_sum = ut_m.shift(three_i) + ut_m.shift(-three_i)
    rhs_sum = 2 * _u(Family.CDH0, m)
    return lhs_diff == rhs_diff and lhs_sum == rhs_sum
