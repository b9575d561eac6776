"""Refined 3-enumeration: the B coefficients by four routes and the identities behind them.

Notation: ``B_{2m}^(r)``, r = 0..2m, sum to one and are palindromic; ``E_m^(r) =
B_{2m}^(m+r)`` and ``E_m(z) = sum_r E_m^(r) z^r``.  The boundary correlator at
x = 3 is a short convolution of the B's with weights (1, 1)/2 for even N and
(2, 5, 2)/9 for odd N.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .closed_forms import closed_count
from .exact import LaurentPoly, QuadScalar
from .hypergeom import hyper_homogeneous, hyper_sum, pochhammer
from .tables import as_integer

# q = exp(i pi/3) over radicand -3
Q = QuadScalar(Fraction(1, 2), Fraction(1, 2), -3)
Q_INV = Q.conjugate()

B_ROUTES = ("closed", "hypergeometric", "recurrence", "generating")


@dataclass(frozen=True)
class BCoefficients:
    m: int
    B: tuple

    def __post_init__(self):
        B = self.B
        if len(B) != 2 * self.m + 1:
            raise ValueError(f"expected {2 * self.m + 1} coefficients, got {len(B)}")
        if sum(B) != 1:
            raise ValueError(f"B sums to {sum(B)}")
        if tuple(B) != tuple(reversed(B)):
            raise ValueError("B is not palindromic")
        if any(b <= 0 for b in B):
            raise ValueError("B has a nonpositive entry")

    def E(self, r: int) -> Fraction:
        """``E_m^(r) = B^(m+r)``, zero outside ``|r| <= m``."""
        return self.B[self.m + r] if abs(r) <= self.m else Fraction(0)


@dataclass(frozen=True)
class RefinedThreeTable:
    N: int
    H: tuple
    A: tuple

    def __post_init__(self):
        if len(self.H) != self.N or len(self.A) != self.N:
            raise ValueError("row length must be N")
        if sum(self.H) != 1:
            raise ValueError(f"H sums to {sum(self.H)}")
        if tuple(self.A) != tuple(reversed(self.A)):
            raise ValueError("A is not palindromic")
        if sum(self.A) != closed_count(self.N, 3):
            raise ValueError("A does not sum to A(N;3)")


def gbinom(a, k: int) -> Fraction:
    """Generalized binomial ``a (a-1) ... (a-k+1) / k!``."""
    if k < 0:
        return Fraction(0)
    return pochhammer(Fraction(a) - k + 1, k) / factorial(k)


# -- B coefficients ---------------------------------------------------------

def b_closed_form(m: int) -> BCoefficients:
    if m < 0:
        raise ValueError("m must be >= 0")
    pref = Fraction(factorial(2 * m + 1) * factorial(m), 3 ** m * factorial(3 * m + 2))
    B = []
    for r in range(2 * m + 1):
        s = 0
        for l in range(max(0, r - m), r // 2 + 1):
            s += ((2 * m + 2 - r + 2 * l) * comb(3 * m + 3, r - 2 * l)
                  * comb(2 * m + l - r + 1, m + 1) * comb(m + l + 1, m + 1) * 2 ** (r - 2 * l))
        B.append(pref * s)
    return BCoefficients(m, tuple(B))


def b_hypergeometric(m: int, r: int) -> Fraction:
    """Single coefficient from the pair of 4F3 series at 1/4 (reflected for r > m)."""
    if not 0 <= r <= 2 * m:
        raise ValueError(f"r must lie in 0..{2 * m}")
    if r > m:
        r = 2 * m - r
    pref = Fraction(2 ** r * comb(3 * m + 3, r) * comb(2 * m + 1 - r, m + 1),
                    3 ** m * comb(3 * m + 2, m + 1))
    lower = [Fraction(3 * m + 4 - r, 2), Fraction(3 * m + 5 - r, 2), m - r + 1]
    quarter = Fraction(1, 4)
    first = hyper_sum([Fraction(1 - r, 2), Fraction(-r, 2), m + 2, 2 * m + 2 - r], lower, quarter)
    value = 2 * first
    if r:
        second = hyper_sum([Fraction(1 - r, 2), Fraction(2 - r, 2), m + 2, 2 * m + 2 - r],
                           lower, quarter)
        value -= Fraction(r, m + 1) * second
    return pref * value


def five_term_coefficients(m: int, r: int) -> tuple:
    """Coefficients of ``E^(r-2), ..., E^(r+2)`` in the five-term relation."""
    return (
        2 * (r - m - 2) * (r + m + 1),
        5 * r * r + 10 * r * m + r - 3 * m * m - 9 * m - 6,
        2 * (1 + 8 * m) * r,
        -(5 * r * r - 10 * r * m - r - 3 * m * m - 9 * m - 6),
        -2 * (r - m - 1) * (r + m + 2),
    )


def five_term_residuals(m: int, E: dict) -> list:
    out = []
    for r in range(-m - 2, m + 3):
        c = five_term_coefficients(m, r)
        out.append(sum(c[i] * E.get(r - 2 + i, 0) for i in range(5)))
    return out


def solve_five_term(m: int) -> BCoefficients:
    """Seed ``E^(m) = 1`` and solve downward for ``E^(r-2)``; other relations become checks."""
    if m < 0:
        raise ValueError("m must be >= 0")
    E = {m: Fraction(1)}
    for r in range(m + 1, -m + 1, -1):
        c = five_term_coefficients(m, r)
        if c[0] == 0:
            raise ZeroDivisionError(f"zero pivot at r = {r}")
        rest = sum(c[i] * E.get(r - 2 + i, 0) for i in range(1, 5))
        E[r - 2] = -rest / c[0]
    total = sum(E.values())
    E = {r: v / total for r, v in E.items()}
    if any(five_term_residuals(m, E)):
        raise ArithmeticError(f"five-term relation violated for m = {m}")
    return BCoefficients(m, tuple(E[r] for r in range(-m, m + 1)))


# -- generating function ----------------------------------------------------

_Z_NUM = LaurentPoly({-1: 1, 0: 2})   # z^-1 + 2
_Z_DEN = LaurentPoly({1: 1, 0: 2})    # z + 2


def psi(m: int, k: int) -> LaurentPoly:
    """``(z+2)^m 2F1(-m, k+1; -m-k; (z^-1+2)/(z+2))`` as a Laurent polynomial in z."""
    if m < 0:
        return LaurentPoly()
    return hyper_homogeneous([-m, k + 1], [-m - k], _Z_NUM, _Z_DEN, m)


def e_generating(m: int) -> LaurentPoly:
    if m < 0:
        raise ValueError("m must be >= 0")
    pref = Fraction(factorial(2 * m) * factorial(2 * m + 2),
                    3 ** m * factorial(m + 1) * factorial(3 * m + 2))
    bracket = (2 * m + 1) * psi(m, m + 1)
    if m:
        bracket = bracket - 3 * m * psi(m - 1, m + 1)
    E = bracket * pref
    if E.is_zero() or E.low_degree() < -m or E.degree() > m or E != E.invert_variable():
        raise ArithmeticError(f"E_{m}(z) has the wrong shape: {E}")
    return E


def b_from_generating(m: int) -> BCoefficients:
    E = e_generating(m)
    return BCoefficients(m, tuple(E.coeff(r) for r in range(-m, m + 1)))


def b_coefficients(m: int, route: str = "closed") -> BCoefficients:
    if route == "closed":
        return b_closed_form(m)
    if route == "hypergeometric":
        return BCoefficients(m, tuple(b_hypergeometric(m, r) for r in range(2 * m + 1)))
    if route == "recurrence":
        return solve_five_term(m)
    if route == "generating":
        return b_from_generating(m)
    raise ValueError(f"unknown route {route!r}; expected one of {B_ROUTES}")


# -- gamma coefficients -----------------------------------------------------

def gamma_residual(m: int, gamma: list, k: int) -> Fraction:
    """Three-term relation at k (with the factor 6 on the middle term, see module notes)."""
    g = lambda j: gamma[j] if 0 <= j < len(gamma) else 0
    j = 3 * (2 * m - k)
    return ((3 * k + 2) * (3 * k + 3) * g(k + 1) + 6 * (3 * m + 2 - 3 * k) * g(k)
            - (j + 7) * (j + 6) * g(k - 1))


def gamma_closed(m: int) -> list:
    out = []
    for l in range(m + 1):
        sign = (-1) ** l * comb(m, l)
        out.append(sign * pochhammer(Fraction(-3 * m - 2, 3), l) / pochhammer(Fraction(1, 3), l))
        out.append(sign * pochhammer(Fraction(-3 * m - 2, 3), l + 1)
                   / pochhammer(Fraction(1, 3), l + 1))
    return out


def gamma_sequence(m: int) -> list:
    """``gamma_0..gamma_{2m+1}`` with ``gamma_0 = 1``, by recurrence, checked against the closed form."""
    if m < 0:
        raise ValueError("m must be >= 0")
    gamma = [Fraction(1)]
    for k in range(2 * m + 1):
        j = 3 * (2 * m - k)
        prev = gamma[k - 1] if k else 0
        nxt = ((j + 7) * (j + 6) * prev - 6 * (3 * m + 2 - 3 * k) * gamma[k]) / ((3 * k + 2) * (3 * k + 3))
        gamma.append(nxt)
    if any(gamma_residual(m, gamma, k) for k in range(2 * m + 3)):
        raise ArithmeticError("gamma sequence does not terminate")
    if gamma != gamma_closed(m):
        raise ArithmeticError(f"gamma routes disagree at m = {m}")
    return gamma


# -- f, g, h, Q, V ----------------------------------------------------------

def _antisym(e: int, c) -> LaurentPoly:
    return LaurentPoly({e: c}) - LaurentPoly({-e: c})


def f_poly(m: int) -> LaurentPoly:
    out = LaurentPoly()
    for k in range(m + 1):
        c = gbinom(Fraction(3 * m + 1, 3), k) * gbinom(Fraction(3 * m - 1, 3), m - k)
        out = out + _antisym(3 * m + 1 - 6 * k, c)
    return out


def g_poly(m: int) -> LaurentPoly:
    out = LaurentPoly()
    for k in range(m + 1):
        c = gbinom(Fraction(3 * m + 2, 3), k) * gbinom(Fraction(3 * m - 2, 3), m - k)
        out = out + _antisym(3 * m + 2 - 6 * k, c)
    return out


def c_norm(m: int) -> Fraction:
    return Fraction((3 * m + 1) * 3 ** (m + 1) * factorial(m) * factorial(2 * m + 2),
                    factorial(3 * m + 3))


def fgh_polys(m: int) -> tuple:
    if m < 0:
        raise ValueError("m must be >= 0")
    f, g = f_poly(m), g_poly(m)
    h = (g + f * Fraction(3 * m + 2, 3 * m + 1)) * c_norm(m)
    return f, g, h


def gamma_matches_h(m: int) -> bool:
    """``sum gamma_k (x^n_k - x^-n_k)`` is proportional to ``h_m`` (n_k = 3m+2-3k)."""
    gamma = gamma_sequence(m)
    trig = LaurentPoly()
    for k, gk in enumerate(gamma):
        trig = trig + _antisym(3 * m + 2 - 3 * k, gk)
    _, _, h = fgh_polys(m)
    return trig * h.coeff(3 * m + 2) == h


def q_poly(m: int) -> LaurentPoly:
    """``Q_m(x)`` over radicand -3; the surd part must cancel."""
    if m < 0:
        raise ValueError("m must be >= 0")
    num = LaurentPoly({1: Q, -1: -Q_INV})    # q x - q^-1 x^-1
    den = LaurentPoly({-1: Q, 1: -Q_INV})    # q x^-1 - q^-1 x
    body = hyper_homogeneous([-m, m + 1], [-2 * m], num, den, m)
    if not isinstance(body, LaurentPoly):
        body = LaurentPoly.constant(body)
    value = body * Fraction(factorial(2 * m), 3 ** m * factorial(m) ** 2) / (Q - Q_INV) ** m
    try:
        return value.to_rational()
    except ValueError:
        raise ArithmeticError(f"Q_{m} has an irrational residue") from None


def fq_identity(m: int) -> bool:
    return f_poly(m) == LaurentPoly({1: 1, -1: -1}) ** (2 * m + 1) * q_poly(m)


def gff_identity(m: int) -> bool:
    lhs = g_poly(m)
    rhs = (LaurentPoly({3: 1, -3: 1}) * f_poly(m) * Fraction(3 * m + 2, 2 * (3 * m + 1))
           - f_poly(m + 1) * Fraction(3 * (m + 1), 2 * (3 * m + 1)))
    return lhs == rhs


def v_poly(m: int) -> LaurentPoly:
    if m < 0:
        raise ValueError("m must be >= 0")
    a = LaurentPoly({1: 1, 0: -1, -1: 1})   # x - 1 + x^-1
    b = LaurentPoly({1: 1, 0: -2, -1: 1})   # x - 2 + x^-1
    bracket = a * a * q_poly(m) - b * q_poly(m + 1) * Fraction(3 * m + 3, 3 * m + 2)
    V = bracket * (c_norm(m) * Fraction(3 * m + 2, 2 * (3 * m + 1)))
    if V.evaluate(1) != 1:
        raise ArithmeticError(f"V_{m}(1) = {V.evaluate(1)}")
    if not V.is_zero() and (V.low_degree() < -m or V.degree() > m or V != V.invert_variable()):
        raise ArithmeticError(f"V_{m} has the wrong shape")
    return V


def ev_consistency(m: int, samples=None) -> bool:
    """``V_m(x0) = (x0 - 1 + 1/x0)^m E_m(-(x0 - q)/(q x0 - 1))`` at rational points x0."""
    V, E = v_poly(m), e_generating(m)
    if samples is None:
        samples = [Fraction(k + 2, k + 1) + k for k in range(4 * m + 3)]
    for x0 in samples:
        xq = QuadScalar(Fraction(x0), 0, -3)
        z = -(xq - Q) / (Q * xq - 1)
        rhs = (xq - 1 + 1 / xq) ** m * E.evaluate(z)
        if rhs != V.evaluate(xq):
            return False
    return True


# -- Appendix B: Psi in the u = z + 1 + 1/z basis ---------------------------

def to_u_basis(p: LaurentPoly) -> LaurentPoly:
    """Rewrite a z -> 1/z symmetric Laurent polynomial as a polynomial in ``u = z + 1 + 1/z``."""
    u = LaurentPoly({1: 1, 0: 1, -1: 1})
    out = {}
    rest = p
    while not rest.is_zero():
        e = rest.degree()
        if e < 0 or rest.coeff(-e) != rest.coeff(e):
            raise ArithmeticError(f"not a polynomial in u: remainder {rest}")
        c = rest.coeff(e)
        out[e] = c
        rest = rest - u ** e * c
    return LaurentPoly(out)


def psi_u(m: int, k: int) -> LaurentPoly:
    if m < 0:
        return LaurentPoly()
    P = to_u_basis(psi(m, k))
    if m and P.degree() != m:
        raise ArithmeticError(f"Psi_{m}^({k}) has degree {P.degree()} in u")
    return P


def psi_identities(m: int, k: int) -> bool:
    if m < 1 or k < 0:
        raise ValueError("need m >= 1, k >= 0")
    u = LaurentPoly.variable()
    dec = (psi_u(m + 1, k) - (u + 3) * psi_u(m, k)
           + (2 * u + 3) * psi_u(m - 1, k) * Fraction(m * (m + 2 * k + 1), (m + k + 1) * (m + k)))
    mix = (psi_u(m, k + 1) - psi_u(m, k) * Fraction(m + 2 * k + 2, 2 * (m + k + 1))
           - (u + 3) * psi_u(m - 1, k + 1) * Fraction(m, 2 * (m + k + 1)))
    return dec.is_zero() and mix.is_zero()


# -- assembly ---------------------------------------------------------------

def correlator_from_b(N: int, B) -> list:
    """Convolve B with (1,1)/2 for even N or (2,5,2)/9 for odd N."""
    get = lambda i: B[i] if 0 <= i < len(B) else 0
    if N % 2 == 0:
        return [Fraction(get(r - 1) + get(r - 2), 2) for r in range(1, N + 1)]
    return [Fraction(2 * get(r - 1) + 5 * get(r - 2) + 2 * get(r - 3), 9) for r in range(1, N + 1)]


def assemble(N: int, route: str = "closed") -> RefinedThreeTable:
    if N < 1:
        raise ValueError("N must be >= 1")
    if N == 1:
        return RefinedThreeTable(1, (Fraction(1),), (1,))
    m = (N - 2) // 2
    H = correlator_from_b(N, b_coefficients(m, route).B)
    total = closed_count(N, 3)
    A = tuple(as_integer(h * total, f"A({N},{r};3)") for r, h in enumerate(H, start=1))
    return RefinedThreeTable(N, tuple(H), A)
