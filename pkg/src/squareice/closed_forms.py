"""Product formulas for A(N; x), refined counts at x = 1, 2 and the two first-order recurrences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exact import LaurentPoly
from .hypergeom import hyper_coefficients


def _check_x(x: int, allowed=(1, 2, 3)) -> None:
    if x not in allowed:
        raise ValueError(f"x must be one of {allowed}, got {x}")


def asm_count_product(N: int) -> int:
    """``prod_{k=1}^N (3k-2)! / (2N-k)!``."""
    num = den = 1
    for k in range(1, N + 1):
        num *= factorial(3 * k - 2)
        den *= factorial(2 * N - k)
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def asm_count_ratio(N: int) -> int:
    """The other product, ``prod (3k-2)!(k-1)! / ((2k-1)!(2k-2)!)``."""
    value = Fraction(1)
    for k in range(1, N + 1):
        value *= Fraction(factorial(3 * k - 2) * factorial(k - 1),
                          factorial(2 * k - 1) * factorial(2 * k - 2))
    assert value.denominator == 1
    return int(value)


def three_count(N: int) -> int:
    """3-enumeration, separate products for odd and even N."""
    m, parity = divmod(N - 1, 2)
    odd = Fraction(3 ** (m * (m + 1)))
    for k in range(1, m + 1):
        odd *= Fraction(factorial(3 * k - 1), factorial(m + k)) ** 2
    if parity:
        odd *= Fraction(3 ** m * factorial(3 * m + 2) * factorial(m), factorial(2 * m + 1) ** 2)
    assert odd.denominator == 1
    return int(odd)


@lru_cache(maxsize=None)
def closed_count(N: int, x: int) -> int:
    """``A(N; x)`` for x in {1, 2, 3}."""
    _check_x(x)
    if N < 1:
        raise ValueError("N must be >= 1")
    if x == 1:
        return asm_count_product(N)
    if x == 2:
        return 2 ** (N * (N - 1) // 2)
    return three_count(N)


def closed_refined(N: int, r: int, x: int) -> int:
    """``A(N, r; x)`` for x in {1, 2}."""
    _check_x(x, (1, 2))
    if not 1 <= r <= N:
        raise ValueError(f"r must lie in 1..{N}, got {r}")
    if x == 1:
        value = Fraction(comb(N + r - 2, N - 1) * comb(2 * N - 1 - r, N - 1),
                         comb(3 * N - 2, N - 1)) * closed_count(N, 1)
    else:
        value = Fraction(comb(N - 1, r - 1), 2 ** (N - 1)) * closed_count(N, 2)
    assert value.denominator == 1
    return int(value)


@dataclass(frozen=True)
class FreeFermionParameter:
    """``alpha = tan(phi/2)^2``; ``alpha = 1`` is lambda = pi/2."""

    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")


def _normalized(values: list[Fraction]) -> list[Fraction]:
    s = sum(values)
    return [v / s for v in values]


def recurrence_refined_ff(N: int, alpha: FreeFermionParameter | Fraction | int = 1) -> list[Fraction]:
    """Solve ``alpha r H(r+1) = (N - r) H(r)`` upward and normalize."""
    if not isinstance(alpha, FreeFermionParameter):
        alpha = FreeFermionParameter(alpha)
    a = alpha.alpha
    H = [Fraction(1)]
    for r in range(1, N):
        H.append(H[-1] * (N - r) / (a * r))
    H = _normalized(H)
    if any(ff_residuals(H, a)):
        raise ArithmeticError("free-fermion recurrence not satisfied")
    return H


def ff_residuals(H, alpha) -> list[Fraction]:
    N = len(H)
    return [alpha * r * H[r] - (N - r) * H[r - 1] for r in range(1, N)]


def ff_closed(N: int, r: int, alpha) -> Fraction:
    alpha = Fraction(alpha)
    return comb(N - 1, r - 1) * alpha ** (N - r) / (1 + alpha) ** (N - 1)


def recurrence_refined_ice(N: int) -> list[Fraction]:
    """Solve ``r(r-2N+1) H(r+1) = (r-N)(N+r-1) H(r)`` upward and normalize."""
    if N < 1:
        raise ValueError("N must be >= 1")
    H = [Fraction(1)]
    for r in range(1, N):
        H.append(H[-1] * Fraction((r - N) * (N + r - 1), r * (r - 2 * N + 1)))
    H = _normalized(H)
    if any(ice_residuals(H)):
        raise ArithmeticError("ice-point recurrence not satisfied")
    return H


def ice_residuals(H) -> list[Fraction]:
    N = len(H)
    return [r * (r - 2 * N + 1) * H[r] - (r - N) * (N + r - 1) * H[r - 1] for r in range(1, N)]


def ice_closed(N: int, r: int) -> Fraction:
    return Fraction(comb(N + r - 2, N - 1) * comb(2 * N - 1 - r, N - 1), comb(3 * N - 2, N - 1))


def generating_function_ice(N: int) -> LaurentPoly:
    """``H_N(z) = sum_r H_N^(r) z^(r-1)`` from the terminating 2F1(1-N, N; 2-2N; z)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    pref = Fraction(factorial(2 * N - 1) * factorial(2 * N - 2),
                    factorial(N - 1) * factorial(3 * N - 2))
    coeffs = hyper_coefficients([1 - N, N], [2 - 2 * N])
    return LaurentPoly.from_list([pref * c for c in coeffs])
