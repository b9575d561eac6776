"""Hankel moments of square ice at the three symmetric special points.

The Hankel entries are the lambda-derivatives of

    sin(2 eta) / (sin(lambda - eta) sin(lambda + eta)) = cot(lambda - eta) - cot(lambda + eta).

With ``u = cot(lambda - eta)`` we have ``u' = -1 - u**2``, so the k-th derivative of
``u`` is an integer polynomial ``P_k(u)``.  At ``lambda = pi/2`` one has
``u = t = tan(eta)`` and ``cot(lambda + eta) = -t``; since ``P_k`` has parity
``(-1)**(k+1)`` the k-th moment is ``2 P_k(t)`` for even ``k`` and zero for odd
``k``.  Pulling out one factor of ``t`` leaves a polynomial in ``t**2``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .exact import QuadScalar


@dataclass(frozen=True)
class SpecialPoint:
    """A point ``lambda = pi/2`` on the symmetric line ``a = b``.

    ``sin_eta`` and ``cos_eta`` are exact; everything else is derived from them.
    ``weight_x`` is the ASM weight per -1 entry, ``x = 4 sin(eta)**2``.
    """

    tag: str
    tan_eta_squared: Fraction
    radicand: int
    weight_x: int
    sin_eta: QuadScalar
    cos_eta: QuadScalar

    def __post_init__(self):
        if self.tan_eta ** 2 != self.tan_eta_squared:
            raise ValueError(f"{self.tag}: tan(eta)^2 does not match")
        if 4 * self.sin_eta ** 2 != self.weight_x:
            raise ValueError(f"{self.tag}: 4 sin(eta)^2 != x")

    @property
    def tan_eta(self) -> QuadScalar:
        return self.sin_eta / self.cos_eta

    @property
    def sin_2eta(self) -> QuadScalar:
        return 2 * self.sin_eta * self.cos_eta

    @property
    def cos_2eta(self) -> QuadScalar:
        return self.cos_eta ** 2 - self.sin_eta ** 2

    @property
    def delta(self) -> Fraction:
        """Anisotropy ``Delta = cos(2 eta)``."""
        return self.cos_2eta.to_fraction()

    def __str__(self):
        return self.tag


ICE = SpecialPoint("Ice", Fraction(1, 3), 3, 1,
                   QuadScalar(Fraction(1, 2), 0, 3), QuadScalar(0, Fraction(1, 2), 3))
FREE_FERMION = SpecialPoint("FreeFermion", Fraction(1), 2, 2,
                            QuadScalar(0, Fraction(1, 2), 2), QuadScalar(0, Fraction(1, 2), 2))
MINUS_HALF = SpecialPoint("MinusHalf", Fraction(3), 3, 3,
                          QuadScalar(0, Fraction(1, 2), 3), QuadScalar(Fraction(1, 2), 0, 3))

POINTS = (ICE, FREE_FERMION, MINUS_HALF)


def point_for_weight(x: int) -> SpecialPoint:
    """Special point whose ASM weight per -1 entry is ``x``."""
    for p in POINTS:
        if p.weight_x == x:
            return p
    raise ValueError(f"no special point for x = {x}; expected 1, 2 or 3")


@dataclass(frozen=True)
class MomentSequence:
    """Reduced moments ``q_0..q_K``; the true moment is ``tan(eta) * q_k``."""

    point: SpecialPoint
    reduced_moments: tuple

    def __len__(self):
        return len(self.reduced_moments)

    def __getitem__(self, k):
        return self.reduced_moments[k]

    def moment(self, k: int) -> QuadScalar:
        return self.point.tan_eta * self.reduced_moments[k]


# P_k(u) as integer coefficient lists, extended on demand.
_cot_polys: list[list[int]] = [[0, 1]]
_moment_cache: dict[str, list[Fraction]] = {}
_lock = threading.RLock()


def _next_cot_poly(p: list[int]) -> list[int]:
    # d/dlambda P(u) = P'(u) * (-1 - u^2)
    dp = [i * p[i] for i in range(1, len(p))]
    out = [0] * (len(dp) + 2)
    for i, c in enumerate(dp):
        out[i] -= c
        out[i + 2] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def cot_derivative_poly(k: int) -> list[int]:
    """Integer coefficients of ``P_k(u)``, the k-th derivative of ``cot`` in terms of ``cot``."""
    with _lock:
        while len(_cot_polys) <= k:
            _cot_polys.append(_next_cot_poly(_cot_polys[-1]))
        return list(_cot_polys[k])


def moment_polynomial(k: int) -> list[int]:
    """Coefficients of the reduced moment ``q_k`` as a polynomial in ``t**2``."""
    if k % 2:
        return [0]
    p = cot_derivative_poly(k)
    return [2 * p[i] for i in range(1, len(p), 2)]


def _evaluate(coeffs: list[int], s: Fraction) -> Fraction:
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * s + c
    return total


def cot_derivative_moments(point: SpecialPoint, K: int) -> MomentSequence:
    """Reduced moments ``q_0..q_K`` at ``point``."""
    if K < 0:
        raise ValueError("K must be >= 0")
    cot_derivative_poly(K)
    with _lock:
        cached = _moment_cache.setdefault(point.tag, [])
        for k in range(len(cached), K + 1):
            cached.append(_evaluate(moment_polynomial(k), point.tan_eta_squared))
        return MomentSequence(point, tuple(cached[: K + 1]))


def even_subsequence(ms: MomentSequence, sigma: int, m: int) -> list[Fraction]:
    """Reduced moments ``q_{2n + 2 sigma}`` for ``n = 0..2m-2``.

    These fill the ``m x m`` Hankel matrix of the even (sigma = 0) or shifted
    even (sigma = 1) moments.
    """
    if sigma not in (0, 1):
        raise ValueError("sigma must be 0 or 1")
    if m <= 0:
        return []
    need = 2 * (2 * m - 2) + 2 * sigma
    if need >= len(ms):
        raise ValueError(f"need moments up to index {need}, have {len(ms) - 1}")
    return [ms[2 * n + 2 * sigma] for n in range(2 * m - 1)]
