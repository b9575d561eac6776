"""Hankel-determinant route to partition functions, correlators and enumerations.

All matrices are built from the reduced moments ``q_k`` (see :mod:`.moments`), so
the linear algebra is over the rationals.  The powers of ``tan(eta)``,
``cos(eta)`` and ``sqrt(x)`` that the reduction strips off are restored at the
end as exact :class:`~squareice.exact.QuadScalar` factors, and integer-valued
results are checked with :func:`~squareice.tables.as_integer`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm
from typing import Sequence

from .exact import QuadScalar, TaylorSeries, derivative_at_zero, trig_series
from .moments import MINUS_HALF, SpecialPoint, cot_derivative_moments, even_subsequence
from .tables import CorrelatorTable, EnumerationTable, as_integer, prefix_sums


def bareiss_determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by fraction-free elimination after clearing denominators."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = 1
    for row in rows:
        for v in row:
            scale = lcm(scale, Fraction(v).denominator)
    M = [[int(Fraction(v) * scale) for v in row] for row in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = M[k][k]
        for i in range(k + 1, n):
            Mi, Mk, mik = M[i], M[k], M[i][k]
            for j in range(k + 1, n):
                Mi[j] = (Mi[j] * pivot - mik * Mk[j]) // prev
        prev = pivot
    return Fraction(sign * M[n - 1][n - 1], scale ** n)


def hankel_matrix(q: Sequence[Fraction], N: int) -> list[list[Fraction]]:
    if len(q) < 2 * N - 1:
        raise ValueError(f"need {2 * N - 1} moments for an {N}x{N} Hankel matrix, have {len(q)}")
    return [[q[j + k] for k in range(N)] for j in range(N)]


def hankel_determinant(q: Sequence[Fraction], N: int) -> Fraction:
    """``det [q_{j+k}]_{j,k<N}``; the empty determinant is 1."""
    if N == 0:
        return Fraction(1)
    return bareiss_determinant(hankel_matrix(q, N))


class RationalLU:
    """PLU factorization of a nonsingular rational matrix, reusable for many solves."""

    def __init__(self, rows: Sequence[Sequence[Fraction]]):
        n = len(rows)
        A = [[Fraction(v) for v in row] for row in rows]
        perm = list(range(n))
        for k in range(n):
            p = next((i for i in range(k, n) if A[i][k] != 0), None)
            if p is None:
                raise ZeroDivisionError("singular matrix")
            if p != k:
                A[k], A[p] = A[p], A[k]
                perm[k], perm[p] = perm[p], perm[k]
            for i in range(k + 1, n):
                f = A[i][k] / A[k][k]
                A[i][k] = f
                if f:
                    for j in range(k + 1, n):
                        A[i][j] -= f * A[k][j]
        self.n = n
        self._lu = A
        self._perm = perm

    def solve(self, b: Sequence) -> list:
        """Solve ``A y = b``; ``b`` may hold QuadScalars."""
        n, A = self.n, self._lu
        y = [b[self._perm[i]] for i in range(n)]
        for i in range(n):
            for j in range(i):
                y[i] = y[i] - A[i][j] * y[j]
        for i in range(n - 1, -1, -1):
            for j in range(i + 1, n):
                y[i] = y[i] - A[i][j] * y[j]
            y[i] = y[i] / A[i][i]
        return y

    def solve_transpose(self, b: Sequence) -> list:
        """Solve ``A^T y = b``."""
        n, A = self.n, self._lu
        # A[perm] = L U  =>  A^T = U^T L^T P
        z = list(b)
        for i in range(n):
            for j in range(i):
                z[i] = z[i] - A[j][i] * z[j]
            z[i] = z[i] / A[i][i]
        for i in range(n - 1, -1, -1):
            for j in range(i + 1, n):
                z[i] = z[i] - A[j][i] * z[j]
        y = [Fraction(0)] * n
        for i in range(n):
            y[self._perm[i]] = z[i]
        return y


def det_z(point: SpecialPoint, N: int) -> QuadScalar:
    """Full Hankel determinant of the moment matrix, ``tan(eta)**N * det[q_{j+k}]``."""
    ms = cot_derivative_moments(point, max(2 * N - 2, 0))
    return point.tan_eta ** N * hankel_determinant(ms.reduced_moments, N)


@dataclass(frozen=True)
class PartitionValue:
    value: QuadScalar
    point: SpecialPoint
    size_N: int


def _factorial_square_product(N: int) -> int:
    out = 1
    for k in range(1, N):
        out *= factorial(k) ** 2
    return out


def partition_function(point: SpecialPoint, N: int) -> PartitionValue:
    """Homogeneous DWBC partition function ``Z_N`` at ``point``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    # sin(lambda - eta) sin(lambda + eta) = cos(eta)^2 at lambda = pi/2
    prefactor = (point.cos_eta ** 2) ** (N * N) / _factorial_square_product(N)
    value = prefactor * det_z(point, N)
    if value.sign() <= 0:
        raise ArithmeticError(f"partition function {value} is not positive")
    return PartitionValue(value, point, N)


def enumeration_from_partition(point: SpecialPoint, N: int) -> int:
    """``A(N; x)`` from ``Z_N`` by stripping the vertex weights.

    With ``a = b = cos(eta)`` and ``c = sin(2 eta)`` every configuration carries
    ``a**(N**2) * sqrt(x)**N * x**k``, hence ``A = Z_N / (cos(eta)**(N**2) sqrt(x)**N)``.
    """
    Z = partition_function(point, N).value
    sqrt_x = 2 * point.sin_eta
    A = Z * point.cos_eta ** (-N * N) * sqrt_x ** (-N)
    return as_integer(A, f"A({N}; {point.weight_x})")


def _last_column_series(point: SpecialPoint, N: int) -> list[TaylorSeries]:
    """Series in ``e`` of ``sin(e)^(r-1) sin(e-2eta)^(N-r) / sin(e+lambda-eta)^(N-1)``, r=1..N."""
    K = N - 1
    s_eps = trig_series("sin", 0, 1, K)
    s_shift = trig_series("sin", -point.sin_2eta, point.cos_2eta, K)
    # lambda - eta = pi/2 - eta: sine is cos(eta), cosine is sin(eta)
    s_den = trig_series("sin", point.cos_eta, point.sin_eta, K)
    inv_den = TaylorSeries([1], K) / s_den ** (N - 1)
    eps_pows = [TaylorSeries([1], K)]
    shift_pows = [TaylorSeries([1], K)]
    for _ in range(N - 1):
        eps_pows.append(eps_pows[-1] * s_eps)
        shift_pows.append(shift_pows[-1] * s_shift)
    return [eps_pows[r - 1] * shift_pows[N - r] * inv_den for r in range(1, N + 1)]


def boundary_correlator_det(point: SpecialPoint, N: int) -> CorrelatorTable:
    """``H_N^(r)`` from the bordered Hankel determinant, and ``G_N^(r)`` from prefix sums.

    Only the last column differs between the bordered matrix and the moment
    matrix, so by Cramer's rule ``det H~ / det Q = y . c`` with ``Q^T y = e_{N-1}``;
    one factorization of ``Q`` serves every ``r``.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    ms = cot_derivative_moments(point, 2 * N - 2)
    lu = RationalLU(hankel_matrix(ms.reduced_moments, N))
    unit = [Fraction(0)] * N
    unit[-1] = Fraction(1)
    y = lu.solve_transpose(unit)
    t = point.tan_eta
    prefactor = factorial(N - 1) * point.sin_2eta / point.cos_eta ** (N + 1) / t

    raw = []
    for r, series in enumerate(_last_column_series(point, N), start=1):
        ratio = Fraction(0)
        for j in range(N):
            ratio = ratio + y[j] * derivative_at_zero(series, j)
        value = prefactor * ratio
        if not value.is_rational():
            raise ArithmeticError(f"H_{N}^({r}) = {value} is irrational")
        raw.append(value.to_fraction())

    flipped = all(v <= 0 for v in raw) and any(v < 0 for v in raw)
    H = tuple(-v for v in raw) if flipped else tuple(raw)
    table = CorrelatorTable(point, N, H, prefix_sums(H), flipped)
    table.check()
    return table


def refined_from_correlator(point: SpecialPoint, N: int) -> EnumerationTable:
    """``A(N, r; x) = H_N^(r) A(N; x)`` through the determinant route."""
    total = enumeration_from_partition(point, N)
    H = boundary_correlator_det(point, N).H
    refined = tuple(as_integer(h * total, f"A({N},{r};{point.weight_x})")
                    for r, h in enumerate(H, start=1))
    return EnumerationTable(point.weight_x, N, total, refined)


def block_determinant(point: SpecialPoint, sigma: int, m: int) -> QuadScalar:
    """``m x m`` Hankel determinant of the moments ``m_{2(j+k) + 2 sigma}``."""
    if m == 0:
        return QuadScalar(1, 0, point.radicand)
    ms = cot_derivative_moments(point, 4 * m - 4 + 2 * sigma)
    return point.tan_eta ** m * hankel_determinant(even_subsequence(ms, sigma, m), m)


def factorization_check(m: int, point: SpecialPoint = MINUS_HALF) -> bool:
    """Check ``D_2m = D0_m D1_m`` and ``D_{2m+1} = D0_{m+1} D1_m`` exactly."""
    d0 = [block_determinant(point, 0, k) for k in (m, m + 1)]
    d1 = block_determinant(point, 1, m)
    even = det_z(point, 2 * m) if m else QuadScalar(1, 0, point.radicand)
    return even == d0[0] * d1 and det_z(point, 2 * m + 1) == d0[1] * d1
