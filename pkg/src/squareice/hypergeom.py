"""Terminating hypergeometric sums with exact coefficients.

The parameters may be rationals, QuadScalars or (upper parameters only)
polynomials in a variable, e.g. ``1/3 + i*x/6``.  The series must terminate:
at least one numeric upper parameter is a nonpositive integer, and no lower
parameter may produce a zero Pochhammer factor before that point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import LaurentPoly, QuadScalar, Scalar


class HypergeometricPole(ZeroDivisionError):
    """A lower parameter hits a nonpositive integer before the series stops."""


def pochhammer(a, n: int):
    """Rising factorial ``(a)_n = a (a+1) ... (a+n-1)``."""
    result = Fraction(1)
    for j in range(n):
        result = result * (a + j)
    return result


def _nonpositive_int(v) -> int | None:
    if isinstance(v, QuadScalar):
        if not v.is_rational():
            return None
        v = v.a
    if isinstance(v, (int, Fraction)) and v <= 0 and Fraction(v).denominator == 1:
        return int(-v)
    return None


def termination_order(upper: Sequence) -> int:
    """Index of the last nonzero term: ``min(-a)`` over nonpositive-integer ``a``."""
    orders = [k for k in (_nonpositive_int(a) for a in upper) if k is not None]
    if not orders:
        raise ValueError(f"series with upper parameters {list(upper)} does not terminate")
    return min(orders)


def _check_poles(lower: Sequence, last: int) -> None:
    for b in lower:
        k = _nonpositive_int(b)
        if k is not None and k <= last - 1:
            raise HypergeometricPole(f"lower parameter {b} vanishes before term {last}")


def hyper_coefficients(upper: Sequence, lower: Sequence, terms: int | None = None) -> list:
    """Coefficients ``c_k = prod (a)_k / (prod (b)_k k!)`` for ``k = 0..K``.

    ``K`` is the termination order unless ``terms`` overrides it.
    """
    last = termination_order(upper) if terms is None else terms
    _check_poles(lower, last)
    out = [Fraction(1)]
    c = Fraction(1)
    for k in range(last):
        num = Fraction(1)
        for a in upper:
            num = num * (a + k)
        den = Fraction(k + 1)
        for b in lower:
            den = den * (b + k)
        c = c * num / den
        out.append(c)
    return out


def hyper_sum(upper: Sequence, lower: Sequence, argument):
    """Value of the terminating ``pFq(upper; lower; argument)``.

    ``argument`` may be a scalar or a LaurentPoly; upper parameters may be
    LaurentPolys as well, in which case the result is a LaurentPoly.
    """
    numeric = [a for a in upper if not isinstance(a, LaurentPoly)]
    last = termination_order(numeric)
    _check_poles(lower, last)
    term = Fraction(1)
    total = Fraction(1)
    for k in range(last):
        for a in upper:
            term = term * (a + k)
        den = Fraction(k + 1)
        for b in lower:
            den = den * (b + k)
        term = term * argument / den
        total = total + term
    return total


def hyper_homogeneous(upper: Sequence, lower: Sequence, num: LaurentPoly, den: LaurentPoly,
                      degree: int) -> LaurentPoly:
    """``den**degree * pFq(upper; lower; num/den)`` as a Laurent polynomial.

    Each term ``c_k (num/den)**k`` becomes ``c_k num**k den**(degree-k)``, so the
    result is polynomial whenever the series stops at or before ``degree``.
    """
    coeffs = hyper_coefficients(upper, lower)
    if len(coeffs) - 1 > degree:
        raise ValueError(f"series of length {len(coeffs)} exceeds homogenizing degree {degree}")
    total = LaurentPoly()
    num_pow = LaurentPoly.constant(1)
    for k, c in enumerate(coeffs):
        total = total + c * num_pow * den ** (degree - k)
        num_pow = num_pow * num
    return total


@dataclass(frozen=True)
class HypergeomTerm:
    """A terminating ``pFq`` ready for evaluation."""

    upper: tuple
    lower: tuple
    argument: Scalar | LaurentPoly

    def __post_init__(self):
        numeric = [a for a in self.upper if not isinstance(a, LaurentPoly)]
        last = termination_order(numeric)
        _check_poles(self.lower, last)

    @property
    def last_index(self) -> int:
        return termination_order([a for a in self.upper if not isinstance(a, LaurentPoly)])


def hyper_terminating(term: HypergeomTerm):
    """Exact sum of the series described by ``term``."""
    return hyper_sum(term.upper, term.lower, term.argument)
