"""Result containers shared by the enumeration routes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import QuadScalar


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer came out fractional or irrational."""


@dataclass(frozen=True)
class EnumerationTable:
    """``A(N; x)`` together with the refined row ``A(N, r; x)``, ``r = 1..N``."""

    weight_x: int
    size_N: int
    total: int
    refined: tuple

    def __post_init__(self):
        if len(self.refined) != self.size_N:
            raise ValueError("refined row must have N entries")
        if sum(self.refined) != self.total:
            raise ValueError(f"refined row sums to {sum(self.refined)}, total is {self.total}")

    def is_palindromic(self) -> bool:
        return tuple(self.refined) == tuple(reversed(self.refined))


@dataclass(frozen=True)
class CorrelatorTable:
    """Boundary correlators ``H_N^(r)`` and their prefix sums ``G_N^(r)``.

    ``sign_flipped`` records whether the raw determinant ratio came out with
    an overall negative sign that was removed.
    """

    point: object
    size_N: int
    H: tuple
    G: tuple
    sign_flipped: bool = False

    def check(self) -> None:
        H, G = self.H, self.G
        if sum(H) != 1:
            raise ValueError(f"H sums to {sum(H)}")
        if tuple(H) != tuple(reversed(H)):
            raise ValueError("H is not palindromic")
        if G[-1] != 1:
            raise ValueError("G_N must equal 1")
        if any(not (0 <= v <= 1) for v in (*H, *G)):
            raise ValueError("correlator values outside [0, 1]")


def prefix_sums(values) -> tuple:
    out, s = [], Fraction(0)
    for v in values:
        s += v
        out.append(s)
    return tuple(out)


def as_integer(value, what: str = "value") -> int:
    """Exact integer from a Fraction/QuadScalar, or :class:`IntegralityError`."""
    if isinstance(value, QuadScalar):
        if not value.is_rational():
            raise IntegralityError(f"{what} = {value} is irrational")
        value = value.a
    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityError(f"{what} = {value} is not an integer")
    return int(value)
