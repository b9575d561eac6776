"""Exact scalars, Laurent polynomials and truncated Taylor series.

Everything here is built on :class:`fractions.Fraction`.  A
:class:`QuadScalar` is ``a + b*sqrt(d)`` with rational ``a, b`` and ``d`` taken
from a small fixed set of radicands; it is enough to hold every trigonometric
value that appears at the three special points of square ice, plus ``i`` and
``exp(i*pi/3)`` for the complex intermediate steps.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Union

RADICANDS = frozenset({-3, -1, 2, 3})


class RadicandMismatch(ValueError):
    """Arithmetic between scalars living in different quadratic fields."""


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, QuadScalar):
        return v.to_fraction()
    raise TypeError(f"cannot convert {type(v).__name__} to Fraction")


class QuadScalar:
    """Exact element ``a + b*sqrt(d)`` of Q(sqrt(d)), ``d`` in {-3, -1, 2, 3}.

    Instances are immutable and interoperate with ``int`` and ``Fraction``.
    Mixing two different radicands raises :class:`RadicandMismatch`.

    >>> s3 = QuadScalar(0, 1, 3)
    >>> s3 * s3
    QuadScalar(3, 0, 3)
    >>> (1 / s3) == QuadScalar(0, Fraction(1, 3), 3)
    True
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = -1):
        if d not in RADICANDS:
            raise ValueError(f"radicand must be one of {sorted(RADICANDS)}, got {d}")
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadScalar is immutable")

    @classmethod
    def sqrt(cls, d: int) -> "QuadScalar":
        return cls(0, 1, d)

    # -- coercion -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadScalar):
            if other.d != self.d:
                raise RadicandMismatch(f"radicand {self.d} vs {other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadScalar(other, 0, self.d)
        return None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadScalar(self.a * other, self.b * other, self.d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self.a * o.a + self.d * self.b * o.b,
                          self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadScalar":
        """Galois conjugate ``a - b*sqrt(d)`` (complex conjugate when d < 0)."""
        return QuadScalar(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadScalar division by zero")
        return QuadScalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("QuadScalar division by zero")
            return QuadScalar(self.a / other, self.b / other, self.d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadScalar(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates / conversion -------------------------------------------
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self!s} is not rational")
        return self.a

    def sign(self) -> int:
        """Sign of a real scalar (``d > 0``)."""
        if self.d < 0:
            raise ValueError("sign is undefined for non-real radicand")
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with d*b^2
        diff = self.a * self.a - self.d * self.b * self.b
        return sa if diff > 0 else (sb if diff < 0 else 0)

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        if isinstance(other, QuadScalar):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __float__(self):
        if self.d < 0 and self.b != 0:
            raise ValueError("non-real QuadScalar has no float value")
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        return f"QuadScalar({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = "i" if self.d == -1 else f"sqrt({self.d})"
        surd = root if self.b == 1 else f"-{root}" if self.b == -1 else f"({self.b})*{root}"
        if self.a == 0:
            return surd
        return f"{self.a} + {surd}"


Scalar = Union[int, Fraction, QuadScalar]


def radicand_of(*values) -> int | None:
    """Common radicand of the QuadScalars among ``values`` (None if all rational)."""
    d = None
    for v in values:
        if isinstance(v, QuadScalar):
            if d is None:
                d = v.d
            elif d != v.d:
                raise RadicandMismatch(f"radicand {d} vs {v.d}")
    return d


def _merge_radicand(d1, d2):
    if d1 is None:
        return d2
    if d2 is None or d1 == d2:
        return d1
    raise RadicandMismatch(f"radicand {d1} vs {d2}")


def _normalize(c):
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, (Fraction, QuadScalar)):
        return c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Finitely supported map ``exponent -> coefficient`` in one variable.

    Coefficients are Fractions (``radicand is None``) or QuadScalars sharing a
    single radicand.  Zero coefficients are never stored.  The same class doubles
    as an ordinary polynomial when all exponents are nonnegative.
    """

    __slots__ = ("_c", "radicand")

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None, radicand: int | None = None):
        c = {}
        d = radicand
        for e, v in (coeffs or {}).items():
            v = _normalize(v)
            if isinstance(v, QuadScalar):
                d = _merge_radicand(d, v.d)
            if v != 0:
                c[int(e)] = v
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "radicand", d)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1, radicand: int | None = None):
        return cls({exponent: coeff}, radicand)

    @classmethod
    def constant(cls, value: Scalar, radicand: int | None = None):
        return cls({0: value}, radicand)

    @classmethod
    def variable(cls, radicand: int | None = None):
        return cls({1: 1}, radicand)

    @classmethod
    def from_list(cls, coeffs: Iterable[Scalar], low: int = 0, radicand: int | None = None):
        """Build from a dense coefficient list starting at exponent ``low``."""
        return cls({low + i: v for i, v in enumerate(coeffs)}, radicand)

    # -- access -------------------------------------------------------------
    def coeff(self, e: int):
        return self._c.get(e, Fraction(0))

    def __getitem__(self, e: int):
        return self.coeff(e)

    def items(self):
        return sorted(self._c.items())

    def exponents(self):
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def low_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def leading_coeff(self):
        return self._c[self.degree()]

    def dense(self, low: int | None = None, high: int | None = None) -> list:
        """Dense coefficient list from ``low`` to ``high`` inclusive."""
        if not self._c and (low is None or high is None):
            return []
        low = self.low_degree() if low is None else low
        high = self.degree() if high is None else high
        return [self.coeff(e) for e in range(low, high + 1)]

    # -- arithmetic ---------------------------------------------------------
    def _as_poly(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction, QuadScalar)):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        d = _merge_radicand(self.radicand, o.radicand)
        c = dict(self._c)
        for e, v in o._c.items():
            c[e] = c[e] + v if e in c else v
        return LaurentPoly(c, d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()}, self.radicand)

    def __sub__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadScalar)):
            d = _merge_radicand(self.radicand, radicand_of(other))
            return LaurentPoly({e: v * other for e, v in self._c.items()}, d)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        d = _merge_radicand(self.radicand, other.radicand)
        c: dict = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                p = v1 * v2
                c[e] = c[e] + p if e in c else p
        return LaurentPoly(c, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, QuadScalar)):
            if other == 0:
                raise ZeroDivisionError("LaurentPoly division by zero")
            d = _merge_radicand(self.radicand, radicand_of(other))
            inv = 1 / other if isinstance(other, QuadScalar) else Fraction(1) / other
            return LaurentPoly({e: v * inv for e, v in self._c.items()}, d)
        if isinstance(other, LaurentPoly) and len(other._c) == 1:
            (e0, v0), = other._c.items()
            return (self * LaurentPoly.monomial(-e0, 1)) / v0
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("negative powers only for monomials")
            (e0, v0), = self._c.items()
            return LaurentPoly({e0 * n: v0 ** n},
                               self.radicand)
        result = LaurentPoly.constant(1, self.radicand)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(tuple(sorted(self._c.items())))

    # -- transformations ----------------------------------------------------
    def invert_variable(self) -> "LaurentPoly":
        """``p(x) -> p(1/x)``."""
        return LaurentPoly({-e: v for e, v in self._c.items()}, self.radicand)

    def evaluate(self, point):
        """Exact value at a scalar point (nonzero if negative exponents occur)."""
        if not self._c:
            return Fraction(0)
        if point == 0:
            if self.low_degree() < 0:
                raise ZeroDivisionError("evaluation at zero with negative exponents")
            return self.coeff(0)
        if not isinstance(point, QuadScalar):
            point = _frac(point)
        total = Fraction(0)
        for e, v in self._c.items():
            total = total + v * point ** e
        return total

    def substitute(self, inner: "LaurentPoly") -> "LaurentPoly":
        """Composition ``p(inner(x))``; ``p`` must be an ordinary polynomial."""
        if not self._c:
            return self
        if self.low_degree() < 0:
            raise ValueError("substitute requires nonnegative exponents")
        result = LaurentPoly()
        for e in range(self.degree(), -1, -1):
            result = result * inner + self.coeff(e)
        return LaurentPoly(result._c, _merge_radicand(result.radicand, self.radicand))

    def shift(self, c: Scalar) -> "LaurentPoly":
        """``p(x) -> p(x + c)``."""
        return self.substitute(LaurentPoly({1: 1, 0: c}))

    def scale(self, c: Scalar) -> "LaurentPoly":
        """``p(x) -> p(c*x)`` (works for negative exponents too)."""
        out = {}
        for e, v in self._c.items():
            out[e] = v * c ** e
        return LaurentPoly(out, _merge_radicand(self.radicand, radicand_of(c)))

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: v * e for e, v in self._c.items() if e != 0}, self.radicand)

    def rational_part(self) -> "LaurentPoly":
        return LaurentPoly({e: v.a if isinstance(v, QuadScalar) else v for e, v in self._c.items()})

    def surd_part(self) -> "LaurentPoly":
        """Coefficients of sqrt(d); for d = -1 this is the imaginary part."""
        return LaurentPoly({e: v.b for e, v in self._c.items() if isinstance(v, QuadScalar)})

    def to_rational(self) -> "LaurentPoly":
        """Drop the radicand tag; raises if any coefficient has a surd part."""
        residue = self.surd_part()
        if not residue.is_zero():
            raise ValueError(f"non-rational residue {residue}")
        return self.rational_part()

    def with_radicand(self, d: int) -> "LaurentPoly":
        """Re-tag a rational polynomial so it can mix with radicand ``d``."""
        return LaurentPoly({e: QuadScalar(_frac(v), 0, d) if not isinstance(v, QuadScalar) else v
                            for e, v in self._c.items()}, d)

    def __repr__(self):
        if not self._c:
            return "LaurentPoly(0)"
        terms = " + ".join(f"({v})*x^{e}" for e, v in self.items())
        return f"LaurentPoly({terms})"


def laurent_ops(a: LaurentPoly, b, op: str):
    """Dispatch ``add``, ``mul``, ``invert-variable`` or ``evaluate-at``.

    ``b`` is a LaurentPoly for add/mul, ignored for invert-variable, and the
    evaluation point for evaluate-at.
    """
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "invert-variable":
        return a.invert_variable()
    if op == "evaluate-at":
        if b == 0:
            raise ZeroDivisionError("evaluation point must be nonzero")
        return a.evaluate(b)
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# Truncated Taylor series
# ---------------------------------------------------------------------------


class TaylorSeries:
    """Coefficients ``c_0..c_K`` of a power series known exactly up to order K."""

    __slots__ = ("coeffs", "order", "radicand")

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [_normalize(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "radicand", radicand_of(*cs))

    def __setattr__(self, name, value):
        raise AttributeError("TaylorSeries is immutable")

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __eq__(self, other):
        if not isinstance(other, TaylorSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def truncate(self, order: int) -> "TaylorSeries":
        if order > self.order:
            raise ValueError(f"cannot extend series of order {self.order} to {order}")
        return TaylorSeries(self.coeffs[: order + 1], order)

    def __add__(self, other):
        return series_combine(self, other, "add")

    def __sub__(self, other):
        return series_combine(self, other, "sub")

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadScalar)):
            return TaylorSeries([c * other for c in self.coeffs], self.order)
        return series_combine(self, other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        return series_combine(self, other, "div")

    def __pow__(self, n: int):
        if n < 0:
            return series_combine(TaylorSeries([1], self.order), self ** (-n), "div")
        result = TaylorSeries([1], self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"TaylorSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def trig_series(kind: str, phase_sin: Scalar, phase_cos: Scalar, order: int) -> TaylorSeries:
    """Taylor coefficients of ``sin(e + t)`` or ``cos(e + t)`` in ``e``.

    ``t`` is given by its sine and cosine.  Angle addition reduces everything to
    the series of ``sin e`` and ``cos e``.
    """
    if kind not in ("sin", "cos"):
        raise ValueError(f"kind must be 'sin' or 'cos', got {kind!r}")
    if order < 0:
        raise ValueError("order must be >= 0")
    radicand_of(phase_sin, phase_cos)
    if phase_sin * phase_sin + phase_cos * phase_cos != 1:
        raise ValueError("phase_sin^2 + phase_cos^2 must equal 1")
    if kind == "sin":
        even, odd = phase_sin, phase_cos
    else:
        even, odd = phase_cos, -phase_sin
    coeffs = []
    for n in range(order + 1):
        sign = -1 if (n // 2) % 2 else 1
        base = even if n % 2 == 0 else odd
        coeffs.append(base * Fraction(sign, factorial(n)))
    return TaylorSeries(coeffs, order)


def series_combine(a: TaylorSeries, b: TaylorSeries, op: str, order: int | None = None) -> TaylorSeries:
    """Exact truncated ``add``/``sub``/``mul``/``div`` of two series."""
    radicand_of(*a.coeffs, *b.coeffs)
    top = min(a.order, b.order)
    if order is None:
        order = top
    elif order > top:
        raise ValueError(f"requested order {order} exceeds operand precision {top}")
    ac, bc = a.coeffs, b.coeffs
    if op == "add":
        return TaylorSeries([ac[n] + bc[n] for n in range(order + 1)], order)
    if op == "sub":
        return TaylorSeries([ac[n] - bc[n] for n in range(order + 1)], order)
    if op == "mul":
        out = []
        for n in range(order + 1):
            s = Fraction(0)
            for k in range(n + 1):
                s = s + ac[k] * bc[n - k]
            out.append(s)
        return TaylorSeries(out, order)
    if op == "div":
        if bc[0] == 0:
            raise ZeroDivisionError("series division by a series with zero constant term")
        inv0 = 1 / bc[0] if isinstance(bc[0], QuadScalar) else Fraction(1) / bc[0]
        out = []
        for n in range(order + 1):
            s = ac[n]
            for k in range(1, n + 1):
                s = s - bc[k] * out[n - k]
            out.append(s * inv0)
        return TaylorSeries(out, order)
    raise ValueError(f"unknown op {op!r}")


def derivative_at_zero(s: TaylorSeries, j: int):
    """``j``-th derivative at the origin, i.e. ``j! * c_j``."""
    if j < 0 or j > s.order:
        raise ValueError(f"derivative order {j} outside 0..{s.order}")
    return s.coeffs[j] * factorial(j)
