"""Brute-force weighted count of DWBC configurations, as a cell-by-cell transfer scan.

State between cells: a bitmask over columns (bit set = the vertical line of that
column is still present, i.e. the column has not yet received its 1), the
horizontal edge ``h`` to the right of the current cell (1 = line present), and
the row ``r`` (counted from the bottom) at which the last column got its 1, or 0
if not yet.  In matrix language a cell entry ``+1`` absorbs a column line into
the row, ``-1`` releases it again and costs one factor of ``x``.

Weights are accumulated as integer polynomials in ``x`` so one pass covers
every x.
"""
from __future__ import annotations

from dataclasses import dataclass

from .tables import EnumerationTable

DEFAULT_LIMIT = 7


@dataclass(frozen=True)
class WeightPolynomial:
    """Coefficient k counts configurations with k entries equal to -1."""

    coefficients: tuple

    def evaluate(self, x: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * x + c
        return total

    def __add__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return WeightPolynomial(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                                      for i in range(n)))


def _add_into(table: dict, key, poly: list, shift: int) -> None:
    cur = table.get(key)
    if cur is None:
        cur = table[key] = [0] * len(poly)
    if len(cur) < len(poly) + shift:
        cur.extend([0] * (len(poly) + shift - len(cur)))
    for i, c in enumerate(poly):
        cur[i + shift] += c


def transfer_refined(N: int, max_n: int = DEFAULT_LIMIT) -> list[WeightPolynomial]:
    """Generating polynomials indexed by ``r = 1..N``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if N > max_n:
        raise ValueError(f"N = {N} exceeds the oracle limit {max_n}")
    full = (1 << N) - 1
    # key: (mask, r) at row boundaries; h is 0 at the left of every row
    states: dict = {(full, 0): [1]}
    for i in range(N):
        row_from_bottom = N - i
        cells = {(mask, 0, r): poly for (mask, r), poly in states.items()}
        for j in range(N):
            bit = 1 << j
            nxt: dict = {}
            for (mask, h, r), poly in cells.items():
                present = bool(mask & bit)
                # 0 entry: vertical and horizontal lines pass through
                _add_into(nxt, (mask, h, r), poly, 0)
                if present and not h:
                    rr = row_from_bottom if j == N - 1 else r
                    _add_into(nxt, (mask & ~bit, 1, rr), poly, 0)
                elif h and not present:
                    _add_into(nxt, (mask | bit, 0, r), poly, 1)
            cells = nxt
        states = {}
        for (mask, h, r), poly in cells.items():
            if h == 1:
                _add_into(states, (mask, r), poly, 0)
    out = [WeightPolynomial((0,)) for _ in range(N)]
    for (mask, r), poly in states.items():
        if mask != 0 or not 1 <= r <= N:
            raise AssertionError(f"scan ended in an illegal state mask={mask:b} r={r}")
        out[r - 1] = out[r - 1] + WeightPolynomial(tuple(poly))
    return out


def oracle_counts(N: int, x: int, max_n: int = DEFAULT_LIMIT) -> EnumerationTable:
    if x not in (0, 1, 2, 3):
        raise ValueError("x must be 0, 1, 2 or 3")
    refined = tuple(p.evaluate(x) for p in transfer_refined(N, max_n))
    return EnumerationTable(x, N, sum(refined), refined)
