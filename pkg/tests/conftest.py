from itertools import combinations

import pytest


def _rows(n):
    """Rows with entries in {-1,0,1}, nonzero entries alternating and starting/ending with +1."""
    out = []
    for k in range(1, n + 1, 2):
        for pos in combinations(range(n), k):
            row = [0] * n
            for i, p in enumerate(pos):
                row[p] = 1 if i % 2 == 0 else -1
            out.append(tuple(row))
    return out


def brute_force_asms(n):
    """All n x n ASMs by row-level depth-first search over column partial sums."""
    rows = _rows(n)
    found = []

    def extend(prefix, colsum):
        if len(prefix) == n:
            if all(c == 1 for c in colsum):
                found.append(tuple(prefix))
            return
        for row in rows:
            new = [c + v for c, v in zip(colsum, row)]
            if all(0 <= c <= 1 for c in new):
                extend(prefix + [row], new)

    extend([], [0] * n)
    return found


def brute_refined(n, x):
    """A(n, r; x) from explicit matrices; r counts rows from the bottom."""
    counts = [0] * n
    for asm in brute_force_asms(n):
        minus = sum(row.count(-1) for row in asm)
        i = next(i for i, row in enumerate(asm) if row[-1] == 1)
        counts[n - i - 1] += x ** minus
    return counts


@pytest.fixture(scope="session")
def brute():
    cache = {}

    def get(n, x):
        if (n, x) not in cache:
            cache[n, x] = brute_refined(n, x)
        return cache[n, x]
    return get
