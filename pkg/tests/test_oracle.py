import pytest

from squareice.oracle import WeightPolynomial, oracle_counts, transfer_refined


def test_examples():
    assert transfer_refined(1) == [WeightPolynomial((1,))]
    polys = transfer_refined(3)
    assert sum(p.evaluate(1) for p in polys) == 7
    total = polys[0] + polys[1] + polys[2]
    assert total.coefficients == (6, 1)


def test_counts():
    t = oracle_counts(4, 1)
    assert t.total == 42 and t.refined == (7, 14, 14, 7)
    assert oracle_counts(4, 3).refined == (9, 36, 36, 9)
    assert oracle_counts(3, 0).refined == (2, 2, 2)


def test_totals_sequence():
    assert [oracle_counts(N, 1).total for N in range(1, 7)] == [1, 2, 7, 42, 429, 7436]


def test_permutations_at_x0():
    from math import factorial
    for N in range(1, 8):
        assert oracle_counts(N, 0).total == factorial(N)


def test_matches_explicit_matrices(brute):
    for N in range(1, 6):
        for x in (0, 1, 2, 3):
            assert list(oracle_counts(N, x).refined) == brute(N, x)


def test_row_is_counted_from_the_bottom(brute):
    # the identity matrix is the only 2x2 ASM with its last-column 1 in the bottom row
    polys = transfer_refined(2)
    assert [p.evaluate(1) for p in polys] == [1, 1]
    # with N = 3 the unique matrix containing a -1 has its last-column 1 in the middle
    assert transfer_refined(3)[1].coefficients == (2, 1)


def test_limit():
    with pytest.raises(ValueError):
        transfer_refined(8)
    assert len(transfer_refined(8, max_n=8)) == 8
    with pytest.raises(ValueError):
        oracle_counts(3, 4)
