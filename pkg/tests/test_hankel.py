from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from squareice.hankel import (RationalLU, bareiss_determinant, block_determinant,
                              boundary_correlator_det, det_z, enumeration_from_partition,
                              factorization_check, hankel_determinant, partition_function,
                              refined_from_correlator)
from squareice.exact import QuadScalar
from squareice.moments import FREE_FERMION, ICE, MINUS_HALF, POINTS, cot_derivative_moments

fracs = st.fractions(min_value=-9, max_value=9, max_denominator=6)


def _laplace(M):
    if not M:
        return Fraction(1)
    return sum((-1) ** j * M[0][j] * _laplace([row[:j] + row[j + 1:] for row in M[1:]])
               for j in range(len(M)))


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(fracs, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
@settings(max_examples=150)
def test_bareiss_matches_cofactor_expansion(M):
    assert bareiss_determinant(M) == _laplace(M)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(fracs, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(fracs, min_size=n, max_size=n))))
def test_lu_solves(data):
    M, b = data
    if _laplace(M) == 0:
        with pytest.raises(ZeroDivisionError):
            RationalLU(M)
        return
    lu = RationalLU(M)
    n = len(M)
    y = lu.solve(b)
    assert [sum(M[i][j] * y[j] for j in range(n)) for i in range(n)] == b
    z = lu.solve_transpose(b)
    assert [sum(M[j][i] * z[j] for j in range(n)) for i in range(n)] == b


def test_hankel_examples():
    q = cot_derivative_moments(ICE, 2).reduced_moments
    assert hankel_determinant(q, 1) == 2
    assert hankel_determinant(q, 2) == Fraction(32, 3)
    assert det_z(ICE, 2) == Fraction(32, 9)
    assert hankel_determinant([], 0) == 1
    with pytest.raises(ValueError):
        hankel_determinant(q, 3)


def test_partition_function_examples():
    assert partition_function(ICE, 1).value == QuadScalar(0, Fraction(1, 2), 3)
    assert partition_function(ICE, 2).value == Fraction(9, 8)
    assert partition_function(FREE_FERMION, 3).value == 1


@pytest.mark.parametrize("N", range(1, 11))
def test_free_fermion_z_is_one(N):
    assert partition_function(FREE_FERMION, N).value == 1


def test_enumeration_examples():
    assert enumeration_from_partition(ICE, 3) == 7
    assert enumeration_from_partition(FREE_FERMION, 4) == 64
    assert enumeration_from_partition(MINUS_HALF, 3) == 9


@pytest.mark.parametrize("N", range(1, 11))
def test_two_enumeration(N):
    assert enumeration_from_partition(FREE_FERMION, N) == 2 ** (N * (N - 1) // 2)


def test_correlator_examples():
    assert boundary_correlator_det(ICE, 4).H == tuple(Fraction(k, 6) for k in (1, 2, 2, 1))
    assert boundary_correlator_det(FREE_FERMION, 3).H == (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4))
    for p in POINTS:
        assert boundary_correlator_det(p, 1).H == (1,)


@pytest.mark.parametrize("point", POINTS, ids=str)
def test_correlator_invariants(point):
    for N in range(1, 10):
        t = boundary_correlator_det(point, N)
        assert sum(t.H) == 1 and t.G[-1] == 1
        assert t.H == tuple(reversed(t.H))
        assert all(a <= b for a, b in zip(t.G, t.G[1:]))
        assert all(0 <= h <= 1 for h in t.H)


def test_refined_examples():
    assert refined_from_correlator(ICE, 4).refined == (7, 14, 14, 7)
    assert refined_from_correlator(FREE_FERMION, 3).refined == (2, 4, 2)
    assert refined_from_correlator(MINUS_HALF, 4).refined == (9, 36, 36, 9)


@pytest.mark.parametrize("point", POINTS, ids=str)
def test_refined_against_explicit_matrices(point, brute):
    for N in range(1, 6):
        table = refined_from_correlator(point, N)
        assert list(table.refined) == brute(N, point.weight_x)
        if N > 1:
            assert table.refined[0] == enumeration_from_partition(point, N - 1)


@pytest.mark.parametrize("m", [0, 1, 2, 3, 4])
def test_factorization(m):
    assert factorization_check(m)


def test_factorization_m0_uses_empty_block():
    assert block_determinant(MINUS_HALF, 1, 0) == 1
    assert det_z(MINUS_HALF, 1) == block_determinant(MINUS_HALF, 0, 1)


def test_chessboard_zeros_in_full_matrix():
    ms = cot_derivative_moments(ICE, 14)
    for j in range(8):
        for k in range(8):
            assert (ms[j + k] == 0) == ((j + k) % 2 == 1)
