import itertools

import pytest
from hypothesis import given, settings, strategies as st

from goppastrata.errors import IndexOutOfRange
from goppastrata.galois import field_build
from goppastrata.linalg import Matrix, column_submatrix, kernel, rank, rref, solve

from oracles import brute_rank, span_set

GF2 = field_build(2)
GF3 = field_build(3)
GF7 = field_build(7)


def test_rref_examples():
    I3 = Matrix.identity(GF7, 3)
    assert rref(I3) == (I3, [0, 1, 2])
    Z = Matrix.zeros(GF7, 2, 3)
    assert rref(Z) == (Z, [])
    assert rank(Matrix.from_rows(GF7, [[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel(Matrix.identity(GF7, 3)) == []
    assert len(kernel(Matrix.zeros(GF7, 2, 3))) == 3
    assert kernel(Matrix.from_rows(GF2, [[1, 1]])) == [(1, 1)]


def test_solve_examples():
    I = Matrix.identity(GF7, 3)
    assert solve(I, (4, 5, 6)) == (4, 5, 6)
    assert solve(Matrix.zeros(GF7, 2, 2), (1, 0)) is None
    assert solve(Matrix.from_rows(GF7, [[2]]), (3,)) == (5,)


def test_column_submatrix():
    A = Matrix.from_rows(GF7, [[1, 2, 3], [4, 5, 6]])
    assert column_submatrix(A, range(3)) == A
    assert column_submatrix(A, []).shape == (2, 0)
    assert column_submatrix(A, {1}).rows == ((2,), (5,))
    assert column_submatrix(A, [2, 0]).rows == ((1, 3), (4, 6))
    with pytest.raises(IndexOutOfRange):
        column_submatrix(A, [3])


@st.composite
def small_matrices(draw):
    F = draw(st.sampled_from([GF2, GF3]))
    r = draw(st.integers(1, 3))
    c = draw(st.integers(1, 4))
    rows = draw(st.lists(st.lists(st.integers(0, F.q - 1), min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(F, rows, c)


@settings(max_examples=150, derandomize=True)
@given(small_matrices())
def test_rank_matches_span_size(A):
    r = rank(A)
    assert r == brute_rank(A.field, list(A.rows))
    assert r <= min(A.shape)
    R, piv = rref(A)
    assert rank(R) == r == len(piv)


@settings(max_examples=150, derandomize=True)
@given(small_matrices())
def test_kernel_properties(A):
    K = kernel(A)
    assert len(K) == A.ncols - rank(A)
    for v in K:
        assert not any(A.apply(v))
    if K:
        assert rank(Matrix.from_rows(A.field, K, A.ncols)) == len(K)


@settings(max_examples=100, derandomize=True)
@given(small_matrices(), st.data())
def test_solve_against_enumeration(A, data):
    F = A.field
    b = tuple(data.draw(st.lists(st.integers(0, F.q - 1), min_size=A.nrows, max_size=A.nrows)))
    reachable = {A.apply(x) for x in itertools.product(range(F.q), repeat=A.ncols)}
    x = solve(A, b)
    if b in reachable:
        assert x is not None and A.apply(x) == b
    else:
        assert x is None


def test_matmul_transpose():
    A = Matrix.from_rows(GF7, [[1, 2], [3, 4]])
    assert (A @ Matrix.identity(GF7, 2)) == A
    assert A.transpose().rows == ((1, 3), (2, 4))
    # [[1,2],[3,4]]^2 = [[7,10],[15,22]] = [[0,3],[1,1]] mod 7
    assert (A @ A).rows == ((0, 3), (1, 1))
    assert span_set(GF2, [(1, 0), (0, 1)]) == {(0, 0), (1, 0), (0, 1), (1, 1)}
