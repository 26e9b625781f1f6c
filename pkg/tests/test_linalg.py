from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from braidmorita.linalg import (
    Matrix, SingularMatrix, TensorElement, determinant, embed_element, flat_index, flip,
    invert_matrix, kron, multi_index, nullspace, rank, trace_of_product,
)

small = st.integers(-3, 3)


def mats(r, c):
    return st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r).map(Matrix.from_dense)


def dense_kron(a, b):
    # independent oracle: block formula on nested lists
    ra, ca, rb, cb = len(a), len(a[0]), len(b), len(b[0])
    return [[a[i // rb][j // cb] * b[i % rb][j % cb] for j in range(ca * cb)] for i in range(ra * rb)]


def leibniz(rows):
    n = len(rows)
    total = Fraction(0)
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = Fraction(-1) ** inv
        for i in range(n):
            term *= rows[i][p[i]]
        total += term
    return total


def test_kron_against_block_formula():
    a = [[1, 2], [0, -1]]
    b = [[0, 1, 3], [2, 0, 1]]
    assert kron(Matrix.from_dense(a), Matrix.from_dense(b)).to_dense() == dense_kron(a, b)


def test_flat_index_is_leftmost_significant():
    assert flat_index((2, 3, 4), (1, 0, 2)) == 1 * 12 + 0 * 4 + 2
    assert multi_index((2, 3, 4), 14) == (1, 0, 2)


def test_flip_swaps_tensor_factors():
    F = flip(2, 3)
    for i in range(2):
        for j in range(3):
            v = [0] * 6
            v[i * 3 + j] = 1
            out = F.apply(v)
            assert out.index(1) == j * 2 + i and sum(out) == 1


class _Alg:
    def __init__(self, dim, unit):
        self.dim, self.unit = dim, unit


def test_embed_element_r13_by_hand():
    u = TensorElement((2, 2), {(0, 1): 3, (1, 1): -1})
    algs = [_Alg(2, [1, 0]), _Alg(3, [1, 1, 0]), _Alg(2, [1, 0])]
    got = embed_element(u, algs, 1, 3)
    # unit of the middle leg is e0 + e1
    expect = {(0, 0, 1): 3, (0, 1, 1): 3, (1, 0, 1): -1, (1, 1, 1): -1}
    assert got.coeffs == {k: Fraction(v) for k, v in expect.items()}
    with pytest.raises(IndexError):
        embed_element(u, algs, 3, 1)


def test_invert_and_singular():
    M = Matrix.from_dense([[2, 1], [1, 1]])
    assert (invert_matrix(M) @ M).is_identity()
    with pytest.raises(SingularMatrix):
        invert_matrix(Matrix.from_dense([[1, 2], [2, 4]]))


def test_nullspace_and_rank():
    M = Matrix.from_dense([[1, 2, 3], [2, 4, 6]])
    ns = nullspace(M)
    assert len(ns) == 2 and rank(M) == 1
    for v in ns:
        assert all(x == 0 for x in M.apply(v))


def test_pure_tensor_and_vector_round_trip():
    u = TensorElement.pure([[1, 2], [0, Fraction(1, 2), 1]])
    assert TensorElement.from_vector(u.dims, u.to_vector()) == u
    assert u.coeffs[(1, 1)] == 1


@settings(max_examples=40, deadline=None)
@given(mats(2, 2), mats(2, 2), mats(2, 2), mats(2, 2))
def test_kron_mixed_product(A, B, C, D):
    assert kron(A, B) @ kron(C, D) == kron(A @ C, B @ D)


@settings(max_examples=40, deadline=None)
@given(mats(2, 2), mats(2, 1), mats(1, 2))
def test_kron_associative(A, B, C):
    assert kron(kron(A, B), C) == kron(A, kron(B, C))


@settings(max_examples=60, deadline=None)
@given(mats(3, 3))
def test_inverse_round_trip_and_determinant(A):
    d = determinant(A)
    assert d == leibniz(A.to_dense())
    if d == 0:
        with pytest.raises(SingularMatrix):
            invert_matrix(A)
    else:
        Ai = invert_matrix(A)
        assert (A @ Ai).is_identity() and (Ai @ A).is_identity()


@settings(max_examples=40, deadline=None)
@given(mats(3, 2), mats(2, 3))
def test_trace_of_product(A, B):
    assert trace_of_product(A, B) == (A @ B).trace()
