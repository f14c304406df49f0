"""gf2-linalg: rank, nullspace, matvec against naive references."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import naive_kernel, naive_matvec, naive_rank
from lckit import BitMatrix, BitVector, LckitError, matvec, nullspace_basis, rank, rref, vec_add


def to_lists(m: BitMatrix) -> list[list[int]]:
    return [list(m.row(i)) for i in range(m.rows)]


def random_matrix(rng: random.Random, rows: int, cols: int, p: float = 0.5) -> BitMatrix:
    data = [
        sum(1 << c for c in range(cols) if rng.random() < p) for _ in range(rows)
    ]
    return BitMatrix(rows, cols, data)


class TestRank:
    def test_identity(self):
        assert rank(BitMatrix.identity(4)) == 4

    def test_zero(self):
        assert rank(BitMatrix(3, 5)) == 0

    def test_dependent_third_row(self):
        m = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        assert rank(m) == 2

    @settings(max_examples=60)
    @given(st.integers(0, 10**9), st.integers(1, 12), st.integers(1, 12))
    def test_matches_naive(self, seed, r, c):
        m = random_matrix(random.Random(seed), r, c)
        assert rank(m) == naive_rank(to_lists(m))

    def test_rank_equals_transpose_rank(self):
        rng = random.Random(11)
        for _ in range(20):
            m = random_matrix(rng, rng.randint(1, 64), rng.randint(1, 64))
            assert rank(m) == rank(m.transpose())


class TestNullspace:
    def test_identity_has_empty_basis(self):
        assert nullspace_basis(BitMatrix.identity(5)) == []

    def test_zero_matrix_gives_standard_basis(self):
        basis = nullspace_basis(BitMatrix(2, 4))
        assert basis == [BitVector(4, 1 << i) for i in range(4)]

    def test_frozen_example(self):
        m = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
        assert [b.to_tuple() for b in nullspace_basis(m)] == [(1, 1, 1)]

    @settings(max_examples=40)
    @given(st.integers(0, 10**9), st.integers(1, 6), st.integers(1, 8))
    def test_spans_exact_kernel_small(self, seed, r, c):
        m = random_matrix(random.Random(seed), r, c)
        basis = nullspace_basis(m)
        kernel = set(naive_kernel(to_lists(m), c))
        # every basis vector lies in the kernel and the span covers it all
        span = {0}
        for b in basis:
            span |= {s ^ b.bits for s in span}
        assert {tuple((s >> i) & 1 for i in range(c)) for s in span} == kernel
        assert len(span) == 1 << len(basis)  # independence

    def test_count_and_residual_on_large_random(self):
        rng = random.Random(5)
        m = random_matrix(rng, 200, 800)
        basis = nullspace_basis(m)
        assert len(basis) == 800 - rank(m)
        for b in basis[:: max(1, len(basis) // 16)]:
            assert matvec(m, b).is_zero()

    def test_deterministic(self):
        rng = random.Random(9)
        m = random_matrix(rng, 30, 50)
        m2 = BitMatrix(30, 50, m.row_bits())
        assert nullspace_basis(m) == nullspace_basis(m2)

    def test_free_columns_ascending(self):
        m = BitMatrix.from_rows([[0, 1, 0, 1]])
        basis = nullspace_basis(m)
        # pivot column is 1; each vector owns one free column, ascending
        free = [0, 2, 3]
        assert len(basis) == 3
        for b, f in zip(basis, free):
            assert b[f] == 1
            assert all(b[other] == 0 for other in free if other != f)


class TestRref:
    def test_pivots_and_shape(self):
        m = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        red, pivots = rref(m)
        assert pivots == (0, 1)
        assert red.rows == 2
        assert to_lists(red) == [[1, 0, 1], [0, 1, 1]]


class TestMatvecAndAdd:
    def test_zero_vector(self):
        m = BitMatrix.identity(3)
        assert matvec(m, BitVector(3)).is_zero()

    def test_self_add_is_zero(self):
        a = BitVector.from_bits([1, 0, 1, 1])
        assert vec_add(a, a).is_zero()

    def test_parity_example(self):
        m = BitMatrix.from_rows([[1, 0, 1]])
        assert matvec(m, BitVector.from_bits([1, 1, 1])) == BitVector(1, 0)

    def test_dimension_mismatch(self):
        with pytest.raises(LckitError):
            matvec(BitMatrix.identity(3), BitVector(4))
        with pytest.raises(LckitError):
            vec_add(BitVector(3), BitVector(4))

    @settings(max_examples=60)
    @given(st.integers(0, 10**9), st.integers(1, 10), st.integers(1, 10))
    def test_matches_naive(self, seed, r, c):
        rng = random.Random(seed)
        m = random_matrix(rng, r, c)
        x = BitVector(c, rng.getrandbits(c))
        assert list(matvec(m, x)) == naive_matvec(to_lists(m), list(x))


class TestBitVector:
    def test_padding_masked(self):
        assert BitVector(3, 0b11111).bits == 0b111

    def test_indexing_and_iter(self):
        v = BitVector.from_bits([0, 1, 1, 0])
        assert len(v) == 4 and v[1] == 1 and v[3] == 0
        assert list(v) == [0, 1, 1, 0]
        with pytest.raises(IndexError):
            v[4]

    def test_immutable(self):
        v = BitVector(3)
        with pytest.raises(AttributeError):
            v.bits = 7

    def test_from_rows_validates_width(self):
        with pytest.raises(LckitError):
            BitMatrix.from_rows([[1, 0], [1, 0, 1]])
