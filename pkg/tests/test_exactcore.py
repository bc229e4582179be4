import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfkit.errors import DimensionError
from hopfkit.exactcore import (
    DenseMatrix,
    Subspace,
    TensorIndex,
    kernel,
    preimage_subspace,
    quotient_space,
    rref,
    subspace_intersect,
    subspace_sum,
    subspace_tensor,
)
from hopfkit.fields import Fp, PrimeField, QQ

from bruteforce import bareiss_rank, gauss_solve_membership

small_entries = st.integers(min_value=-4, max_value=4)
small_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda c: st.lists(st.lists(small_entries, min_size=c, max_size=c),
                       min_size=1, max_size=5))


def mat(rows):
    return DenseMatrix.from_rows(QQ, rows)


def span(ambient, rows):
    return Subspace.from_vectors(QQ, ambient, rows)


class TestRref:
    def test_identity_is_fixed(self):
        m = DenseMatrix.identity(QQ, 2)
        r, rank = rref(m)
        assert r == m and rank == 2

    def test_zero_matrix(self):
        m = mat([[0]])
        r, rank = rref(m)
        assert r == m and rank == 0

    def test_dependent_rows(self):
        r, rank = rref(mat([[1, 2], [2, 4]]))
        assert r.row_list() == [(Fraction(1), Fraction(2)), (Fraction(0), Fraction(0))]
        assert rank == 1
        assert rank == bareiss_rank([[1, 2], [2, 4]])

    @given(small_matrices)
    @settings(max_examples=60, deadline=None)
    def test_idempotent_and_rank_matches_bareiss(self, rows):
        m = mat(rows)
        r, rank = rref(m)
        again, rank2 = rref(r)
        assert again == r and rank2 == rank
        assert rank == bareiss_rank(rows)

    def test_prime_field(self):
        f5 = PrimeField(5)
        m = DenseMatrix.from_rows(f5, [[2, 4], [1, 2]])
        r, rank = rref(m)
        assert rank == 1
        assert r.row(0) == (Fp(5, 1), Fp(5, 2))


class TestSubspaces:
    def test_sum_with_zero(self):
        u = span(3, [[1, 1, 0]])
        assert subspace_sum(u, Subspace.zero(QQ, 3)) == u

    def test_sum_complementary(self):
        u = span(2, [[1, 0]])
        v = span(2, [[0, 1]])
        assert subspace_sum(u, v) == Subspace.full(QQ, 2)

    def test_sum_mixed(self):
        u = span(3, [[1, 1, 0]])
        v = span(3, [[1, -1, 0]])
        assert subspace_sum(u, v) == span(3, [[1, 0, 0], [0, 1, 0]])

    def test_intersect_full(self):
        u = span(3, [[1, 2, 3]])
        assert subspace_intersect(u, Subspace.full(QQ, 3)) == u

    def test_intersect_disjoint(self):
        assert subspace_intersect(span(2, [[1, 0]]), span(2, [[0, 1]])).dim == 0

    def test_intersect_overlap(self):
        u = span(3, [[1, 0, 0], [0, 1, 0]])
        v = span(3, [[0, 1, 0], [0, 0, 1]])
        assert subspace_intersect(u, v) == span(3, [[0, 1, 0]])

    def test_ambient_mismatch(self):
        with pytest.raises(DimensionError):
            subspace_sum(span(2, [[1, 0]]), span(3, [[1, 0, 0]]))

    def test_canonicity_under_row_mixing(self, rng):
        # any two spanning sets of the same subspace give identical bases
        for _ in range(40):
            n = rng.randint(2, 5)
            k = rng.randint(1, n)
            rows = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(k)]
            s1 = span(n, rows)
            mixed = [list(r) for r in rows]
            for _ in range(6):
                i, j = rng.randrange(k), rng.randrange(k)
                if i != j:
                    c = Fraction(rng.randint(-2, 2))
                    mixed[i] = [a + c * b for a, b in zip(mixed[i], mixed[j])]
                rng.shuffle(mixed)
            assert span(n, mixed) == s1

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_modular_dimension_formula(self, data):
        n = data.draw(st.integers(min_value=1, max_value=5))
        rows1 = data.draw(st.lists(st.lists(small_entries, min_size=n, max_size=n),
                                   min_size=0, max_size=4))
        rows2 = data.draw(st.lists(st.lists(small_entries, min_size=n, max_size=n),
                                   min_size=0, max_size=4))
        u, v = span(n, rows1), span(n, rows2)
        s = subspace_sum(u, v)
        i = subspace_intersect(u, v)
        assert s.dim == u.dim + v.dim - i.dim
        assert s.contains_subspace(u) and s.contains_subspace(v)
        assert u.contains_subspace(i) and v.contains_subspace(i)

    def test_membership_matches_bruteforce(self, rng):
        for _ in range(30):
            n = rng.randint(1, 5)
            rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(1, 4))]
            v = [rng.randint(-3, 3) for _ in range(n)]
            s = span(n, rows)
            assert s.contains(tuple(Fraction(x) for x in v)) == \
                gauss_solve_membership(rows, v)


class TestQuotientAndPreimage:
    def test_quotient_of_zero(self):
        q = quotient_space(3, Subspace.zero(QQ, 3))
        assert q.projection == DenseMatrix.identity(QQ, 3)
        assert q.dim == 3

    def test_quotient_of_full(self):
        q = quotient_space(2, Subspace.full(QQ, 2))
        assert q.dim == 0

    def test_quotient_diagonal(self):
        w = span(2, [[1, -1]])
        q = quotient_space(2, w)
        assert q.dim == 1
        # both basis vectors hit the same generator
        assert q.projection.apply((1, 0)) == q.projection.apply((0, 1))
        # kernel of the projection is exactly w
        assert kernel(q.projection) == w
        # projection ∘ section is the identity on the quotient
        assert q.section.mul(q.projection) == DenseMatrix.identity(QQ, 1)

    def test_preimage_of_full(self):
        f = mat([[1, 2], [3, 4], [0, 1]])
        assert preimage_subspace(f, Subspace.full(QQ, 2)) == Subspace.full(QQ, 3)

    def test_preimage_under_identity(self):
        t = span(2, [[1, 1]])
        assert preimage_subspace(DenseMatrix.identity(QQ, 2), t) == t

    def test_preimage_kernel(self):
        f = mat([[1, 0], [0, 0]])
        assert preimage_subspace(f, Subspace.zero(QQ, 2)) == span(2, [[0, 1]])
        assert kernel(f) == span(2, [[0, 1]])

    def test_preimage_contains_kernel(self, rng):
        for _ in range(20):
            n, m = rng.randint(1, 4), rng.randint(1, 4)
            f = mat([[rng.randint(-2, 2) for _ in range(m)] for _ in range(n)])
            t = span(m, [[rng.randint(-2, 2) for _ in range(m)]])
            assert preimage_subspace(f, t).contains_subspace(kernel(f))


class TestTensorIndex:
    def test_round_trip_1000(self, rng):
        shapes = [(2,), (3, 4), (2, 3, 4), (5, 1, 2), (2, 2, 2, 2)]
        for _ in range(1000):
            dims = shapes[rng.randrange(len(shapes))]
            ti = TensorIndex(dims)
            multi = tuple(rng.randrange(d) for d in dims)
            assert ti.unflatten(ti.flatten(multi)) == multi

    def test_row_major_convention(self):
        ti = TensorIndex((2, 3))
        assert ti.flatten((1, 0)) == 3  # leftmost factor slowest
        assert ti.flatten((0, 1)) == 1

    def test_out_of_range(self):
        with pytest.raises(DimensionError):
            TensorIndex((2, 2)).flatten((2, 0))


class TestSubspaceTensor:
    def test_tensor_is_canonical(self, rng):
        for _ in range(20):
            n, m = rng.randint(1, 3), rng.randint(1, 3)
            u = span(n, [[rng.randint(-2, 2) for _ in range(n)] for _ in range(2)])
            v = span(m, [[rng.randint(-2, 2) for _ in range(m)] for _ in range(2)])
            t = subspace_tensor(u, v)
            # directly-built tensor basis must already be in canonical form
            r, rank = rref(t.basis)
            assert r == t.basis and rank == t.dim == u.dim * v.dim

    def test_matrix_inverse(self):
        m = mat([[1, 2], [3, 4]])
        assert m.mul(m.inverse()) == DenseMatrix.identity(QQ, 2)
        assert m.inverse().mul(m) == DenseMatrix.identity(QQ, 2)
