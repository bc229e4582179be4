from fractions import Fraction

import pytest

from hopfkit.algebra import AlgebraMorphism, identity_morphism
from hopfkit.catalog import (
    cyclic_group,
    direct_product,
    group_algebra,
    grading_coaction,
    surjection_coaction,
    sweedler_h4,
    truncated_polynomial_algebra,
)
from hopfkit.coaction import (
    Coaction,
    check_coaction,
    coefficient_space,
    coinvariants,
    conjugate_coaction,
    coproduct_coaction,
    factors_through,
    hopf_image,
    is_inner_faithful,
    tensor_coaction,
    trivial_coaction,
)
from hopfkit.errors import HopfkitError
from hopfkit.exactcore import DenseMatrix, Subspace, subspace_tensor, tensor_vec
from hopfkit.fields import QQ
from hopfkit.hopf import check_hopf, full_hopf_subalgebra, hopf_subalgebra_closure

from bruteforce import subgroup_closure
from corpus import corpus_coactions, group_algebra_automorphism, truncated_poly_automorphisms


def span(n, rows):
    return Subspace.from_vectors(QQ, n, rows)


def graded_x2_z2():
    return grading_coaction(truncated_polynomial_algebra(QQ, 2), cyclic_group(2), [0, 1])


class TestCheckCoaction:
    def test_coproduct_is_coaction(self):
        for h in (group_algebra(cyclic_group(3)), sweedler_h4()):
            assert check_coaction(coproduct_coaction(h)).ok

    def test_grading_valid(self):
        assert check_coaction(graded_x2_z2()).ok

    def test_corrupted_counitality_flagged(self):
        c = graded_x2_z2()
        rows = [list(c.matrix.row(i)) for i in range(2)]
        # δ(x) = x⊗1 + x⊗g breaks counitality
        rows[1] = [0, 0, 1, 1]
        bad = Coaction(c.algebra, c.hopf, DenseMatrix.from_rows(QQ, rows, cols=4))
        rep = check_coaction(bad)
        assert not rep.ok
        assert any(v.check == "counitality" for v in rep.violations)


class TestCoefficientSpace:
    def test_trivial(self):
        c = trivial_coaction(truncated_polynomial_algebra(QQ, 2),
                             group_algebra(cyclic_group(2)))
        assert coefficient_space(c) == span(2, [[1, 0]])

    def test_z6_grading_of_x3(self):
        c = grading_coaction(truncated_polynomial_algebra(QQ, 3), cyclic_group(6), [0, 2, 4])
        assert coefficient_space(c).pivots == (0, 2, 4)

    def test_z6_grading_of_x2_smaller_than_image(self):
        c = grading_coaction(truncated_polynomial_algebra(QQ, 2), cyclic_group(6), [0, 1])
        assert coefficient_space(c).dim == 2
        sub, _ = hopf_image(c)
        assert sub.dim == 6

    def test_coefficient_space_is_subcoalgebra(self):
        from hopfkit.hopf import coalgebra_closure
        for _, c in corpus_coactions():
            cs = coefficient_space(c)
            assert coalgebra_closure(c.hopf, cs) == cs


class TestHopfImage:
    def test_coproduct_full(self):
        h = group_algebra(cyclic_group(2))
        sub, restricted = hopf_image(coproduct_coaction(h))
        assert sub.dim == 2
        assert check_coaction(restricted).ok

    def test_z6_grading_deg2(self):
        c = grading_coaction(truncated_polynomial_algebra(QQ, 3), cyclic_group(6), [0, 2, 4])
        sub, restricted = hopf_image(c)
        assert sub.dim == 3
        assert sub.carrier.pivots == (0, 2, 4)
        assert check_hopf(sub.induced).ok
        assert check_coaction(restricted).ok

    def test_z6_grading_deg1_full(self):
        c = grading_coaction(truncated_polynomial_algebra(QQ, 2), cyclic_group(6), [0, 1])
        sub, _ = hopf_image(c)
        assert sub.dim == 6

    def test_image_contains_coefficients_and_factors(self):
        for _, c in corpus_coactions():
            sub, restricted = hopf_image(c)
            assert sub.carrier.contains_subspace(coefficient_space(c))
            ok, fact = factors_through(c, sub)
            assert ok and fact is not None

    def test_corestriction_is_inner_faithful(self):
        for _, c in corpus_coactions():
            _, restricted = hopf_image(c)
            assert is_inner_faithful(restricted)


class TestInnerFaithful:
    def test_coproduct_sweedler(self):
        assert is_inner_faithful(coproduct_coaction(sweedler_h4()))

    def test_trivial_not(self):
        c = trivial_coaction(truncated_polynomial_algebra(QQ, 2),
                             group_algebra(cyclic_group(2)))
        assert not is_inner_faithful(c)

    def test_surjection_pattern(self):
        h4 = group_algebra(cyclic_group(4))
        h2 = group_algebra(cyclic_group(2))
        psi = DenseMatrix.from_rows(QQ, [[1, 0], [0, 1], [1, 0], [0, 1]])
        assert is_inner_faithful(surjection_coaction(h4, psi, h2))


class TestFactorsThrough:
    def test_full_always_true(self):
        c = graded_x2_z2()
        ok, fact = factors_through(c, full_hopf_subalgebra(c.hopf))
        assert ok
        assert fact.restricted.matrix == c.matrix

    def test_z3_part_of_z6(self):
        c = grading_coaction(truncated_polynomial_algebra(QQ, 3), cyclic_group(6), [0, 2, 4])
        l = hopf_subalgebra_closure(c.hopf, span(6, [[0, 0, 1, 0, 0, 0]]))
        ok, fact = factors_through(c, l)
        assert ok
        assert check_coaction(fact.restricted).ok
        sub, _ = hopf_image(c)
        assert l.carrier.contains_subspace(sub.carrier)

    def test_z2_part_of_z6_fails(self):
        c = grading_coaction(truncated_polynomial_algebra(QQ, 3), cyclic_group(6), [0, 2, 4])
        l = hopf_subalgebra_closure(c.hopf, span(6, [[0, 0, 0, 1, 0, 0]]))
        ok, fact = factors_through(c, l)
        assert not ok and fact is None

    def test_minimality_against_supplied_factorizations(self, rng):
        # every factorization's carrier must contain the Hopf image carrier
        count = 0
        for _, c in corpus_coactions():
            sub, _ = hopf_image(c)
            dh = c.hopf.dim
            for _ in range(3):
                extra = [[rng.randint(-2, 2) for _ in range(dh)]]
                bigger = hopf_subalgebra_closure(
                    c.hopf,
                    Subspace.from_vectors(QQ, dh, list(sub.carrier.rows_list()) + extra))
                ok, fact = factors_through(c, bigger)
                assert ok, "closure of a superset must still factor the coaction"
                assert bigger.carrier.contains_subspace(sub.carrier)
                count += 1
        assert count >= 20


class TestCoinvariants:
    def test_trivial_coaction(self):
        a = truncated_polynomial_algebra(QQ, 2)
        c = trivial_coaction(a, group_algebra(cyclic_group(2)))
        assert coinvariants(c) == Subspace.full(QQ, 2)

    def test_z3_grading(self):
        c = grading_coaction(truncated_polynomial_algebra(QQ, 3), cyclic_group(3), [0, 1, 2])
        assert coinvariants(c) == span(3, [[1, 0, 0]])

    def test_over_sweedler(self):
        # δ(x) = x⊗g over the 4-dim algebra: only multiples of 1 are coinvariant
        a = truncated_polynomial_algebra(QQ, 2)
        h = sweedler_h4()
        rows = [tensor_vec(a.basis_vector(0), h.alg.unit),
                tensor_vec(a.basis_vector(1), h.alg.basis_vector(1))]
        c = Coaction(a, h, DenseMatrix.from_rows(QQ, rows, cols=8))
        assert check_coaction(c).ok
        assert coinvariants(c) == span(2, [[1, 0]])

    def test_coinvariants_form_subalgebra(self):
        from hopfkit.algebra import subspace_is_subalgebra
        for _, c in corpus_coactions():
            assert subspace_is_subalgebra(c.algebra, coinvariants(c))


class TestTensorCoaction:
    def test_trivial_tensor_trivial(self):
        a = truncated_polynomial_algebra(QQ, 2)
        h = group_algebra(cyclic_group(2))
        t = tensor_coaction(trivial_coaction(a, h), trivial_coaction(a, h))
        assert check_coaction(t).ok
        assert coefficient_space(t).dim == 1

    def test_graded_square(self):
        c = graded_x2_z2()
        t = tensor_coaction(c, c)
        assert check_coaction(t).ok
        assert t.algebra.dim == 4 and t.hopf.dim == 4
        assert coefficient_space(t) == Subspace.full(QQ, 4)

    def test_image_inside_tensor_of_images(self):
        pairs = []
        cs = dict(corpus_coactions())
        pairs.append((cs["gradeX2byZ2"], cs["gradeX2byZ2"]))
        pairs.append((cs["copZ2"], cs["gradeX2byZ2"]))
        pairs.append((cs["trivZ2"], cs["copZ3"]))
        pairs.append((cs["gradeX3byZ3"], cs["copZ2"]))
        equal_count = 0
        for c1, c2 in pairs:
            t = tensor_coaction(c1, c2)
            sub_t, _ = hopf_image(t)
            s1, _ = hopf_image(c1)
            s2, _ = hopf_image(c2)
            outer = subspace_tensor(s1.carrier, s2.carrier)
            assert outer.contains_subspace(sub_t.carrier)
            if outer == sub_t.carrier:
                equal_count += 1
        # observed equality is recorded, never asserted: just make sure we saw data
        assert equal_count >= 0


class TestConjugateCoaction:
    def test_identity(self):
        c = graded_x2_z2()
        cc = conjugate_coaction(c, identity_morphism(c.algebra))
        assert cc.matrix == c.matrix

    def test_scaling_automorphism(self):
        c = graded_x2_z2()
        theta = AlgebraMorphism(c.algebra, c.algebra,
                                DenseMatrix.from_rows(QQ, [[1, 0], [0, 2]]))
        cc = conjugate_coaction(c, theta)
        assert check_coaction(cc).ok
        assert hopf_image(cc)[0].carrier == hopf_image(c)[0].carrier

    def test_rejects_non_morphism(self):
        c = graded_x2_z2()
        bad = AlgebraMorphism(c.algebra, c.algebra,
                              DenseMatrix.from_rows(QQ, [[0, 1], [1, 0]]))
        with pytest.raises(HopfkitError):
            conjugate_coaction(c, bad)

    def test_image_invariance_under_random_automorphisms(self, rng):
        a3, thetas = truncated_poly_automorphisms(rng, 10)
        c = grading_coaction(a3, cyclic_group(6), [0, 2, 4])
        base = hopf_image(c)[0].carrier
        for theta in thetas:
            cc = conjugate_coaction(c, theta)
            assert hopf_image(cc)[0].carrier == base

    def test_image_invariance_under_group_automorphism(self):
        h, sigma = group_algebra_automorphism(4, 3)
        c = coproduct_coaction(h)
        theta = AlgebraMorphism(h.alg, h.alg, sigma)
        cc = conjugate_coaction(c, theta)
        assert hopf_image(cc)[0].carrier == hopf_image(c)[0].carrier


def test_grading_oracle_matches_subgroup_closure(rng):
    from corpus import small_groups
    groups = small_groups()
    names = sorted(groups)
    done = 0
    for _ in range(60):
        gname = names[rng.randrange(len(names))]
        g = groups[gname]
        r = rng.randint(2, 3)
        a = truncated_polynomial_algebra(QQ, r)
        # grading by powers of one element is always multiplicative on k[x]/(x^r)
        t = rng.randrange(g.order)
        degrees = [0]
        for i in range(1, r):
            degrees.append(g.mul(degrees[i - 1], t))
        c = grading_coaction(a, g, degrees)
        sub, _ = hopf_image(c)
        expected_idx = subgroup_closure(g.table, set(degrees), g.identity)
        expected = Subspace.from_vectors(
            QQ, g.order,
            [[1 if j == s else 0 for j in range(g.order)] for s in sorted(expected_idx)])
        assert sub.carrier == expected
        done += 1
    assert done >= 50
