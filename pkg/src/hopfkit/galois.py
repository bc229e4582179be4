"""Hopf–Galois machinery: universal calculus, canonical map, bundle verification.

A bundle is a comodule algebra together with a sub-bimodule N of the
universal first-order calculus (N presents the calculus as ker(mult)/N).
Everything here works at the level of A⊗A with flattened indices; balanced
tensor products over a base are realized as quotients of A⊗A by explicit
relation subspaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Algebra, AlgebraMorphism, quotient_algebra, subspace_is_subalgebra
from .coaction import Coaction, coinvariants
from .errors import DimensionError, PreconditionError
from .exactcore import (
    DenseMatrix,
    Subspace,
    kernel,
    map_factor,
    preimage_subspace,
    quotient_space,
    subspace_intersect,
    subspace_sum,
    subspace_tensor,
    tensor_vec,
    unit_vec,
)
from .hopf import counit_kernel
from .reports import ClaimLedger, LedgerBuilder, ValidityReport, Violation


@dataclass(frozen=True)
class Bundle:
    """Comodule algebra plus a calculus datum N ⊆ A⊗A inside ker(mult)."""

    coaction: Coaction
    calculus: Subspace

    def __post_init__(self):
        da = self.coaction.algebra.dim
        if self.calculus.ambient_dim != da * da:
            raise DimensionError("calculus must live in A⊗A")


def universal_calculus(a: Algebra) -> tuple[Subspace, DenseMatrix]:
    """Kernel of multiplication with the universal differential 1⊗a - a⊗1."""
    ker = kernel(a.mult_matrix)
    rows = []
    for i in range(a.dim):
        e = a.basis_vector(i)
        rows.append(tuple(x - y for x, y in zip(tensor_vec(a.unit, e), tensor_vec(e, a.unit))))
    diff = DenseMatrix.from_rows(a.field, rows, cols=a.dim * a.dim)
    return ker, diff


def can_matrix(c: Coaction) -> DenseMatrix:
    """Matrix of a⊗a' -> a·a'_(0) ⊗ a'_(1) on all of A⊗A."""
    a = c.algebra
    da, dh = a.dim, c.hopf.dim
    rows = []
    for i in range(da):
        for j in range(da):
            out = [c.field.zero] * (da * dh)
            for idx, coeff in enumerate(c.matrix.row(j)):
                if not coeff:
                    continue
                k, r = divmod(idx, dh)
                prod = a.mult[i][k]
                for l, p in enumerate(prod):
                    if p:
                        out[l * dh + r] = out[l * dh + r] + coeff * p
            rows.append(tuple(out))
    return DenseMatrix.from_rows(c.field, rows, cols=da * dh)


def coaction_square_matrix(c: Coaction) -> DenseMatrix:
    """Diagonal coaction on A⊗A: a⊗a' -> a_(0)⊗a'_(0)⊗a_(1)a'_(1)."""
    a = c.algebra
    h = c.hopf.alg
    da, dh = a.dim, c.hopf.dim
    rows = []
    for i in range(da):
        ri = c.matrix.row(i)
        for j in range(da):
            rj = c.matrix.row(j)
            out = [c.field.zero] * (da * da * dh)
            for idx1, x in enumerate(ri):
                if not x:
                    continue
                k, r = divmod(idx1, dh)
                for idx2, y in enumerate(rj):
                    if not y:
                        continue
                    l, s = divmod(idx2, dh)
                    coeff = x * y
                    prod = h.mult[r][s]
                    base = (k * da + l) * dh
                    for t, p in enumerate(prod):
                        if p:
                            out[base + t] = out[base + t] + coeff * p
            rows.append(tuple(out))
    return DenseMatrix.from_rows(c.field, rows, cols=da * da * dh)


@dataclass(frozen=True)
class BalancedTensor:
    """A⊗A modulo base-balancing relations, with the quotient data."""

    dim: int
    projection: DenseMatrix
    section: DenseMatrix
    relations: Subspace


def _balancing_relations(a: Algebra, lifts: list) -> Subspace:
    rows = []
    for t in lifts:
        for i in range(a.dim):
            ei = a.basis_vector(i)
            left = a.multiply(ei, t)
            right_acts = a.left_mult_matrix_of(t)  # e_j -> t·e_j
            for j in range(a.dim):
                ej = a.basis_vector(j)
                rel = tuple(x - y for x, y in zip(tensor_vec(left, ej),
                                                  tensor_vec(ei, right_acts.row(j))))
                if any(rel):
                    rows.append(rel)
    return Subspace.from_vectors(a.field, a.dim * a.dim, rows)


def balanced_tensor(a: Algebra, b_carrier: Subspace, via: AlgebraMorphism | None = None
                    ) -> BalancedTensor:
    """Balanced tensor product A ⊗_B A as a quotient of A⊗A.

    With ``via`` absent, ``b_carrier`` must be a unital subalgebra of A.
    With ``via`` the projection onto a quotient algebra, ``b_carrier`` lives
    there and acts through lifts; relations for the whole lift fiber (chosen
    lift plus the kernel) are included, which makes the construction
    manifestly independent of the chosen lift.  That independence is still
    re-checked by recomputing with shifted lifts.
    """
    if via is None:
        if b_carrier.ambient_dim != a.dim:
            raise DimensionError("balanced_tensor: base must live in A")
        ok = subspace_is_subalgebra(a, b_carrier)
        if not ok:
            raise PreconditionError(f"base is not a unital subalgebra (witness {ok.witness})",
                                    witness=ok.witness)
        lifts = list(b_carrier.rows_list())
        fiber = []
    else:
        if via.source != a:
            raise DimensionError("balanced_tensor: via must project from A")
        if b_carrier.ambient_dim != via.target.dim:
            raise DimensionError("balanced_tensor: base must live in the quotient algebra")
        ok = subspace_is_subalgebra(via.target, b_carrier)
        if not ok:
            raise PreconditionError(f"base is not a unital subalgebra (witness {ok.witness})",
                                    witness=ok.witness)
        ker = kernel(via.matrix)
        q = quotient_space(a.dim, ker)
        lifts = [q.section.apply(b) for b in b_carrier.rows_list()]
        fiber = list(ker.rows_list())

    relations = _balancing_relations(a, lifts + fiber)
    if fiber:
        shifted = [tuple(x + y for x, y in zip(t, fiber[0])) for t in lifts]
        again = _balancing_relations(a, shifted + fiber)
        if again != relations:
            raise AssertionError("balanced tensor relations depend on the lift choice")
    q2 = quotient_space(a.dim * a.dim, relations)
    return BalancedTensor(q2.dim, q2.projection, q2.section, relations)


def canonical_map(c: Coaction, b_carrier: Subspace) -> tuple[DenseMatrix, bool]:
    """Hopf–Galois canonical map A⊗_B A -> A⊗H and its bijectivity.

    ``b_carrier`` must be a unital subalgebra of coinvariants, which makes
    the map well defined on the balanced tensor product (checked exactly).
    """
    binv = coinvariants(c)
    if not binv.contains_subspace(b_carrier):
        raise PreconditionError("base subalgebra is not inside the coinvariants")
    bt = balanced_tensor(c.algebra, b_carrier, None)
    can0 = can_matrix(c)
    for r in bt.relations.rows_list():
        if any(can0.apply(r)):
            raise AssertionError("canonical map does not kill the balancing relations")
    can_q = bt.section.mul(can0)
    da, dh = c.algebra.dim, c.hopf.dim
    bijective = (bt.dim == da * dh) and (can_q.rank == bt.dim)
    return can_q, bijective


def ver_map(c: Coaction, element: Sequence) -> tuple:
    """Vertical map on the universal calculus: Σ a⊗a' -> Σ a·a'_(0) ⊗ a'_(1).

    The input must lie in ker(mult); the image then lands in A ⊗ ker(eps).
    """
    a = c.algebra
    if len(element) != a.dim * a.dim:
        raise DimensionError("ver_map: element must live in A⊗A")
    if any(a.mult_matrix.apply(element)):
        raise PreconditionError("ver_map: element is not in the kernel of multiplication")
    return can_matrix(c).apply(element)


def check_covariant_calculus(b: Bundle) -> ValidityReport:
    """N ⊆ ker(mult), sub-bimodule property, and right covariance of N."""
    c = b.coaction
    a = c.algebra
    da = a.dim
    bad = []
    n_rows = b.calculus.rows_list()
    for idx, r in enumerate(n_rows):
        if any(a.mult_matrix.apply(r)):
            bad.append(Violation("inside-kernel-of-mult", (idx,), ""))
    for i in range(da):
        li = a.left_mult_matrices[i]
        ri = a.right_mult_matrices[i]
        for idx, r in enumerate(n_rows):
            if not b.calculus.contains(map_factor(r, (da, da), 0, li)):
                bad.append(Violation("left-module-closed", (i, idx), ""))
            if not b.calculus.contains(map_factor(r, (da, da), 1, ri)):
                bad.append(Violation("right-module-closed", (i, idx), ""))
    dsq = coaction_square_matrix(c)
    target = subspace_tensor(b.calculus, Subspace.full(c.field, c.hopf.dim))
    for idx, r in enumerate(n_rows):
        if not target.contains(dsq.apply(r)):
            bad.append(Violation("right-covariant", (idx,), "δ⊗(N) not inside N⊗H"))
    return ValidityReport("covariant-calculus", tuple(bad))


def vertical_ideal(b: Bundle) -> tuple[Subspace, Subspace]:
    """V = ver(N) and the candidate right ideal I = {h in ker(eps) : 1⊗h in V}."""
    c = b.coaction
    da, dh = c.algebra.dim, c.hopf.dim
    can0 = can_matrix(c)
    v = Subspace.from_vectors(c.field, da * dh,
                              [can0.apply(r) for r in b.calculus.rows_list()])
    unit_tensor = DenseMatrix.from_rows(
        c.field,
        [tensor_vec(c.algebra.unit, unit_vec(c.field, dh, k)) for k in range(dh)],
        cols=da * dh)
    ideal = subspace_intersect(preimage_subspace(unit_tensor, v), counit_kernel(c.hopf))
    return v, ideal


def check_qpb(b: Bundle) -> ClaimLedger:
    """Quantum-principal-bundle verification over the bundle's own Hopf algebra.

    Itemizes: covariance of the calculus, bijectivity of the canonical map
    over the full coinvariant base, and the vertical-space conditions
    (ver(N) = A⊗I for an Ad-stable right ideal I inside ker(eps)).
    """
    c = b.coaction
    led = LedgerBuilder("quantum-principal-bundle")
    cov = check_covariant_calculus(b)
    led.add("calculus-covariant", cov.ok,
            "" if cov.ok else cov.violations[0].render())

    base = coinvariants(c)
    ok_base = subspace_is_subalgebra(c.algebra, base)
    if ok_base:
        try:
            _, bij = canonical_map(c, base)
            led.add("galois-over-coinvariants", bij,
                    f"base dim {base.dim}")
        except PreconditionError as e:
            led.refuted("galois-over-coinvariants", str(e))
    else:
        led.refuted("galois-over-coinvariants",
                    f"coinvariants are not a subalgebra (witness {ok_base.witness})")

    v, ideal = vertical_ideal(b)
    expected = subspace_tensor(Subspace.full(c.field, c.algebra.dim), ideal)
    led.add("vertical-space-is-free-over-ideal", v == expected,
            f"ver(N) dim {v.dim}, A⊗I dim {expected.dim}")

    h = c.hopf
    right_ok = True
    witness = ""
    for j in range(h.dim):
        rj = h.alg.right_mult_matrices[j]
        for idx, r in enumerate(ideal.rows_list()):
            if not ideal.contains(rj.apply(r)):
                right_ok = False
                witness = f"I·e{j} leaves I at row {idx}"
                break
        if not right_ok:
            break
    led.add("vertical-ideal-right-ideal", right_ok, witness)

    ad_target = subspace_tensor(ideal, Subspace.full(c.field, h.dim))
    ad_ok = all(ad_target.contains(h.adjoint_matrix.apply(r)) for r in ideal.rows_list())
    led.add("vertical-ideal-ad-stable", ad_ok, f"ideal dim {ideal.dim}")
    return led.build()


def stable_ideal_identities(c: Coaction, i: Subspace, b_carrier: Subspace) -> ClaimLedger:
    """Exact subspace identities tying a stable ideal to the canonical map.

    Requires the canonical map (on A⊗A) to be surjective onto A⊗H; checks
    that the image of I⊗A + A⊗I (plus balancing relations) is exactly I⊗H
    and that its full preimage is exactly I⊗A + A⊗I plus the relations.
    """
    a = c.algebra
    if i.ambient_dim != a.dim:
        raise DimensionError("stable_ideal_identities: ideal must live in A")
    _, proj = quotient_algebra(a, i)
    bt = balanced_tensor(a, b_carrier, via=proj)
    can0 = can_matrix(c)
    da, dh = a.dim, c.hopf.dim
    if can0.rank != da * dh:
        raise PreconditionError(
            f"canonical map is not surjective (rank {can0.rank} of {da * dh})")

    full_a = Subspace.full(c.field, da)
    mixed = subspace_sum(subspace_tensor(i, full_a), subspace_tensor(full_a, i))
    lhs_vectors = [can0.apply(r) for r in mixed.rows_list()]
    lhs_vectors += [can0.apply(r) for r in bt.relations.rows_list()]
    lhs = Subspace.from_vectors(c.field, da * dh, lhs_vectors)
    rhs = subspace_tensor(i, Subspace.full(c.field, dh))
    led = LedgerBuilder("stable-ideal-identities")
    led.add("image-of-mixed-ideal-is-ideal-tensor-hopf", lhs == rhs,
            f"lhs dim {lhs.dim}, rhs dim {rhs.dim}")

    pre = preimage_subspace(can0, rhs)
    expected = subspace_sum(mixed, bt.relations)
    led.add("preimage-of-ideal-tensor-hopf-is-mixed-ideal", pre == expected,
            f"preimage dim {pre.dim}, expected dim {expected.dim}")
    return led.build()
