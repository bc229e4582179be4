"""Bundle reduction to effective quantum symmetry, and the bundle category.

The pipeline: compute the Hopf image of the structure coaction, shrink a
caller-supplied seed to the largest coaction-stable two-sided ideal inside
it, quotient the total space, push the calculus down, and re-verify every
theorem-level claim on the concrete instance.  Nothing is assumed: each
claim lands in a ledger as verified / refuted / unsupported.

The seed is required because "largest stable ideal" is only meaningful
relative to a proper subspace (the whole algebra is always stable); the
kernel of a declared augmentation is the default.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    Algebra,
    AlgebraMorphism,
    identity_morphism,
    is_algebra_morphism,
    quotient_algebra,
)
from .coaction import Coaction, check_coaction, coinvariants, hopf_image, is_inner_faithful
from .errors import (
    DimensionError,
    HopfkitError,
    NotStableError,
    PreconditionError,
    UnsupportedFieldError,
)
from .exactcore import (
    DenseMatrix,
    Subspace,
    kernel,
    map_factor,
    preimage_subspace,
    quotient_space,
    subspace_intersect,
    subspace_tensor,
)
from .galois import Bundle, check_qpb
from .hopf import HopfSubalgebra, hopf_morphism_report, is_cosemisimple
from .reports import ClaimLedger, LedgerBuilder, ValidityReport, Violation, Witnessed


# --------------------------------------------------------------------------
# stable ideals and quotient coactions
# --------------------------------------------------------------------------

def largest_stable_ideal_within(c: Coaction, seed: Subspace) -> Subspace:
    """Greatest subspace of ``seed`` that is a two-sided ideal with δ(I) ⊆ I⊗H.

    Computed as the decreasing fixpoint of
    I -> {x in I : A·x ⊆ I, x·A ⊆ I, δ(x) in I⊗H}; dimensions strictly
    decrease, so the loop ends within dim A rounds.
    """
    a = c.algebra
    if seed.ambient_dim != a.dim:
        raise DimensionError("largest_stable_ideal_within: seed must live in A")
    full_h = Subspace.full(c.field, c.hopf.dim)
    cur = seed
    for _ in range(a.dim + 2):
        target = subspace_tensor(cur, full_h)
        nxt = subspace_intersect(cur, preimage_subspace(c.matrix, target))
        for lm in a.left_mult_matrices:
            nxt = subspace_intersect(nxt, preimage_subspace(lm, cur))
        for rm in a.right_mult_matrices:
            nxt = subspace_intersect(nxt, preimage_subspace(rm, cur))
        if nxt.dim == cur.dim:
            return cur
        cur = nxt
    raise AssertionError("stable-ideal iteration failed to terminate")


def quotient_coaction(c: Coaction, i: Subspace) -> tuple[Coaction, AlgebraMorphism]:
    """Descend δ to A/I for a coaction-stable two-sided ideal I.

    Rejects non-ideals, non-stable subspaces (with a witness row), and the
    unit-collapsing ideal I = A.
    """
    target = subspace_tensor(i, Subspace.full(c.field, c.hopf.dim))
    for idx, r in enumerate(i.rows_list()):
        if not target.contains(c.matrix.apply(r)):
            raise NotStableError(
                f"δ does not preserve the ideal (row {idx}: {c.algebra.name_of(r)})",
                witness=idx)
    a0, proj = quotient_algebra(c.algebra, i)
    q = quotient_space(c.algebra.dim, i)
    da, dh = c.algebra.dim, c.hopf.dim
    rows = [map_factor(c.matrix.apply(q.section.row(x)), (da, dh), 0, proj.matrix)
            for x in range(a0.dim)]
    descended = Coaction(a0, c.hopf,
                         DenseMatrix.from_rows(c.field, rows, cols=a0.dim * dh))
    lhs = proj.matrix.mul(descended.matrix)
    rhs = c.matrix.mul(proj.matrix.kron(DenseMatrix.identity(c.field, dh)))
    if lhs != rhs:
        raise AssertionError("quotient coaction square does not commute")
    return descended, proj


def augmentation_seed(a: Algebra) -> Subspace | None:
    """Kernel of the declared augmentation, the default reduction seed."""
    if a.augmentation is None:
        return None
    m = DenseMatrix.from_rows(a.field, [(x,) for x in a.augmentation], cols=1)
    return kernel(m)


# --------------------------------------------------------------------------
# the reduction pipeline
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ReducedBundle:
    """Everything the reduction produced, kept for morphism reduction."""

    source: Bundle
    seed: Subspace
    ideal: Subspace
    projection: AlgebraMorphism
    hopf_inclusion: HopfSubalgebra
    image_coaction: Coaction  # δ corestricted to the Hopf image, still on A
    bundle: Bundle            # the reduced bundle on A/I over the Hopf image


def hopf_image_reduction(b: Bundle, seed: Subspace | None = None
                         ) -> tuple[ReducedBundle, ClaimLedger]:
    """Reduce a bundle to one with inner-faithful structure Hopf algebra.

    ``seed`` bounds the stable ideal; when omitted, the kernel of the
    comodule algebra's declared augmentation is used, and its absence is an
    error (the unbounded "largest stable ideal" would be all of A).
    """
    c = b.coaction
    if seed is None:
        seed = augmentation_seed(c.algebra)
        if seed is None:
            raise PreconditionError(
                "no seed given and the comodule algebra declares no augmentation; "
                "the largest stable ideal is only computed inside a proper seed")
    led = LedgerBuilder("hopf-image-reduction")

    sub, d_im = hopf_image(c)
    led.verified("hopf-image-factorization",
                 f"Hopf image dim {sub.dim} of {c.hopf.dim}")

    ideal = largest_stable_ideal_within(d_im, seed)
    led.verified("stable-ideal-inside-seed",
                 f"seed dim {seed.dim}, ideal dim {ideal.dim}")

    d_bar, proj = quotient_coaction(d_im, ideal)
    led.verified("quotient-coaction-commutes",
                 f"total space dim {c.algebra.dim} -> {d_bar.algebra.dim}")

    da = c.algebra.dim
    da0 = d_bar.algebra.dim
    n_rows = []
    for r in b.calculus.rows_list():
        half = map_factor(r, (da, da), 0, proj.matrix)
        n_rows.append(map_factor(half, (da0, da), 1, proj.matrix))
    n0 = Subspace.from_vectors(c.field, da0 * da0, n_rows)
    reduced = Bundle(d_bar, n0)

    led.verified("calculus-pushforward", f"dim {b.calculus.dim} -> {n0.dim}")

    for claim in check_qpb(reduced).claims:
        led.add("reduced-" + claim.name, claim.status == "verified", claim.detail)

    led.add("reduced-coaction-inner-faithful", is_inner_faithful(d_bar),
            f"over Hopf image of dim {sub.dim}")

    try:
        led.add("hopf-image-cosemisimple", is_cosemisimple(sub.induced), "")
    except UnsupportedFieldError as e:
        led.unsupported("hopf-image-cosemisimple", str(e))

    result = ReducedBundle(b, seed, ideal, proj, sub, d_im, reduced)
    return result, led.build()


# --------------------------------------------------------------------------
# rigidity: the reduced symmetry embeds into any inner-faithful one
# --------------------------------------------------------------------------

class _ForcedLinearMap:
    """Linear map grown from forced (input, output) pairs, kept in echelon form."""

    def __init__(self, field, dom: int, cod: int):
        self.field = field
        self.dom = dom
        self.cod = cod
        self.rows: list[tuple[list, list]] = []  # (reduced input, matching output)

    def _reduce(self, u, y):
        u, y = list(u), list(y)
        for bu, by in self.rows:
            p = next(i for i, x in enumerate(bu) if x)
            c = u[p]
            if c:
                u = [a - c * b for a, b in zip(u, bu)]
                y = [a - c * b for a, b in zip(y, by)]
        return u, y

    def add(self, u, y) -> str:
        """Returns "known", "added", or "conflict"."""
        u, y = self._reduce(u, y)
        if not any(u):
            return "known" if not any(y) else "conflict"
        p = next(i for i, x in enumerate(u) if x)
        inv = self.field.one / u[p]
        u = [x * inv for x in u]
        y = [x * inv for x in y]
        for idx, (bu, by) in enumerate(self.rows):
            f = bu[p]
            if f:
                self.rows[idx] = ([a - f * b for a, b in zip(bu, u)],
                                  [a - f * b for a, b in zip(by, y)])
        self.rows.append((u, y))
        self.rows.sort(key=lambda r: next(i for i, x in enumerate(r[0]) if x))
        return "added"

    @property
    def dim(self) -> int:
        return len(self.rows)

    def matrix(self) -> DenseMatrix:
        if self.dim != self.dom:
            raise HopfkitError("forced map is not fully determined")
        # full-rank reduced rows are the identity, so outputs line up with e_i
        return DenseMatrix.from_rows(self.field, [y for _, y in self.rows], cols=self.cod)


@dataclass(frozen=True)
class RigidityResult:
    embedding: DenseMatrix | None
    ledger: ClaimLedger


def rigidity_embedding(r: ReducedBundle, k_coaction: Coaction) -> RigidityResult:
    """Unique Hopf embedding of the reduced symmetry into another inner-faithful one.

    Solves the linear system imposed by (id ⊗ ι)∘δ̄ = δ_K and extends it by
    the forced multiplicativity/antipode values, then post-checks that the
    result is an injective Hopf algebra morphism.  Conflicts or failed
    post-checks are reported as refutations on the instance.
    """
    d_bar = r.bundle.coaction
    if k_coaction.algebra != d_bar.algebra:
        raise PreconditionError("the competing coaction must live on the reduced total space")
    rep = check_coaction(k_coaction)
    if not rep.ok:
        raise PreconditionError(f"competing coaction invalid: {rep.violations[0].render()}")
    if not is_inner_faithful(k_coaction):
        raise PreconditionError("competing coaction is not inner-faithful")
    b0 = coinvariants(d_bar)
    if coinvariants(k_coaction) != b0:
        raise PreconditionError("competing coaction has different coinvariants than the base")

    h_delta = r.hopf_inclusion.induced
    k_hopf = k_coaction.hopf
    field = d_bar.field
    led = LedgerBuilder("rigidity-embedding")
    fmap = _ForcedLinearMap(field, h_delta.dim, k_hopf.dim)
    fmap.add(h_delta.alg.unit, k_hopf.alg.unit)

    conflict = False
    da0 = d_bar.algebra.dim
    for i in range(da0):
        du = d_bar.legs(i)
        dk = k_coaction.legs(i)
        for u, y in zip(du, dk):
            if fmap.add(u, y) == "conflict":
                conflict = True
    led.add("intertwiner-linear-system-consistent", not conflict, "")

    if not conflict:
        # close under the values forced by multiplicativity and the antipode
        grew = True
        while grew and not conflict:
            grew = False
            snapshot = [(tuple(u), tuple(y)) for u, y in fmap.rows]
            for u1, y1 in snapshot:
                if conflict:
                    break
                su = h_delta.antipode.apply(u1)
                sy = k_hopf.antipode.apply(y1)
                res = fmap.add(su, sy)
                if res == "conflict":
                    conflict = True
                    break
                grew = grew or res == "added"
                for u2, y2 in snapshot:
                    res = fmap.add(h_delta.alg.multiply(u1, u2),
                                   k_hopf.alg.multiply(y1, y2))
                    if res == "conflict":
                        conflict = True
                        break
                    grew = grew or res == "added"
        led.add("intertwiner-forced-extension-consistent", not conflict, "")

    if conflict or fmap.dim < h_delta.dim:
        if not conflict:
            led.refuted("intertwiner-determined",
                        f"values forced only on a subspace of dim {fmap.dim} of {h_delta.dim}")
        return RigidityResult(None, led.build())
    led.verified("intertwiner-determined", "all values forced, hence unique")

    iota = fmap.matrix()
    ok_intertwine = all(
        map_factor(d_bar.matrix.row(i), (da0, h_delta.dim), 1, iota) == k_coaction.matrix.row(i)
        for i in range(da0))
    led.add("intertwiner-intertwines-coactions", ok_intertwine, "")
    morph = hopf_morphism_report(h_delta, k_hopf, iota)
    led.add("intertwiner-hopf-morphism", morph.ok,
            "" if morph.ok else morph.violations[0].render())
    led.add("intertwiner-injective", iota.rank == h_delta.dim,
            f"rank {iota.rank} of {h_delta.dim}")
    ledger = led.build()
    return RigidityResult(iota if ledger.ok else None, ledger)


# --------------------------------------------------------------------------
# bundle morphisms, the reduction functor, and equivalence
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BundleMorphism:
    """Pair (φ on total spaces, ψ on structure Hopf algebras)."""

    phi: AlgebraMorphism
    psi: DenseMatrix


def identity_bundle_morphism(b: Bundle) -> BundleMorphism:
    c = b.coaction
    return BundleMorphism(identity_morphism(c.algebra),
                          DenseMatrix.identity(c.field, c.hopf.dim))


def compose_bundle_morphisms(f: BundleMorphism, g: BundleMorphism) -> BundleMorphism:
    """f followed by g."""
    return BundleMorphism(f.phi.then(g.phi), f.psi.mul(g.psi))


def check_bundle_morphism(m: BundleMorphism, src: Bundle, dst: Bundle) -> ValidityReport:
    """Hopf-morphism laws for ψ, equivariance, and calculus compatibility."""
    bad = []
    cs, cd = src.coaction, dst.coaction
    if m.phi.source != cs.algebra or m.phi.target != cd.algebra:
        bad.append(Violation("phi-endpoints", (), "φ does not match the total spaces"))
    if m.psi.rows != cs.hopf.dim or m.psi.cols != cd.hopf.dim:
        bad.append(Violation("psi-shape", (m.psi.rows, m.psi.cols), ""))
    if bad:
        return ValidityReport("bundle-morphism", tuple(bad))

    wphi = is_algebra_morphism(m.phi)
    if not wphi:
        bad.append(Violation("phi-algebra-morphism", wphi.witness, ""))
    hrep = hopf_morphism_report(cs.hopf, cd.hopf, m.psi)
    for v in hrep.violations:
        bad.append(Violation("psi-" + v.check, v.where, v.detail))

    da, dh = cs.algebra.dim, cs.hopf.dim
    for i in range(da):
        lhs = cd.matrix.apply(m.phi.matrix.row(i))
        rhs = map_factor(map_factor(cs.matrix.row(i), (da, dh), 0, m.phi.matrix),
                         (cd.algebra.dim, dh), 1, m.psi)
        if lhs != rhs:
            bad.append(Violation("equivariance", (i,), "δ'∘φ != (φ⊗ψ)∘δ"))

    for idx, r in enumerate(src.calculus.rows_list()):
        moved = map_factor(map_factor(r, (da, da), 0, m.phi.matrix),
                           (cd.algebra.dim, da), 1, m.phi.matrix)
        if not dst.calculus.contains(moved):
            bad.append(Violation("calculus-compatibility", (idx,), "(φ⊗φ)(N) not inside N'"))
    return ValidityReport("bundle-morphism", tuple(bad))


def reduce_morphism(m: BundleMorphism, src_reduced: ReducedBundle,
                    dst_reduced: ReducedBundle) -> BundleMorphism:
    """Image of a bundle morphism under the reduction functor.

    ψ restricts to the Hopf images; φ descends to the quotient total spaces.
    Both facts are verified, not assumed, and seed incompatibility (the ideal
    not mapping into the target ideal) is reported with a witness.
    """
    rep = check_bundle_morphism(m, src_reduced.source, dst_reduced.source)
    if not rep.ok:
        raise PreconditionError(
            f"not a bundle morphism between the unreduced bundles: "
            f"{rep.violations[0].render()}")
    for idx, r in enumerate(src_reduced.seed.rows_list()):
        if not dst_reduced.seed.contains(m.phi.apply(r)):
            raise PreconditionError(
                f"incompatible seeds: φ(seed) leaves the target seed at row {idx}",
                witness=idx)
    for idx, r in enumerate(src_reduced.ideal.rows_list()):
        if not dst_reduced.ideal.contains(m.phi.apply(r)):
            raise PreconditionError(
                f"φ(I) is not inside I' (witness row {idx}); "
                f"the reductions used incompatible seeds", witness=idx)

    src_sub = src_reduced.hopf_inclusion
    dst_sub = dst_reduced.hopf_inclusion
    psi_rows = []
    for u in src_sub.carrier.rows_list():
        w = m.psi.apply(u)
        coords = dst_sub.carrier.coords(w)
        if coords is None:
            raise HopfkitError("ψ does not map the Hopf image into the target Hopf image")
        psi_rows.append(coords)
    psi_red = DenseMatrix.from_rows(m.psi.field, psi_rows, cols=dst_sub.dim)

    src_a = src_reduced.source.coaction.algebra
    q = quotient_space(src_a.dim, src_reduced.ideal)
    a0 = src_reduced.bundle.coaction.algebra
    a0p = dst_reduced.bundle.coaction.algebra
    phi_rows = [dst_reduced.projection.apply(m.phi.apply(q.section.row(x)))
                for x in range(a0.dim)]
    phi_red = AlgebraMorphism(a0, a0p,
                              DenseMatrix.from_rows(m.psi.field, phi_rows, cols=a0p.dim))

    result = BundleMorphism(phi_red, psi_red)
    rep = check_bundle_morphism(result, src_reduced.bundle, dst_reduced.bundle)
    if not rep.ok:
        raise AssertionError(
            f"reduced morphism failed verification: {rep.violations[0].render()}")
    return result


def bundles_equivalent(r1: ReducedBundle, r2: ReducedBundle,
                       forward: BundleMorphism, backward: BundleMorphism) -> Witnessed:
    """Equivalence up to effective symmetry, decided by supplied witnesses.

    True iff the witnesses are bundle morphisms between the two reductions
    and compose to the identity on both sides.  No isomorphism search.
    """
    rep = check_bundle_morphism(forward, r1.bundle, r2.bundle)
    if not rep.ok:
        return Witnessed(False, ("forward", rep.violations[0].render()))
    rep = check_bundle_morphism(backward, r2.bundle, r1.bundle)
    if not rep.ok:
        return Witnessed(False, ("backward", rep.violations[0].render()))
    c1, c2 = r1.bundle.coaction, r2.bundle.coaction
    round1 = compose_bundle_morphisms(forward, backward)
    if round1.phi.matrix != DenseMatrix.identity(c1.field, c1.algebra.dim) or \
       round1.psi != DenseMatrix.identity(c1.field, c1.hopf.dim):
        return Witnessed(False, ("composite", "backward∘forward is not the identity"))
    round2 = compose_bundle_morphisms(backward, forward)
    if round2.phi.matrix != DenseMatrix.identity(c2.field, c2.algebra.dim) or \
       round2.psi != DenseMatrix.identity(c2.field, c2.hopf.dim):
        return Witnessed(False, ("composite", "forward∘backward is not the identity"))
    return Witnessed(True)
