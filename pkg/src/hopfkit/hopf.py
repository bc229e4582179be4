"""Hopf algebra structure: axioms, adjoint coaction, closures, duality, cosemisimplicity."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .algebra import (
    Algebra,
    AlgebraMorphism,
    check_algebra,
    tensor_algebra,
    tensor_product_multiply,
)
from .errors import DimensionError, HopfkitError, UnsupportedFieldError
from .exactcore import (
    DenseMatrix,
    Subspace,
    contract_factor,
    functional,
    kernel,
    map_factor,
    subspace_sum,
    tensor_vec,
    unit_vec,
)
from .fields import PrimeField, RationalField
from .reports import ValidityReport, Violation


@dataclass(frozen=True)
class HopfAlgebra:
    """Algebra plus comultiplication, counit, and bijective antipode.

    ``comult`` is the map H -> H⊗H as a matrix (row i = flattened Δ(e_i)),
    ``counit`` a coefficient tuple, ``antipode`` the matrix of S.  Antipode
    invertibility is the standing assumption and is enforced eagerly; the
    remaining axioms are verified by :func:`check_hopf` on demand.
    """

    alg: Algebra
    comult: DenseMatrix
    counit: tuple
    antipode: DenseMatrix

    def __post_init__(self):
        d = self.alg.dim
        if self.comult.rows != d or self.comult.cols != d * d:
            raise DimensionError("comultiplication matrix must be dim x dim^2")
        if len(self.counit) != d:
            raise DimensionError("counit length mismatch")
        if self.antipode.rows != d or self.antipode.cols != d:
            raise DimensionError("antipode must be square of size dim")
        if self.antipode.rank != d:
            raise HopfkitError("antipode matrix is not invertible")

    @property
    def field(self):
        return self.alg.field

    @property
    def dim(self) -> int:
        return self.alg.dim

    @cached_property
    def delta2(self) -> DenseMatrix:
        """Matrix of (Δ⊗id)∘Δ : H -> H⊗H⊗H (equal to (id⊗Δ)∘Δ when valid)."""
        d = self.dim
        rows = [map_factor(self.comult.row(i), (d, d), 0, self.comult) for i in range(d)]
        return DenseMatrix.from_rows(self.field, rows, cols=d ** 3)

    @cached_property
    def adjoint_matrix(self) -> DenseMatrix:
        """Right adjoint coaction h -> h_(2) ⊗ S(h_(1))·h_(3) as a matrix."""
        d = self.dim
        rows = []
        for i in range(d):
            w = self.delta2.row(i)
            out = [self.field.zero] * (d * d)
            for idx, c in enumerate(w):
                if not c:
                    continue
                l, rest = divmod(idx, d * d)
                m, r = divmod(rest, d)
                prod = self.alg.multiply(self.antipode.row(l), unit_vec(self.field, d, r))
                for k, p in enumerate(prod):
                    if p:
                        out[m * d + k] = out[m * d + k] + c * p
            rows.append(tuple(out))
        return DenseMatrix.from_rows(self.field, rows, cols=d * d)

    def eps(self, v: Sequence):
        return functional(self.counit, v, self.field)


def check_hopf(h: HopfAlgebra) -> ValidityReport:
    """Full axiom audit: algebra, coalgebra, bialgebra, antipode, S invertible."""
    d = h.dim
    field = h.field
    report = check_algebra(h.alg)
    bad = list(report.violations)
    basis = [h.alg.basis_vector(i) for i in range(d)]

    for i in range(d):
        di = h.comult.row(i)
        lhs = map_factor(di, (d, d), 0, h.comult)
        rhs = map_factor(di, (d, d), 1, h.comult)
        if lhs != rhs:
            bad.append(Violation("coassociativity", (i,), ""))
        left_count = contract_factor(di, (d, d), 0, h.counit, field)
        right_count = contract_factor(di, (d, d), 1, h.counit, field)
        if left_count != basis[i]:
            bad.append(Violation("counit-law", (i,), "(eps⊗id)Δ != id"))
        if right_count != basis[i]:
            bad.append(Violation("counit-law", (i,), "(id⊗eps)Δ != id"))

    unit_tensor = tensor_vec(h.alg.unit, h.alg.unit)
    if h.comult.apply(h.alg.unit) != unit_tensor:
        bad.append(Violation("comult-unital", (), "Δ(1) != 1⊗1"))
    if h.eps(h.alg.unit) != field.one:
        bad.append(Violation("counit-unital", (), "eps(1) != 1"))
    for i in range(d):
        for j in range(d):
            prod = h.alg.mult[i][j]
            lhs = h.comult.apply(prod)
            rhs = tensor_product_multiply(h.alg, h.alg, h.comult.row(i), h.comult.row(j))
            if lhs != rhs:
                bad.append(Violation("comult-multiplicative", (i, j), ""))
            if h.eps(prod) != h.counit[i] * h.counit[j]:
                bad.append(Violation("counit-multiplicative", (i, j), ""))

    for i in range(d):
        conv_left = [field.zero] * d
        conv_right = [field.zero] * d
        for idx, c in enumerate(h.comult.row(i)):
            if not c:
                continue
            a, b = divmod(idx, d)
            left = h.alg.multiply(h.antipode.row(a), basis[b])
            right = h.alg.multiply(basis[a], h.antipode.row(b))
            for k in range(d):
                if left[k]:
                    conv_left[k] = conv_left[k] + c * left[k]
                if right[k]:
                    conv_right[k] = conv_right[k] + c * right[k]
        expected = tuple(h.counit[i] * u for u in h.alg.unit)
        if tuple(conv_left) != expected:
            bad.append(Violation("antipode", (i,), "m(S⊗id)Δ != unit∘eps"))
        if tuple(conv_right) != expected:
            bad.append(Violation("antipode", (i,), "m(id⊗S)Δ != unit∘eps"))

    if h.antipode.rank != d:
        bad.append(Violation("antipode-invertible", (), "S is singular"))
    return ValidityReport(f"hopf(dim={d})", tuple(bad))


def counit_kernel(h: HopfAlgebra) -> Subspace:
    """Kernel of the counit; codimension one since eps(1)=1."""
    m = DenseMatrix.from_rows(h.field, [(c,) for c in h.counit], cols=1)
    return kernel(m)


def adjoint_coaction(h: HopfAlgebra, v: Sequence) -> tuple:
    """Value of the right adjoint coaction on ``v``, flattened in H⊗H."""
    return h.adjoint_matrix.apply(v)


def coalgebra_closure(h: HopfAlgebra, v: Subspace) -> Subspace:
    """Smallest subcoalgebra containing ``v``.

    One pass collects all middle legs of Δ²(x): those span the subcoalgebra
    generated by x.  The pass is still iterated to a fixpoint rather than
    trusted.
    """
    if v.ambient_dim != h.dim:
        raise DimensionError("coalgebra_closure: ambient mismatch")
    d = h.dim
    span = v
    while True:
        collected = list(span.rows_list())
        for r in span.rows_list():
            w = h.delta2.apply(r)
            for j in range(d):
                for l in range(d):
                    mid = tuple(w[(j * d + k) * d + l] for k in range(d))
                    if any(mid):
                        collected.append(mid)
        new = Subspace.from_vectors(h.field, d, collected)
        if new.dim == span.dim:
            return new
        span = new


@dataclass(frozen=True)
class HopfSubalgebra:
    """Carrier subspace of a Hopf algebra with its induced structure.

    The inclusion intertwines every structure map by construction: the
    induced constants are literally coordinates of the parent's values on
    the carrier basis.
    """

    parent: HopfAlgebra
    carrier: Subspace
    induced: HopfAlgebra
    inclusion: AlgebraMorphism

    @property
    def dim(self) -> int:
        return self.carrier.dim


def _carrier_coords(carrier: Subspace, v, what: str) -> tuple:
    c = carrier.coords(v)
    if c is None:
        raise HopfkitError(f"carrier is not closed under {what}")
    return c


def induced_hopf_structure(parent: HopfAlgebra, carrier: Subspace) -> HopfSubalgebra:
    """Restrict all structure maps of ``parent`` to a closed carrier subspace."""
    d = parent.dim
    m = carrier.dim
    field = parent.field
    rows = carrier.rows_list()
    pivots = carrier.pivots

    mult = []
    for a in range(m):
        row = []
        for b in range(m):
            row.append(_carrier_coords(carrier, parent.alg.multiply(rows[a], rows[b]),
                                       "multiplication"))
        mult.append(tuple(row))
    unit = _carrier_coords(carrier, parent.alg.unit, "the unit")

    comult_rows = []
    for a in range(m):
        dd = parent.comult.apply(rows[a])
        coeffs = [dd[pa * d + pb] for pa in pivots for pb in pivots]
        # verify Δ really lands in carrier⊗carrier
        recon = [field.zero] * (d * d)
        for x in range(m):
            for y in range(m):
                c = coeffs[x * m + y]
                if not c:
                    continue
                for idx, t in enumerate(tensor_vec(rows[x], rows[y])):
                    if t:
                        recon[idx] = recon[idx] + c * t
        if tuple(recon) != dd:
            raise HopfkitError("carrier is not closed under comultiplication")
        comult_rows.append(tuple(coeffs))

    counit = tuple(functional(parent.counit, r, field) for r in rows)
    antipode_rows = [_carrier_coords(carrier, parent.antipode.apply(r), "the antipode")
                     for r in rows]

    if carrier.is_full():
        names = parent.alg.basis_names
    else:
        names = tuple(f"s{a}" for a in range(m))
    alg = Algebra(field, m, names, tuple(mult), unit, counit)
    induced = HopfAlgebra(
        alg,
        DenseMatrix.from_rows(field, comult_rows, cols=m * m),
        counit,
        DenseMatrix.from_rows(field, antipode_rows, cols=m),
    )
    inclusion = AlgebraMorphism(alg, parent.alg, carrier.basis)
    return HopfSubalgebra(parent, carrier, induced, inclusion)


def hopf_subalgebra_closure(h: HopfAlgebra, v: Subspace) -> HopfSubalgebra:
    """Smallest Hopf subalgebra containing ``v``.

    Alternates subcoalgebra closure with closing under products and the
    antipode; the dimension strictly increases until the fixpoint, so at
    most dim H rounds run.  The re-application of the coalgebra closure on
    later rounds is asserted to be a no-op by the fixpoint test itself.
    """
    if v.ambient_dim != h.dim:
        raise DimensionError("hopf_subalgebra_closure: ambient mismatch")
    field = h.field
    span = subspace_sum(v, Subspace.from_vectors(field, h.dim, [h.alg.unit]))
    span = coalgebra_closure(h, span)
    for _ in range(h.dim + 1):
        rows = span.rows_list()
        extra = [h.antipode.apply(r) for r in rows]
        for r1 in rows:
            for r2 in rows:
                extra.append(h.alg.multiply(r1, r2))
        new = Subspace.from_vectors(field, h.dim, rows + extra)
        new = coalgebra_closure(h, new)
        if new.dim == span.dim:
            return induced_hopf_structure(h, new)
        span = new
    raise AssertionError("closure failed to stabilize within dim H rounds")


def full_hopf_subalgebra(h: HopfAlgebra) -> HopfSubalgebra:
    return induced_hopf_structure(h, Subspace.full(h.field, h.dim))


def dual_hopf(h: HopfAlgebra) -> HopfAlgebra:
    """Dual Hopf algebra: transpose multiplication against comultiplication."""
    d = h.dim
    field = h.field
    names = tuple(f"{n}*" for n in h.alg.basis_names)
    mult = tuple(
        tuple(tuple(h.comult.at(k, a * d + b) for k in range(d)) for b in range(d))
        for a in range(d)
    )
    unit = h.counit
    comult_rows = [
        tuple(h.alg.mult[i][j][k] for i in range(d) for j in range(d))
        for k in range(d)
    ]
    counit = h.alg.unit
    alg = Algebra(field, d, names, mult, unit, counit)
    return HopfAlgebra(
        alg,
        DenseMatrix.from_rows(field, comult_rows, cols=d * d),
        counit,
        h.antipode.transpose(),
    )


def is_cosemisimple(h: HopfAlgebra) -> bool:
    """Characteristic-zero criterion: the dual algebra's trace form is nondegenerate.

    Over a prime field the criterion is unsound, so the question is refused.
    """
    if isinstance(h.field, PrimeField):
        raise UnsupportedFieldError(
            "cosemisimplicity is only decided over Q (characteristic 0)")
    if not isinstance(h.field, RationalField):
        raise UnsupportedFieldError(f"unsupported ground field {h.field!r}")
    dual = dual_hopf(h).alg
    d = dual.dim
    lmats = dual.left_mult_matrices
    rows = []
    for a in range(d):
        la = lmats[a]
        row = []
        for b in range(d):
            lb = lmats[b]
            tr = h.field.zero
            for r in range(d):
                for s in range(d):
                    x = la.at(r, s)
                    if x:
                        y = lb.at(s, r)
                        if y:
                            tr = tr + x * y
            row.append(tr)
        rows.append(row)
    gram = DenseMatrix.from_rows(h.field, rows, cols=d)
    return gram.rank == d


def tensor_hopf(h1: HopfAlgebra, h2: HopfAlgebra) -> HopfAlgebra:
    """Componentwise Hopf structure on H1⊗H2 (middle flip in Δ)."""
    if h1.field != h2.field:
        raise HopfkitError("tensor product over different fields")
    d1, d2 = h1.dim, h2.dim
    field = h1.field
    alg = tensor_algebra(h1.alg, h2.alg)
    n = d1 * d2
    comult_rows = []
    for i in range(d1):
        di = h1.comult.row(i)
        for j in range(d2):
            dj = h2.comult.row(j)
            out = [field.zero] * (n * n)
            for idx1, c1 in enumerate(di):
                if not c1:
                    continue
                a, b = divmod(idx1, d1)
                for idx2, c2 in enumerate(dj):
                    if not c2:
                        continue
                    cc, dd = divmod(idx2, d2)
                    u = a * d2 + cc
                    w = b * d2 + dd
                    out[u * n + w] = out[u * n + w] + c1 * c2
            comult_rows.append(tuple(out))
    counit = tensor_vec(h1.counit, h2.counit)
    antipode = h1.antipode.kron(h2.antipode)
    return HopfAlgebra(alg, DenseMatrix.from_rows(field, comult_rows, cols=n * n),
                       counit, antipode)


def hopf_morphism_report(src: HopfAlgebra, dst: HopfAlgebra, m: DenseMatrix) -> ValidityReport:
    """Check a matrix respects mult, unit, Δ, eps, and S."""
    bad = []
    if m.rows != src.dim or m.cols != dst.dim:
        return ValidityReport("hopf-morphism",
                              (Violation("shape", (m.rows, m.cols), "matrix shape mismatch"),))
    if m.apply(src.alg.unit) != dst.alg.unit:
        bad.append(Violation("unit", (), "psi(1) != 1"))
    imgs = [m.row(i) for i in range(src.dim)]
    for i in range(src.dim):
        for j in range(src.dim):
            if m.apply(src.alg.mult[i][j]) != dst.alg.multiply(imgs[i], imgs[j]):
                bad.append(Violation("multiplicative", (i, j), ""))
    for i in range(src.dim):
        lhs = dst.comult.apply(imgs[i])
        rhs = map_factor(
            map_factor(src.comult.row(i), (src.dim, src.dim), 0, m),
            (dst.dim, src.dim), 1, m)
        if lhs != rhs:
            bad.append(Violation("comultiplicative", (i,), ""))
        if functional(dst.counit, imgs[i], dst.field) != src.counit[i]:
            bad.append(Violation("counit", (i,), ""))
        if dst.antipode.apply(imgs[i]) != m.apply(src.antipode.row(i)):
            bad.append(Violation("antipode", (i,), ""))
    return ValidityReport("hopf-morphism", tuple(bad))
