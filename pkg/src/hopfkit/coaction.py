"""Comodule algebras: coefficient spaces, Hopf images, inner-faithfulness.

A coaction δ: A -> A⊗H is stored as a matrix whose row ``i`` is δ(e_i)
flattened over (dim A, dim H).  Its Hopf image is computed constructively:
the Hopf-subalgebra closure of the span of all H-legs of δ.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    Algebra,
    AlgebraMorphism,
    is_algebra_morphism,
    tensor_algebra,
    tensor_product_multiply,
)
from .errors import DimensionError, HopfkitError
from .exactcore import (
    DenseMatrix,
    Subspace,
    contract_factor,
    kernel,
    map_factor,
    tensor_vec,
)
from .hopf import HopfAlgebra, HopfSubalgebra, hopf_subalgebra_closure, tensor_hopf
from .reports import ValidityReport, Violation


@dataclass(frozen=True)
class Coaction:
    """Right coaction of ``hopf`` on ``algebra`` (a comodule-algebra candidate)."""

    algebra: Algebra
    hopf: HopfAlgebra
    matrix: DenseMatrix  # dim A  x  dim A * dim H

    def __post_init__(self):
        da, dh = self.algebra.dim, self.hopf.dim
        if self.matrix.rows != da or self.matrix.cols != da * dh:
            raise DimensionError("coaction matrix must be dimA x dimA*dimH")

    @property
    def field(self):
        return self.algebra.field

    def apply(self, v: Sequence) -> tuple:
        return self.matrix.apply(v)

    def legs(self, i: int) -> list:
        """H-components of δ(e_i), one vector per A-coordinate."""
        da, dh = self.algebra.dim, self.hopf.dim
        row = self.matrix.row(i)
        return [row[j * dh:(j + 1) * dh] for j in range(da)]


@dataclass(frozen=True)
class Factorization:
    """A coaction rewritten through a Hopf subalgebra it lands in."""

    sub: HopfSubalgebra
    restricted: Coaction


def trivial_coaction(a: Algebra, h: HopfAlgebra) -> Coaction:
    """a -> a ⊗ 1."""
    rows = [tensor_vec(a.basis_vector(i), h.alg.unit) for i in range(a.dim)]
    return Coaction(a, h, DenseMatrix.from_rows(a.field, rows, cols=a.dim * h.dim))


def coproduct_coaction(h: HopfAlgebra) -> Coaction:
    """The comultiplication of H viewed as a right coaction of H on itself."""
    return Coaction(h.alg, h, h.comult)


def check_coaction(c: Coaction) -> ValidityReport:
    """Coassociativity, counitality, and the algebra-morphism property of δ."""
    da, dh = c.algebra.dim, c.hopf.dim
    field = c.field
    bad = []
    for i in range(da):
        row = c.matrix.row(i)
        lhs = map_factor(row, (da, dh), 0, c.matrix)
        rhs = map_factor(row, (da, dh), 1, c.hopf.comult)
        if lhs != rhs:
            bad.append(Violation("coassociativity", (i,), ""))
        if contract_factor(row, (da, dh), 1, c.hopf.counit, field) != c.algebra.basis_vector(i):
            bad.append(Violation("counitality", (i,), "(id⊗eps)δ != id"))
    if c.apply(c.algebra.unit) != tensor_vec(c.algebra.unit, c.hopf.alg.unit):
        bad.append(Violation("unital", (), "δ(1) != 1⊗1"))
    for i in range(da):
        for j in range(da):
            lhs = c.apply(c.algebra.mult[i][j])
            rhs = tensor_product_multiply(c.algebra, c.hopf.alg,
                                          c.matrix.row(i), c.matrix.row(j))
            if lhs != rhs:
                bad.append(Violation("multiplicative", (i, j), ""))
    return ValidityReport(f"coaction(dimA={da}, dimH={dh})", tuple(bad))


def coefficient_space(c: Coaction) -> Subspace:
    """Span of all H-legs of δ; always a subcoalgebra of H."""
    vectors = []
    for i in range(c.algebra.dim):
        for leg in c.legs(i):
            if any(leg):
                vectors.append(leg)
    return Subspace.from_vectors(c.field, c.hopf.dim, vectors)


def corestrict(c: Coaction, sub: HopfSubalgebra) -> Coaction:
    """Rewrite δ through a Hopf subalgebra containing all its legs."""
    da = c.algebra.dim
    m = sub.dim
    rows = []
    for i in range(da):
        out = []
        for leg in c.legs(i):
            coords = sub.carrier.coords(leg)
            if coords is None:
                raise HopfkitError("coaction does not land in the given Hopf subalgebra")
            out.extend(coords)
        rows.append(tuple(out))
    return Coaction(c.algebra, sub.induced, DenseMatrix.from_rows(c.field, rows, cols=da * m))


def extend_through_inclusion(c: Coaction, sub: HopfSubalgebra) -> Coaction:
    """Push a coaction over ``sub.induced`` back into the ambient Hopf algebra."""
    da = c.algebra.dim
    rows = [map_factor(c.matrix.row(i), (da, sub.dim), 1, sub.inclusion.matrix)
            for i in range(da)]
    return Coaction(c.algebra, sub.parent,
                    DenseMatrix.from_rows(c.field, rows, cols=da * sub.parent.dim))


def hopf_image(c: Coaction) -> tuple[HopfSubalgebra, Coaction]:
    """Smallest Hopf subalgebra through which δ factors, with the corestriction.

    Constructed as the Hopf-subalgebra closure of the coefficient space; the
    corestricted coaction satisfies (id ⊗ inclusion)∘δ_im = δ exactly.
    """
    sub = hopf_subalgebra_closure(c.hopf, coefficient_space(c))
    restricted = corestrict(c, sub)
    if extend_through_inclusion(restricted, sub).matrix != c.matrix:
        raise AssertionError("Hopf image factorization identity failed")
    return sub, restricted


def is_inner_faithful(c: Coaction) -> bool:
    """True iff the Hopf image is the whole structure Hopf algebra."""
    sub, _ = hopf_image(c)
    return sub.dim == c.hopf.dim


def factors_through(c: Coaction, l: HopfSubalgebra):
    """Whether δ lands in A⊗L; returns the factorization when it does."""
    if l.parent is not c.hopf and l.parent != c.hopf:
        raise HopfkitError("factors_through: subalgebra of a different Hopf algebra")
    if not l.carrier.contains_subspace(coefficient_space(c)):
        return False, None
    return True, Factorization(l, corestrict(c, l))


def coinvariants(c: Coaction) -> Subspace:
    """Kernel of a -> δ(a) - a⊗1; a subalgebra of A."""
    da, dh = c.algebra.dim, c.hopf.dim
    rows = []
    for i in range(da):
        rows.append(tuple(x - y for x, y in zip(
            c.matrix.row(i),
            tensor_vec(c.algebra.basis_vector(i), c.hopf.alg.unit))))
    diff = DenseMatrix.from_rows(c.field, rows, cols=da * dh)
    return kernel(diff)


def tensor_coaction(c1: Coaction, c2: Coaction) -> Coaction:
    """Componentwise coaction of H1⊗H2 on A⊗B (flip in the middle)."""
    if c1.field != c2.field:
        raise HopfkitError("tensor_coaction: different ground fields")
    a3 = tensor_algebra(c1.algebra, c2.algebra)
    h3 = tensor_hopf(c1.hopf, c2.hopf)
    da1, dh1 = c1.algebra.dim, c1.hopf.dim
    da2, dh2 = c2.algebra.dim, c2.hopf.dim
    da3, dh3 = da1 * da2, dh1 * dh2
    field = c1.field
    rows = []
    for i in range(da1):
        r1 = c1.matrix.row(i)
        for j in range(da2):
            r2 = c2.matrix.row(j)
            out = [field.zero] * (da3 * dh3)
            for idx1, x in enumerate(r1):
                if not x:
                    continue
                k, r = divmod(idx1, dh1)
                for idx2, y in enumerate(r2):
                    if not y:
                        continue
                    l, s = divmod(idx2, dh2)
                    pos = (k * da2 + l) * dh3 + (r * dh2 + s)
                    out[pos] = out[pos] + x * y
            rows.append(tuple(out))
    return Coaction(a3, h3, DenseMatrix.from_rows(field, rows, cols=da3 * dh3))


def conjugate_coaction(c: Coaction, theta: AlgebraMorphism) -> Coaction:
    """Transport δ along an algebra isomorphism theta of the comodule."""
    if theta.source != c.algebra:
        raise HopfkitError("conjugate_coaction: theta does not start at the comodule algebra")
    w = is_algebra_morphism(theta)
    if not w:
        raise HopfkitError(f"theta is not an algebra morphism (witness {w.witness})")
    inv = theta.matrix.inverse()  # raises if theta is not bijective
    da, dh = c.algebra.dim, c.hopf.dim
    rows = []
    for i in range(theta.target.dim):
        pulled = c.matrix.apply(inv.row(i))
        rows.append(map_factor(pulled, (da, dh), 0, theta.matrix))
    return Coaction(theta.target, c.hopf,
                    DenseMatrix.from_rows(c.field, rows, cols=theta.target.dim * dh))
