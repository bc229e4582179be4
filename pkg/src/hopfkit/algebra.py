"""Finite-dimensional unital associative algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import DimensionError, HopfkitError, NotAnIdealError
from .exactcore import (
    DenseMatrix,
    Subspace,
    functional,
    quotient_space,
    tensor_vec,
    unit_vec,
)
from .fields import Field
from .reports import ValidityReport, Violation, Witnessed


@dataclass(frozen=True)
class Algebra:
    """Unital associative algebra; ``mult[i][j]`` is the vector of e_i·e_j.

    ``augmentation``, when declared, is an algebra map to the ground field
    (a character); its kernel is the default seed for bundle reduction.
    """

    field: Field
    dim: int
    basis_names: tuple
    mult: tuple  # mult[i][j] -> coefficient tuple of length dim
    unit: tuple
    augmentation: tuple | None = None

    @classmethod
    def build(cls, field: Field, basis_names: Sequence[str], mult, unit,
              augmentation=None) -> "Algebra":
        dim = len(basis_names)
        table = tuple(
            tuple(tuple(field.scalar(x) for x in mult[i][j]) for j in range(dim))
            for i in range(dim)
        )
        unit_t = tuple(field.scalar(x) for x in unit)
        aug_t = None if augmentation is None else tuple(field.scalar(x) for x in augmentation)
        return cls(field, dim, tuple(basis_names), table, unit_t, aug_t)

    def basis_vector(self, i: int) -> tuple:
        return unit_vec(self.field, self.dim, i)

    def multiply(self, x: Sequence, y: Sequence) -> tuple:
        """Bilinear extension of the structure constants."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionError("multiply: coefficient list length mismatch")
        out = [self.field.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            mi = self.mult[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, m in enumerate(mi[j]):
                    if m:
                        out[k] = out[k] + c * m
        return tuple(out)

    @cached_property
    def mult_matrix(self) -> DenseMatrix:
        """Multiplication as a linear map A⊗A -> A (row (i,j) = e_i·e_j)."""
        rows = [self.mult[i][j] for i in range(self.dim) for j in range(self.dim)]
        return DenseMatrix.from_rows(self.field, rows, cols=self.dim)

    @cached_property
    def left_mult_matrices(self) -> tuple:
        """Matrix of y -> e_i·y for each basis index i."""
        return tuple(
            DenseMatrix.from_rows(self.field, [self.mult[i][j] for j in range(self.dim)],
                                  cols=self.dim)
            for i in range(self.dim)
        )

    @cached_property
    def right_mult_matrices(self) -> tuple:
        """Matrix of y -> y·e_i for each basis index i."""
        return tuple(
            DenseMatrix.from_rows(self.field, [self.mult[j][i] for j in range(self.dim)],
                                  cols=self.dim)
            for i in range(self.dim)
        )

    def left_mult_matrix_of(self, x: Sequence) -> DenseMatrix:
        rows = [self.multiply(x, self.basis_vector(j)) for j in range(self.dim)]
        return DenseMatrix.from_rows(self.field, rows, cols=self.dim)

    def name_of(self, v: Sequence) -> str:
        """Readable linear combination, for witnesses and reports."""
        terms = []
        for i, c in enumerate(v):
            if c:
                terms.append(f"{c}*{self.basis_names[i]}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class AlgebraMorphism:
    """Linear map between algebras; row i of ``matrix`` is the image of e_i."""

    source: Algebra
    target: Algebra
    matrix: DenseMatrix

    def __post_init__(self):
        if self.matrix.rows != self.source.dim or self.matrix.cols != self.target.dim:
            raise DimensionError("morphism matrix shape does not match source/target dims")

    def apply(self, v: Sequence) -> tuple:
        return self.matrix.apply(v)

    def then(self, other: "AlgebraMorphism") -> "AlgebraMorphism":
        if self.target.dim != other.source.dim:
            raise DimensionError("composition: inner dimensions differ")
        return AlgebraMorphism(self.source, other.target, self.matrix.mul(other.matrix))

    def inverse(self) -> "AlgebraMorphism":
        return AlgebraMorphism(self.target, self.source, self.matrix.inverse())


def identity_morphism(a: Algebra) -> AlgebraMorphism:
    return AlgebraMorphism(a, a, DenseMatrix.identity(a.field, a.dim))


def check_algebra(a: Algebra) -> ValidityReport:
    """Report every violated associativity / unit-law instance."""
    bad = []
    basis = [a.basis_vector(i) for i in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            ij = a.mult[i][j]
            for k in range(a.dim):
                lhs = a.multiply(ij, basis[k])
                rhs = a.multiply(basis[i], a.mult[j][k])
                if lhs != rhs:
                    bad.append(Violation("associativity", (i, j, k),
                                         f"(e{i}e{j})e{k} != e{i}(e{j}e{k})"))
    for i in range(a.dim):
        if a.multiply(a.unit, basis[i]) != basis[i]:
            bad.append(Violation("unit-law", (i,), "1·e != e"))
        if a.multiply(basis[i], a.unit) != basis[i]:
            bad.append(Violation("unit-law", (i,), "e·1 != e"))
    if a.augmentation is not None:
        aug = a.augmentation
        if functional(aug, a.unit, a.field) != a.field.one:
            bad.append(Violation("augmentation-unit", (), "aug(1) != 1"))
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = functional(aug, a.mult[i][j], a.field)
                if lhs != aug[i] * aug[j]:
                    bad.append(Violation("augmentation-multiplicative", (i, j), ""))
    return ValidityReport(f"algebra(dim={a.dim})", tuple(bad))


def is_two_sided_ideal(a: Algebra, j: Subspace) -> Witnessed:
    """True iff A·J and J·A stay inside J; witness is (side, basis i, J row r)."""
    if j.ambient_dim != a.dim:
        raise DimensionError("ideal check: ambient mismatch")
    rows = j.rows_list()
    for i in range(a.dim):
        e = a.basis_vector(i)
        for r_idx, r in enumerate(rows):
            if not j.contains(a.multiply(e, r)):
                return Witnessed(False, ("left", i, r_idx))
            if not j.contains(a.multiply(r, e)):
                return Witnessed(False, ("right", i, r_idx))
    return Witnessed(True)


def quotient_algebra(a: Algebra, i: Subspace) -> tuple[Algebra, AlgebraMorphism]:
    """Quotient by a two-sided ideal, with the canonical projection.

    The quotient basis is the set of non-pivot coordinates of ``i``, so the
    construction is deterministic.  Ideals containing the unit are rejected
    (the quotient would collapse to the zero ring).
    """
    w = is_two_sided_ideal(a, i)
    if not w:
        raise NotAnIdealError(f"subspace is not a two-sided ideal (witness {w.witness})",
                              witness=w.witness)
    if i.contains(a.unit):
        raise HopfkitError("quotient by an ideal containing the unit collapses the algebra")
    q = quotient_space(a.dim, i)
    project = q.projection.apply
    sections = [q.section.row(x) for x in range(q.dim)]
    mult0 = tuple(
        tuple(project(a.multiply(sections[x], sections[y])) for y in range(q.dim))
        for x in range(q.dim)
    )
    names = tuple(f"[{a.basis_names[c]}]" for c in q.coordinates)
    unit0 = project(a.unit)
    aug0 = None
    if a.augmentation is not None:
        # the augmentation only descends when it kills the ideal
        if all(not functional(a.augmentation, r, a.field) for r in i.rows_list()):
            aug0 = tuple(functional(a.augmentation, s, a.field) for s in sections)
    a0 = Algebra(a.field, q.dim, names, mult0, unit0, aug0)
    return a0, AlgebraMorphism(a, a0, q.projection)


def is_algebra_morphism(f: AlgebraMorphism) -> Witnessed:
    """Checks unit preservation and multiplicativity on all basis pairs."""
    if f.apply(f.source.unit) != f.target.unit:
        return Witnessed(False, ("unit",))
    imgs = [f.matrix.row(i) for i in range(f.source.dim)]
    for i in range(f.source.dim):
        for j in range(f.source.dim):
            lhs = f.apply(f.source.mult[i][j])
            rhs = f.target.multiply(imgs[i], imgs[j])
            if lhs != rhs:
                return Witnessed(False, (i, j))
    return Witnessed(True)


def tensor_algebra(a: Algebra, b: Algebra) -> Algebra:
    """Tensor product algebra on the flattened basis (a-factor slowest)."""
    if a.field != b.field:
        raise HopfkitError("tensor product over different fields")
    dim = a.dim * b.dim
    names = tuple(f"{na}⊗{nb}" for na in a.basis_names for nb in b.basis_names)
    mult = []
    for i1 in range(a.dim):
        for j1 in range(b.dim):
            row = []
            for i2 in range(a.dim):
                for j2 in range(b.dim):
                    row.append(tensor_vec(a.mult[i1][i2], b.mult[j1][j2]))
            mult.append(tuple(row))
    unit = tensor_vec(a.unit, b.unit)
    aug = None
    if a.augmentation is not None and b.augmentation is not None:
        aug = tensor_vec(a.augmentation, b.augmentation)
    return Algebra(a.field, dim, names, tuple(mult), unit, aug)


def tensor_product_multiply(a: Algebra, b: Algebra, u: Sequence, v: Sequence) -> tuple:
    """Product of ``u`` and ``v`` in A⊗B without materializing its table."""
    db = b.dim
    n = a.dim * db
    if len(u) != n or len(v) != n:
        raise DimensionError("tensor_product_multiply: length mismatch")
    out = [a.field.zero] * n
    nz_u = [(i, c) for i, c in enumerate(u) if c]
    nz_v = [(i, c) for i, c in enumerate(v) if c]
    for idx1, c1 in nz_u:
        i1, j1 = divmod(idx1, db)
        for idx2, c2 in nz_v:
            i2, j2 = divmod(idx2, db)
            c = c1 * c2
            pa = a.mult[i1][i2]
            pb = b.mult[j1][j2]
            for k, ca in enumerate(pa):
                if not ca:
                    continue
                cca = c * ca
                kb = k * db
                for l, cb in enumerate(pb):
                    if cb:
                        out[kb + l] = out[kb + l] + cca * cb
    return tuple(out)


def subspace_is_subalgebra(a: Algebra, s: Subspace) -> Witnessed:
    """Unital subalgebra test: contains 1 and is closed under products."""
    if not s.contains(a.unit):
        return Witnessed(False, ("unit",))
    rows = s.rows_list()
    for x, rx in enumerate(rows):
        for y, ry in enumerate(rows):
            if not s.contains(a.multiply(rx, ry)):
                return Witnessed(False, (x, y))
    return Witnessed(True)
