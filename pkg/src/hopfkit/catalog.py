"""Constructors for the concrete Hopf algebras, coactions, and bundles used in tests.

Group tables are validated eagerly (orders stay at desk scale).  All Hopf
constructors declare the counit as the comodule-algebra augmentation, so
their bundles reduce with a sensible default seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .algebra import Algebra, tensor_product_multiply
from .coaction import Coaction
from .errors import DimensionError, HopfkitError, PreconditionError
from .exactcore import DenseMatrix, map_factor, tensor_vec, unit_vec
from .fields import Field, PrimeField, QQ
from .hopf import HopfAlgebra, dual_hopf, hopf_morphism_report


@dataclass(frozen=True)
class FiniteGroupTable:
    """Multiplication table of a finite group on indices 0..order-1."""

    order: int
    table: tuple  # table[i][j] = index of g_i * g_j
    identity: int
    inverse: tuple

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]]) -> "FiniteGroupTable":
        n = len(table)
        rows = tuple(tuple(r) for r in table)
        for r in rows:
            if len(r) != n or any(not (0 <= x < n) for x in r):
                raise HopfkitError("group table is not square over 0..n-1")
        identity = None
        for e in range(n):
            if all(rows[e][x] == x == rows[x][e] for x in range(n)):
                identity = e
                break
        if identity is None:
            raise HopfkitError("group table has no identity element")
        inverse = []
        for x in range(n):
            inv = [y for y in range(n) if rows[x][y] == identity and rows[y][x] == identity]
            if not inv:
                raise HopfkitError(f"element {x} has no inverse")
            inverse.append(inv[0])
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if rows[rows[i][j]][k] != rows[i][rows[j][k]]:
                        raise HopfkitError(f"group table is not associative at {(i, j, k)}")
        return cls(n, rows, identity, tuple(inverse))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]


def cyclic_group(n: int) -> FiniteGroupTable:
    return FiniteGroupTable.from_table([[(i + j) % n for j in range(n)] for i in range(n)])


def direct_product(g: FiniteGroupTable, h: FiniteGroupTable) -> FiniteGroupTable:
    n, m = g.order, h.order
    table = [[0] * (n * m) for _ in range(n * m)]
    for a in range(n):
        for b in range(m):
            for c in range(n):
                for d in range(m):
                    table[a * m + b][c * m + d] = g.mul(a, c) * m + h.mul(b, d)
    return FiniteGroupTable.from_table(table)


def dihedral_group(n: int) -> FiniteGroupTable:
    """Order 2n; element j*n+i stands for r^i s^j."""
    table = [[0] * (2 * n) for _ in range(2 * n)]
    for j1 in range(2):
        for i1 in range(n):
            for j2 in range(2):
                for i2 in range(n):
                    i = (i1 + (i2 if j1 == 0 else -i2)) % n
                    j = (j1 + j2) % 2
                    table[j1 * n + i1][j2 * n + i2] = j * n + i
    return FiniteGroupTable.from_table(table)


def symmetric_group(n: int) -> FiniteGroupTable:
    """Permutations of 0..n-1 in lexicographic order; (p*q)(x) = p(q(x))."""
    if n > 4:
        raise HopfkitError("symmetric groups are offered up to S4 (desk scale)")
    elems = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in elems] for p in elems]
    return FiniteGroupTable.from_table(table)


def trivial_group() -> FiniteGroupTable:
    return cyclic_group(1)


def group_algebra(g: FiniteGroupTable, field: Field = QQ) -> HopfAlgebra:
    """k[G]: basis the group elements, Δ(g)=g⊗g, eps=1, S(g)=g^{-1}."""
    n = g.order
    names = tuple("e" if i == g.identity else f"g{i}" for i in range(n))
    zero, one = field.zero, field.one
    mult = tuple(
        tuple(tuple(one if k == g.mul(i, j) else zero for k in range(n)) for j in range(n))
        for i in range(n)
    )
    unit = unit_vec(field, n, g.identity)
    counit = (one,) * n
    comult_rows = [tensor_vec(unit_vec(field, n, i), unit_vec(field, n, i)) for i in range(n)]
    antipode_rows = [unit_vec(field, n, g.inverse[i]) for i in range(n)]
    alg = Algebra(field, n, names, mult, unit, counit)
    return HopfAlgebra(alg,
                       DenseMatrix.from_rows(field, comult_rows, cols=n * n),
                       counit,
                       DenseMatrix.from_rows(field, antipode_rows, cols=n))


def function_algebra(g: FiniteGroupTable, field: Field = QQ) -> HopfAlgebra:
    """Functions on G with pointwise product; the dual of the group algebra."""
    return dual_hopf(group_algebra(g, field))


def sweedler_h4(field: Field = QQ) -> HopfAlgebra:
    """The 4-dimensional algebra with basis 1, g, x, gx (g²=1, x²=0, xg=-gx)."""
    if field.characteristic == 2:
        raise PreconditionError("this algebra degenerates in characteristic 2")
    one, zero = field.one, field.zero
    minus = -one

    def v(*coeffs):
        return tuple(field.scalar(c) for c in coeffs)

    names = ("1", "g", "x", "gx")
    mult = (
        (v(1, 0, 0, 0), v(0, 1, 0, 0), v(0, 0, 1, 0), v(0, 0, 0, 1)),   # 1·-
        (v(0, 1, 0, 0), v(1, 0, 0, 0), v(0, 0, 0, 1), v(0, 0, 1, 0)),   # g·-
        (v(0, 0, 1, 0), v(0, 0, 0, -1), v(0, 0, 0, 0), v(0, 0, 0, 0)),  # x·-
        (v(0, 0, 0, 1), v(0, 0, -1, 0), v(0, 0, 0, 0), v(0, 0, 0, 0)),  # gx·-
    )
    unit = v(1, 0, 0, 0)
    counit = v(1, 1, 0, 0)
    comult_rows = []
    e = [unit_vec(field, 4, i) for i in range(4)]
    comult_rows.append(tensor_vec(e[0], e[0]))                                  # Δ1
    comult_rows.append(tensor_vec(e[1], e[1]))                                  # Δg
    comult_rows.append(tuple(a + b for a, b in zip(tensor_vec(e[2], e[0]),
                                                   tensor_vec(e[1], e[2]))))    # Δx
    comult_rows.append(tuple(a + b for a, b in zip(tensor_vec(e[3], e[1]),
                                                   tensor_vec(e[0], e[3]))))    # Δ(gx)
    antipode_rows = [e[0], e[1], tuple(minus * c for c in e[3]), e[2]]
    alg = Algebra(field, 4, names, mult, unit, counit)
    return HopfAlgebra(alg,
                       DenseMatrix.from_rows(field, comult_rows, cols=16),
                       counit,
                       DenseMatrix.from_rows(field, antipode_rows, cols=4))


def taft(n: int, field: PrimeField, root) -> HopfAlgebra:
    """Taft algebra of dimension n² over a prime field with a primitive n-th root.

    Basis g^a x^b with g^n = 1, x^n = 0, x·g = q·g·x; Δg = g⊗g,
    Δx = x⊗1 + g⊗x.  Comultiplication and antipode on monomials are computed
    by multiplying out the generator values, not by a closed formula.
    """
    if not isinstance(field, PrimeField):
        raise PreconditionError("Taft algebras are offered over prime fields only")
    if n < 2:
        raise PreconditionError("Taft algebra needs n >= 2")
    q = field.scalar(root)
    if q ** n != field.one or any(q ** k == field.one for k in range(1, n)):
        raise PreconditionError(f"{root} is not a primitive {n}-th root of unity in {field!r}")

    dim = n * n
    zero, one = field.zero, field.one

    def idx(a: int, b: int) -> int:
        return a * n + b

    names = tuple(
        ("1" if (a, b) == (0, 0) else
         f"g{a if a > 1 else ''}" if b == 0 else
         f"x{b if b > 1 else ''}" if a == 0 else
         f"g{a if a > 1 else ''}x{b if b > 1 else ''}")
        for a in range(n) for b in range(n)
    )
    mult = []
    for a in range(n):
        for b in range(n):
            row = []
            for c in range(n):
                for d in range(n):
                    out = [zero] * dim
                    if b + d < n:
                        out[idx((a + c) % n, b + d)] = q ** (b * c)
                    row.append(tuple(out))
            mult.append(tuple(row))
    unit = unit_vec(field, dim, idx(0, 0))
    counit = tuple(one if b == 0 else zero for a in range(n) for b in range(n))
    alg = Algebra(field, dim, names, tuple(mult), unit, counit)

    def tensor_mult(u, v):
        return tensor_product_multiply(alg, alg, u, v)

    e = [unit_vec(field, dim, i) for i in range(dim)]
    dg = tensor_vec(e[idx(1, 0)], e[idx(1, 0)])
    dx = tuple(p + r for p, r in zip(tensor_vec(e[idx(0, 1)], e[idx(0, 0)]),
                                     tensor_vec(e[idx(1, 0)], e[idx(0, 1)])))
    comult_rows = []
    for a in range(n):
        for b in range(n):
            acc = tensor_vec(unit, unit)
            for _ in range(a):
                acc = tensor_mult(acc, dg)
            for _ in range(b):
                acc = tensor_mult(acc, dx)
            comult_rows.append(acc)

    s_g = e[idx(n - 1, 0)]                                                 # g^{-1}
    s_x = alg.multiply(tuple(-c for c in e[idx(n - 1, 0)]), e[idx(0, 1)])  # -g^{-1}x
    antipode_rows = []
    for a in range(n):
        for b in range(n):
            acc = unit
            for _ in range(b):
                acc = alg.multiply(acc, s_x)
            for _ in range(a):
                acc = alg.multiply(acc, s_g)
            antipode_rows.append(acc)

    return HopfAlgebra(alg,
                       DenseMatrix.from_rows(field, comult_rows, cols=dim * dim),
                       counit,
                       DenseMatrix.from_rows(field, antipode_rows, cols=dim))


def truncated_polynomial_algebra(field: Field, r: int, var: str = "x") -> Algebra:
    """k[x]/(x^r) with the evaluation-at-zero augmentation."""
    if r < 1:
        raise DimensionError("truncation order must be at least 1")
    zero, one = field.zero, field.one
    names = tuple("1" if i == 0 else (var if i == 1 else f"{var}{i}") for i in range(r))
    mult = tuple(
        tuple(tuple(one if k == i + j and i + j < r else zero for k in range(r))
              for j in range(r))
        for i in range(r)
    )
    unit = unit_vec(field, r, 0)
    aug = unit_vec(field, r, 0)
    return Algebra(field, r, names, mult, unit, aug)


def grading_coaction(a: Algebra, g: FiniteGroupTable, degrees: Sequence[int]) -> Coaction:
    """Coaction a_i -> a_i ⊗ g_{deg(i)} of k[G] on a G-graded algebra.

    Requires the grading to be multiplicative wherever structure constants
    are nonzero, and the unit to sit in the identity degree; violations are
    reported with the offending triple.
    """
    if len(degrees) != a.dim:
        raise DimensionError("grading needs one degree per basis element")
    if any(not (0 <= d < g.order) for d in degrees):
        raise HopfkitError("degree out of range for the grading group")
    for i in range(a.dim):
        for j in range(a.dim):
            expected = g.mul(degrees[i], degrees[j])
            for k, c in enumerate(a.mult[i][j]):
                if c and degrees[k] != expected:
                    raise PreconditionError(
                        f"grading is not multiplicative at (i={i}, j={j}, k={k})",
                        witness=(i, j, k))
    for k, c in enumerate(a.unit):
        if c and degrees[k] != g.identity:
            raise PreconditionError(f"unit component {k} has non-identity degree",
                                    witness=(k,))
    h = group_algebra(g, a.field)
    rows = [tensor_vec(a.basis_vector(i), unit_vec(a.field, g.order, degrees[i]))
            for i in range(a.dim)]
    return Coaction(a, h, DenseMatrix.from_rows(a.field, rows, cols=a.dim * g.order))


def surjection_coaction(a: HopfAlgebra, psi: DenseMatrix, h: HopfAlgebra) -> Coaction:
    """δ = (id ⊗ ψ)∘Δ for a surjective Hopf algebra morphism ψ: A -> H."""
    rep = hopf_morphism_report(a, h, psi)
    if not rep.ok:
        raise PreconditionError(f"psi is not a Hopf morphism: {rep.violations[0].render()}")
    if psi.rank != h.dim:
        raise PreconditionError("psi is not surjective")
    rows = [map_factor(a.comult.row(i), (a.dim, a.dim), 1, psi) for i in range(a.dim)]
    return Coaction(a.alg, h, DenseMatrix.from_rows(a.field, rows, cols=a.dim * h.dim))
