"""Deterministic exact linear algebra: matrices, canonical subspaces, tensor indexing.

Conventions used throughout the toolkit:

* vectors are rows (tuples of scalars);
* a linear map is a ``DenseMatrix`` whose row ``i`` is the image of the
  ``i``-th input basis vector, so it acts on the right: ``apply(v) = v @ M``;
* every subspace is stored by its reduced row echelon basis, which makes
  subspace equality plain entry-wise equality;
* tensor factors flatten row-major (leftmost factor slowest), which is
  associative, so ``(A⊗B)⊗C`` and ``A⊗(B⊗C)`` share one flat index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .errors import DimensionError, HopfkitError
from .fields import Field


# --------------------------------------------------------------------------
# vector helpers
# --------------------------------------------------------------------------

def vec(field: Field, xs) -> tuple:
    return tuple(field.scalar(x) for x in xs)


def zero_vec(field: Field, n: int) -> tuple:
    return (field.zero,) * n


def unit_vec(field: Field, n: int, i: int) -> tuple:
    return tuple(field.one if j == i else field.zero for j in range(n))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u):
    return tuple(c * a for a in u)


def vec_is_zero(u) -> bool:
    return not any(u)


def vec_dot(u, v):
    acc = None
    for a, b in zip(u, v):
        if a and b:
            acc = a * b if acc is None else acc + a * b
    if acc is None:
        raise HopfkitError("dot product of empty or all-zero vectors needs a field zero")
    return acc


def functional(u, v, field: Field):
    """Evaluate the coordinate functional with coefficients ``u`` on ``v``."""
    out = field.zero
    for a, b in zip(u, v):
        if a and b:
            out = out + a * b
    return out


def tensor_vec(u, v) -> tuple:
    """Flattened outer product, left factor slowest."""
    return tuple(a * b for a in u for b in v)


# --------------------------------------------------------------------------
# dense matrices
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class DenseMatrix:
    """Immutable row-major matrix of exact field scalars."""

    field: Field
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"matrix of shape {self.rows}x{self.cols} needs "
                f"{self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: int | None = None):
        rows = [tuple(field.scalar(x) for x in r) for r in rows]
        if rows:
            cols = len(rows[0]) if cols is None else cols
            for r in rows:
                if len(r) != cols:
                    raise DimensionError("ragged rows")
        elif cols is None:
            raise DimensionError("empty matrix needs an explicit column count")
        flat = tuple(x for r in rows for x in r)
        return cls(field, len(rows), cols, flat)

    @classmethod
    def identity(cls, field: Field, n: int):
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int):
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    def at(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def apply(self, v: Sequence) -> tuple:
        """Row-vector action ``v @ M``."""
        if len(v) != self.rows:
            raise DimensionError(f"apply: vector of length {len(v)} to {self.rows}x{self.cols}")
        out = [self.field.zero] * self.cols
        c, e = self.cols, self.entries
        for i, vi in enumerate(v):
            if not vi:
                continue
            base = i * c
            for j in range(c):
                x = e[base + j]
                if x:
                    out[j] = out[j] + vi * x
        return tuple(out)

    def mul(self, other: "DenseMatrix") -> "DenseMatrix":
        """Composition ``self`` then ``other`` in the row convention."""
        if self.cols != other.rows:
            raise DimensionError(f"mul: {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        oc = other.cols
        out = [self.field.zero] * (self.rows * oc)
        for i in range(self.rows):
            ib = i * oc
            sb = i * self.cols
            for k in range(self.cols):
                a = self.entries[sb + k]
                if not a:
                    continue
                ob = k * oc
                for j in range(oc):
                    b = other.entries[ob + j]
                    if b:
                        out[ib + j] = out[ib + j] + a * b
        return DenseMatrix(self.field, self.rows, oc, tuple(out))

    def __matmul__(self, other):
        return self.mul(other)

    def add(self, other: "DenseMatrix") -> "DenseMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("add: shape mismatch")
        return DenseMatrix(self.field, self.rows, self.cols,
                           tuple(a + b for a, b in zip(self.entries, other.entries)))

    def sub(self, other: "DenseMatrix") -> "DenseMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("sub: shape mismatch")
        return DenseMatrix(self.field, self.rows, self.cols,
                           tuple(a - b for a, b in zip(self.entries, other.entries)))

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(self.field, self.cols, self.rows,
                           tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)))

    def kron(self, other: "DenseMatrix") -> "DenseMatrix":
        """Kronecker product; row ``(i,j)`` is ``row_i ⊗ row_j``."""
        out = []
        for i in range(self.rows):
            for j in range(other.rows):
                out.append(tensor_vec(self.row(i), other.row(j)))
        return DenseMatrix.from_rows(self.field, out, cols=self.cols * other.cols)

    def vstack(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.cols != other.cols:
            raise DimensionError("vstack: column mismatch")
        return DenseMatrix(self.field, self.rows + other.rows, self.cols,
                           self.entries + other.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    @cached_property
    def rank(self) -> int:
        return rref(self)[1]

    def inverse(self) -> "DenseMatrix":
        """Exact inverse of a square matrix; raises if singular."""
        if self.rows != self.cols:
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + list(unit_vec(self.field, n, i)) for i in range(n)]
        reduced, _ = _rref_rows(aug, n + n)
        pivots = _pivot_cols(reduced, n + n)
        if len(pivots) < n or any(p >= n for p in pivots):
            raise HopfkitError("matrix is singular")
        inv_rows = [r[n:] for r in reduced[:n]]
        return DenseMatrix.from_rows(self.field, inv_rows, cols=n)


def _rref_rows(rows: list, cols: int) -> tuple[list, int]:
    """In-place reduced row echelon form on a list of row lists."""
    pivot_row = 0
    nrows = len(rows)
    for col in range(cols):
        sel = None
        for r in range(pivot_row, nrows):
            if rows[r][col]:
                sel = r
                break
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        piv = rows[pivot_row][col]
        one = piv / piv
        if piv != one:
            inv = one / piv
            rows[pivot_row] = [x * inv if x else x for x in rows[pivot_row]]
        prow = rows[pivot_row]
        for r in range(nrows):
            if r == pivot_row:
                continue
            f = rows[r][col]
            if f:
                rows[r] = [a - f * b if b else a for a, b in zip(rows[r], prow)]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return rows, pivot_row


def _pivot_cols(rows: list, cols: int) -> list[int]:
    pivots = []
    for r in rows:
        for j, x in enumerate(r):
            if x:
                pivots.append(j)
                break
    return pivots


def rref(m: DenseMatrix) -> tuple[DenseMatrix, int]:
    """Reduced row echelon form and rank; deterministic and idempotent."""
    rows = [list(m.row(i)) for i in range(m.rows)]
    reduced, rank = _rref_rows(rows, m.cols)
    flat = tuple(x for r in reduced for x in r)
    return DenseMatrix(m.field, m.rows, m.cols, flat), rank


# --------------------------------------------------------------------------
# canonical subspaces
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """Subspace of ``field^ambient_dim`` with a canonical RREF basis.

    Direct construction trusts that ``basis`` already is a reduced echelon
    matrix with no zero rows; use :meth:`from_vectors` otherwise.
    """

    ambient_dim: int
    basis: DenseMatrix

    @classmethod
    def from_vectors(cls, field: Field, ambient_dim: int, vectors) -> "Subspace":
        rows = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient {ambient_dim}")
            rows.append(list(field.scalar(x) for x in v))
        reduced, rank = _rref_rows(rows, ambient_dim)
        kept = [tuple(r) for r in reduced[:rank]]
        return cls(ambient_dim, DenseMatrix.from_rows(field, kept, cols=ambient_dim))

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, DenseMatrix.from_rows(field, [], cols=ambient_dim))

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, DenseMatrix.identity(field, ambient_dim))

    @property
    def field(self) -> Field:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.rows

    @cached_property
    def pivots(self) -> tuple:
        return tuple(_pivot_cols(self.basis.row_list(), self.ambient_dim))

    def rows_list(self) -> list:
        return self.basis.row_list()

    def reduce(self, v: Sequence) -> tuple:
        """Residual of ``v`` after subtracting its projection along the basis."""
        if len(v) != self.ambient_dim:
            raise DimensionError("reduce: ambient mismatch")
        r = list(v)
        for a, p in enumerate(self.pivots):
            c = r[p]
            if c:
                row = self.basis.row(a)
                r = [x - c * y if y else x for x, y in zip(r, row)]
        return tuple(r)

    def contains(self, v: Sequence) -> bool:
        return vec_is_zero(self.reduce(v))

    def coords(self, v: Sequence):
        """Coefficients of ``v`` in the canonical basis, or None if outside."""
        cs = tuple(v[p] for p in self.pivots)
        if self.contains(v):
            return cs
        return None

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionError("containment: ambient mismatch")
        return all(self.contains(r) for r in other.rows_list())

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    if u.ambient_dim != v.ambient_dim:
        raise DimensionError("subspace_sum: ambient mismatch")
    return Subspace.from_vectors(u.field, u.ambient_dim, u.rows_list() + v.rows_list())


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked-basis system."""
    if u.ambient_dim != v.ambient_dim:
        raise DimensionError("subspace_intersect: ambient mismatch")
    if u.is_full():
        return v
    if v.is_full():
        return u
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(u.field, u.ambient_dim)
    neg = DenseMatrix.from_rows(v.field, [vec_scale(-v.field.one, r) for r in v.rows_list()],
                                cols=v.ambient_dim)
    stacked = u.basis.vstack(neg)
    coeffs = kernel(stacked)  # rows (a | b) with a·U = b·V
    vectors = [u.basis.apply(w[:u.dim]) for w in coeffs.rows_list()]
    return Subspace.from_vectors(u.field, u.ambient_dim, vectors)


class QuotientSpace(NamedTuple):
    """Quotient by a subspace with a deterministic section.

    ``projection`` maps the ambient space onto the quotient, ``section`` picks
    the representative supported on the non-pivot coordinates, and
    ``coordinates`` lists those ambient coordinates in order.
    """

    projection: DenseMatrix
    section: DenseMatrix
    dim: int
    coordinates: tuple


def quotient_space(ambient_dim: int, w: Subspace) -> QuotientSpace:
    """Quotient of the ambient space by ``w``; basis = non-pivot coordinates."""
    if w.ambient_dim != ambient_dim:
        raise DimensionError("quotient_space: ambient mismatch")
    field = w.field
    pivset = set(w.pivots)
    coords = tuple(j for j in range(ambient_dim) if j not in pivset)
    qdim = len(coords)
    proj_rows = []
    pivot_of = {p: a for a, p in enumerate(w.pivots)}
    for i in range(ambient_dim):
        if i in pivot_of:
            row = w.basis.row(pivot_of[i])
            proj_rows.append([-row[j] for j in coords])
        else:
            proj_rows.append([field.one if j == i else field.zero for j in coords])
    section_rows = [unit_vec(field, ambient_dim, j) for j in coords]
    return QuotientSpace(
        DenseMatrix.from_rows(field, proj_rows, cols=qdim),
        DenseMatrix.from_rows(field, section_rows, cols=ambient_dim),
        qdim,
        coords,
    )


def kernel(f: DenseMatrix) -> Subspace:
    """Kernel of the row-convention map, i.e. all ``v`` with ``v @ f = 0``."""
    t = f.transpose()
    reduced, _ = _rref_rows([list(r) for r in t.row_list()], f.rows)
    pivots = _pivot_cols(reduced, f.rows)
    pivset = set(pivots)
    field = f.field
    out = []
    for free in range(f.rows):
        if free in pivset:
            continue
        v = [field.zero] * f.rows
        v[free] = field.one
        for a, p in enumerate(pivots):
            v[p] = -reduced[a][free]
        out.append(v)
    return Subspace.from_vectors(field, f.rows, out)


def image(f: DenseMatrix) -> Subspace:
    return Subspace.from_vectors(f.field, f.cols, f.row_list())


def preimage_subspace(f: DenseMatrix, target: Subspace) -> Subspace:
    """All ``x`` with ``f(x)`` in ``target``; always contains ``kernel(f)``."""
    if f.cols != target.ambient_dim:
        raise DimensionError("preimage_subspace: target ambient mismatch")
    if target.is_full():
        return Subspace.full(f.field, f.rows)
    q = quotient_space(target.ambient_dim, target)
    return kernel(f.mul(q.projection))


def solve(m: DenseMatrix, b: Sequence):
    """One solution ``x`` of ``x @ m = b`` (free coordinates zero), or None."""
    if len(b) != m.cols:
        raise DimensionError("solve: rhs length mismatch")
    t = m.transpose()
    aug = [list(r) + [bv] for r, bv in zip(t.row_list(), b)]
    reduced, rank = _rref_rows(aug, m.rows + 1)
    pivots = _pivot_cols(reduced, m.rows + 1)
    if any(p == m.rows for p in pivots):
        return None
    x = [m.field.zero] * m.rows
    for a, p in enumerate(pivots):
        x[p] = reduced[a][m.rows]
    return tuple(x)


# --------------------------------------------------------------------------
# tensor-index bookkeeping
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TensorIndex:
    """Row-major flattening of a tensor product, leftmost factor slowest."""

    factor_dims: tuple

    def __post_init__(self):
        if any(d < 0 for d in self.factor_dims):
            raise DimensionError("negative factor dimension")

    @property
    def total(self) -> int:
        n = 1
        for d in self.factor_dims:
            n *= d
        return n

    def flatten(self, multi) -> int:
        if len(multi) != len(self.factor_dims):
            raise DimensionError("flatten: arity mismatch")
        flat = 0
        for i, d in zip(multi, self.factor_dims):
            if not (0 <= i < d):
                raise DimensionError(f"index {i} out of range 0..{d - 1}")
            flat = flat * d + i
        return flat

    def unflatten(self, flat: int) -> tuple:
        if not (0 <= flat < self.total):
            raise DimensionError("unflatten: index out of range")
        out = []
        for d in reversed(self.factor_dims):
            out.append(flat % d)
            flat //= d
        return tuple(reversed(out))


def map_factor(v: Sequence, dims: Sequence[int], pos: int, m: DenseMatrix) -> tuple:
    """Apply ``m`` to tensor factor ``pos`` of the flattened vector ``v``.

    ``m`` maps a space of dimension ``dims[pos]`` to one of dimension
    ``m.cols``; the output is flattened over ``dims`` with that factor
    replaced (splitting a factor is fine since flattening is associative).
    """
    left = 1
    for d in dims[:pos]:
        left *= d
    mid = dims[pos]
    right = 1
    for d in dims[pos + 1:]:
        right *= d
    if left * mid * right != len(v):
        raise DimensionError("map_factor: dims do not match vector length")
    if m.rows != mid:
        raise DimensionError("map_factor: map does not match factor dimension")
    new_mid = m.cols
    out = [m.field.zero] * (left * new_mid * right)
    for idx, c in enumerate(v):
        if not c:
            continue
        r, rest = idx % right, idx // right
        i, l = rest % mid, rest // mid
        base = m.row(i)
        for j, w in enumerate(base):
            if w:
                o = (l * new_mid + j) * right + r
                out[o] = out[o] + c * w
    return tuple(out)


def contract_factor(v: Sequence, dims: Sequence[int], pos: int, phi: Sequence, field: Field) -> tuple:
    """Contract tensor factor ``pos`` with the functional ``phi``."""
    left = 1
    for d in dims[:pos]:
        left *= d
    mid = dims[pos]
    right = 1
    for d in dims[pos + 1:]:
        right *= d
    if left * mid * right != len(v) or len(phi) != mid:
        raise DimensionError("contract_factor: shape mismatch")
    out = [field.zero] * (left * right)
    for idx, c in enumerate(v):
        if not c:
            continue
        r, rest = idx % right, idx // right
        i, l = rest % mid, rest // mid
        w = phi[i]
        if w:
            o = l * right + r
            out[o] = out[o] + c * w
    return tuple(out)


def subspace_tensor(u: Subspace, v: Subspace) -> Subspace:
    """Tensor product subspace ``u ⊗ v`` inside the flattened ambient.

    Tensor products of RREF bases, ordered lexicographically, are again a
    reduced echelon basis, so the canonical form is built directly.
    """
    ambient = u.ambient_dim * v.ambient_dim
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(u.field, ambient)
    rows = [tensor_vec(a, b) for a in u.rows_list() for b in v.rows_list()]
    return Subspace(ambient, DenseMatrix.from_rows(u.field, rows, cols=ambient))
