"""JSON document format: named exact-arithmetic objects with cross-references.

Scalars are JSON integers or lowest-terms strings like ``"2/3"`` (never
floats).  Structure constants are sparse quadruples ``[i, j, k, c]``.
Serialization is canonical: object names sorted, sparse entries sorted by
index, scalars normalized, so ``parse ∘ serialize`` is the identity on
canonical documents and reports are byte-reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, AlgebraMorphism
from .coaction import Coaction
from .errors import DocumentError
from .exactcore import DenseMatrix, Subspace
from .fields import Field, PrimeField, QQ
from .galois import Bundle
from .hopf import HopfAlgebra
from .reduction import BundleMorphism

_KINDS = ("algebra", "hopf", "subspace", "coaction", "morphism", "bundle", "bundle_morphism")

_ALLOWED_KEYS = {
    "algebra": {"type", "unchecked", "dim", "basis", "unit", "mult", "augmentation"},
    "hopf": {"type", "unchecked", "dim", "basis", "unit", "mult", "augmentation",
             "comult", "counit", "antipode"},
    "subspace": {"type", "unchecked", "ambient", "vectors"},
    "coaction": {"type", "unchecked", "algebra", "hopf", "map"},
    "morphism": {"type", "unchecked", "source", "target", "matrix"},
    "bundle": {"type", "unchecked", "coaction", "calculus"},
    "bundle_morphism": {"type", "unchecked", "source", "target", "phi", "psi"},
}


@dataclass
class DocObject:
    kind: str
    value: object
    refs: dict = dc_field(default_factory=dict)
    unchecked: bool = False


@dataclass
class Document:
    field: Field
    objects: dict  # name -> DocObject

    def get(self, name: str, kind: str | None = None) -> DocObject:
        if name not in self.objects:
            raise DocumentError(f"unresolved reference to object {name!r}")
        obj = self.objects[name]
        if kind is not None and obj.kind != kind:
            raise DocumentError(f"object {name!r} has type {obj.kind}, expected {kind}")
        return obj


def _parse_field(spec) -> Field:
    if spec == "Q":
        return QQ
    if isinstance(spec, dict) and set(spec) == {"Fp"}:
        p = spec["Fp"]
        if not isinstance(p, int):
            raise DocumentError("field.Fp must be an integer prime")
        return PrimeField(p)
    raise DocumentError(f"unknown field spec {spec!r}")


def _require(raw: dict, key: str, path: str):
    if key not in raw:
        raise DocumentError(f"{path}: missing required key {key!r}")
    return raw[key]


def _check_keys(raw: dict, kind: str, path: str):
    extra = set(raw) - _ALLOWED_KEYS[kind]
    if extra:
        raise DocumentError(f"{path}: unknown key(s) {sorted(extra)} for type {kind!r}")


def _scalar_list(field: Field, xs, n: int, path: str) -> tuple:
    if not isinstance(xs, list) or len(xs) != n:
        raise DocumentError(f"{path}: expected a list of {n} scalars")
    try:
        return tuple(field.scalar(x) for x in xs)
    except DocumentError as e:
        raise DocumentError(f"{path}: {e}") from None


def _dense_matrix(field: Field, rows, r: int, c: int, path: str) -> DenseMatrix:
    if not isinstance(rows, list) or len(rows) != r:
        raise DocumentError(f"{path}: expected {r} matrix rows")
    return DenseMatrix.from_rows(field, [_scalar_list(field, row, c, f"{path}[{i}]")
                                         for i, row in enumerate(rows)], cols=c)


def _sparse_cube(field: Field, entries, d1: int, d2: int, d3: int, path: str):
    """Quadruples [i, j, k, c] into a dense (d1, d2, d3) table."""
    table = [[[field.zero] * d3 for _ in range(d2)] for _ in range(d1)]
    if not isinstance(entries, list):
        raise DocumentError(f"{path}: expected a list of [i, j, k, c] quadruples")
    for pos, q in enumerate(entries):
        if not (isinstance(q, list) and len(q) == 4):
            raise DocumentError(f"{path}[{pos}]: expected [i, j, k, c]")
        i, j, k, c = q
        for idx, bound in ((i, d1), (j, d2), (k, d3)):
            if not (isinstance(idx, int) and 0 <= idx < bound):
                raise DocumentError(f"{path}[{pos}]: index {idx} out of range 0..{bound - 1}")
        table[i][j][k] = table[i][j][k] + field.scalar(c)
    return table


def _parse_algebra(field: Field, raw: dict, path: str) -> Algebra:
    dim = _require(raw, "dim", path)
    if not (isinstance(dim, int) and dim >= 1):
        raise DocumentError(f"{path}.dim: must be a positive integer")
    basis = _require(raw, "basis", path)
    if not (isinstance(basis, list) and len(basis) == dim
            and all(isinstance(b, str) for b in basis)):
        raise DocumentError(f"{path}.basis: expected {dim} names")
    unit = _scalar_list(field, _require(raw, "unit", path), dim, f"{path}.unit")
    cube = _sparse_cube(field, _require(raw, "mult", path), dim, dim, dim, f"{path}.mult")
    mult = tuple(tuple(tuple(cube[i][j]) for j in range(dim)) for i in range(dim))
    aug = None
    if "augmentation" in raw:
        aug = _scalar_list(field, raw["augmentation"], dim, f"{path}.augmentation")
    return Algebra(field, dim, tuple(basis), mult, unit, aug)


def _parse_hopf(field: Field, raw: dict, path: str) -> HopfAlgebra:
    alg = _parse_algebra(field, {k: raw[k] for k in raw
                                 if k in ("dim", "basis", "unit", "mult", "augmentation")},
                         path)
    d = alg.dim
    cube = _sparse_cube(field, _require(raw, "comult", path), d, d, d, f"{path}.comult")
    comult_rows = [tuple(cube[i][j][k] for j in range(d) for k in range(d)) for i in range(d)]
    counit = _scalar_list(field, _require(raw, "counit", path), d, f"{path}.counit")
    anti_raw = _require(raw, "antipode", path)
    anti = [[field.zero] * d for _ in range(d)]
    if not isinstance(anti_raw, list):
        raise DocumentError(f"{path}.antipode: expected a list of [i, j, c] triples")
    for pos, t in enumerate(anti_raw):
        if not (isinstance(t, list) and len(t) == 3):
            raise DocumentError(f"{path}.antipode[{pos}]: expected [i, j, c]")
        i, j, c = t
        for idx in (i, j):
            if not (isinstance(idx, int) and 0 <= idx < d):
                raise DocumentError(f"{path}.antipode[{pos}]: index out of range")
        anti[i][j] = anti[i][j] + field.scalar(c)
    if alg.augmentation is None:
        alg = Algebra(alg.field, alg.dim, alg.basis_names, alg.mult, alg.unit, counit)
    return HopfAlgebra(alg,
                       DenseMatrix.from_rows(field, comult_rows, cols=d * d),
                       counit,
                       DenseMatrix.from_rows(field, anti, cols=d))


def _algebra_of(obj: DocObject):
    return obj.value.alg if obj.kind == "hopf" else obj.value


def parse_document(text: str) -> Document:
    """Strict parse with field-precise diagnostics; references must resolve."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not valid JSON: {e}") from None
    if not isinstance(raw, dict):
        raise DocumentError("top level must be an object")
    extra = set(raw) - {"field", "objects", "report"}
    if extra:
        raise DocumentError(f"unknown top-level key(s) {sorted(extra)}")
    field = _parse_field(_require(raw, "field", "document"))
    objects_raw = _require(raw, "objects", "document")
    if not isinstance(objects_raw, dict):
        raise DocumentError("objects must be a name -> object mapping")
    for name, obj in objects_raw.items():
        if not isinstance(obj, dict) or "type" not in obj:
            raise DocumentError(f"objects.{name}: every object needs a 'type'")
        if obj["type"] not in _KINDS:
            raise DocumentError(f"objects.{name}: unknown type {obj['type']!r}")
        _check_keys(obj, obj["type"], f"objects.{name}")

    doc = Document(field, {})

    def phase(kinds):
        for name, obj in objects_raw.items():
            if obj["type"] in kinds:
                yield name, obj, f"objects.{name}"

    for name, obj, path in phase({"algebra"}):
        doc.objects[name] = DocObject("algebra", _parse_algebra(field, obj, path),
                                      unchecked=bool(obj.get("unchecked")))
    for name, obj, path in phase({"hopf"}):
        doc.objects[name] = DocObject("hopf", _parse_hopf(field, obj, path),
                                      unchecked=bool(obj.get("unchecked")))
    for name, obj, path in phase({"subspace"}):
        ambient = _require(obj, "ambient", path)
        vectors = _require(obj, "vectors", path)
        if not isinstance(vectors, list):
            raise DocumentError(f"{path}.vectors: expected a list of vectors")
        rows = [_scalar_list(field, v, ambient, f"{path}.vectors[{i}]")
                for i, v in enumerate(vectors)]
        doc.objects[name] = DocObject(
            "subspace", Subspace.from_vectors(field, ambient, rows),
            unchecked=bool(obj.get("unchecked")))

    for name, obj, path in phase({"coaction"}):
        alg_obj = doc.get(_require(obj, "algebra", path))
        if alg_obj.kind not in ("algebra", "hopf"):
            raise DocumentError(f"{path}.algebra: must reference an algebra or hopf object")
        hopf_obj = doc.get(_require(obj, "hopf", path), "hopf")
        a = _algebra_of(alg_obj)
        h = hopf_obj.value
        cube = _sparse_cube(field, _require(obj, "map", path), a.dim, a.dim, h.dim,
                            f"{path}.map")
        rows = [tuple(cube[i][j][k] for j in range(a.dim) for k in range(h.dim))
                for i in range(a.dim)]
        value = Coaction(a, h, DenseMatrix.from_rows(field, rows, cols=a.dim * h.dim))
        doc.objects[name] = DocObject("coaction", value,
                                      refs={"algebra": obj["algebra"], "hopf": obj["hopf"]},
                                      unchecked=bool(obj.get("unchecked")))
    for name, obj, path in phase({"morphism"}):
        src = _algebra_of(doc.get(_require(obj, "source", path)))
        dst = _algebra_of(doc.get(_require(obj, "target", path)))
        mat = _dense_matrix(field, _require(obj, "matrix", path), src.dim, dst.dim,
                            f"{path}.matrix")
        doc.objects[name] = DocObject(
            "morphism", AlgebraMorphism(src, dst, mat),
            refs={"source": obj["source"], "target": obj["target"]},
            unchecked=bool(obj.get("unchecked")))

    for name, obj, path in phase({"bundle"}):
        co = doc.get(_require(obj, "coaction", path), "coaction").value
        da = co.algebra.dim
        vectors = _require(obj, "calculus", path)
        rows = [_scalar_list(field, v, da * da, f"{path}.calculus[{i}]")
                for i, v in enumerate(vectors)]
        value = Bundle(co, Subspace.from_vectors(field, da * da, rows))
        doc.objects[name] = DocObject("bundle", value,
                                      refs={"coaction": obj["coaction"]},
                                      unchecked=bool(obj.get("unchecked")))

    for name, obj, path in phase({"bundle_morphism"}):
        src = doc.get(_require(obj, "source", path), "bundle").value
        dst = doc.get(_require(obj, "target", path), "bundle").value
        phi = _dense_matrix(field, _require(obj, "phi", path),
                            src.coaction.algebra.dim, dst.coaction.algebra.dim,
                            f"{path}.phi")
        psi = _dense_matrix(field, _require(obj, "psi", path),
                            src.coaction.hopf.dim, dst.coaction.hopf.dim, f"{path}.psi")
        value = BundleMorphism(AlgebraMorphism(src.coaction.algebra,
                                               dst.coaction.algebra, phi), psi)
        doc.objects[name] = DocObject("bundle_morphism", value,
                                      refs={"source": obj["source"], "target": obj["target"]},
                                      unchecked=bool(obj.get("unchecked")))
    return doc


# --------------------------------------------------------------------------
# serialization
# --------------------------------------------------------------------------

def _ser_scalar(field: Field, x):
    return field.serialize(x)


def _ser_vector(field: Field, v) -> list:
    return [field.serialize(x) for x in v]


def _ser_sparse_cube(field: Field, get, d1: int, d2: int, d3: int) -> list:
    out = []
    for i in range(d1):
        for j in range(d2):
            for k in range(d3):
                c = get(i, j, k)
                if c:
                    out.append([i, j, k, field.serialize(c)])
    return out


def _ser_algebra_fields(a: Algebra) -> dict:
    field = a.field
    out = {
        "dim": a.dim,
        "basis": list(a.basis_names),
        "unit": _ser_vector(field, a.unit),
        "mult": _ser_sparse_cube(field, lambda i, j, k: a.mult[i][j][k], a.dim, a.dim, a.dim),
    }
    if a.augmentation is not None:
        out["augmentation"] = _ser_vector(field, a.augmentation)
    return out


def serialize_object(field: Field, obj: DocObject) -> dict:
    kind = obj.kind
    out: dict = {"type": kind}
    if obj.unchecked:
        out["unchecked"] = True
    if kind == "algebra":
        out.update(_ser_algebra_fields(obj.value))
    elif kind == "hopf":
        h: HopfAlgebra = obj.value
        out.update(_ser_algebra_fields(h.alg))
        d = h.dim
        out["comult"] = _ser_sparse_cube(field, lambda i, j, k: h.comult.at(i, j * d + k),
                                         d, d, d)
        out["counit"] = _ser_vector(field, h.counit)
        out["antipode"] = [[i, j, field.serialize(h.antipode.at(i, j))]
                           for i in range(d) for j in range(d) if h.antipode.at(i, j)]
        # the counit doubles as the declared augmentation; avoid stating it twice
        if out.get("augmentation") == out["counit"]:
            out.pop("augmentation")
    elif kind == "subspace":
        s: Subspace = obj.value
        out["ambient"] = s.ambient_dim
        out["vectors"] = [_ser_vector(field, r) for r in s.rows_list()]
    elif kind == "coaction":
        c: Coaction = obj.value
        dh = c.hopf.dim
        out["algebra"] = obj.refs["algebra"]
        out["hopf"] = obj.refs["hopf"]
        out["map"] = _ser_sparse_cube(field, lambda i, j, k: c.matrix.at(i, j * dh + k),
                                      c.algebra.dim, c.algebra.dim, dh)
    elif kind == "morphism":
        m: AlgebraMorphism = obj.value
        out["source"] = obj.refs["source"]
        out["target"] = obj.refs["target"]
        out["matrix"] = [_ser_vector(field, m.matrix.row(i)) for i in range(m.matrix.rows)]
    elif kind == "bundle":
        b: Bundle = obj.value
        out["coaction"] = obj.refs["coaction"]
        out["calculus"] = [_ser_vector(field, r) for r in b.calculus.rows_list()]
    elif kind == "bundle_morphism":
        bm: BundleMorphism = obj.value
        out["source"] = obj.refs["source"]
        out["target"] = obj.refs["target"]
        out["phi"] = [_ser_vector(field, bm.phi.matrix.row(i))
                      for i in range(bm.phi.matrix.rows)]
        out["psi"] = [_ser_vector(field, bm.psi.row(i)) for i in range(bm.psi.rows)]
    else:
        raise DocumentError(f"cannot serialize object of kind {kind!r}")
    return out


def document_to_dict(doc: Document, report: dict | None = None) -> dict:
    out = {
        "field": doc.field.label(),
        "objects": {name: serialize_object(doc.field, obj)
                    for name, obj in sorted(doc.objects.items())},
    }
    if report is not None:
        out["report"] = report
    return out


def serialize_document(doc: Document, report: dict | None = None) -> str:
    return json.dumps(document_to_dict(doc, report), sort_keys=True, indent=2) + "\n"
