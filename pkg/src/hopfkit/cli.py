"""Batch CLI: verify or compute on a document, emit a deterministic report.

Exit codes: 0 = verified/true, 1 = refuted/false, 2 = input or precondition
error.  The report mirrors the input document plus a ``report`` object and
is byte-identical across runs on the same input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .coaction import (
    check_coaction,
    coinvariants,
    hopf_image,
    is_inner_faithful,
)
from .algebra import check_algebra, is_algebra_morphism
from .document import Document, document_to_dict, parse_document, serialize_document
from .errors import DocumentError, HopfkitError, UnsupportedFieldError
from .exactcore import Subspace
from .galois import canonical_map, check_covariant_calculus, check_qpb
from .hopf import check_hopf, is_cosemisimple
from .reduction import (
    augmentation_seed,
    bundles_equivalent,
    hopf_image_reduction,
    reduce_morphism,
)
from .reports import ClaimLedger, ValidityReport

VERBS = ("check-hopf", "check-coaction", "hopf-image", "inner-faithful", "coinvariants",
         "galois", "qpb-check", "reduce", "cosemisimple", "reduce-morphism", "equivalent")

_EXIT = {"verified": 0, "refuted": 1, "unsupported": 2, "error": 2}


def _violations_json(rep: ValidityReport) -> list:
    return [{"check": v.check, "where": list(v.where), "detail": v.detail}
            for v in rep.violations]


def _claims_json(ledger: ClaimLedger) -> list:
    return [{"name": c.name, "status": c.status, "detail": c.detail} for c in ledger.claims]


def _subspace_json(field, s: Subspace) -> dict:
    return {"ambient": s.ambient_dim, "dim": s.dim,
            "vectors": [[field.serialize(x) for x in r] for r in s.rows_list()]}


def _validate(doc: Document, name: str):
    """Strict-mode axiom check before an object is used by a verb."""
    obj = doc.get(name)
    if obj.unchecked:
        return
    if obj.kind == "algebra":
        rep = check_algebra(obj.value)
    elif obj.kind == "hopf":
        rep = check_hopf(obj.value)
    elif obj.kind == "coaction":
        rep = check_coaction(obj.value)
    elif obj.kind == "bundle":
        rep = check_coaction(obj.value.coaction).merged(
            check_covariant_calculus(obj.value))
    elif obj.kind == "morphism":
        w = is_algebra_morphism(obj.value)
        if not w:
            raise DocumentError(
                f"object {name!r} is not an algebra morphism (witness {w.witness}); "
                f"mark it unchecked to bypass")
        return
    else:
        return
    if not rep.ok:
        raise DocumentError(
            f"object {name!r} fails validation: {rep.violations[0].render()}; "
            f"mark it unchecked to bypass")


def _need_object(args) -> str:
    if not args.object:
        raise DocumentError("this verb needs --object <name>")
    return args.object


def _resolve_seed(doc: Document, args, bundle, flag: str):
    seed_name = getattr(args, flag.replace("-", "_"))
    if seed_name:
        return doc.get(seed_name, "subspace").value
    seed = augmentation_seed(bundle.coaction.algebra)
    if seed is None:
        raise DocumentError(
            "reduce needs a proper seed: the largest coaction-stable ideal is only "
            "meaningful inside one (the whole algebra always qualifies); pass "
            f"--{flag} <subspace> or declare an augmentation on the comodule algebra")
    return seed


def _run_verb(doc: Document, args) -> tuple[str, dict]:
    verb = args.verb
    field = doc.field

    if verb == "check-hopf":
        name = _need_object(args)
        rep = check_hopf(doc.get(name, "hopf").value)
        return ("verified" if rep.ok else "refuted",
                {"object": name, "violations": _violations_json(rep)})

    if verb == "check-coaction":
        name = _need_object(args)
        rep = check_coaction(doc.get(name, "coaction").value)
        return ("verified" if rep.ok else "refuted",
                {"object": name, "violations": _violations_json(rep)})

    if verb == "hopf-image":
        name = _need_object(args)
        _validate(doc, name)
        sub, _ = hopf_image(doc.get(name, "coaction").value)
        return "verified", {"object": name,
                            "hopf_image": _subspace_json(field, sub.carrier)}

    if verb == "inner-faithful":
        name = _need_object(args)
        _validate(doc, name)
        c = doc.get(name, "coaction").value
        ok = is_inner_faithful(c)
        return ("verified" if ok else "refuted",
                {"object": name, "inner_faithful": ok})

    if verb == "coinvariants":
        name = _need_object(args)
        _validate(doc, name)
        c = doc.get(name, "coaction").value
        return "verified", {"object": name,
                            "coinvariants": _subspace_json(field, coinvariants(c))}

    if verb == "galois":
        name = _need_object(args)
        _validate(doc, name)
        c = doc.get(name, "coaction").value
        base = coinvariants(c)
        can, bij = canonical_map(c, base)
        return ("verified" if bij else "refuted",
                {"object": name, "bijective": bij,
                 "base_dim": base.dim,
                 "balanced_dim": can.rows, "target_dim": can.cols, "rank": can.rank})

    if verb == "qpb-check":
        name = _need_object(args)
        _validate(doc, name)
        ledger = check_qpb(doc.get(name, "bundle").value)
        return ("verified" if ledger.ok else "refuted",
                {"object": name, "claims": _claims_json(ledger)})

    if verb == "cosemisimple":
        name = _need_object(args)
        _validate(doc, name)
        h = doc.get(name, "hopf").value
        try:
            val = is_cosemisimple(h)
        except UnsupportedFieldError as e:
            return "unsupported", {"object": name, "cosemisimple": "unsupported",
                                   "message": str(e)}
        return ("verified" if val else "refuted",
                {"object": name, "cosemisimple": val})

    if verb == "reduce":
        name = _need_object(args)
        _validate(doc, name)
        bundle = doc.get(name, "bundle").value
        seed = _resolve_seed(doc, args, bundle, "seed")
        reduced, ledger = hopf_image_reduction(bundle, seed)
        return ("verified" if ledger.ok else "refuted",
                {"object": name,
                 "claims": _claims_json(ledger),
                 "hopf_image": _subspace_json(field, reduced.hopf_inclusion.carrier),
                 "stable_ideal": _subspace_json(field, reduced.ideal),
                 "reduced_total_dim": reduced.bundle.coaction.algebra.dim})

    if verb == "reduce-morphism":
        name = _need_object(args)
        bm_obj = doc.get(name, "bundle_morphism")
        src = doc.get(bm_obj.refs["source"], "bundle").value
        dst = doc.get(bm_obj.refs["target"], "bundle").value
        _validate(doc, bm_obj.refs["source"])
        _validate(doc, bm_obj.refs["target"])
        src_red, _ = hopf_image_reduction(src, _resolve_seed(doc, args, src, "seed"))
        dst_red, _ = hopf_image_reduction(dst, _resolve_seed(doc, args, dst, "seed-target"))
        out = reduce_morphism(bm_obj.value, src_red, dst_red)
        return "verified", {
            "object": name,
            "reduced_phi": [[field.serialize(x) for x in out.phi.matrix.row(i)]
                            for i in range(out.phi.matrix.rows)],
            "reduced_psi": [[field.serialize(x) for x in out.psi.row(i)]
                            for i in range(out.psi.rows)]}

    if verb == "equivalent":
        if not args.forward or not args.backward:
            raise DocumentError("equivalent needs --forward and --backward witnesses")
        fwd_obj = doc.get(args.forward, "bundle_morphism")
        bwd_obj = doc.get(args.backward, "bundle_morphism")
        if (fwd_obj.refs["source"] != bwd_obj.refs["target"]
                or fwd_obj.refs["target"] != bwd_obj.refs["source"]):
            raise DocumentError("witnesses must run in opposite directions "
                                "between the same two bundles")
        b1 = doc.get(fwd_obj.refs["source"], "bundle").value
        b2 = doc.get(fwd_obj.refs["target"], "bundle").value
        _validate(doc, fwd_obj.refs["source"])
        _validate(doc, fwd_obj.refs["target"])
        r1, _ = hopf_image_reduction(b1, _resolve_seed(doc, args, b1, "seed"))
        r2, _ = hopf_image_reduction(b2, _resolve_seed(doc, args, b2, "seed-target"))
        wfwd = reduce_morphism(fwd_obj.value, r1, r2)
        wbwd = reduce_morphism(bwd_obj.value, r2, r1)
        verdict = bundles_equivalent(r1, r2, wfwd, wbwd)
        return ("verified" if verdict else "refuted",
                {"forward": args.forward, "backward": args.backward,
                 "equivalent": bool(verdict),
                 "reason": "" if verdict else str(verdict.witness)})

    raise DocumentError(f"unknown verb {verb!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hopfkit",
        description="Exact verification of Hopf-algebraic symmetry on documents")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("file", help="input document (JSON)")
    p.add_argument("--object", help="name of the object the verb acts on")
    p.add_argument("--seed", help="subspace bounding the stable ideal (source side)")
    p.add_argument("--seed-target", dest="seed_target",
                   help="seed for the target bundle (reduce-morphism / equivalent)")
    p.add_argument("--forward", help="bundle morphism witness b1 -> b2")
    p.add_argument("--backward", help="bundle morphism witness b2 -> b1")
    p.add_argument("--report", help="write the report document here instead of stdout")
    return p


def _execute(args) -> tuple[int, str]:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        report = {"verb": args.verb, "status": "error", "exit_code": 2, "message": str(e)}
        return 2, json.dumps({"report": report}, sort_keys=True, indent=2) + "\n"

    doc = None
    try:
        doc = parse_document(text)
        status, extra = _run_verb(doc, args)
        report = {"verb": args.verb, "status": status, "exit_code": _EXIT[status]}
        report.update(extra)
    except HopfkitError as e:
        report = {"verb": args.verb, "status": "error", "exit_code": 2, "message": str(e)}
    if doc is None:
        return report["exit_code"], json.dumps({"report": report},
                                               sort_keys=True, indent=2) + "\n"
    return report["exit_code"], serialize_document(doc, report)


def run(argv) -> tuple[int, str]:
    """Execute one command; returns (exit code, report text)."""
    return _execute(build_parser().parse_args(argv))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv if argv is not None else sys.argv[1:])
    code, text = _execute(args)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
