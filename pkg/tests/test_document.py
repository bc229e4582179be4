import json

import pytest

from hopfkit.document import parse_document, serialize_document
from hopfkit.errors import DocumentError

from docbuild import standard_document, taft_document


def test_round_trip_is_identity_on_canonical_documents():
    for doc in (standard_document(), taft_document()):
        text = serialize_document(doc)
        text2 = serialize_document(parse_document(text))
        assert text == text2


def test_scalar_normalization():
    text = json.dumps({
        "field": "Q",
        "objects": {
            "A": {"type": "algebra", "dim": 1, "basis": ["1"],
                  "unit": ["2/2"], "mult": [[0, 0, 0, "2/4"]]},
        },
    })
    doc = parse_document(text)
    out = serialize_document(doc)
    assert '"1/2"' in out
    assert '"2/4"' not in out


def test_fp_scalars():
    text = json.dumps({
        "field": {"Fp": 5},
        "objects": {
            "A": {"type": "algebra", "dim": 1, "basis": ["1"],
                  "unit": [6], "mult": [[0, 0, 0, "1/2"]]},
        },
    })
    doc = parse_document(text)
    out = json.loads(serialize_document(doc))
    # 6 = 1 mod 5 and 1/2 = 3 mod 5
    assert out["objects"]["A"]["unit"] == [1]
    assert out["objects"]["A"]["mult"] == [[0, 0, 0, 3]]


def test_unresolved_reference_named():
    text = json.dumps({
        "field": "Q",
        "objects": {
            "c": {"type": "coaction", "algebra": "nope", "hopf": "nope", "map": []},
        },
    })
    with pytest.raises(DocumentError, match="nope"):
        parse_document(text)


def test_non_prime_modulus_rejected():
    with pytest.raises(DocumentError, match="prime"):
        parse_document(json.dumps({"field": {"Fp": 6}, "objects": {}}))


def test_unknown_key_rejected():
    text = json.dumps({
        "field": "Q",
        "objects": {
            "A": {"type": "algebra", "dim": 1, "basis": ["1"], "unit": [1],
                  "mult": [], "comult": []},
        },
    })
    with pytest.raises(DocumentError, match="comult"):
        parse_document(text)


def test_malformed_scalar_rejected():
    text = json.dumps({
        "field": "Q",
        "objects": {
            "A": {"type": "algebra", "dim": 1, "basis": ["1"],
                  "unit": [1.5], "mult": []},
        },
    })
    with pytest.raises(DocumentError):
        parse_document(text)


def test_index_out_of_range_rejected():
    text = json.dumps({
        "field": "Q",
        "objects": {
            "A": {"type": "algebra", "dim": 1, "basis": ["1"],
                  "unit": [1], "mult": [[0, 0, 1, 1]]},
        },
    })
    with pytest.raises(DocumentError, match="out of range"):
        parse_document(text)
