import json

import pytest

from hopfkit.cli import run
from hopfkit.document import serialize_document

from docbuild import standard_document, taft_document, write


@pytest.fixture(scope="module")
def doc_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("docs") / "standard.json"
    write(standard_document(), path)
    return str(path)


@pytest.fixture(scope="module")
def taft_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("docs") / "taft.json"
    write(taft_document(), path)
    return str(path)


def report_of(text):
    return json.loads(text)["report"]


class TestExitCodes:
    def test_check_hopf_valid(self, doc_path):
        code, text = run(["check-hopf", doc_path, "--object", "HZ2"])
        assert code == 0
        assert report_of(text)["status"] == "verified"

    def test_hopf_image_of_grading(self, doc_path):
        code, text = run(["hopf-image", doc_path, "--object", "gradeX"])
        assert code == 0
        rep = report_of(text)
        assert rep["hopf_image"]["dim"] == 2

    def test_inner_faithful_true(self, doc_path):
        assert run(["inner-faithful", doc_path, "--object", "copZ2"])[0] == 0

    def test_inner_faithful_false_is_exit_one(self, doc_path):
        assert run(["inner-faithful", doc_path, "--object", "trivX"])[0] == 1

    def test_coinvariants(self, doc_path):
        code, text = run(["coinvariants", doc_path, "--object", "gradeX"])
        assert code == 0
        assert report_of(text)["coinvariants"]["dim"] == 1

    def test_galois_refuted_on_grading(self, doc_path):
        assert run(["galois", doc_path, "--object", "gradeX"])[0] == 1

    def test_galois_verified_on_coproduct(self, doc_path):
        assert run(["galois", doc_path, "--object", "copZ2"])[0] == 0

    def test_qpb_check(self, doc_path):
        assert run(["qpb-check", doc_path, "--object", "bundleCop"])[0] == 0
        assert run(["qpb-check", doc_path, "--object", "bundleGrade"])[0] == 1

    def test_reduce_embedding_verified(self, doc_path):
        code, text = run(["reduce", doc_path, "--object", "bundleEmbed",
                          "--seed", "seedAug"])
        assert code == 0
        rep = report_of(text)
        assert rep["hopf_image"]["dim"] == 2
        assert rep["stable_ideal"]["dim"] == 0

    def test_reduce_grading_records_refutation(self, doc_path):
        code, text = run(["reduce", doc_path, "--object", "bundleGrade",
                          "--seed", "seedX"])
        assert code == 1
        rep = report_of(text)
        statuses = {c["name"]: c["status"] for c in rep["claims"]}
        assert statuses["reduced-coaction-inner-faithful"] == "refuted"

    def test_reduce_defaults_to_augmentation_seed(self, doc_path):
        code, _ = run(["reduce", doc_path, "--object", "bundleCop"])
        assert code == 0

    def test_cosemisimple(self, doc_path, taft_path):
        assert run(["cosemisimple", doc_path, "--object", "HZ2"])[0] == 0
        assert run(["cosemisimple", doc_path, "--object", "Sweedler"])[0] == 1
        code, text = run(["cosemisimple", taft_path, "--object", "T"])
        assert code == 2
        assert report_of(text)["cosemisimple"] == "unsupported"

    def test_reduce_morphism(self, doc_path):
        code, text = run(["reduce-morphism", doc_path, "--object", "intoEmbed"])
        assert code == 0
        rep = report_of(text)
        assert rep["reduced_psi"] == [[1, 0], [0, 1]]

    def test_equivalent(self, doc_path):
        code, text = run(["equivalent", doc_path,
                          "--forward", "intoEmbed", "--backward", "intoEmbed"])
        # forward and backward must run in opposite directions: error
        assert code == 2

    def test_equivalent_identity(self, doc_path):
        code, text = run(["equivalent", doc_path,
                          "--forward", "idCop", "--backward", "idCop"])
        assert code == 0
        assert report_of(text)["equivalent"] is True

    def test_unknown_object_is_error(self, doc_path):
        assert run(["check-hopf", doc_path, "--object", "missing"])[0] == 2

    def test_missing_file_is_error(self):
        assert run(["check-hopf", "/nonexistent.json"])[0] == 2

    def test_bad_document_is_error(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"field": "Q", "objects": {"A": {"type": "algebra"}}}')
        assert run(["check-hopf", str(p), "--object", "A"])[0] == 2

    def test_report_flag_writes_file(self, doc_path, tmp_path):
        from hopfkit.cli import main
        out = tmp_path / "report.json"
        code = main(["hopf-image", doc_path, "--object", "copZ2",
                     "--report", str(out)])
        assert code == 0
        written = json.loads(out.read_text())
        assert written["report"]["hopf_image"]["dim"] == 2


class TestValidationGate:
    def test_invalid_object_blocks_use(self, tmp_path):
        # a coaction that fails counitality is rejected before hopf-image
        doc = standard_document()
        bad = json.loads(serialize_document(doc))
        bad["objects"]["gradeX"]["map"] = [[0, 0, 0, 1], [1, 1, 0, 1], [1, 1, 1, 1]]
        p = tmp_path / "invalid.json"
        p.write_text(json.dumps(bad))
        code, text = run(["hopf-image", str(p), "--object", "gradeX"])
        assert code == 2
        assert "fails validation" in report_of(text)["message"]

    def test_unchecked_flag_bypasses_validation(self, tmp_path):
        doc = standard_document()
        raw = json.loads(serialize_document(doc))
        raw["objects"]["gradeX"]["map"] = [[0, 0, 0, 1], [1, 1, 0, 1], [1, 1, 1, 1]]
        raw["objects"]["gradeX"]["unchecked"] = True
        p = tmp_path / "unchecked.json"
        p.write_text(json.dumps(raw))
        code, _ = run(["hopf-image", str(p), "--object", "gradeX"])
        assert code == 0


class TestDeterminism:
    def test_reports_byte_identical_across_runs(self, doc_path, taft_path):
        commands = [
            ["check-hopf", doc_path, "--object", "HZ2"],
            ["check-hopf", doc_path, "--object", "Sweedler"],
            ["check-coaction", doc_path, "--object", "gradeX"],
            ["hopf-image", doc_path, "--object", "embed"],
            ["inner-faithful", doc_path, "--object", "copZ2"],
            ["coinvariants", doc_path, "--object", "gradeX"],
            ["galois", doc_path, "--object", "copZ2"],
            ["qpb-check", doc_path, "--object", "bundleEmbed"],
            ["reduce", doc_path, "--object", "bundleEmbed", "--seed", "seedAug"],
            ["reduce", doc_path, "--object", "bundleGrade", "--seed", "seedX"],
            ["cosemisimple", doc_path, "--object", "Sweedler"],
            ["cosemisimple", taft_path, "--object", "T"],
            ["reduce-morphism", doc_path, "--object", "intoEmbed"],
            ["equivalent", doc_path, "--forward", "idCop", "--backward", "idCop"],
        ]
        for cmd in commands:
            code1, text1 = run(cmd)
            code2, text2 = run(cmd)
            assert code1 == code2
            assert text1 == text2, f"non-deterministic output for {cmd}"
