import io
import json
import os
import subprocess
import sys

import pytest

from embrace import cli, documents, graded

CORPUS = os.path.join(os.path.dirname(documents.__file__), "corpus")
E1 = os.path.join(CORPUS, "e1.json")
E2 = os.path.join(CORPUS, "e2.json")

FIELD_DOC = {
    "name": "k",
    "field": "Q",
    "quiver": {"name": "k", "objects": ["A"], "window": [0, 0],
               "arrows": [{"source": "A", "target": "A", "name": "1", "degree": 0}]},
    "structure": {"kind": "linear", "components": [
        {"arity": 2, "internal_degree": 0, "path": ["A", "A", "A"], "args": ["1", "1"], "value": {"1": "1"}}]},
}


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def field_doc(tmp_path):
    p = tmp_path / "field.json"
    p.write_text(json.dumps(FIELD_DOC))
    return str(p)


# ------------------------------------------------------------ exit codes


def test_hh_e1_degree_two():
    code, out, _ = run("hh", "--input", E1, "--degree", "2")
    assert code == 0
    assert "HH^2 of E1: dim 1" in out


def test_hh_of_field(field_doc):
    code, out, _ = run("hh", "--input", field_doc, "--degree", "1")
    assert code == 0 and "dim 0" in out
    code, out, _ = run("hh", "--input", field_doc, "--degree", "0")
    assert "dim 1" in out


def test_check_passes_on_corpus():
    for path in (E1, E2):
        code, out, _ = run("check", "--input", path)
        assert code == 0, out
        assert "valid" in out


def test_check_reports_invalid_structure(tmp_path):
    doc = json.loads(documents.corpus_text("e1"))
    doc["structure"]["components"][1]["value"] = {"x": "2"}
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run("check", "--input", str(p))
    assert code == 1
    assert "associativity: FAILS" in out or "FAIL" in out


@pytest.mark.parametrize("argv", [
    ("hh",),
    ("hh", "--input", "/nonexistent/doc.json"),
    ("verify", "nosuchsuite"),
    ("frobnicate",),
    ("hh", "--input", E1, "--degree", "two"),
])
def test_input_errors_exit_two(argv):
    code, out, err = run(*argv)
    assert code == 2
    assert "input error" in err
    assert out == ""


def test_malformed_document_exits_two(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"field": "Q"}')
    code, _, err = run("hh", "--input", str(p))
    assert code == 2 and "$" in err


def test_unknown_deformation_exits_two():
    code, _, err = run("obstruct", "--input", E1, "--deformation", "nope", "--complex", "C2")
    assert code == 2


def test_fault_injection_exits_one(monkeypatch):
    # an asymmetric Koszul sign breaks the brace relation
    monkeypatch.setattr(graded, "koszul_swap_sign", lambda m, n: (m * n + (m > n)) & 1)
    code, out, _ = run("verify", "brace", "--seed", "0")
    assert code == 1
    assert "FAIL" in out
    assert "counterexample:" in out


# ------------------------------------------------------------ task output


def test_obstruct_c3_and_lift_c2():
    code, out, _ = run("obstruct", "--input", E1, "--deformation", "phi1", "--complex", "C3")
    assert code == 0 and "obstructed" in out
    code, out, _ = run("lift", "--input", E1, "--deformation", "phi1", "--complex", "C2")
    assert code == 0 and "obstructed" not in out


def test_records_are_json_lines():
    code, out, _ = run("obstruct", "--input", E1, "--format", "records")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[-1]["summary"]["failed"] == []
    by = {r["complex"]: r for r in recs[:-1]}
    assert by["C2"]["status"] == "lifts"
    assert by["C3"]["status"] == "obstructed"
    assert by["C3"]["class"] == [{"from_pos": 0, "to_pos": 2, "value": {"1": "-1"}}]


def test_gauge_tasks_from_document():
    code, out, _ = run("gauge", "--input", E1)
    assert code == 0
    assert "holds" in out


def test_gauge_between_distinct_classes():
    code, out, _ = run("gauge", "--input", E1, "--source", "phi1", "--target", "two_phi1")
    assert "not a coboundary" in out


def test_embr_reports_curvature():
    code, out, _ = run("embr", "--input", E1, "--deformation", "phi1", "--complex", "C3")
    assert code == 0
    assert "complex C3: curvature 0" in out
    assert '[{"from_pos":0,"to_pos":2,"value":{"1":"-1"}}] (class nonzero)' in out


def test_parallel_matches_sequential():
    seq = run("hh", "--input", E1)
    par = run("hh", "--input", E1, "--parallel")
    assert seq == par


def test_repeated_runs_are_identical():
    a = run("obstruct", "--input", E1, "--format", "records")
    b = run("obstruct", "--input", E1, "--format", "records")
    assert a == b


def test_help_exits_zero():
    code, _, _ = run("--help")
    assert code == 0


def test_module_entry_point(field_doc):
    proc = subprocess.run([sys.executable, "-m", "embrace", "hh", "--input", field_doc, "--degree", "0"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert "dim 1" in proc.stdout
