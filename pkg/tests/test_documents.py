import copy
import json

import pytest

from embrace import documents
from embrace.documents import CORPUS, InputError, dumps, loads, parse, serialize


def raw(name):
    return json.loads(documents.corpus_text(name))


@pytest.mark.parametrize("name", CORPUS)
def test_round_trip(name):
    prob = documents.corpus(name)
    again = loads(dumps(prob))
    assert again.category.mu == prob.category.mu
    assert again.cochains == prob.cochains
    assert dumps(again) == dumps(prob)
    assert serialize(again) == raw(name)


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_names_resolve(name):
    prob = documents.corpus(name)
    for t in prob.tasks:
        for key in ("deformation", "source", "target"):
            if key in t:
                assert t[key] in prob.deformations
        if "complex" in t:
            assert t["complex"] in prob.complexes


def test_unknown_corpus_name():
    with pytest.raises(KeyError):
        documents.corpus("nope")


def _fails(doc, location_prefix):
    with pytest.raises(InputError) as info:
        parse(doc)
    assert info.value.location.startswith(location_prefix), info.value.location
    return info.value


def test_schema_error_has_location():
    doc = raw("e1")
    doc["complexes"][0]["summands"][0]["position"] = "zero"
    _fails(doc, "$.complexes[0].summands[0].position")


def test_missing_required_key():
    doc = raw("e1")
    del doc["structure"]
    _fails(doc, "$")


def test_bad_field():
    doc = raw("e1")
    doc["field"] = "GF(4)"
    _fails(doc, "$.field")


def test_shift_must_be_minus_position():
    doc = raw("e1")
    k = next(i for i, c in enumerate(doc["complexes"]) if c["object"] == "C2")
    doc["complexes"][k]["summands"][1]["shift"] = 1
    err = _fails(doc, "$.complexes[%d].summands[1]" % k)
    assert "shift" in err.message


def test_unknown_arrow_in_differential():
    doc = raw("e1")
    k = next(i for i, c in enumerate(doc["complexes"]) if c["delta"])
    doc["complexes"][k]["delta"][0]["value"] = {"y": "1"}
    _fails(doc, "$.complexes[%d].delta[0].value" % k)


def test_unresolved_deformation_reference():
    doc = raw("e1")
    doc["deformations"]["bad"] = {"base": "structure", "cocycle": "missing"}
    _fails(doc, "$.deformations.bad.cocycle")


def test_unresolved_task_names():
    doc = raw("e1")
    doc["tasks"].append({"op": "obstruct", "complex": "C9", "deformation": "phi1"})
    _fails(doc, "$.tasks[%d].complex" % (len(doc["tasks"]) - 1))
    doc = raw("e1")
    doc["tasks"].append({"op": "gauge", "source": "phi1", "target": "ghost"})
    _fails(doc, "$.tasks[%d].target" % (len(doc["tasks"]) - 1))


def test_chain_map_unknown_complex():
    doc = raw("e1")
    name = next(iter(doc["chain_maps"]))
    doc["chain_maps"][name]["target"] = "nowhere"
    _fails(doc, "$.chain_maps.%s.target" % name)


def test_invalid_structure_rejected_unless_unchecked():
    doc = raw("e1")
    doc["structure"]["components"][1]["value"] = {"x": "2"}
    _fails(doc, "$.structure")
    prob = parse(copy.deepcopy(doc), check=False)
    assert prob.category.mu != documents.corpus("e1").category.mu


def test_bad_scalar():
    doc = raw("e1")
    doc["cochains"]["phi1"][0]["value"] = {"1": "1/0"}
    _fails(doc, "$.cochains.phi1")


def test_malformed_json():
    with pytest.raises(InputError) as info:
        loads("{ not json")
    assert info.value.location.startswith("line 1")


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        documents.load(tmp_path / "absent.json")


def test_duplicate_complex_name():
    doc = raw("e1")
    doc["complexes"].append(copy.deepcopy(doc["complexes"][0]))
    _fails(doc, "$.complexes[%d].object" % (len(doc["complexes"]) - 1))
