"""Rebuild the JSON documents shipped in ``embrace/corpus``.

Each document is assembled from the library categories, so the files stay
in sync with the code; run this after changing either.
"""

import pathlib
import sys

from embrace import documents, library
from embrace.cochains import Cochain, hochschild_differential
from embrace.documents import ChainMap, Problem
from embrace.twisted import ComplexWindow

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "embrace" / "corpus"


def chain(name, start, objs, diffs):
    return ComplexWindow(name, {start + k: A for k, A in enumerate(objs)},
                         {start + k: lc for k, lc in enumerate(diffs) if lc})


def e1_problem(field):
    cat = library.dual_numbers(field)
    Q = cat.quiver
    one, x = Q.arrow_id("A", "A", "1"), Q.arrow_id("A", "A", "x")
    phi1 = Cochain(Q, {("A", (x, x)): {one: field.one}})
    psi = Cochain(Q, {("A", (x,)): {one: field.one}})
    coch = {"zero": Cochain(Q), "phi1": phi1, "psi": psi}
    defs = {"zero": "zero", "phi1": "phi1"}
    if field.kind == "rational":
        coch["phi1_dpsi"] = phi1 + hochschild_differential(cat, psi)
        coch["two_phi1"] = 2 * phi1
        defs.update({"phi1_dpsi": "phi1_dpsi", "two_phi1": "two_phi1"})
    cx = [
        chain("C1", 0, ["A"], []),
        chain("C1s", 1, ["A"], []),
        chain("C2", 0, ["A"] * 2, [{x: 1}]),
        chain("C2s", -1, ["A"] * 2, [{x: 1}]),
        chain("C3", 0, ["A"] * 3, [{x: 1}] * 2),
        chain("C4", 0, ["A"] * 4, [{x: 1}] * 3),
    ]
    maps = {
        "id_C2": ChainMap("id_C2", "C2", "C2", {(0, 0): {one: 1}, (1, 1): {one: 1}}),
        "id_C3": ChainMap("id_C3", "C3", "C3", {(p, p): {one: 1} for p in range(3)}),
        "x_C2": ChainMap("x_C2", "C2", "C2", {(0, 0): {x: 1}, (1, 1): {x: 1}}),
        "x_shift": ChainMap("x_shift", "C2", "C2s", {(0, 0): {x: 1}}),
        "proj_C2": ChainMap("proj_C2", "C2", "C1", {(0, 0): {one: 1}}),
        "incl_C1s": ChainMap("incl_C1s", "C1s", "C2", {(1, 1): {one: 1}}),
    }
    name = "E1" if field.kind == "rational" else "E1_GF%d" % field.characteristic
    prob = Problem(name, field, Q, cat, coch, {C.name: C for C in cx}, {}, {}, {}, None, [])
    for k, r in defs.items():
        prob.deformations[k] = coch[r]
        prob.deformation_refs[k] = r
    if field.kind == "rational":
        prob.chain_maps = maps
        prob.tasks = ([{"op": "check"}] + [{"op": "hh", "degree": p} for p in range(4)]
                      + [{"op": "obstruct", "deformation": "phi1", "complex": c} for c in ("C1", "C2", "C3", "C4")]
                      + [{"op": "lift", "deformation": "phi1", "complex": "C2"},
                         {"op": "gauge", "source": "phi1", "target": "phi1_dpsi"},
                         {"op": "embr", "deformation": "phi1", "complex": "C3"}])
    else:
        cx = [C for C in cx if C.name in ("C1", "C2", "C3")]
        prob.complexes = {C.name: C for C in cx}
        prob.tasks = [{"op": "hh", "degree": 2}, {"op": "gauge", "source": "zero", "target": "phi1"}]
    return prob


def e2_problem(field):
    cat = library.a2_path_category(field)
    Q = cat.quiver
    e1, e2, a = (Q.arrow_id("1", "1", "e1"), Q.arrow_id("2", "2", "e2"), Q.arrow_id("1", "2", "a"))
    psi = Cochain(Q, {("1", (e1,)): {e1: field.one}})
    dpsi = hochschild_differential(cat, psi)
    coch = {"zero": Cochain(Q), "psi": psi, "dpsi": dpsi, "two_dpsi": 2 * dpsi}
    cx = [
        chain("D1", 0, ["1"], []),
        chain("D1s", 1, ["2"], []),
        chain("D2", 0, ["1", "2"], [{a: 1}]),
        chain("D2e", 0, ["1", "1"], [{e1: 1}]),
        chain("D3", 0, ["1", "2", "2"], [{a: 1}, {}]),
        chain("D4", 0, ["1", "1", "2", "2"], [{e1: 1}, {}, {e2: 1}]),
    ]
    maps = {
        "id_D2": ChainMap("id_D2", "D2", "D2", {(0, 0): {e1: 1}, (1, 1): {e2: 1}}),
        "proj_D2": ChainMap("proj_D2", "D2", "D1", {(0, 0): {e1: 1}}),
        "incl_D1s": ChainMap("incl_D1s", "D1s", "D2", {(1, 1): {e2: 1}}),
    }
    prob = Problem("E2", field, Q, cat, coch, {C.name: C for C in cx}, maps, {}, {}, None, [])
    for k in ("zero", "dpsi", "two_dpsi"):
        prob.deformations[k] = coch[k]
        prob.deformation_refs[k] = k
    prob.tasks = ([{"op": "check"}] + [{"op": "hh", "degree": p} for p in range(3)]
                  + [{"op": "obstruct", "deformation": "dpsi", "complex": c} for c in ("D2", "D3")]
                  + [{"op": "gauge", "source": "zero", "target": "dpsi"}])
    return prob


def main():
    from embrace.linalg import FieldSpec
    probs = {"e1": e1_problem(FieldSpec.Q()), "e1_gf2": e1_problem(FieldSpec.GF(2)),
             "e2": e2_problem(FieldSpec.Q())}
    for name, prob in probs.items():
        text = documents.dumps(prob)
        documents.loads(text)  # must parse back
        path = OUT / (name + ".json")
        path.write_text(text, encoding="utf-8")
        print("wrote", path.relative_to(OUT.parent.parent.parent), file=sys.stderr)


if __name__ == "__main__":
    main()
