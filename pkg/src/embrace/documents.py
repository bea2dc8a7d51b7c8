"""Problem documents: JSON in, resolved objects out, and back.

A document names a field, a quiver, a structure on it, cochains,
complexes, chain maps, deformations and a task list.  It is validated
against :data:`SCHEMA` before anything is built; every later failure
(unknown names, degree mismatches, non-cocycles) is reported as an
:class:`InputError` carrying a JSON-path style location.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from importlib import resources

import jsonschema

from .cochains import Cochain
from .graded import Arrow, GradedQuiver
from .linalg import FieldSpec
from .structures import KINDS, AInfStructure, StructuredCategory
from .twisted import ComplexWindow

OPS = ("hh", "check", "embr", "obstruct", "lift", "gauge", "verify")

_LC = {"type": "object", "additionalProperties": {"type": ["string", "integer"]}}

_RECORD = {
    "type": "object",
    "required": ["path", "args", "value"],
    "properties": {
        "arity": {"type": "integer", "minimum": 0},
        "internal_degree": {"type": "integer"},
        "path": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "args": {"type": "array", "items": {"type": "string"}},
        "value": _LC,
    },
    "additionalProperties": False,
}

_RECORDS = {"type": "array", "items": _RECORD}

_ENTRY = {
    "type": "object",
    "required": ["from_pos", "to_pos", "value"],
    "properties": {"from_pos": {"type": "integer"}, "to_pos": {"type": "integer"}, "value": _LC},
    "additionalProperties": False,
}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "problem document",
    "type": "object",
    "required": ["field", "quiver", "structure"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "field": {"type": "string", "pattern": r"^(Q|GF\([0-9]+\))$"},
        "quiver": {
            "type": "object",
            "required": ["objects", "arrows"],
            "additionalProperties": False,
            "properties": {
                "name": {"type": "string"},
                "objects": {"type": "array", "items": {"type": "string"}, "minItems": 1},
                "window": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
                "arrows": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["source", "target", "name", "degree"],
                        "additionalProperties": False,
                        "properties": {
                            "source": {"type": "string"},
                            "target": {"type": "string"},
                            "name": {"type": "string", "minLength": 1},
                            "degree": {"type": "integer"},
                        },
                    },
                },
            },
        },
        "structure": {
            "type": "object",
            "required": ["kind", "components"],
            "additionalProperties": False,
            "properties": {"kind": {"enum": list(KINDS)}, "components": _RECORDS},
        },
        "cochains": {"type": "object", "additionalProperties": _RECORDS},
        "complexes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["object", "summands"],
                "additionalProperties": False,
                "properties": {
                    "object": {"type": "string"},
                    "window": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
                    "summands": {
                        "type": "array",
                        "minItems": 1,
                        "items": {
                            "type": "object",
                            "required": ["position", "object"],
                            "additionalProperties": False,
                            "properties": {
                                "position": {"type": "integer"},
                                "object": {"type": "string"},
                                "shift": {"type": "integer"},
                            },
                        },
                    },
                    "delta": {"type": "array", "items": _ENTRY},
                },
            },
        },
        "chain_maps": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["source", "target", "components"],
                "additionalProperties": False,
                "properties": {
                    "source": {"type": "string"},
                    "target": {"type": "string"},
                    "components": {"type": "array", "items": _ENTRY},
                },
            },
        },
        "deformations": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["cocycle"],
                "additionalProperties": False,
                "properties": {
                    "base": {"const": "structure"},
                    "cocycle": {"oneOf": [{"type": "string"}, _RECORDS]},
                },
            },
        },
        "window": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        "tasks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["op"],
                "additionalProperties": False,
                "properties": {
                    "op": {"enum": list(OPS)},
                    "degree": {"type": "integer", "minimum": 0},
                    "deformation": {"type": "string"},
                    "source": {"type": "string"},
                    "target": {"type": "string"},
                    "complex": {"type": "string"},
                    "suite": {"type": "string"},
                    "arity_max": {"type": "integer", "minimum": 0},
                },
            },
        },
    },
}


class InputError(ValueError):
    """A document that cannot be used; ``location`` points into it."""

    def __init__(self, location, message):
        super().__init__("%s: %s" % (location, message))
        self.location = location
        self.message = message


def _loc(path):
    out = "$"
    for p in path:
        out += "[%d]" % p if isinstance(p, int) else ".%s" % p
    return out


@dataclass
class ChainMap:
    name: str
    source: str
    target: str
    components: dict  # {(to_pos, from_pos): lc of base arrow ids}


@dataclass
class Problem:
    """A parsed document with every name resolved."""

    name: str
    field: FieldSpec
    quiver: GradedQuiver
    category: StructuredCategory
    cochains: dict = dc_field(default_factory=dict)
    complexes: dict = dc_field(default_factory=dict)
    chain_maps: dict = dc_field(default_factory=dict)
    deformations: dict = dc_field(default_factory=dict)  # name -> cochain
    deformation_refs: dict = dc_field(default_factory=dict)  # name -> cochain name or None
    window: tuple = None
    tasks: list = dc_field(default_factory=list)

    def complex_window(self):
        """``window`` if given, else the hull of all complexes."""
        if self.window is not None:
            return self.window
        cs = list(self.complexes.values())
        if not cs:
            return None
        return (min(C.window[0] for C in cs), max(C.window[1] for C in cs))


# ------------------------------------------------------------------ parsing


def validate(doc):
    """Schema check; raises :class:`InputError` at the first (deepest-path-first) violation."""
    v = jsonschema.Draft202012Validator(SCHEMA)
    errors = sorted(v.iter_errors(doc), key=lambda e: (list(map(str, e.absolute_path)), e.message))
    if errors:
        e = errors[0]
        raise InputError(_loc(e.absolute_path), e.message)


def _lc(quiver, src, tgt, value, where):
    F = quiver.field
    out = {}
    for name, s in value.items():
        try:
            f = quiver.arrow_id(src, tgt, name)
        except (KeyError, ValueError):
            raise InputError(where, "no arrow %r from %s to %s" % (name, src, tgt)) from None
        try:
            c = F.parse_scalar(s) if isinstance(s, str) else F(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(where, "bad scalar %r (%s)" % (s, exc)) from None
        if c:
            out[f] = c
    return out


def _cochain(quiver, records, where):
    try:
        return Cochain.from_records(quiver, records)
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise InputError(where, str(exc)) from None


def _complex(quiver, doc, where):
    name = doc["object"]
    terms = {}
    for k, s in enumerate(doc["summands"]):
        p = s["position"]
        if s["object"] not in quiver.objects:
            raise InputError("%s.summands[%d]" % (where, k), "unknown object %r" % s["object"])
        if s.get("shift", -p) != -p:
            raise InputError("%s.summands[%d]" % (where, k),
                             "position %d carries shift %d, expected %d" % (p, s["shift"], -p))
        if p in terms:
            raise InputError("%s.summands[%d]" % (where, k), "position %d repeated" % p)
        terms[p] = s["object"]
    diffs = {}
    for k, e in enumerate(doc.get("delta", [])):
        loc = "%s.delta[%d]" % (where, k)
        p, q = e["from_pos"], e["to_pos"]
        if q != p + 1:
            raise InputError(loc, "differential entries go from position p to p + 1")
        if p not in terms or q not in terms:
            raise InputError(loc, "position outside the complex")
        lc = _lc(quiver, terms[p], terms[q], e["value"], loc + ".value")
        for f in lc:
            if quiver.degree(f) != 0:
                raise InputError(loc, "differential entries need degree-0 arrows")
        if lc:
            diffs[p] = lc
    try:
        C = ComplexWindow(name, terms, diffs)
    except ValueError as exc:
        raise InputError(where, str(exc)) from None
    if "window" in doc and tuple(doc["window"]) != C.window:
        raise InputError(where + ".window", "summands occupy %s" % (C.window,))
    return C


def parse(doc, check=True):
    """Validate and resolve a document (a dict) into a :class:`Problem`.

    ``check=False`` accepts a structure without testing ``b{b} = 0``, so that
    the caller can report the failure itself.
    """
    validate(doc)
    try:
        F = FieldSpec.parse(doc["field"])
    except ValueError as exc:
        raise InputError("$.field", str(exc)) from None
    qd = doc["quiver"]
    try:
        arrows = [Arrow(a["source"], a["target"], a["name"], a["degree"]) for a in qd["arrows"]]
        Q = GradedQuiver(F, qd["objects"], arrows, window=qd.get("window"), name=qd.get("name"))
    except ValueError as exc:
        raise InputError("$.quiver", str(exc)) from None
    sd = doc["structure"]
    mu = _cochain(Q, sd["components"], "$.structure.components")
    try:
        cat = StructuredCategory(AInfStructure(Q, mu, sd["kind"]), name=doc.get("name") or Q.name, check=check)
    except ValueError as exc:
        raise InputError("$.structure", str(exc)) from None
    prob = Problem(doc.get("name", Q.name or ""), F, Q, cat)
    for name, recs in doc.get("cochains", {}).items():
        prob.cochains[name] = _cochain(Q, recs, "$.cochains.%s" % name)
    for k, cd in enumerate(doc.get("complexes", [])):
        C = _complex(Q, cd, "$.complexes[%d]" % k)
        if C.name in prob.complexes or C.name in Q.objects:
            raise InputError("$.complexes[%d].object" % k, "name %r already used" % C.name)
        prob.complexes[C.name] = C
    for name, md in doc.get("chain_maps", {}).items():
        where = "$.chain_maps.%s" % name
        for end in ("source", "target"):
            if md[end] not in prob.complexes:
                raise InputError("%s.%s" % (where, end), "unknown complex %r" % md[end])
        S, T = prob.complexes[md["source"]], prob.complexes[md["target"]]
        comps = {}
        for k, e in enumerate(md["components"]):
            loc = "%s.components[%d]" % (where, k)
            p, q = e["from_pos"], e["to_pos"]
            if p not in S.index or q not in T.index:
                raise InputError(loc, "position outside source or target")
            lc = _lc(Q, S.carrier.obj(S.index[p]), T.carrier.obj(T.index[q]), e["value"], loc + ".value")
            if lc:
                comps[(q, p)] = lc
        prob.chain_maps[name] = ChainMap(name, S.name, T.name, comps)
    for name, dd in doc.get("deformations", {}).items():
        where = "$.deformations.%s.cocycle" % name
        ref = dd["cocycle"]
        if isinstance(ref, str):
            if ref not in prob.cochains:
                raise InputError(where, "unknown cochain %r" % ref)
            prob.deformations[name] = prob.cochains[ref]
            prob.deformation_refs[name] = ref
        else:
            prob.deformations[name] = _cochain(Q, ref, where)
            prob.deformation_refs[name] = None
    if "window" in doc:
        prob.window = tuple(doc["window"])
    for k, t in enumerate(doc.get("tasks", [])):
        for key in ("deformation", "source", "target"):
            if key in t and t[key] not in prob.deformations:
                raise InputError("$.tasks[%d].%s" % (k, key), "unknown deformation %r" % t[key])
        if "complex" in t and t["complex"] not in prob.complexes:
            raise InputError("$.tasks[%d].complex" % k, "unknown complex %r" % t["complex"])
        prob.tasks.append(dict(t))
    return prob


def loads(text, check=True):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("line %d column %d" % (exc.lineno, exc.colno), exc.msg) from None
    return parse(doc, check)


def load(path, check=True):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(path), exc.strerror or str(exc)) from None
    return loads(text, check)


# -------------------------------------------------------------- serializing


def _lc_doc(quiver, lc):
    F = quiver.field
    return {quiver.arrows[f].name: F.format(c) for f, c in sorted(lc.items())}


def _complex_doc(quiver, C):
    return {
        "object": C.name,
        "window": list(C.window),
        "summands": [{"position": p, "object": C.carrier.obj(C.index[p]), "shift": -p} for p in C.positions],
        "delta": [{"from_pos": p, "to_pos": p + 1, "value": _lc_doc(quiver, C.differential(p))}
                  for p in C.positions[:-1] if C.differential(p)],
    }


def serialize(prob):
    """Inverse of :func:`parse` up to formatting of scalars and ordering."""
    Q = prob.quiver
    doc = {
        "name": prob.name,
        "field": prob.field.name,
        "quiver": {
            "name": Q.name or "",
            "objects": list(Q.objects),
            "window": list(Q.window),
            "arrows": [{"source": a.source, "target": a.target, "name": a.name, "degree": a.degree}
                       for a in Q.arrows],
        },
        "structure": {"kind": prob.category.kind, "components": prob.category.mu.to_records()},
    }
    if prob.cochains:
        doc["cochains"] = {k: v.to_records() for k, v in prob.cochains.items()}
    if prob.complexes:
        doc["complexes"] = [_complex_doc(Q, C) for C in prob.complexes.values()]
    if prob.chain_maps:
        doc["chain_maps"] = {
            name: {
                "source": m.source,
                "target": m.target,
                "components": [{"from_pos": p, "to_pos": q, "value": _lc_doc(Q, lc)}
                               for (q, p), lc in sorted(m.components.items(), key=lambda kv: kv[0][::-1])],
            }
            for name, m in prob.chain_maps.items()
        }
    if prob.deformations:
        doc["deformations"] = {
            name: {"base": "structure",
                   "cocycle": prob.deformation_refs.get(name) or phi.to_records()}
            for name, phi in prob.deformations.items()
        }
    if prob.window is not None:
        doc["window"] = list(prob.window)
    if prob.tasks:
        doc["tasks"] = [dict(t) for t in prob.tasks]
    return doc


def dumps(prob):
    return json.dumps(serialize(prob), indent=1, sort_keys=True) + "\n"


# ------------------------------------------------------------------ corpus


CORPUS = ("e1", "e1_gf2", "e2")


def corpus_text(name):
    return resources.files("embrace").joinpath("corpus", name + ".json").read_text(encoding="utf-8")


def corpus(name):
    """A shipped document by name (see :data:`CORPUS`)."""
    if name not in CORPUS:
        raise KeyError("no corpus document %r; have %s" % (name, ", ".join(CORPUS)))
    return loads(corpus_text(name))
