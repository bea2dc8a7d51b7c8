"""Task runners behind the command line.

Each runner takes a parsed :class:`~embrace.documents.Problem`, one task
dict and the shared options, and returns a :class:`TaskResult` holding
machine records and the equivalent human-readable lines.  Nothing here
depends on wall-clock time or hash order, so reports are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from . import cochains as C
from . import suites
from .deformation import (
    DeformationLab, FirstOrderDeformation, coboundary_ranks, exhaustive_gauges, find_gauge,
    gauge_apply, hochschild_cohomology, hochschild_space, window_category,
)
from .documents import InputError
from .structures import check_structure


@dataclass
class Options:
    seed: int = 0
    arity_max: int = 4


@dataclass
class TaskResult:
    op: str
    ok: bool
    records: list = dc_field(default_factory=list)
    lines: list = dc_field(default_factory=list)


def _js(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _lc_doc(Q, lc):
    return {Q.arrows[f].name: Q.field.format(c) for f, c in sorted(lc.items())}


def _entries(Q, S, T, matrix):
    """Matrix ``{(j, i): base lc}`` between complexes as position-indexed entries."""
    out = [{"from_pos": S.position(i), "to_pos": T.position(j), "value": _lc_doc(Q, lc)}
           for (j, i), lc in matrix.items() if lc]
    return sorted(out, key=lambda e: (e["from_pos"], e["to_pos"]))


def _deformation(prob, name, where):
    if name not in prob.deformations:
        raise InputError(where, "unknown deformation %r" % name)
    try:
        return FirstOrderDeformation(prob.category, prob.deformations[name], name)
    except ValueError as exc:
        raise InputError("$.deformations.%s" % name, str(exc)) from None


def _complexes(prob, task):
    if "complex" in task:
        if task["complex"] not in prob.complexes:
            raise InputError("complex", "unknown complex %r" % task["complex"])
        return [prob.complexes[task["complex"]]]
    if not prob.complexes:
        raise InputError("$.complexes", "the document defines no complexes")
    return list(prob.complexes.values())


def _lab(prob, defo, cxs):
    try:
        return DeformationLab(defo, cxs, window=None)
    except ValueError as exc:
        raise InputError("$.complexes", str(exc)) from None


# ---------------------------------------------------------------------- hh


def run_hh(prob, task, opts):
    p = task.get("degree", 2)
    try:
        res = hochschild_cohomology(prob.category, p)
    except ValueError as exc:
        raise InputError("$.structure", str(exc)) from None
    reps = [r.to_records() for r in res.representatives]
    rec = {"op": "hh", "degree": p, "dim": res.dim, "cocycle_dim": res.cocycle_dim,
           "coboundary_dim": res.coboundary_dim, "representatives": reps}
    lines = ["HH^%d of %s: dim %d (cocycles %d, coboundaries %d)"
             % (p, prob.name, res.dim, res.cocycle_dim, res.coboundary_dim)]
    lines += ["  representative %d: %s" % (k + 1, _js(r)) for k, r in enumerate(reps)]
    return TaskResult("hh", True, [rec], lines)


# ------------------------------------------------------------------- check


def run_check(prob, task, opts):
    st = check_structure(prob.category.structure, full=True)
    rec = {"op": "check", "kind": prob.category.kind, "valid": st.passed, "failure": st.failure,
           "identities": st.identities}
    lines = ["structure (%s) on %s: %s" % (prob.category.kind, prob.name, "valid" if st.passed else "INVALID")]
    for name, ok in sorted(st.identities.items()):
        lines.append("  %s: %s" % (name, "holds" if ok else "FAILS"))
    if st.failure:
        lines.append("  first nonzero component: %s" % _js(st.failure))
    out = [rec]
    ok = st.passed
    for name, phi in sorted(prob.deformations.items()):
        degs = sorted(phi.hochschild_degrees())
        dphi = C.hochschild_differential(prob.category, phi) if st.passed else None
        good = st.passed and degs in ([], [2]) and not dphi
        ok = ok and good
        out.append({"op": "check", "deformation": name, "cocycle": good, "hochschild_degrees": degs,
                    "d": dphi.to_records() if dphi else []})
        lines.append("deformation %s: %s" % (name, "2-cocycle" if good else "NOT a 2-cocycle"))
        if dphi:
            lines.append("  d(phi) = %s" % _js(dphi.to_records()))
    return TaskResult("check", ok, out, lines)


# -------------------------------------------------------------------- embr


def run_embr(prob, task, opts):
    cxs = _complexes(prob, task)
    try:
        pcom, tw = window_category(prob.category, cxs, prob.window, check=False)
    except ValueError as exc:
        raise InputError("$.complexes", str(exc)) from None
    st = check_structure(pcom.structure)
    section = tw.project(pcom.mu) == prob.category.mu
    closed = tw.embr_zero_closed_form(prob.category.mu)
    generic = C.project_zero(pcom.mu)
    Q = prob.quiver
    records, lines = [], []
    ok = st.passed and section and closed == generic
    lines.append("embr of the structure onto %s (%s)" % (tw.quiver.name, ", ".join(X.name for X in cxs)))
    lines.append("  cdg identities: %s" % ("hold" if st.passed else "FAIL %s" % _js(st.failure)))
    lines.append("  projection recovers the structure: %s" % ("yes" if section else "NO"))
    lines.append("  zero part matches the closed form: %s" % ("yes" if closed == generic else "NO"))
    records.append({"op": "embr", "cdg_identities": st.identities, "section": section,
                    "closed_form": closed == generic})
    defo = _deformation(prob, task["deformation"], "deformation") if "deformation" in task else None
    lab = None
    if defo is not None:
        try:
            lab = DeformationLab(defo, cxs, category=(pcom, tw))
        except ValueError as exc:
            raise InputError("$.complexes", str(exc)) from None
    for X in cxs:
        curv = tw.to_matrix(generic.get(X.name, {}))
        rec = {"op": "embr", "complex": X.name, "curvature": _entries(Q, X, X, curv)}
        lines.append("complex %s: curvature %s" % (X.name, _js(rec["curvature"]) if curv else "0"))
        if lab is not None:
            try:
                cv = lab.characteristic_value(X.name)
            except ArithmeticError as exc:
                ok = False
                rec["characteristic_value"] = None
                rec["error"] = str(exc)
                lines.append("  characteristic value: MISMATCH %s" % exc)
            else:
                rec["deformation"] = defo.name
                rec["characteristic_value"] = _entries(Q, X, X, cv.matrix)
                rec["class_vanishes"] = cv.vanishes
                lines.append("  embr(%s) zero part: %s (class %s)" % (
                    defo.name, _js(rec["characteristic_value"]) if cv.matrix else "0",
                    "vanishes" if cv.vanishes else "nonzero"))
        records.append(rec)
    return TaskResult("embr", ok, records, lines)


# ---------------------------------------------------------- obstruct / lift


def _obstruction(prob, task, op):
    if "deformation" not in task:
        raise InputError("deformation", "%s needs a deformation" % op)
    defo = _deformation(prob, task["deformation"], "deformation")
    cxs = _complexes(prob, task)
    lab = _lab(prob, defo, cxs)
    return defo, cxs, lab


def _obstruct_one(prob, defo, lab, X, op):
    Q = prob.quiver
    try:
        rep = lab.obstruction_and_lift(X.name)
    except ArithmeticError as exc:
        rec = {"op": op, "deformation": defo.name, "complex": X.name, "status": "inconsistent", "error": str(exc)}
        return False, rec, ["%s / %s: INCONSISTENT %s" % (defo.name, X.name, exc)]
    rec = {
        "op": op,
        "deformation": defo.name,
        "complex": X.name,
        "status": "lifts" if rep.lifts else "obstructed",
        "class": _entries(Q, X, X, rep.representative),
        "witness": _entries(Q, X, X, rep.witness) if rep.lifts else None,
        "lift_space_dim": rep.lift_space_dim,
        "rank_evidence": {"lift_system": list(rep.lift_ranks), "class": list(rep.class_ranks)},
    }
    lines = ["%s / %s: %s" % (defo.name, X.name, rec["status"])]
    lines.append("  class representative: %s" % (_js(rec["class"]) if rec["class"] else "0"))
    if rep.lifts:
        lines.append("  witness delta': %s" % (_js(rec["witness"]) if rec["witness"] else "0"))
    else:
        r, ra = rep.lift_ranks
        c, ca = rep.class_ranks
        lines.append("  certificate: lift system rank %d < augmented %d; class not a boundary, rank %d < %d"
                     % (r, ra, c, ca))
    return True, rec, lines


def run_obstruct(prob, task, opts):
    defo, cxs, lab = _obstruction(prob, task, "obstruct")
    res = TaskResult("obstruct", True)
    for X in cxs:
        ok, rec, lines = _obstruct_one(prob, defo, lab, X, "obstruct")
        res.ok = res.ok and ok
        res.records.append(rec)
        res.lines.extend(lines)
    return res


def run_lift(prob, task, opts):
    defo, cxs, lab = _obstruction(prob, task, "lift")
    res = TaskResult("lift", True)
    for X in cxs:
        ok, rec, lines = _obstruct_one(prob, defo, lab, X, "lift")
        if ok and rec["status"] == "lifts":
            w = lab.obstruction_and_lift(X.name).witness
            sq = suites.lifted_square(defo, X, w)
            rec["lifted_square_zero"] = not sq
            ok = not sq
            lines.append("  (delta + delta' eps)^2 in the deformed category: %s" % ("0" if not sq else "NONZERO"))
            lines.append("  lifts up to homotopy form a torsor of dimension %d" % rec["lift_space_dim"])
        res.ok = res.ok and ok
        res.records.append(rec)
        res.lines.extend(lines)
    return res


# ------------------------------------------------------------------- gauge


_EXHAUSTIVE_LIMIT = 4096


def run_gauge(prob, task, opts):
    for key in ("source", "target"):
        if key not in task:
            raise InputError(key, "gauge needs --source and --target deformations")
    src = _deformation(prob, task["source"], "source")
    tgt = _deformation(prob, task["target"], "target")
    arity_max = task.get("arity_max", opts.arity_max)
    h = find_gauge(tgt, src, arity_max)
    rec = {"op": "gauge", "source": src.name, "target": tgt.name, "arity_max": arity_max}
    lines = ["gauge %s -> %s:" % (src.name, tgt.name)]
    ok = True
    if h is not None:
        g = gauge_apply(tgt, src, h)
        ok = bool(g)
        rec.update({"exists": True, "h": h.to_records(), "functor_check": g.functor_check})
        lines.append("  1 + h eps with d(h) = phi_source - phi_target, h = %s" % _js(h.to_records()))
        lines.append("  functor identity on the doubled quiver: %s" % ("holds" if g.functor_check else "FAILS"))
    else:
        r, ra = coboundary_ranks(prob.category, src.phi - tgt.phi, 2, arity_max)
        rec.update({"exists": False, "rank_evidence": [r, ra]})
        lines.append("  none: phi_source - phi_target is not a coboundary (rank %d < augmented %d)" % (r, ra))
        F = prob.field
        if F.kind == "prime-field":
            dim = len(hochschild_space(prob.quiver, 1, min(arity_max, 2)))
            if F.characteristic ** dim <= _EXHAUSTIVE_LIMIT:
                found, total = exhaustive_gauges(tgt, src, min(arity_max, 2))
                rec["exhaustive"] = {"candidates": total, "gauges": len(found)}
                ok = not found
                lines.append("  exhaustive search: %d gauges among %d candidates" % (len(found), total))
    return TaskResult("gauge", ok, [rec], lines)


# ------------------------------------------------------------------ verify


def run_verify(prob, task, opts, ctx=None):
    name = task.get("suite", "all")
    if name != "all" and name not in suites.SUITES:
        raise InputError("suite", "unknown suite %r; choose from %s or all" % (name, ", ".join(suites.SUITES)))
    if ctx is None and prob is not None:
        ctx = suites.Context({prob.name: prob})
    return verify_result(suites.run(name, seed=opts.seed, ctx=ctx))


def verify_result(reports):
    """Render suite reports as a :class:`TaskResult`."""
    res = TaskResult("verify", all(r.passed for r in reports))
    for r in reports:
        res.lines.append("suite %s (seed %d): %s" % (r.suite, r.seed, "PASS" if r.passed else "FAIL"))
        for c in r.checks:
            res.lines.append("  %s %s [%d samples]%s" % ("ok  " if c.passed else "FAIL", c.name, c.samples,
                                                        " " + c.detail if c.detail else ""))
            if c.counterexample is not None:
                res.lines.append("       counterexample: %s" % _js(c.counterexample))
            res.records.append({"op": "verify", "suite": r.suite, "seed": r.seed, "check": c.name,
                                "passed": c.passed, "samples": c.samples, "counterexample": c.counterexample})
        for row in r.table:
            res.lines.append("    | %s" % row)
    return res


RUNNERS = {
    "hh": run_hh,
    "check": run_check,
    "embr": run_embr,
    "obstruct": run_obstruct,
    "lift": run_lift,
    "gauge": run_gauge,
    "verify": run_verify,
}


def default_tasks(prob, op):
    """Tasks to run when neither flags nor the document specify any."""
    if op == "hh":
        return [{"op": "hh", "degree": p} for p in range(3)]
    if op in ("obstruct", "lift"):
        if not prob.deformations:
            raise InputError("$.deformations", "the document defines no deformations")
        return [{"op": op, "deformation": d} for d in sorted(prob.deformations)]
    if op == "gauge":
        names = sorted(prob.deformations)
        return [{"op": "gauge", "source": a, "target": b} for a, b in combinations(names, 2)]
    if op == "verify":
        return [{"op": "verify", "suite": "all"}]
    return [{"op": op}]


def run_task(prob, task, opts):
    return RUNNERS[task["op"]](prob, task, opts)
