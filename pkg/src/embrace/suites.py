"""Named property suites behind ``verify``.

Every suite is deterministic for a given seed and returns a
:class:`SuiteReport` whose checks carry sample counts and, on failure, the
first counterexample in serialized form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import product

from . import cochains as C
from . import documents, library
from .cochains import Cochain, SuspendedCochain
from .deformation import (
    DeformationLab, FirstOrderDeformation, PrecomplexCheck, deform_category, exhaustive_gauges,
    find_gauge, gauge_apply, window_category,
)
from .graded import lc_add
from .linalg import FieldSpec, rank, solve, SparseMatrix
from .structures import check_structure
from .twisted import (
    ComplexWindow, FreeObject, TwistedObject, TwistedQuiver, build_pcom, lembr_sign, square,
)

SUITES = ("brace", "structure", "embr", "maintheorem", "gauge", "precomplexes", "centrality")


@dataclass
class Check:
    name: str
    passed: bool
    samples: int
    detail: str = ""
    counterexample: object = None


@dataclass
class SuiteReport:
    suite: str
    seed: int
    checks: list = dc_field(default_factory=list)
    table: list = dc_field(default_factory=list)  # extra per-instance rows

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def add(self, name, passed, samples, detail="", counterexample=None):
        self.checks.append(Check(name, bool(passed), samples, detail, counterexample))

    def first_failure(self):
        return next((c for c in self.checks if not c.passed), None)


def _records(x):
    if isinstance(x, SuspendedCochain):
        x = C.unsuspend(x)
    return x.to_records()


class Context:
    """Shipped documents and window categories, built once per run."""

    def __init__(self, problems=None):
        self.problems = problems or {name: documents.corpus(name) for name in ("e1", "e2")}
        self._windows = {}

    def window(self, prob):
        key = prob.name
        if key not in self._windows:
            cx = list(prob.complexes.values())
            self._windows[key] = window_category(prob.category, cx, prob.complex_window())
        return self._windows[key]

    def lab(self, prob, name):
        defo = FirstOrderDeformation(prob.category, prob.deformations[name], name)
        return DeformationLab(defo, list(prob.complexes.values()), category=self.window(prob))


# ------------------------------------------------------------------- brace


_FEASIBLE = {}


def _feasible(quiver, n, degrees):
    """Suspended degrees in ``degrees`` that some arity-``n`` cochain can have."""
    key = (quiver, n, degrees)
    if key not in _FEASIBLE:
        d = quiver._deg
        found = set()
        for src, args in quiver.paths(n):
            tgt = quiver.target(args[0]) if args else src
            base = sum(d[f] - 1 for f in args)
            found.update(d[g] - 1 - base for g in quiver.hom(src, tgt))
        _FEASIBLE[key] = sorted(k for k in found if degrees[0] <= k <= degrees[1])
    return _FEASIBLE[key]


def _sample(quiver, rng, arity_max=3, degrees=(-2, 2)):
    """A nonzero homogeneous suspended cochain with arity and degree in range."""
    while True:
        n = rng.randint(0, arity_max)
        opts = _feasible(quiver, n, degrees)
        if not opts:
            continue
        x = C.random_cochain(quiver, rng, n, rng.choice(opts), density=0.7, cls=SuspendedCochain)
        if x:
            return x


def _deg(x):
    ds = x.degrees()
    if len(ds) != 1:
        raise ValueError("inhomogeneous sample")
    return next(iter(ds))


def _interleavings(m, n):
    """Tuples ``(i_1, j_1, ..., i_m, j_m)`` with ``0 <= i_1 <= j_1 <= ... <= j_m <= n``."""
    def rec(k, lo):
        if k == 0:
            yield ()
            return
        for i in range(lo, n + 1):
            for j in range(i, n + 1):
                for rest in rec(k - 1, j):
                    yield (i, j) + rest
    return rec(m, 0)


def brace_relation_rhs(x, ys, zs):
    """Right side of ``x{y..}{z..} = sum +- x{z.., y_1{z..}, z.., y_m{z..}, z..}``.

    Expanded term by term with one-level braces only; ``y_p`` picks up
    ``|y_p|`` times the degrees of the ``z`` that end up on its left.
    """
    zdeg = [_deg(z) for z in zs]
    total = SuspendedCochain(x.quiver)
    for cut in _interleavings(len(ys), len(zs)):
        args, prev, e = [], 0, 0
        for p, y in enumerate(ys):
            i, j = cut[2 * p], cut[2 * p + 1]
            args.extend(zs[prev:i])
            args.append(C.brace(y, zs[i:j]))
            e += _deg(y) * sum(zdeg[:i])
            prev = j
        args.extend(zs[prev:])
        t = C.brace(x, args)
        total = total + (-t if e & 1 else t)
    return total


def _brace_setting(report, label, quiver, rng, samples):
    fails = None
    for s in range(samples):
        x = _sample(quiver, rng)
        m = 1 if s % 3 else 2
        n = 1 if s % 2 else 2
        ys = [_sample(quiver, rng) for _ in range(m)]
        zs = [_sample(quiver, rng) for _ in range(n)]
        lhs = C.brace(C.brace(x, ys), zs)
        rhs = brace_relation_rhs(x, ys, zs)
        if lhs != rhs and fails is None:
            fails = {"sample": s, "x": _records(x), "ys": [_records(y) for y in ys],
                     "zs": [_records(z) for z in zs], "difference": _records(lhs - rhs)}
    report.add("brace relation on %s" % label, fails is None, samples, counterexample=fails)

    fails = None
    jac = max(samples // 4, 1)
    for s in range(jac):
        x, y, z = (_sample(quiver, rng, 2) for _ in range(3))
        dx, dy = _deg(x), _deg(y)
        lhs = C.lie_bracket(x, C.lie_bracket(y, z))
        rhs = C.lie_bracket(C.lie_bracket(x, y), z)
        t = C.lie_bracket(y, C.lie_bracket(x, z))
        rhs = rhs + (-t if (dx * dy) & 1 else t)
        if lhs != rhs and fails is None:
            fails = {"sample": s, "x": _records(x), "y": _records(y), "z": _records(z)}
    report.add("graded Jacobi on %s" % label, fails is None, jac, counterexample=fails)

    fails = None
    for s in range(samples):
        phi = C.unsuspend(_sample(quiver, rng))
        psi = C.unsuspend(_sample(quiver, rng))
        if C.dot(phi, psi) != C.a_brace(phi, [psi]) and fails is None:
            fails = {"sample": s, "phi": phi.to_records(), "psi": psi.to_records()}
    report.add("dot product equals suspended brace on %s" % label, fails is None, samples, counterexample=fails)


def suite_brace(ctx=None, seed=0, samples=200):
    rep = SuiteReport("brace", seed)
    rng = random.Random(seed)
    _brace_setting(rep, "E2 over GF(7)", library.a2_quiver(FieldSpec.GF(7)), rng, samples)
    _brace_setting(rep, "E1 over Q", library.dual_numbers_quiver(FieldSpec.Q()), rng, samples)
    _brace_setting(rep, "graded quiver over GF(7)", library.sign_test_quiver(), rng, max(samples // 8, 1))
    return rep


# --------------------------------------------------------------- structure


def classical_differential(cat, phi):
    """Textbook Hochschild coboundary for a linear category in degree zero.

    With arguments in written order ``(b_1, ..., b_{n+1})`` (``b_1`` applied
    last): ``b_1 phi(b_2..) + sum_i (-1)^i phi(.., b_i b_{i+1}, ..)
    + (-1)^{n+1} phi(..b_n) b_{n+1}``, evaluated on basis paths.
    """
    Q = cat.quiver
    m = cat.mu.arity_part(2)
    out = {}
    for (n, _), part in phi.parts().items():
        for src, w in Q.paths(n + 1):
            acc = {}
            # b_1 phi(b_2..b_{n+1})
            for g, c in part.terms.get((src, w[1:]), {}).items():
                lc_add(acc, m.terms.get((src, (w[0], g)), {}), c)
            # b_{s+1} b_{s+2}, that is w[s] after w[s+1]
            for s in range(n):
                inner_src = Q.source(w[s + 1])
                for h, c in m.terms.get((inner_src, (w[s], w[s + 1])), {}).items():
                    val = part.terms.get((src, w[:s] + (h,) + w[s + 2:]), {})
                    sgn = -1 if (s + 1) & 1 else 1
                    lc_add(acc, val, sgn * c)
            # (-1)^{n+1} phi(b_1..b_n) b_{n+1}
            mid = Q.target(w[-1])
            for g, c in part.terms.get((mid, w[:-1]), {}).items():
                lc_add(acc, m.terms.get((src, (g, w[-1])), {}), -c if (n + 1) & 1 else c)
            if acc:
                lc_add(out.setdefault((src, w), {}), acc)
    return Cochain(Q, out)


def _dd_on_basis(report, cat, arity_max):
    count, fails = 0, None
    for n in range(arity_max + 1):
        for i in sorted({0} | set(range(-n, 3))):
            for e in C.cochain_basis(cat.quiver, n, i):
                count += 1
                dd = C.hochschild_differential(cat, C.hochschild_differential(cat, e))
                if dd and fails is None:
                    fails = {"basis_element": e.to_records(), "dd": dd.to_records()}
    report.add("d o d = 0 on the full basis of %s up to arity %d" % (cat.name, arity_max),
               fails is None, count, counterexample=fails)


def _horizontal_vs_classical(report, cat, arity_max):
    count, fails = 0, None
    for n in range(arity_max + 1):
        for e in C.cochain_basis(cat.quiver, n, 0):
            count += 1
            d = C.hochschild_differential(cat, e)
            cl = classical_differential(cat, e)
            want = cl if (n + 1) % 2 == 0 else -cl
            if d != want and fails is None:
                fails = {"basis_element": e.to_records(), "d": d.to_records(), "classical": cl.to_records()}
    report.add("horizontal d = (-1)^(n+1) classical on %s" % cat.name, fails is None, count,
               counterexample=fails)


def precomplex_window(field=None):
    """Length-4 window over E1 with x-complexes and the precomplex ``A -1-> A -1-> A``."""
    cat = library.dual_numbers(field)
    Q = cat.quiver
    one, x = Q.arrow_id("A", "A", "1"), Q.arrow_id("A", "A", "x")

    def cx(name, n, lc):
        return ComplexWindow(name, {p: "A" for p in range(n)}, {p: dict(lc) for p in range(n - 1)})

    return cat, [cx("C2", 2, {x: 1}), cx("C3", 3, {x: 1}), cx("P3", 3, {one: 1}), cx("C4", 4, {x: 1})]


def _pcom_differential(report, rng, samples):
    cat, objs = precomplex_window()
    pcom, tw = build_pcom(cat, (0, 3), objs, check=False)
    st = check_structure(pcom.structure)
    report.add("cdg identities on PCom(E1) window [0, 3]", st.passed, 4,
               detail=", ".join("%s %s" % (k, "ok" if v else "FAIL") for k, v in st.identities.items()),
               counterexample=st.failure)
    fails_c = fails_dd = None
    done = 0
    while done < samples:
        phi = C.random_sparse_cochain(tw.quiver, rng, rng.randint(0, 2), rng.randint(-2, 2), terms=2)
        if not phi:
            continue
        done += 1
        parts = C.cdg_contributions(pcom, phi)
        three = parts["curved"] + parts["vertical"] + parts["horizontal"]
        if three != C.hochschild_differential(pcom, phi) and fails_c is None:
            fails_c = {"phi": phi.to_records()}
        again = C.cdg_contributions(pcom, three)
        dd = again["curved"] + again["vertical"] + again["horizontal"]
        if dd and fails_dd is None:
            fails_dd = {"phi": phi.to_records(), "dd": dd.to_records()}
    report.add("three contributions equal d on PCom(E1)", fails_c is None, samples, counterexample=fails_c)
    report.add("d o d = 0 on PCom(E1) via the three contributions", fails_dd is None, samples,
               counterexample=fails_dd)


def suite_structure(ctx=None, seed=0, samples=30):
    rep = SuiteReport("structure", seed)
    rng = random.Random(seed)
    cats = [library.field_category(), library.dual_numbers(), library.dual_numbers(FieldSpec.GF(2)),
            library.a2_path_category(), library.a_infinity_example(), library.a_infinity_example(unital=False)]
    if ctx is not None:
        cats.extend(p.category for p in ctx.problems.values())
    for cat in cats:
        st = check_structure(cat.structure, full=True)
        rep.add("b{b} = 0 for %s (%s over %s)" % (cat.name, cat.kind, cat.field), st.passed, 1,
                counterexample=st.failure)
    _dd_on_basis(rep, library.dual_numbers(), 3)
    _dd_on_basis(rep, library.a2_path_category(), 3)
    _horizontal_vs_classical(rep, library.dual_numbers(), 3)
    _horizontal_vs_classical(rep, library.a2_path_category(), 3)
    _pcom_differential(rep, rng, samples)
    return rep


# -------------------------------------------------------------------- embr


def _section_identity(report, cat, tw, arity_max=4):
    count, fails = 0, None
    Q = cat.quiver
    lo, hi = Q.window
    for n in range(arity_max + 1):
        for i in range(lo - hi, hi - lo + 1):
            for e in C.cochain_basis(Q, n, i):
                count += 1
                if tw.project(tw.embr(e)) != e and fails is None:
                    fails = {"cochain": e.to_records()}
    report.add("projection after embr is the identity on %s (arity <= %d)" % (cat.name, arity_max),
               fails is None, count, counterexample=fails)


def _closed_form(report, label, pcom_cat, tw, rng, samples):
    fails = None
    Q = pcom_cat.quiver
    lo, hi = Q.window
    for s in range(samples):
        phi = C.random_mixed(Q, rng, 3, (lo - hi, hi - lo), pieces=2)
        generic = C.project_zero(tw.embr(phi))
        closed = tw.embr_zero_closed_form(phi)
        if generic != closed and fails is None:
            fails = {"phi": phi.to_records()}
    report.add("zero part of embr equals the closed form on %s" % label, fails is None, samples,
               counterexample=fails)


def delta_square_sign_check(cat, complexes):
    """``m{delta, delta}`` against ``-delta^2`` on each complex; returns (sign ok, first mismatch)."""
    tw = TwistedQuiver(cat.quiver, complexes, include_base=False)
    M = tw.embed(cat.mu.arity_part(2))
    sign = -1 if lembr_sign(2, 0, 1) else 1
    for X in complexes:
        delta = C.from_zero_part(tw.quiver, {X.name: tw.from_matrix(X.name, X.name, X.delta)})
        got = tw.to_matrix(C.project_zero(C.a_brace(M, [delta, delta])).get(X.name, {}))
        sq = square(cat, X)
        want = {k: {f: sign * c for f, c in v.items()} for k, v in sq.items()}
        if got != want or sign != -1:
            return False, {"object": X.name, "brace": str(got), "minus_square": str(want)}
    return True, None


def suite_embr(ctx=None, seed=0, samples=100):
    rep = SuiteReport("embr", seed)
    rng = random.Random(seed)
    cat, objs = precomplex_window()
    _section_identity(rep, cat, TwistedQuiver(cat.quiver, [objs[1]]))
    tw = TwistedQuiver(cat.quiver, [objs[0]])
    res = C.is_brace_morphism(tw.embr, cat.quiver, samples=samples, seed=seed, arity_max=3, max_args=1)
    ce = None
    if not res:
        ce = {"x": res.counterexample["x"].to_records(),
              "ys": [y.to_records() for y in res.counterexample["ys"]]}
    rep.add("embr preserves braces x{y} (E1, two-term x-complex)", res.passed, res.samples, counterexample=ce)
    gq = library.sign_test_quiver()
    P, Qo = "P", "Q"
    s = gq.arrow_id(P, Qo, "s")
    iln = ComplexWindow("T", {0: P, 1: Qo}, {})
    twisted = [iln]
    twisted.append(TwistedObject("S", FreeObject([(0, P), (-2, Qo)]), {(1, 0): {s: gq.field.one}}))
    gtw = TwistedQuiver(gq, twisted)
    res = C.is_brace_morphism(gtw.embr, gq, samples=max(samples // 4, 1), seed=seed + 1, arity_max=2,
                              max_args=1)
    rep.add("embr preserves braces (graded quiver, iln twist)", res.passed, res.samples)
    _, ptw = build_pcom(cat, (0, 2), objs[1:3], check=False)
    _closed_form(rep, "PCom(E1)", cat, ptw, rng, max(samples // 5, 1))
    e2 = library.a2_path_category()
    Q2 = e2.quiver
    a, e1 = Q2.arrow_id("1", "2", "a"), Q2.arrow_id("1", "1", "e1")
    e2objs = [ComplexWindow("D2", {0: "1", 1: "2"}, {0: {a: 1}}),
              ComplexWindow("P2", {0: "1", 1: "1", 2: "2"}, {0: {e1: 1}, 1: {a: 1}})]
    _, e2tw = build_pcom(e2, (0, 2), e2objs, check=False)
    _closed_form(rep, "PCom(E2)", e2, e2tw, rng, max(samples // 5, 1))
    ok, ce = delta_square_sign_check(cat, objs)
    rep.add("m{delta, delta} = -delta^2 (sign at n=2, i=0, j=1)", ok, len(objs), counterexample=ce)
    return rep


# ------------------------------------------------- lifts versus classes


def lift_feasible(lab, name):
    """Solve the lift equation; returns ``(witness or None, rank M, rank [M|b])``."""
    unknowns, M, b = lab.lift_system(name)
    x = solve(M, b)
    r = rank(M)
    r_aug = rank(M.hstack(SparseMatrix.from_columns(M.field, [b], len(b)))) if b else r
    if x is None:
        return None, r, r_aug
    w = {}
    for (j, i, f), c in zip(unknowns, x):
        if c:
            lc_add(w.setdefault((j, i), {}), {f: c})
    return w, r, r_aug


def lifted_square(defo, C_, witness):
    """``(delta + delta' eps)^2`` in the deformed category."""
    from .deformation import _lifted
    dcat = deform_category(defo)
    return square(dcat, _lifted(C_, witness or {}, len(defo.base.quiver.arrows)))


def suite_maintheorem(ctx=None, seed=0):
    ctx = ctx or Context()
    rep = SuiteReport("maintheorem", seed)
    count, fails = 0, None
    for prob in ctx.problems.values():
        for dname in prob.deformations:
            lab = ctx.lab(prob, dname)
            for cname, C_ in prob.complexes.items():
                count += 1
                cv = lab.characteristic_value(cname)
                w, r, r_aug = lift_feasible(lab, cname)
                lifts = w is not None
                sq = lifted_square(lab.defo, C_, w) if lifts else None
                cr = cv.hom.rank_evidence(cv.representative)
                ok = lifts == cv.vanishes and (not lifts or not sq) and (lifts or (r < r_aug and cr[0] < cr[1]))
                rep.table.append("%s %s %s: class %s, lift %s, ranks %s/%s" % (
                    prob.name, dname, cname, "0" if cv.vanishes else "nonzero",
                    "found" if lifts else "impossible", "%d,%d" % (r, r_aug), "%d,%d" % cr))
                if not ok and fails is None:
                    fails = {"document": prob.name, "deformation": dname, "complex": cname,
                             "class_vanishes": cv.vanishes, "lift_found": lifts}
    rep.add("lift exists iff the characteristic class vanishes", fails is None, count, counterexample=fails)
    return rep


# ------------------------------------------------------------------- gauge


def suite_gauge(ctx=None, seed=0):
    ctx = ctx or Context()
    rep = SuiteReport("gauge", seed)
    count, fails = 0, None
    for prob in ctx.problems.values():
        names = sorted(prob.deformations)
        labs = {n: ctx.lab(prob, n) for n in names}
        for a, b in product(names, names):
            if a >= b:
                continue
            da, db = labs[a].defo, labs[b].defo
            h = find_gauge(da, db)
            count += 1
            if h is None:
                rep.table.append("%s %s ~ %s: not cohomologous" % (prob.name, a, b))
                continue
            g = gauge_apply(da, db, h)
            same = True
            for cname in prob.complexes:
                ra = labs[a].characteristic_value(cname).representative
                rb = labs[b].characteristic_value(cname).representative
                same = same and labs[a].hom(cname, cname, 2).same_class(ra, rb)
            rep.table.append("%s %s ~ %s: gauge %s, classes %s" % (
                prob.name, a, b, "ok" if g else "FAILED", "equal" if same else "DIFFER"))
            if not (g and same) and fails is None:
                fails = {"document": prob.name, "pair": [a, b], "h": h.to_records()}
    rep.add("cohomologous cocycles are gauge equivalent with equal classes", fails is None, count,
            counterexample=fails)
    gf2 = documents.corpus("e1_gf2")
    d0 = FirstOrderDeformation(gf2.category, gf2.deformations["zero"], "zero")
    d1 = FirstOrderDeformation(gf2.category, gf2.deformations["phi1"], "phi1")
    found, total = exhaustive_gauges(d0, d1, arity_max=2)
    rep.table.append("E1 over GF(2) zero ~ phi1: %d gauges among %d candidates" % (len(found), total))
    rep.add("no gauge between 0 and phi1 over GF(2) (exhaustive)", not found, total,
            counterexample=[h.to_records() for h in found[:1]] or None)
    return rep


# ------------------------------------------------------------ precomplexes


def suite_precomplexes(ctx=None, seed=0, samples=50):
    ctx = ctx or Context()
    rep = SuiteReport("precomplexes", seed)
    rng = random.Random(seed)
    F = FieldSpec.GF(5)
    cat, objs = precomplex_window(F)
    Q = cat.quiver
    one, x = Q.arrow_id("A", "A", "1"), Q.arrow_id("A", "A", "x")
    phi1 = Cochain(Q, {("A", (x, x)): {one: F.one}})
    objs = [o for o in objs if o.name in ("C2", "P3", "C3")]
    check = PrecomplexCheck(FirstOrderDeformation(cat, phi1, "phi1"), objs)
    r = check.verify({})
    rep.add("trivial Gamma: mu~ = mu_bar and 1 is a gauge", bool(r), 1)
    fails = None
    for s in range(samples):
        gamma = {}
        for X in objs:
            mat = {}
            for p in X.positions[:-1]:
                lc = {f: F.random(rng) for f in (one, x)}
                lc = {f: c for f, c in lc.items() if c}
                if lc:
                    mat[(X.index[p + 1], X.index[p])] = lc
            gamma[X.name] = mat
        r = check.verify(gamma, check_functor=s < 5)
        if not r and fails is None:
            fails = {"sample": s, "gamma": {k: {"%d<%d" % ji: {Q.arrows[f].name: F.format(c) for f, c in lc.items()}
                                                for ji, lc in v.items()} for k, v in gamma.items()}}
    rep.add("random Gamma over GF(5): mu~ = mu_bar + d(delta') eps", fails is None, samples,
            counterexample=fails)
    count, fails = 0, None
    for prob in ctx.problems.values():
        for dname in prob.deformations:
            lab = ctx.lab(prob, dname)
            locus = lab.phi_infinity_locus()
            feasible = [c for c in prob.complexes if lift_feasible(lab, c)[0] is not None]
            count += 1
            rep.table.append("%s %s: dg-deformable %s" % (prob.name, dname, ",".join(locus["dg_deformable"])))
            if locus["dg_deformable"] != feasible and fails is None:
                fails = {"document": prob.name, "deformation": dname, "locus": locus, "feasible": feasible}
    rep.add("phi-infinity locus equals lift feasibility", fails is None, count, counterexample=fails)
    return rep


# --------------------------------------------------------------- centrality


def chain_map_lc(tw, prob, m):
    S, T = prob.complexes[m.source], prob.complexes[m.target]
    mat = {(T.index[q], S.index[p]): lc for (q, p), lc in m.components.items()}
    return tw.from_matrix(S.name, T.name, mat)


def suite_centrality(ctx=None, seed=0):
    ctx = ctx or Context()
    rep = SuiteReport("centrality", seed)
    count, fails = 0, None
    for prob in ctx.problems.values():
        if not prob.chain_maps:
            continue
        for dname in prob.deformations:
            lab = ctx.lab(prob, dname)
            maps = [(m.source, m.target, chain_map_lc(lab.tw, prob, m)) for m in prob.chain_maps.values()]
            for m, rec in zip(prob.chain_maps.values(), lab.verify_centrality(maps)):
                count += 1
                rep.table.append("%s %s %s: %s" % (prob.name, dname, m.name,
                                                   "commutes" if rec.passed else "FAILS"))
                if not rec.passed and fails is None:
                    fails = {"document": prob.name, "deformation": dname, "map": m.name}
    rep.add("characteristic classes commute with chain maps up to homotopy", fails is None, count,
            counterexample=fails)
    return rep


RUNNERS = {
    "brace": suite_brace,
    "structure": suite_structure,
    "embr": suite_embr,
    "maintheorem": suite_maintheorem,
    "gauge": suite_gauge,
    "precomplexes": suite_precomplexes,
    "centrality": suite_centrality,
}


def run(name, seed=0, ctx=None):
    """Run one suite or ``all``; returns a list of reports."""
    names = SUITES if name == "all" else (name,)
    for n in names:
        if n not in RUNNERS:
            raise KeyError("unknown suite %r; choose from %s or all" % (n, ", ".join(SUITES)))
    needs_ctx = {"maintheorem", "gauge", "precomplexes", "centrality"}
    if ctx is None and needs_ctx & set(names):
        ctx = Context()
    return [RUNNERS[n](ctx, seed) for n in names]
