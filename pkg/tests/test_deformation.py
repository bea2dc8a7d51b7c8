import random

import pytest

from embrace import library, suites
from embrace.cochains import Cochain, from_zero_part, hochschild_differential, project_zero
from embrace.deformation import (
    DeformationLab, FirstOrderDeformation, deform_category, exhaustive_gauges, find_gauge,
    gauge_apply, hochschild_cohomology, hochschild_space, normalize_zero_part, reduce_mod_eps,
    solve_coboundary, verify_precomplexes, window_category,
)
from embrace.linalg import FieldSpec
from embrace.twisted import ComplexWindow, build_com


def cochain(prob, name):
    return prob.deformations[name]


@pytest.fixture(scope="module")
def labs(ctx, e1_doc):
    return {name: ctx.lab(e1_doc, name) for name in e1_doc.deformations}


# ------------------------------------------------------------ HH


@pytest.mark.parametrize("p,dim", [(0, 1), (1, 0), (2, 0)])
def test_hh_of_the_field(p, dim):
    assert hochschild_cohomology(library.field_category(), p).dim == dim


@pytest.mark.parametrize("p,dim", [(0, 2), (1, 1), (2, 1), (3, 1)])
def test_hh_dual_numbers(e1, p, dim):
    assert hochschild_cohomology(e1, p).dim == dim


@pytest.mark.parametrize("p,dim", [(0, 1), (1, 0), (2, 0)])
def test_hh_a2(e2, p, dim):
    assert hochschild_cohomology(e2, p).dim == dim


def test_hh2_representative_is_phi1_up_to_scalar(e1, e1_doc):
    Q = e1.quiver
    x, one = Q.arrow_id("A", "A", "x"), Q.arrow_id("A", "A", "1")
    (rep,) = hochschild_cohomology(e1, 2).representatives
    lam = rep.terms.get(("A", (x, x)), {}).get(one, 0)
    diff = rep - lam * cochain(e1_doc, "phi1")
    assert lam
    assert diff.is_zero() or solve_coboundary(e1, diff, 2) is not None


def test_hh_rejects_graded_base():
    with pytest.raises(ValueError):
        hochschild_cohomology(library.a_infinity_example(), 2)


# ------------------------------------------------------------ deformed categories


def test_trivial_deformation(e1):
    dcat = deform_category(FirstOrderDeformation(e1, Cochain(e1.quiver)))
    Q = e1.quiver
    x, one = Q.arrow_id("A", "A", "x"), Q.arrow_id("A", "A", "1")
    N = len(Q.arrows)
    assert dcat.mu.terms[("A", (x, one))] == {x: 1}
    assert dcat.mu.terms[("A", (x + N, one))] == {x + N: 1}
    assert ("A", (x + N, one + N)) not in dcat.mu.terms


def test_phi1_deformation_squares_x_to_eps(e1, e1_doc):
    Q = e1.quiver
    x, one = Q.arrow_id("A", "A", "x"), Q.arrow_id("A", "A", "1")
    dcat = deform_category(FirstOrderDeformation(e1, cochain(e1_doc, "phi1")))
    assert dcat.mu.terms[("A", (x, x))] == {one + len(Q.arrows): 1}


def test_reduction_recovers_base(e1, e1_doc):
    dcat = deform_category(FirstOrderDeformation(e1, cochain(e1_doc, "two_phi1")))
    assert reduce_mod_eps(dcat.mu, e1.quiver) == e1.mu


def test_non_cocycle_rejected(e1):
    Q = e1.quiver
    x, one = Q.arrow_id("A", "A", "x"), Q.arrow_id("A", "A", "1")
    with pytest.raises(ValueError, match="cocycle"):
        FirstOrderDeformation(e1, Cochain(Q, {("A", (x, one)): {x: Q.field.one}}))
    with pytest.raises(ValueError):
        FirstOrderDeformation(e1, Cochain(Q, {("A", (x,)): {one: Q.field.one}}))


# ------------------------------------------------------------ gauge


def test_gauge_identity(e1, e1_doc):
    d = FirstOrderDeformation(e1, cochain(e1_doc, "phi1"))
    g = gauge_apply(d, d, Cochain(e1.quiver))
    assert g and g.functor_check


def test_gauge_along_psi(e1, e1_doc):
    psi = e1_doc.cochains["psi"]
    d = FirstOrderDeformation(e1, cochain(e1_doc, "phi1"))
    d2 = FirstOrderDeformation(e1, cochain(e1_doc, "phi1_dpsi"))
    assert cochain(e1_doc, "phi1_dpsi") != cochain(e1_doc, "phi1")
    g = gauge_apply(d, d2, psi)
    assert g and g.functor_check
    h = find_gauge(d, d2)
    assert h is not None and gauge_apply(d, d2, h)


def test_gauge_is_not_unique(e1, e1_doc):
    # adding the derivation x -> x (a 1-cocycle) gives a second valid gauge
    Q = e1.quiver
    x = Q.arrow_id("A", "A", "x")
    d = FirstOrderDeformation(e1, cochain(e1_doc, "phi1"))
    d2 = FirstOrderDeformation(e1, cochain(e1_doc, "phi1_dpsi"))
    h = find_gauge(d, d2)
    other = h + Cochain(Q, {("A", (x,)): {x: Q.field.one}})
    assert other != h
    g = gauge_apply(d, d2, other)
    assert g and g.functor_check


def test_wrong_gauge_reports_residual(e1, e1_doc):
    d = FirstOrderDeformation(e1, cochain(e1_doc, "phi1"))
    d2 = FirstOrderDeformation(e1, cochain(e1_doc, "phi1_dpsi"))
    g = gauge_apply(d, d2, Cochain(e1.quiver))
    assert not g and g.residual


def test_distinct_classes_have_no_gauge(e1, e1_doc):
    d0 = FirstOrderDeformation(e1, Cochain(e1.quiver))
    d1 = FirstOrderDeformation(e1, cochain(e1_doc, "phi1"))
    assert find_gauge(d0, d1) is None
    basis = hochschild_space(e1.quiver, 1, 3)
    rng = random.Random(0)
    for _ in range(10):
        h = Cochain(e1.quiver)
        for e in basis:
            h = h + e1.field.random(rng) * e
        assert not gauge_apply(d0, d1, h)


def test_exhaustive_gauge_search_over_gf2():
    F = FieldSpec.GF(2)
    cat = library.dual_numbers(F)
    Q = cat.quiver
    x, one = Q.arrow_id("A", "A", "x"), Q.arrow_id("A", "A", "1")
    d0 = FirstOrderDeformation(cat, Cochain(Q))
    d1 = FirstOrderDeformation(cat, Cochain(Q, {("A", (x, x)): {one: F.one}}))
    found, total = exhaustive_gauges(d0, d1)
    assert found == [] and total == 16
    same, _ = exhaustive_gauges(d1, d1)
    assert Cochain(Q) in same


# ------------------------------------------------------------ characteristic values


def test_zero_cocycle_gives_zero_classes(labs):
    lab = labs["zero"]
    for C in lab.complexes:
        cv = lab.characteristic_value(C.name)
        assert cv.vanishes and not cv.representative


def test_three_term_class(labs, e1):
    one = e1.quiver.arrow_id("A", "A", "1")
    cv = labs["phi1"].characteristic_value("C3")
    assert not cv.vanishes
    assert cv.matrix == {(2, 0): {one: -1}}
    assert cv.matrix == cv.direct_matrix


def test_two_term_class_vanishes(labs):
    cv = labs["phi1"].characteristic_value("C2")
    assert cv.vanishes and not cv.representative


@pytest.mark.parametrize("C", ["C1", "C2", "C3", "C4"])
def test_scaling(labs, C):
    a = labs["phi1"].characteristic_value(C)
    b = labs["two_phi1"].characteristic_value(C)
    assert b.matrix == {k: {f: 2 * c for f, c in v.items()} for k, v in a.matrix.items()}
    assert a.vanishes == b.vanishes


def test_cohomologous_cocycles_share_classes(labs):
    for C in labs["phi1"].complexes:
        a = labs["phi1"].characteristic_value(C.name)
        b = labs["phi1_dpsi"].characteristic_value(C.name)
        assert a.hom.same_class(a.representative, b.representative)


def test_non_complex_rejected(e1):
    one = e1.quiver.arrow_id("A", "A", "1")
    P3 = ComplexWindow("P3", {0: "A", 1: "A", 2: "A"}, {0: {one: 1}, 1: {one: 1}})
    with pytest.raises(ValueError, match="not a complex"):
        DeformationLab(FirstOrderDeformation(e1, Cochain(e1.quiver)), [P3])


# ------------------------------------------------------------ obstruction and lift


def test_two_term_lifts_with_zero_witness(labs):
    rep = labs["phi1"].obstruction_and_lift("C2")
    assert rep.lifts and rep.witness == {} and rep.vanishes


def test_three_term_obstructed_with_rank_evidence(labs):
    rep = labs["phi1"].obstruction_and_lift("C3")
    assert not rep.lifts and not rep.vanishes
    r, r_aug = rep.lift_ranks
    c, c_aug = rep.class_ranks
    assert r < r_aug and c < c_aug


@pytest.mark.parametrize("C", ["C1", "C1s", "C2", "C2s", "C3", "C4"])
def test_undeformed_lifts_and_lift_space(labs, C):
    lab = labs["zero"]
    rep = lab.obstruction_and_lift(C)
    assert rep.lifts and rep.witness == {}
    assert rep.lift_space_dim == lab.hom(C, C, 1).dim


def test_lift_square_vanishes_in_deformed_category(labs, e1_doc):
    lab = labs["phi1_dpsi"]
    for C in ("C2", "C2s"):
        w, _, _ = suites.lift_feasible(lab, C)
        assert w is not None
        assert not suites.lifted_square(lab.defo, e1_doc.complexes[C], w)


# ------------------------------------------------------------ centrality


def _maps(lab, prob, *names):
    return [(prob.chain_maps[n].source, prob.chain_maps[n].target,
             suites.chain_map_lc(lab.tw, prob, prob.chain_maps[n])) for n in names]


def test_identity_commutes_trivially(labs, e1_doc):
    (rec,) = labs["phi1"].verify_centrality(_maps(labs["phi1"], e1_doc, "id_C3"))
    assert rec.passed and rec.homotopy == {}


def test_zero_deformation_commutes(labs, e1_doc):
    recs = labs["zero"].verify_centrality(_maps(labs["zero"], e1_doc, *e1_doc.chain_maps))
    assert all(r.passed and r.homotopy == {} for r in recs)


def test_x_shift_map(labs, e1_doc):
    (rec,) = labs["phi1"].verify_centrality(_maps(labs["phi1"], e1_doc, "x_shift"))
    assert rec.passed


def test_non_chain_map_rejected(labs, e1_doc):
    lab = labs["phi1"]
    one = e1_doc.quiver.arrow_id("A", "A", "1")
    bad = lab.tw.from_matrix("C2", "C2", {(0, 0): {one: 1}})
    with pytest.raises(ValueError, match="chain map"):
        lab.verify_centrality([("C2", "C2", bad)])


# ------------------------------------------------------------ precomplexes and locus


def test_locus(labs):
    assert labs["zero"].phi_infinity_locus()["obstructed"] == []
    part = labs["phi1"].phi_infinity_locus()
    assert "C2" in part["dg_deformable"] and "C3" in part["obstructed"]
    assert {"C1", "C1s"} <= set(part["dg_deformable"])


def test_precomplexes_trivial_and_zero(e1, e1_doc):
    Q = e1.quiver
    x = Q.arrow_id("A", "A", "x")
    objs = [e1_doc.complexes["C2"]]
    defo = FirstOrderDeformation(e1, cochain(e1_doc, "phi1"))
    assert verify_precomplexes(defo, objs, {})
    flat = FirstOrderDeformation(e1, Cochain(Q))
    assert verify_precomplexes(flat, objs, {"C2": {(1, 0): {x: Q.field(3)}}})


# ------------------------------------------------------------ zero-part normalization


def test_normalize_already_zero(e1, e1_doc):
    out = normalize_zero_part(e1, cochain(e1_doc, "phi1"))
    assert out.h.is_zero() and out.phi == cochain(e1_doc, "phi1")


def test_normalize_on_two_term_complex(e1, e1_doc):
    pcom, tw = window_category(e1, [e1_doc.complexes["C2"]])
    phi = tw.embr(cochain(e1_doc, "phi1"))
    out = normalize_zero_part(pcom, phi)
    assert out.h.is_zero() and out.phi == phi


def test_normalize_recovers_known_gauge(e1):
    Q = e1.quiver
    x = Q.arrow_id("A", "A", "x")
    C2 = ComplexWindow("C2", {0: "A", 1: "A"}, {0: {x: 1}})
    C3 = ComplexWindow("C3", {0: "A", 1: "A", 2: "A"}, {0: {x: 1}, 1: {x: 1}})
    com, tw = build_com(e1, (0, 2), [C2, C3])
    W = com.quiver
    rng = random.Random(3)
    h0 = from_zero_part(W, {M: {t: W.field.random(rng, nonzero=True) for t in W.hom(M, M, 1)} for M in W.objects})
    phi = hochschild_differential(com, h0)
    assert project_zero(phi)
    out = normalize_zero_part(com, phi)
    assert not project_zero(out.phi)
    assert out.phi == phi - hochschild_differential(com, out.h)


def test_lab_rejects_non_linear_base():
    cat = library.a_infinity_example()
    defo = FirstOrderDeformation(cat, Cochain(cat.quiver), check=False)
    with pytest.raises(ValueError, match="linear"):
        DeformationLab(defo, [])


def test_window_category_is_shared(e1_doc, ctx):
    pcom, tw = ctx.window(e1_doc)
    assert set(e1_doc.complexes) <= set(tw.objects)
    small = window_category(e1_doc.category, [e1_doc.complexes["C2"]])
    assert set(small[1].objects) == {"A", "C2"}
