import random

import pytest

from embrace import library
from embrace.cochains import (
    a_brace, brace, from_zero_part, identity_cochain, plug, project_zero, random_cochain, suspend,
)
from embrace.graded import sign
from embrace.twisted import (
    ComplexWindow, FreeObject, TwistedObject, TwistedQuiver, build_com, build_pcom, is_iln,
    lembr_sign, phi_reach, square,
)


def cx(name, n, lc, start=0):
    return ComplexWindow(name, {start + p: "A" for p in range(n)}, {start + p: dict(lc) for p in range(n - 1)})


@pytest.fixture(scope="module")
def ids(e1):
    Q = e1.quiver
    return Q.arrow_id("A", "A", "1"), Q.arrow_id("A", "A", "x")


# ------------------------------------------------------------ reachability


def test_phi_reach_examples():
    assert phi_reach({}, {0, 1}) == set()
    assert phi_reach({(0, 0): {1: 1}, (1, 1): {1: 1}}, {1}) == {1}
    upper = {(1, 0): {1: 1}, (2, 1): {1: 1}}
    assert phi_reach(upper, {0}) == {1}


def test_is_iln_examples():
    assert is_iln({(1, 0): {0: 1}, (2, 1): {0: 1}}, 3) == (True, 3)
    assert is_iln({(2, 0): {0: 1}}, 3) == (True, 2)
    assert is_iln({(0, 0): {0: 1}}, 1) == (False, None)
    assert is_iln({(1, 0): {0: 1}, (0, 1): {0: 1}}, 2) == (False, None)


@pytest.mark.parametrize("seed", range(20))
def test_iln_index_is_exact(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    mat = {(j, i): {0: 1} for i in range(n) for j in range(n) if rng.random() < 0.4 and (seed % 2 or j > i)}
    ok, N = is_iln(mat, n)
    S = set(range(n))
    if ok:
        for _ in range(N - 1):
            S = phi_reach(mat, S)
            assert S
        assert not phi_reach(mat, S) or N == 0
    else:
        for _ in range(n + 1):
            S = phi_reach(mat, S)
        assert S


# ------------------------------------------------------------ embedding


def test_embedded_identity_is_identity(e1, ids):
    one, x = ids
    tw = TwistedQuiver(e1.quiver, [cx("C3", 3, {x: 1})])
    assert tw.embed(identity_cochain(e1.quiver)) == identity_cochain(tw.quiver)


def test_embedding_on_trivial_objects_is_ordinary_composition(e1):
    tw = TwistedQuiver(e1.quiver, [])
    assert tw.project(tw.embed(e1.mu)) == e1.mu
    assert len(tw.quiver.arrows) == len(e1.quiver.arrows)


def _random_matrix_lc(tw, rng, M, N):
    return {t: tw.quiver.field.random(rng, nonzero=True) for t in tw.quiver.hom(M, N) if rng.random() < 0.5}


@pytest.mark.parametrize("seed", range(10))
def test_support_containment(seed):
    G = library.sign_test_quiver()
    rng = random.Random(seed)
    objs = [TwistedObject("M", FreeObject([(0, "P"), (1, "Q"), (-1, "P")])),
            TwistedObject("N", FreeObject([(0, "Q"), (2, "P")]))]
    tw = TwistedQuiver(G, objs, include_base=False)
    n = rng.randint(1, 3)
    phi = random_cochain(G, rng, n, rng.randint(-1, 1), density=1)
    Phi = tw.embed(phi)
    chain = [rng.choice(["M", "N"]) for _ in range(n + 1)]
    fs = [_random_matrix_lc(tw, rng, chain[k], chain[k + 1]) for k in range(n)]  # f_1 .. f_n
    if not all(fs):
        return
    value = Phi.evaluate(*reversed(fs))
    mats = [tw.to_matrix(f) for f in fs]
    size = len(tw.objects[chain[0]].carrier)
    for start in range(size):
        reach = {start}
        for mat in mats:
            reach = phi_reach(mat, reach)
        assert phi_reach(tw.to_matrix(value), {start}) <= reach


# ------------------------------------------------------------ embr


def test_embr_of_arity_zero_is_unchanged(e1, ids):
    one, x = ids
    tw = TwistedQuiver(e1.quiver, [cx("C3", 3, {x: 1})])
    gamma = from_zero_part(e1.quiver, {"A": {x: e1.field.one}})
    assert tw.embr(gamma) == tw.embed(gamma)


def test_embr_of_composition(e1, ids):
    one, x = ids
    tw = TwistedQuiver(e1.quiver, [cx("C3", 3, {x: 1}), cx("P3", 3, {one: 1})])
    M = tw.embed(e1.mu)
    delta = tw.delta_cochain()
    m_dd = a_brace(M, [delta, delta])
    m_d = a_brace(M, [delta])
    assert m_dd == -1 * plug(plug(M, delta, 0), delta, 0)  # m{delta, delta} = -delta^2
    assert m_d == plug(M, delta, 0) - plug(M, delta, 1)
    assert tw.embr(e1.mu) == m_dd + m_d + M
    curv = project_zero(m_dd)
    assert tw.to_matrix(curv["P3"]) == {(2, 0): {one: -1}}
    assert "C3" not in curv


def test_embr_characteristic_value_at_three_term(e1, ids):
    one, x = ids
    tw = TwistedQuiver(e1.quiver, [cx("C3", 3, {x: 1})])
    phi1 = e1.mu.__class__(e1.quiver, {("A", (x, x)): {one: e1.field.one}})
    zero = project_zero(tw.embr(phi1))
    assert tw.to_matrix(zero["C3"]) == {(2, 0): {one: -1}}
    assert tw.embr_zero_closed_form(phi1) == zero


def test_embr_sum_terminates(e1, ids):
    one, x = ids
    tw = TwistedQuiver(e1.quiver, [cx("C4", 4, {x: 1})])
    M = suspend(tw.embed(e1.mu))
    d = suspend(tw.delta_cochain())
    assert brace(M, [d] * 3).is_zero()


def test_embr_rejects_non_nilpotent_twist_over_graded_base():
    G = library.sign_test_quiver()
    loop = TwistedObject("L", FreeObject([(0, "P")]), {(0, 0): {G.arrow_id("P", "P", "u"): G.field.one}})
    tw = TwistedQuiver(G, [loop])
    with pytest.raises(ValueError, match="nilpotent"):
        tw.embr(random_cochain(G, random.Random(0), 2, 0))


def test_twisted_object_validation(e1, ids):
    one, x = ids
    bad = TwistedObject("B", FreeObject([(0, "A"), (0, "A")]), {(1, 0): {x: 1}})  # needs degree 1
    with pytest.raises(ValueError):
        TwistedQuiver(e1.quiver, [bad])
    with pytest.raises(ValueError):
        ComplexWindow("gap", {0: "A", 2: "A"})
    with pytest.raises(ValueError):
        ComplexWindow("out", {0: "A"}, {0: {x: 1}})


@pytest.mark.parametrize("n,i,j,expected", [(0, 5, 1, 1), (2, 0, 1, -1), (1, 1, 0, -1), (1, 1, 1, -1), (3, 0, 1, -1)])
def test_brace_power_sign(n, i, j, expected):
    assert sign(lembr_sign(n, i, j)) == expected


# ------------------------------------------------------------ windows


def test_window_of_length_one(e1):
    pcom, tw = build_pcom(e1, (0, 0), [cx("C1", 1, {})], include_base=False)
    assert pcom.structure.d.is_zero() and pcom.structure.c.is_zero()
    assert len(pcom.quiver.arrows) == len(e1.quiver.arrows)


def test_two_term_has_no_curvature(e1, ids):
    one, x = ids
    pcom, _ = build_pcom(e1, (0, 1), [cx("C2", 2, {x: 1})])
    assert project_zero(pcom.mu) == {}


def test_three_term_identity_precomplex_curvature(e1, ids):
    one, x = ids
    pcom, tw = build_pcom(e1, (0, 2), [cx("P3", 3, {one: 1})])
    curv = project_zero(pcom.mu)
    assert list(curv) == ["P3"]
    assert tw.to_matrix(curv["P3"]) == {(2, 0): {one: -1}}
    assert square(e1, tw.objects["P3"]) == {(2, 0): {one: 1}}


def test_window_bounds_enforced(e1, ids):
    one, x = ids
    with pytest.raises(ValueError):
        build_pcom(e1, (0, 1), [cx("C3", 3, {x: 1})])
    with pytest.raises(ValueError):
        build_pcom(library.a_infinity_example(), (0, 1), [])


def test_build_com(e1, ids):
    one, x = ids
    com, tw = build_com(e1, (0, 2), [cx("C2", 2, {x: 1}), cx("C3", 3, {x: 1})])
    assert com.kind == "dg" and {"C2", "C3"} <= set(com.objects)
    with pytest.raises(ValueError, match="P3"):
        build_com(e1, (0, 2), [cx("P3", 3, {one: 1})])
