"""Small categories used throughout the tests and demos."""

from __future__ import annotations

from .cochains import Cochain
from .graded import Arrow, GradedQuiver
from .linalg import FieldSpec
from .structures import AInfStructure, StructuredCategory


def _composition(quiver, table):
    """Arity-2 cochain from ``{(g_name, f_name, source): {out_name: scalar}}``.

    ``g`` is applied after ``f`` and ``source`` is where ``f`` starts.
    """
    F = quiver.field
    terms = {}
    for (gname, fname, src), out in table.items():
        f = next(i for i in quiver.leaving(src) if quiver.arrows[i].name == fname)
        mid = quiver.target(f)
        g = next(i for i in quiver.leaving(mid) if quiver.arrows[i].name == gname)
        tgt = quiver.target(g)
        terms[(src, (g, f))] = {quiver.arrow_id(src, tgt, n): F(v) for n, v in out.items()}
    return Cochain(quiver, terms)


def _unital_table(quiver, units, extra):
    """Products of a category with identities ``units[obj]`` plus ``extra``."""
    table = {}
    for a in quiver.arrows:
        table[(units[a.target], a.name, a.source)] = {a.name: 1}
        table[(a.name, units[a.source], a.source)] = {a.name: 1}
    table.update(extra)
    return table


def field_quiver(field=None):
    field = field or FieldSpec.Q()
    return GradedQuiver(field, ["*"], [Arrow("*", "*", "1", 0)], name="k")


def field_category(field=None):
    q = field_quiver(field)
    m = _composition(q, _unital_table(q, {"*": "1"}, {}))
    return StructuredCategory(AInfStructure(q, m, "linear"), name="k")


def dual_numbers_quiver(field=None):
    field = field or FieldSpec.Q()
    return GradedQuiver(field, ["A"], [Arrow("A", "A", "1", 0), Arrow("A", "A", "x", 0)], name="E1")


def dual_numbers(field=None):
    """``k[x]/(x^2)`` as a one-object linear category."""
    q = dual_numbers_quiver(field)
    m = _composition(q, _unital_table(q, {"A": "1"}, {("x", "x", "A"): {}}))
    return StructuredCategory(AInfStructure(q, m, "linear"), name="E1")


def a2_quiver(field=None):
    field = field or FieldSpec.Q()
    arrows = [Arrow("1", "1", "e1", 0), Arrow("2", "2", "e2", 0), Arrow("1", "2", "a", 0)]
    return GradedQuiver(field, ["1", "2"], arrows, name="E2")


def a2_path_category(field=None):
    """Linear category of the quiver ``1 -a-> 2``."""
    q = a2_quiver(field)
    m = _composition(q, _unital_table(q, {"1": "e1", "2": "e2"}, {}))
    return StructuredCategory(AInfStructure(q, m, "linear"), name="E2")


def sign_test_quiver(field=None):
    """Two objects, arrows in degrees -1..2; no structure, used for sign checks."""
    field = field or FieldSpec.GF(7)
    arrows = [
        Arrow("P", "P", "p", 0), Arrow("P", "P", "u", 1), Arrow("P", "Q", "s", -1),
        Arrow("P", "Q", "t", 2), Arrow("Q", "Q", "q", 1), Arrow("Q", "P", "r", 0),
        Arrow("Q", "P", "w", -1),
    ]
    return GradedQuiver(field, ["P", "Q"], arrows, window=(-1, 2), name="G")


def a_infinity_example(field=None, lam=1, unital=True):
    """One object with ``u`` in degree 1, ``v`` in degree 2 and ``mu_3(u,u,u) = lam v``.

    With ``unital`` a strict unit ``1`` is added and ``mu_2`` only multiplies
    by it.
    """
    field = field or FieldSpec.Q()
    arrows = [Arrow("O", "O", "u", 1), Arrow("O", "O", "v", 2)]
    if unital:
        arrows.insert(0, Arrow("O", "O", "1", 0))
    q = GradedQuiver(field, ["O"], arrows, window=(0, 2), name="Ainf")
    u, v = q.arrow_id("O", "O", "u"), q.arrow_id("O", "O", "v")
    mu = Cochain(q, {("O", (u, u, u)): {v: field(lam)}})
    if unital:
        mu = mu + _composition(q, _unital_table(q, {"O": "1"}, {}))
    kind = "a-infinity"
    return StructuredCategory(AInfStructure(q, mu, kind), name="Ainf")
