"""Curved, dg and A-infinity structures on graded quivers.

A structure is a cochain ``mu`` of Hochschild degree 2; it is valid when
``b{b} = 0`` for ``b = suspend(mu)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .cochains import (
    Cochain, brace, check_mixed, is_brace_morphism, plug, project_zero, suspend,
)

KINDS = ("linear", "dg", "cdg", "a-infinity", "a-zero-infinity")


class AInfStructure:
    """``mu = mu_0 + mu_1 + mu_2 + ...`` on ``quiver`` with a declared kind."""

    def __init__(self, quiver, mu, kind="a-zero-infinity"):
        if kind not in KINDS:
            raise ValueError("unknown kind %r; expected one of %s" % (kind, ", ".join(KINDS)))
        if mu.quiver is not quiver and mu.quiver != quiver:
            raise ValueError("structure cochain lives on another quiver")
        check_mixed(mu, 2)
        ar = mu.arities()
        bad = {
            "linear": ar - {2},
            "dg": ar & ({0} | {n for n in ar if n >= 3}),
            "cdg": {n for n in ar if n >= 3},
            "a-infinity": ar & {0},
            "a-zero-infinity": set(),
        }[kind]
        if bad:
            raise ValueError("kind %r forbids components of arity %s" % (kind, sorted(bad)))
        self.quiver = quiver
        self.mu = mu
        self.kind = kind
        self._b = None

    @property
    def b(self):
        if self._b is None:
            self._b = suspend(self.mu)
        return self._b

    def component(self, n):
        return self.mu.arity_part(n)

    @property
    def c(self):
        return self.component(0)

    @property
    def d(self):
        return self.component(1)

    @property
    def m(self):
        return self.component(2)

    def curvature(self):
        return project_zero(self.mu)

    def __repr__(self):
        return "AInfStructure(%s, kind=%s, arities %s)" % (self.quiver.name, self.kind, sorted(self.mu.arities()))


@dataclass
class StructureReport:
    passed: bool
    failure: object = None  # first nonzero component of b{b}: (source, args, value)
    identities: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.passed


def cdg_identities(structure):
    """The four curved dg identities, each as a residual cochain that must vanish.

    ``d(c)``, ``d^2 + m(c x 1 - 1 x c)``, Leibniz, and associativity.
    """
    c, d, m = structure.c, structure.d, structure.m
    return {
        "d(c) = 0": plug(d, c, 0),
        "d^2 = -m(c x 1 - 1 x c)": plug(d, d, 0) + plug(m, c, 0) - plug(m, c, 1),
        "leibniz": plug(d, m, 0) - plug(m, d, 0) - plug(m, d, 1),
        "associativity": plug(m, m, 0) - plug(m, m, 1),
    }


def check_structure(structure, full=False):
    """Validate ``structure``.

    For cdg or narrower kinds the four identities are equivalent to
    ``b{b} = 0`` and much cheaper, so ``b{b}`` is only expanded for the
    A-infinity kinds or when ``full`` is set.
    """
    failure = None
    short = structure.kind in ("linear", "dg", "cdg")
    bb = brace(structure.b, [structure.b]) if full or not short else None
    if bb:
        Q = structure.quiver
        key = min(bb.terms, key=lambda k: (len(k[1]), k))
        src, args = key
        failure = {
            "source": src,
            "args": [Q.arrows[f].name for f in args],
            "value": {Q.arrows[g].name: Q.field.format(v) for g, v in sorted(bb.terms[key].items())},
        }
    identities = {}
    if short:
        identities = {name: r.is_zero() for name, r in cdg_identities(structure).items()}
    if failure is None and not all(identities.values()):
        name = next(k for k, v in identities.items() if not v)
        failure = {"identity": name}
    return StructureReport(failure is None, failure, identities)


class StructuredCategory:
    """A quiver together with a structure that has been checked valid."""

    def __init__(self, structure, name=None, check=True):
        if check:
            rep = check_structure(structure)
            if not rep:
                raise ValueError("invalid %s structure: %s %s" % (structure.kind, rep.failure, rep.identities))
        self.structure = structure
        self.name = name or structure.quiver.name

    @property
    def quiver(self):
        return self.structure.quiver

    @property
    def mu(self):
        return self.structure.mu

    @property
    def b(self):
        return self.structure.b

    @property
    def kind(self):
        return self.structure.kind

    @property
    def field(self):
        return self.structure.quiver.field

    @property
    def objects(self):
        return self.structure.quiver.objects

    def __repr__(self):
        return "StructuredCategory(%s, %s)" % (self.name, self.kind)


def restrict(cat, objects):
    """Full subcategory on ``objects`` with the restricted structure."""
    sub, amap = cat.quiver.full_subquiver(objects)
    if list(sub.objects) == list(cat.quiver.objects):
        return cat
    mu = cat.mu.restrict(sub, amap)
    return StructuredCategory(AInfStructure(sub, mu, cat.kind), name=cat.name)


def infinity_part(cat, check=True):
    """Full subcategory of objects with vanishing curvature."""
    curv = project_zero(cat.mu)
    keep = [A for A in cat.quiver.objects if not curv.get(A)]
    narrower = {"cdg": "dg", "a-zero-infinity": "a-infinity"}.get(cat.kind, cat.kind)
    sub, amap = cat.quiver.full_subquiver(keep)
    mu = cat.mu.restrict(sub, amap)
    return StructuredCategory(AInfStructure(sub, mu, narrower), name=cat.name, check=check)


@dataclass
class BraceMorphism:
    """A computable map ``C(source) -> C(target)`` claimed to preserve braces."""

    name: str
    source: object
    target: object
    apply: object
    report: object = None

    def __call__(self, phi):
        return self.apply(phi)

    def verify(self, samples=30, seed=0, arity_max=3):
        self.report = is_brace_morphism(self.apply, self.source, samples=samples, seed=seed,
                                        arity_max=arity_max)
        return self.report


def identity_morphism(quiver):
    return BraceMorphism("identity", quiver, quiver, lambda phi: phi)


def restriction_morphism(quiver, objects):
    sub, amap = quiver.full_subquiver(objects)
    return BraceMorphism("restriction", quiver, sub, lambda phi: phi.restrict(sub, amap))


def transport(psi, structure, kind=None, samples=30, seed=0):
    """``Psi(mu)`` as a structure on ``psi.target``, re-checked for validity."""
    if psi.report is None:
        psi.verify(samples=samples, seed=seed)
    if not psi.report:
        raise ValueError("%s is not a brace morphism on the sampled inputs" % psi.name)
    src = structure.structure if isinstance(structure, StructuredCategory) else structure
    rep = check_structure(src)
    if not rep:
        raise ValueError("invalid source structure: %s" % (rep.failure,))
    image = AInfStructure(psi.target, psi(src.mu), kind or src.kind)
    return StructuredCategory(image)


def structure_from_components(quiver, components, kind):
    """Sum a list of cochains into a checked :class:`StructuredCategory`."""
    mu = Cochain(quiver)
    for c in components:
        mu = mu + c
    return StructuredCategory(AInfStructure(quiver, mu, kind))
