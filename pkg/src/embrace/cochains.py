"""Hochschild cochains, brace operations and the Hochschild differential.

A cochain is stored sparsely as ``{(source, args): {out_arrow: scalar}}``
where ``args = (f_n, ..., f_1)`` is a composable tuple of arrow ids written
left to right and ``source`` is the object ``f_1`` starts from (needed for
arity 0).  Two classes share that storage:

* :class:`Cochain` lives on the quiver ``a`` itself;
* :class:`SuspendedCochain` lives on ``Sigma a``: the same arrow ids now
  stand for the suspended basis elements ``sigma f`` of degree ``|f| - 1``.

Braces are implemented once, on suspended cochains, where the only signs
are Koszul signs.  Everything on ``a`` is obtained by conjugating with
:func:`suspend`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
import random

from . import graded
from .graded import lc_add


class _Multilinear:
    shift = 0  # degree offset of a basis element: |f| - shift

    def __init__(self, quiver, terms=None, clean=True):
        self.quiver = quiver
        self.terms = {}
        if terms and not clean:
            self.terms = {k: v for k, v in terms.items() if v}
        elif terms:
            for key, val in terms.items():
                clean = {g: c for g, c in val.items() if c}
                if clean:
                    self.terms[key] = clean

    # -- container protocol -------------------------------------------------
    def items(self):
        return self.terms.items()

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def copy(self):
        return type(self)(self.quiver, {k: dict(v) for k, v in self.terms.items()})

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError("cannot combine %s with %s" % (type(self).__name__, type(other).__name__))
        if other.quiver is not self.quiver and other.quiver != self.quiver:
            raise ValueError("cochains live on different quivers")

    def __add__(self, other):
        self._check(other)
        out = {k: dict(v) for k, v in self.terms.items()}
        for k, v in other.terms.items():
            d = out.setdefault(k, {})
            lc_add(d, v)
            if not d:
                del out[k]
        return type(self)(self.quiver, out, clean=False)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)(self.quiver, {k: {g: -c for g, c in v.items()} for k, v in self.terms.items()},
                          clean=False)

    def __rmul__(self, s):
        s = self.quiver.field(s)
        if not s:
            return type(self)(self.quiver)
        return type(self)(self.quiver, {k: {g: s * c for g, c in v.items()} for k, v in self.terms.items()})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return "%s(%d terms, arities %s)" % (type(self).__name__, len(self.terms), sorted(self.arities()))

    # -- grading --------------------------------------------------------------
    def term_degree(self, args, out):
        """Degree of the homogeneous piece sending ``args`` to ``out``."""
        d = self.quiver._deg
        s = self.shift
        return (d[out] - s) - sum(d[f] - s for f in args)

    def arities(self):
        return {len(args) for (_, args) in self.terms}

    def arity_part(self, n):
        return type(self)(self.quiver, {k: v for k, v in self.terms.items() if len(k[1]) == n})

    def parts(self):
        """Split into homogeneous pieces keyed by ``(arity, degree)``."""
        out = {}
        for (src, args), val in self.terms.items():
            for g, c in val.items():
                key = (len(args), self.term_degree(args, g))
                out.setdefault(key, {}).setdefault((src, args), {})[g] = c
        return {k: type(self)(self.quiver, v) for k, v in out.items()}

    def degrees(self):
        return {self.term_degree(args, g) for (_, args), val in self.terms.items() for g in val}

    def evaluate(self, *args, source=None):
        """Multilinear evaluation on linear combinations (no extra signs).

        For arity 0 pass ``source``.
        """
        Q = self.quiver
        out = {}
        if not args:
            if source is None:
                raise ValueError("arity-0 evaluation needs a source object")
            return dict(self.terms.get((source, ()), {}))
        for combo in product(*[list(a.items()) for a in args]):
            ids = tuple(f for f, _ in combo)
            val = self.terms.get((Q._src[ids[-1]], ids))
            if not val:
                continue
            c = 1
            for _, v in combo:
                c = c * v
            lc_add(out, val, c)
        return out

    def restrict(self, subquiver, arrow_map):
        """Components along paths inside a full subquiver."""
        out = {}
        objs = set(subquiver.objects)
        for (src, args), val in self.terms.items():
            if src not in objs or any(f not in arrow_map for f in args):
                continue
            new_val = {arrow_map[g]: c for g, c in val.items() if g in arrow_map}
            if new_val:
                out[(src, tuple(arrow_map[f] for f in args))] = new_val
        return type(self)(subquiver, out)

    def transfer(self, quiver, arrow_map):
        """Rename arrows into another quiver along an injective id map."""
        out = {}
        for (src, args), val in self.terms.items():
            out[(src, tuple(arrow_map[f] for f in args))] = {arrow_map[g]: c for g, c in val.items()}
        return type(self)(quiver, out)

    # -- serialization ----------------------------------------------------------
    def to_records(self):
        Q = self.quiver
        F = Q.field
        recs = []
        for (src, args), val in sorted(self.terms.items(), key=lambda kv: (len(kv[0][1]), kv[0][0], kv[0][1])):
            path = [src] + [Q._tgt[f] for f in reversed(args)]
            by_deg = {}
            for g, c in val.items():
                by_deg.setdefault(self.term_degree(args, g), {})[g] = c
            for i, part in sorted(by_deg.items()):
                recs.append({
                    "arity": len(args),
                    "internal_degree": i,
                    "path": path,
                    "args": [Q.arrows[f].name for f in args],
                    "value": {Q.arrows[g].name: F.format(c) for g, c in sorted(part.items())},
                })
        return recs

    @classmethod
    def from_records(cls, quiver, records):
        F = quiver.field
        terms = {}
        for rec in records:
            path = list(rec["path"])
            names = list(rec["args"])
            n = len(names)
            if len(path) != n + 1:
                raise ValueError("path %r does not fit %d arguments" % (path, n))
            if "arity" in rec and rec["arity"] != n:
                raise ValueError("arity %r disagrees with %d arguments" % (rec["arity"], n))
            # args are written (f_n, ..., f_1); f_j goes path[j-1] -> path[j]
            args = tuple(quiver.arrow_id(path[n - p - 1], path[n - p], names[p]) for p in range(n))
            val = terms.setdefault((path[0], args), {})
            for name, s in rec["value"].items():
                g = quiver.arrow_id(path[0], path[-1], name)
                lc_add(val, {g: F.parse_scalar(s) if isinstance(s, str) else F(s)})
            obj = cls(quiver, {(path[0], args): val})
            if "internal_degree" in rec and cls is Cochain:
                for g in val:
                    if obj.term_degree(args, g) != rec["internal_degree"]:
                        raise ValueError("record %r: value %r has internal degree %d"
                                         % (rec, quiver.arrows[g].name, obj.term_degree(args, g)))
        return cls(quiver, terms)


class Cochain(_Multilinear):
    """Element of ``C(a)``: sums of ``C^{i,n}`` pieces.

    ``internal_degree`` is ``i``; the Hochschild degree is ``i + n``.
    """

    shift = 0

    def _single(self, values, what):
        if len(values) > 1:
            raise ValueError("cochain is not homogeneous in %s: %s" % (what, sorted(values)))
        return next(iter(values)) if values else None

    @property
    def arity(self):
        return self._single(self.arities(), "arity")

    @property
    def internal_degree(self):
        return self._single(self.degrees(), "internal degree")

    def hochschild_degrees(self):
        return {len(args) + self.term_degree(args, g) for (_, args), val in self.terms.items() for g in val}

    @property
    def hochschild_degree(self):
        return self._single(self.hochschild_degrees(), "Hochschild degree")


class SuspendedCochain(_Multilinear):
    """Element of ``C_br(a) = [T(Sigma a), Sigma a]``."""

    shift = 1


def zero_cochain(quiver):
    return Cochain(quiver)


def identity_cochain(quiver):
    one = quiver.field.one
    return Cochain(quiver, {(quiver.source(a), (a,)): {a: one} for a in range(len(quiver.arrows))})


def check_mixed(phi, p):
    """Assert that every component of ``phi`` has Hochschild degree ``p``."""
    bad = phi.hochschild_degrees() - {p}
    if bad:
        raise ValueError("expected Hochschild degree %d, found %s" % (p, sorted(bad)))
    return phi


# ------------------------------------------------------------- suspension


def suspension_exponent(quiver, args, internal_degree):
    """Sign exponent relating ``phi(f_n..f_1)`` and ``sigma^{1-n}(phi)(sigma f_n..sigma f_1)``."""
    n = len(args)
    return graded.canonical_iso_sign(1, [1] * n, internal_degree, [quiver._deg[f] for f in args])


def _resign(src_cls, dst_cls, c):
    # closed form of suspension_exponent: n*i + sum_k (n - 1 - k)|f_k|, cached per argument tuple
    Q = c.quiver
    d = Q._deg
    out = {}
    for key, val in c.terms.items():
        args = key[1]
        n = len(args)
        base = 0
        weight = 0
        for k, f in enumerate(args):
            base += d[f]
            weight += (n - 1 - k) * d[f]
        new = {}
        for g, v in val.items():
            new[g] = -v if (n * (d[g] - base) + weight) & 1 else v
        out[key] = new
    return dst_cls(Q, out, clean=False)


def suspend(phi):
    if not isinstance(phi, Cochain):
        raise TypeError("suspend expects a Cochain")
    return _resign(Cochain, SuspendedCochain, phi)


def unsuspend(x):
    if not isinstance(x, SuspendedCochain):
        raise TypeError("unsuspend expects a SuspendedCochain")
    return _resign(SuspendedCochain, Cochain, x)


# ------------------------------------------------------------------ braces


def _output_index(y, shift):
    """``out_arrow -> [(args, coeff, term_degree, args_degree)]``."""
    d = y.quiver._deg
    idx = {}
    for (src, args), val in y.terms.items():
        adeg = sum(d[f] - shift for f in args)
        for g, c in val.items():
            idx.setdefault(g, []).append((args, c, (d[g] - shift) - adeg, adeg))
    return idx


def brace(x, ys):
    """``x{y_1, ..., y_k}``: all order-preserving insertions with Koszul signs."""
    ys = list(ys)
    if not isinstance(x, SuspendedCochain) or not all(isinstance(y, SuspendedCochain) for y in ys):
        raise TypeError("brace works on SuspendedCochain; use a_brace on Cochain")
    if not ys:
        return x
    Q = x.quiver
    for y in ys:
        x._check(y)
    d = Q._deg
    k = len(ys)
    index = [_output_index(y, 1) for y in ys]
    koszul = graded.koszul_swap_sign
    out = {}
    for (src, xargs), xval in x.terms.items():
        n = len(xargs)
        if n < k:
            continue
        for pos in combinations(range(n), k):
            opts = []
            for t in range(k):
                o = index[t].get(xargs[pos[t]])
                if not o:
                    break
                opts.append(o)
            else:
                for choice in product(*opts):
                    res = []
                    e = 0
                    coeff = 1
                    left = 0
                    t = 0
                    for j in range(n):
                        if t < k and pos[t] == j:
                            yargs, c, ydeg, adeg = choice[t]
                            e += koszul(ydeg, left)
                            coeff = coeff * c
                            res.extend(yargs)
                            left += adeg
                            t += 1
                        else:
                            f = xargs[j]
                            res.append(f)
                            left += d[f] - 1
                    if e & 1:
                        coeff = -coeff
                    acc = out.setdefault((src, tuple(res)), {})
                    lc_add(acc, xval, coeff)
    return SuspendedCochain(Q, out, clean=False)


def a_brace(phi, psis):
    """Brace on ``C(a)``, transported through :func:`suspend`."""
    return unsuspend(brace(suspend(phi), [suspend(p) for p in psis]))


def by_degree(x):
    out = {}
    for (n, dgr), part in x.parts().items():
        out[dgr] = out[dgr] + part if dgr in out else part
    return out


def lie_bracket(x, y):
    """``<x, y> = x{y} - (-1)^{|x||y|} y{x}`` on suspended cochains."""
    total = SuspendedCochain(x.quiver)
    for dx, xp in by_degree(x).items():
        for dy, yp in by_degree(y).items():
            t = brace(xp, [yp])
            u = brace(yp, [xp])
            total = total + t + (u if graded.koszul_swap_sign(dx, dy) else -u)
    return total


def structure_cochain(mu):
    """Accept a bare Cochain or anything carrying one as ``.mu``."""
    return mu.mu if hasattr(mu, "mu") else mu


def hochschild_differential(mu, phi):
    """``d(phi)`` for the structure ``mu``: ``<b, -> `` moved to ``C(a)``."""
    b = mu.b if hasattr(mu, "b") else suspend(structure_cochain(mu))
    return unsuspend(lie_bracket(b, suspend(phi)))


# ------------------------------------------------ insertions on a itself


def plug(outer, inner, slot):
    """``outer(1 x ... x inner x ... x 1)`` with ``inner`` at written position ``slot``.

    The Koszul sign is ``|inner|`` times the total degree of the arguments
    to the left of the inner block.
    """
    Q = outer.quiver
    d = Q._deg
    index = _output_index(inner, 0)
    koszul = graded.koszul_swap_sign
    out = {}
    for (src, xargs), xval in outer.terms.items():
        n = len(xargs)
        if not 0 <= slot < n:
            continue
        opts = index.get(xargs[slot])
        if not opts:
            continue
        left = sum(d[f] for f in xargs[:slot])
        for yargs, c, ydeg, _ in opts:
            res = xargs[:slot] + yargs + xargs[slot + 1:]
            coeff = -c if koszul(ydeg, left) else c
            lc_add(out.setdefault((src, res), {}), xval, coeff)
    return Cochain(Q, out, clean=False)


def dot(phi, psi):
    """The dot product ``phi . psi``, summing insertions with sign ``eps``.

    ``eps = (deg(phi) + k + 1)(ar(psi) + 1)`` where ``k`` counts the
    identities to the right of ``psi``.
    """
    total = Cochain(phi.quiver)
    for (n, i), pp in phi.parts().items():
        if n < 1:
            continue
        for (m, j), qq in psi.parts().items():
            for k in range(n):
                e = ((i + n) + k + 1) * (m + 1)
                t = plug(pp, qq, n - k - 1)
                total = total + (-t if e & 1 else t)
    return total


# ------------------------------------------------------- zero part


def project_zero(phi):
    """Arity-0 part as ``{object: linear combination}``."""
    return {src: dict(val) for (src, args), val in phi.terms.items() if not args}


def from_zero_part(quiver, family, cls=Cochain):
    """Inverse of :func:`project_zero`: an arity-0 cochain."""
    return cls(quiver, {(A, ()): dict(v) for A, v in family.items() if v})


# --------------------------------------------------------- sampling


def cochain_basis(quiver, arity, internal_degree, objects=None):
    """Elementary cochains spanning ``C^{i,n}`` (restricted to ``objects``)."""
    one = quiver.field.one
    d = quiver._deg
    basis = []
    for src, args in quiver.paths(arity, objects):
        tgt = quiver.target(args[0]) if args else src
        want = internal_degree + sum(d[f] for f in args)
        for g in quiver.hom(src, tgt, want):
            basis.append(Cochain(quiver, {(src, args): {g: one}}))
    return basis


def cochain_space(quiver, arity, internal_degree, objects=None):
    """Basis keys ``((src, args), out)`` of ``C^{i,n}``, in a fixed order."""
    d = quiver._deg
    keys = []
    for src, args in quiver.paths(arity, objects):
        tgt = quiver.target(args[0]) if args else src
        want = internal_degree + sum(d[f] for f in args)
        for g in quiver.hom(src, tgt, want):
            keys.append(((src, args), g))
    return keys


def random_cochain(quiver, rng, arity, internal_degree, density=0.6, objects=None, cls=Cochain):
    F = quiver.field
    d = quiver._deg
    terms = {}
    for src, args in quiver.paths(arity, objects):
        if rng.random() > density:
            continue
        tgt = quiver.target(args[0]) if args else src
        s = cls.shift
        want = internal_degree + s + sum(d[f] - s for f in args)
        val = {}
        for g in quiver.hom(src, tgt, want):
            c = F.random(rng)
            if c:
                val[g] = c
        if val:
            terms[(src, args)] = val
    return cls(quiver, terms)


def random_mixed(quiver, rng, max_arity=3, degrees=(-2, 2), pieces=2, density=0.6, cls=Cochain):
    """Sum of a few random homogeneous pieces."""
    total = cls(quiver)
    for _ in range(pieces):
        n = rng.randint(0, max_arity)
        i = rng.randint(*degrees)
        total = total + random_cochain(quiver, rng, n, i, density, cls=cls)
    return total


# ------------------------------------------------ brace morphism checks


@dataclass
class BraceMorphismReport:
    passed: bool
    samples: int
    counterexample: object = None

    def __bool__(self):
        return self.passed


def is_brace_morphism(psi, source, samples=50, seed=0, arity_max=3, degrees=None, max_args=2):
    """Randomized test of ``Psi(x{y..}) == Psi(x){Psi(y)..}`` on ``C(source)``.

    ``psi`` maps a :class:`Cochain` on ``source`` to a cochain on the target.
    """
    rng = random.Random(seed)
    if degrees is None:
        lo, hi = source.window
        degrees = (lo - hi, hi - lo)
    for s in range(samples):
        k = rng.randint(0, max_args)
        x = random_mixed(source, rng, arity_max, degrees, pieces=1)
        if x.is_zero():
            x = random_cochain(source, rng, rng.randint(max(k, 1), arity_max), 0)
        ys = [random_mixed(source, rng, arity_max, degrees, pieces=1) for _ in range(k)]
        lhs = psi(a_brace(x, ys))
        rhs = a_brace(psi(x), [psi(y) for y in ys])
        if lhs != rhs:
            return BraceMorphismReport(False, s + 1, {"x": x, "ys": ys, "lhs": lhs, "rhs": rhs})
    return BraceMorphismReport(True, samples)


# ------------------------------------------------ cdg contributions


def cdg_contributions(mu, phi):
    """Curved, vertical and horizontal parts of ``d(phi)`` for ``mu = c + d + m``.

    Written directly on ``C(a)`` with insertions, independently of the
    suspended brace, so they serve as a cross-check of :func:`hochschild_differential`:

    * curved: ``sum_k (-1)^{k+1} phi(1..c..1)``
    * vertical: ``(-1)^{n+1} (d phi - (-1)^i sum_k phi(1..d..1))``
    * horizontal: ``m(phi x 1) + sum_k (-1)^{k+1} phi(1..m..1) + (-1)^{n+1} m(1 x phi)``

    where ``k`` counts the identities to the right of the inserted piece.
    """
    mu = structure_cochain(mu)
    c, d, m = mu.arity_part(0), mu.arity_part(1), mu.arity_part(2)
    Q = phi.quiver
    curved, vertical, horizontal = Cochain(Q), Cochain(Q), Cochain(Q)
    for (n, i), part in phi.parts().items():
        inner_c, inner_d, inner_m = Cochain(Q), Cochain(Q), Cochain(Q)
        for k in range(n):
            slot = n - k - 1
            s = -1 if (k + 1) & 1 else 1
            inner_c = inner_c + s * plug(part, c, slot)
            inner_d = inner_d + plug(part, d, slot)
            inner_m = inner_m + s * plug(part, m, slot)
        curved = curved + inner_c
        v = plug(d, part, 0) - ((-1) ** (i & 1)) * inner_d
        vertical = vertical + ((-1) ** ((n + 1) & 1)) * v
        horizontal = horizontal + plug(m, part, 0) + inner_m + ((-1) ** ((n + 1) & 1)) * plug(m, part, 1)
    return {"curved": curved, "vertical": vertical, "horizontal": horizontal}


def random_sparse_cochain(quiver, rng, arity, internal_degree, terms=3, objects=None, cls=Cochain):
    """Sum of ``terms`` random elementary cochains from ``C^{i,n}``; cheap on large quivers."""
    s = cls.shift
    d = quiver._deg
    keys = []
    for src, args in quiver.paths(arity, objects):
        tgt = quiver.target(args[0]) if args else src
        want = internal_degree + s + sum(d[f] - s for f in args)
        keys.extend(((src, args), g) for g in quiver.hom(src, tgt, want))
    out = cls(quiver)
    if not keys:
        return out
    F = quiver.field
    for _ in range(terms):
        key, g = rng.choice(keys)
        out = out + cls(quiver, {key: {g: F.random(rng, nonzero=True)}})
    return out
