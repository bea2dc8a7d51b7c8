"""Free and twisted objects over a graded quiver, and the ``embr`` section.

A free object is a finite list of summands ``(shift m, object A)`` standing
for ``Sigma^m A``.  A morphism ``M -> N`` is a matrix whose ``(j, i)`` entry
lies in ``a(A_i, B_j)``; the basis element ``(f, j, i)`` has degree
``|f| + m_i - n_j``.  :class:`TwistedQuiver` materializes these hom spaces
as an ordinary :class:`GradedQuiver` so that the cochain machinery applies
unchanged.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field as dc_field
from itertools import product

from . import graded
from .cochains import Cochain, brace, from_zero_part, suspend, unsuspend
from .graded import Arrow, GradedQuiver, lc_add
from .structures import AInfStructure, StructuredCategory, infinity_part


# ------------------------------------------------------------------ objects


@dataclass(frozen=True)
class FreeObject:
    summands: tuple  # ((shift, object), ...)

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple((int(m), A) for m, A in self.summands))

    def __len__(self):
        return len(self.summands)

    def shift(self, i):
        return self.summands[i][0]

    def obj(self, i):
        return self.summands[i][1]


@dataclass
class TwistedObject:
    """``(M, delta_M)`` with ``delta`` as ``{(j, i): {base_arrow: scalar}}``."""

    name: str
    carrier: FreeObject
    delta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.delta = {k: dict(v) for k, v in self.delta.items() if v}

    def support(self):
        return {k: True for k in self.delta}

    def validate(self, base):
        n = len(self.carrier)
        for (j, i), lc in self.delta.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError("%s: delta entry (%d, %d) out of range" % (self.name, j, i))
            want = 1 - self.carrier.shift(i) + self.carrier.shift(j)
            for f in lc:
                a = base.arrows[f]
                if a.source != self.carrier.obj(i) or a.target != self.carrier.obj(j):
                    raise ValueError("%s: entry (%d, %d) uses %s: %s -> %s"
                                     % (self.name, j, i, a.name, a.source, a.target))
                if a.degree != want:
                    raise ValueError("%s: entry (%d, %d) needs degree %d, %s has %d"
                                     % (self.name, j, i, want, a.name, a.degree))


class ComplexWindow(TwistedObject):
    """A (pre)complex ``C^{n0} -> ... -> C^{n1}`` of base objects.

    Position ``p`` is the summand ``Sigma^{-p} C^p``; ``delta`` entries only
    go from position ``p`` to ``p + 1``.
    """

    def __init__(self, name, terms, differentials=None):
        # terms: {position: object}; differentials: {position p: lc for C^p -> C^{p+1}}
        self.positions = sorted(terms)
        if self.positions != list(range(self.positions[0], self.positions[-1] + 1)):
            raise ValueError("%s: positions must be consecutive" % name)
        self.window = (self.positions[0], self.positions[-1])
        index = {p: k for k, p in enumerate(self.positions)}
        carrier = FreeObject([(-p, terms[p]) for p in self.positions])
        delta = {}
        for p, lc in (differentials or {}).items():
            if p not in index or p + 1 not in index:
                raise ValueError("%s: differential leaves the window at position %d" % (name, p))
            delta[(index[p + 1], index[p])] = lc
        super().__init__(name, carrier, delta)
        self.index = index

    def position(self, k):
        return self.positions[k]

    def differential(self, p):
        return self.delta.get((self.index.get(p + 1), self.index.get(p)), {})


def trivial_object(A):
    return TwistedObject(A, FreeObject([(0, A)]))


# ---------------------------------------------------- reachability / iln


def phi_reach(matrix, S):
    """Indices ``j`` with some ``i`` in ``S`` and ``matrix[(j, i)]`` nonzero."""
    S = set(S)
    return {j for (j, i), v in matrix.items() if i in S and v}


def is_iln(matrix, size=None):
    """``(True, N)`` with the least ``N`` such that ``Phi^N(I)`` is empty, else ``(False, None)``."""
    if size is None:
        size = 1 + max([max(k) for k in matrix] or [-1])
    S = set(range(size))
    for n in range(size + 1):
        if not S:
            return True, n
        S = phi_reach(matrix, S)
    return False, None


# ------------------------------------------------------------- the quiver


class TwistedQuiver:
    """Hom spaces between twisted objects as a :class:`GradedQuiver`.

    Object names are the twisted object names.  The arrow named
    ``"f:j<i"`` is the entry ``f`` from summand ``i`` to summand ``j``.
    """

    def __init__(self, base, objects, include_base=True, name=None):
        objs = []
        if include_base:
            objs.extend(trivial_object(A) for A in base.objects)
        objs.extend(objects)
        seen = set()
        for M in objs:
            if M.name in seen:
                raise ValueError("duplicate twisted object name %r" % M.name)
            seen.add(M.name)
            M.validate(base)
        self.base = base
        self.objects = {M.name: M for M in objs}
        arrows = []
        self.entry = []  # arrow id -> (f, j, i)
        for M in objs:
            for N in objs:
                for i, (mi, Ai) in enumerate(M.carrier.summands):
                    for j, (nj, Bj) in enumerate(N.carrier.summands):
                        for f in base.hom(Ai, Bj):
                            arrows.append(Arrow(M.name, N.name, "%s:%d<%d" % (base.arrows[f].name, j, i),
                                                base.degree(f) + mi - nj))
                            self.entry.append((f, j, i))
        self.quiver = GradedQuiver(base.field, [M.name for M in objs], arrows,
                                   name=name or "Tw(%s)" % (base.name or "a"))
        self._lookup = {}
        for t, (f, j, i) in enumerate(self.entry):
            self._lookup[(self.quiver.source(t), self.quiver.target(t), f, j, i)] = t
        self._by_obj = {}
        for M in objs:
            d = {}
            for k, (_, A) in enumerate(M.carrier.summands):
                d.setdefault(A, []).append(k)
            self._by_obj[M.name] = d
        self.base_ids = {}
        if include_base:
            for t, (f, j, i) in enumerate(self.entry):
                if self.quiver.source(t) in base.objects and self.quiver.target(t) in base.objects:
                    self.base_ids[f] = t

    # -- matrices -----------------------------------------------------------
    def arrow(self, M, N, f, j, i):
        return self._lookup[(M, N, f, j, i)]

    def from_matrix(self, M, N, matrix):
        """``{(j, i): base lc}`` to a linear combination of quiver arrows."""
        out = {}
        for (j, i), lc in matrix.items():
            for f, c in lc.items():
                lc_add(out, {self.arrow(M, N, f, j, i): c})
        return out

    def to_matrix(self, lc):
        out = {}
        for t, c in lc.items():
            f, j, i = self.entry[t]
            lc_add(out.setdefault((j, i), {}), {f: c})
        return {k: v for k, v in out.items() if v}

    def delta_family(self):
        return {name: self.from_matrix(name, name, M.delta) for name, M in self.objects.items()}

    def delta_cochain(self):
        return from_zero_part(self.quiver, self.delta_family())

    # -- cochains -----------------------------------------------------------
    def embed(self, phi):
        """Entrywise extension of ``phi`` from ``a`` to the twisted objects."""
        B = self.base
        out = {}
        names = list(self.objects)
        for (src, args), val in phi.terms.items():
            n = len(args)
            # base objects along the path: A_0 = src, A_l = target of f_l
            chain_objs = [src] + [B.target(f) for f in reversed(args)]
            arg_degs = [B.degree(f) for f in args]
            slots = [[(M, k) for M in names for k in self._by_obj[M].get(chain_objs[l], ())]
                     for l in range(n + 1)]
            for combo in product(*slots):
                Ms = [M for M, _ in combo]
                ks = [k for _, k in combo]
                shifts = [self.objects[Ms[l]].carrier.shift(ks[l]) for l in range(n + 1)]
                mix = [shifts[n - r + 1] - shifts[n - r] for r in range(1, n + 1)]
                tw_args = tuple(
                    self._lookup[(Ms[n - r], Ms[n - r + 1], args[r - 1], ks[n - r + 1], ks[n - r])]
                    for r in range(1, n + 1)
                )
                new = {}
                for g, c in val.items():
                    deg_phi = B.degree(g) - sum(arg_degs)
                    e = graded.canonical_iso_sign(shifts[n] - shifts[0], mix, deg_phi, arg_degs)
                    new[self._lookup[(Ms[0], Ms[n], g, ks[n], ks[0])]] = -c if e else c
                lc_add(out.setdefault((Ms[0], tw_args), {}), new)
        return Cochain(self.quiver, out)

    def project(self, Phi):
        """Restriction to the trivial twisted objects, read back on ``a``."""
        inv = {t: f for f, t in self.base_ids.items()}
        out = {}
        for (src, args), val in Phi.terms.items():
            if src not in self.base.objects or any(a not in inv for a in args):
                continue
            new = {inv[g]: c for g, c in val.items() if g in inv}
            if new:
                out[(src, tuple(inv[a] for a in args))] = new
        return Cochain(self.base, out)

    def check_convergence(self):
        """Reject twisted objects for which the ``embr`` sum is not known to be finite."""
        if self.base.is_concentrated_in_degree_zero():
            return
        for name, M in self.objects.items():
            ok, _ = is_iln(M.delta, len(M.carrier))
            if not ok:
                raise ValueError("twisted object %r: delta is not intrinsically locally nilpotent "
                                 "over a base with nonzero degrees" % name)

    def embr(self, phi, max_insertions=None, embedded=None):
        """``sum_m Phi{delta, ..., delta}`` with ``m`` copies of ``delta``.

        ``embedded`` may pass a precomputed ``self.embed(phi)``; it only
        depends on the carriers, not on the twisting.
        """
        self.check_convergence()
        Phi = self.embed(phi) if embedded is None else embedded
        delta = self.delta_cochain()
        top = max(phi.arities(), default=0)
        if max_insertions is not None:
            top = min(top, max_insertions)
        if delta.is_zero():
            return Phi
        sPhi, sdelta = suspend(Phi), suspend(delta)
        total = sPhi
        for m in range(1, top + 1):
            total = total + brace(sPhi, [sdelta] * m)
        return unsuspend(total)

    def retwist(self, objects):
        """Same carriers and hom spaces, new twisting differentials."""
        new = copy.copy(self)
        new.objects = dict(self.objects)
        for M in objects:
            old = self.objects.get(M.name)
            if old is None or old.carrier != M.carrier:
                raise ValueError("retwist keeps carriers; %r differs" % M.name)
            M.validate(self.base)
            new.objects[M.name] = M
        return new

    def embr_zero_closed_form(self, phi):
        """Arity-0 part of :meth:`embr` from ``sum_m (-1)^alpha phi_m(delta, ..., delta)``."""
        Phi = self.embed(phi)
        deltas = self.delta_family()
        out = {}
        for (n, i), part in Phi.parts().items():
            e = lembr_sign(n, i, 1)
            for M in self.objects:
                if n and not deltas[M]:
                    continue
                val = part.evaluate(*([deltas[M]] * n), source=M)
                if val:
                    lc_add(out.setdefault(M, {}), val, -1 if e else 1)
        return {k: v for k, v in out.items() if v}


def lembr_sign(n, i, j):
    """Exponent relating ``phi{delta^{x n}}`` and ``phi(delta, ..., delta)``."""
    return (n * i + (n * (n - 1) // 2) * j) & 1


# ---------------------------------------------------- (pre)complex windows


def _check_window(window, objects):
    lo, hi = window
    for C in objects:
        if not isinstance(C, ComplexWindow):
            raise TypeError("%r is not a ComplexWindow" % (C,))
        if C.window[0] < lo or C.window[1] > hi:
            raise ValueError("complex %r occupies %s outside the window [%d, %d]"
                             % (C.name, C.window, lo, hi))


def pcom_quiver(cat, window, objects, include_base=True):
    if cat.kind != "linear":
        raise ValueError("precomplex categories need a linear base, got %s" % cat.kind)
    _check_window(window, objects)
    return TwistedQuiver(cat.quiver, objects, include_base=include_base,
                         name="PCom(%s)" % (cat.name or "a"))


def build_pcom(cat, window, objects, include_base=True, check=True):
    """The cdg category of precomplexes, as ``embr(m)`` on the twisted quiver.

    Returns ``(StructuredCategory, TwistedQuiver)``. ``check=False`` skips the
    cdg identities, which dominate the cost on large windows.
    """
    tw = pcom_quiver(cat, window, objects, include_base)
    mu = tw.embr(cat.mu)
    return StructuredCategory(AInfStructure(tw.quiver, mu, "cdg"), check=check), tw


def square(cat, C):
    """``delta_C o delta_C`` as a matrix, using the base composition."""
    out = {}
    for (j, k), g in C.delta.items():
        for (k2, i), f in C.delta.items():
            if k2 != k:
                continue
            val = {}
            for ga, gc in g.items():
                for fa, fc in f.items():
                    lc_add(val, cat.mu.terms.get((cat.quiver.source(fa), (ga, fa)), {}), gc * fc)
            if val:
                lc_add(out.setdefault((j, i), {}), val)
    return {k: v for k, v in out.items() if v}


def build_com(cat, window, objects, include_base=True, check=True):
    """Complexes only; rejects any object whose ``delta`` squares to nonzero."""
    for C in objects:
        sq = square(cat, C)
        if sq:
            (j, i), lc = min(sq.items())
            raise ValueError("%r is not a complex: delta^2 has entry %d -> %d equal to %s"
                             % (C.name, C.position(i), C.position(j),
                                {cat.quiver.arrows[f].name: cat.field.format(c) for f, c in lc.items()}))
    pcom, tw = build_pcom(cat, window, objects, include_base, check=check)
    return infinity_part(pcom, check=False), tw
