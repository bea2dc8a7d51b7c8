"""First-order deformations over ``k[eps]/(eps^2)`` and the obstruction to lifting complexes.

``eps``-linear data lives on a doubled quiver: every arrow ``f`` gets a twin
``eps*f`` of the same degree.  Products with two ``eps`` factors have no
place to land, which is exactly the relation ``eps^2 = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import graded
from .cochains import (
    Cochain, SuspendedCochain, brace, cochain_space, from_zero_part, hochschild_differential,
    project_zero, suspend,
)
from .graded import Arrow, GradedQuiver, lc_add
from .linalg import SparseMatrix, complement_basis, kernel_basis, rank, solve
from .structures import AInfStructure, StructuredCategory
from .twisted import ComplexWindow, TwistedQuiver, build_pcom, lembr_sign, square


# ------------------------------------------------------------ linear algebra on cochains


def _coords(cochain, index):
    """Coordinates of ``cochain`` in a ``{((src, args), out): row}`` index, growing it."""
    vec = {}
    for key, val in cochain.terms.items():
        for g, c in val.items():
            r = index.setdefault((key, g), len(index))
            vec[r] = c
    return vec


def _system(field, basis_images, target=None):
    index = {}
    cols = [_coords(im, index) for im in basis_images]
    bvec = _coords(target, index) if target is not None else {}
    rows = len(index)
    data = {}
    for j, col in enumerate(cols):
        for r, c in col.items():
            data.setdefault(r, {})[j] = c
    M = SparseMatrix(field, rows, len(cols), data)
    b = [field.zero] * rows
    for r, c in bvec.items():
        b[r] = c
    return M, b


def _combine(quiver, basis, coeffs, cls=Cochain):
    out = cls(quiver)
    for e, c in zip(basis, coeffs):
        if c:
            out = out + c * e
    return out


def _basis_from_keys(quiver, keys, cls=Cochain):
    one = quiver.field.one
    return [cls(quiver, {key: {g: one}}) for key, g in keys]


def hochschild_space(quiver, p, arity_max=4):
    """Basis of ``C^p`` restricted to arities ``<= arity_max``."""
    keys = []
    for n in range(arity_max + 1):
        keys.extend(cochain_space(quiver, n, p - n))
    return _basis_from_keys(quiver, keys)


def solve_coboundary(structure, target, p=None, arity_max=4):
    """Some ``h`` in ``C^{p-1}`` with ``d(h) = target``, or ``None``."""
    Q = structure.quiver
    if p is None:
        p = target.hochschild_degree if target else 1
    basis = hochschild_space(Q, p - 1, arity_max)
    images = [hochschild_differential(structure, e) for e in basis]
    M, b = _system(Q.field, images, target)
    x = solve(M, b)
    if x is None:
        return None
    return _combine(Q, basis, x)


def coboundary_ranks(structure, target, p=None, arity_max=4):
    """``(rank D, rank [D | target])`` for ``D = d`` on ``C^{p-1}``; unequal means no ``h`` exists."""
    Q = structure.quiver
    if p is None:
        p = target.hochschild_degree if target else 1
    basis = hochschild_space(Q, p - 1, arity_max)
    M, b = _system(Q.field, [hochschild_differential(structure, e) for e in basis], target)
    aug = M.hstack(SparseMatrix.from_columns(Q.field, [b], len(b))) if b else M
    return rank(M), rank(aug)


# ------------------------------------------------------------------ cohomology


@dataclass
class HHResult:
    degree: int
    dim: int
    representatives: list
    cocycle_dim: int
    coboundary_dim: int


def hochschild_cohomology(cat, p):
    """``HH^p`` of a linear category concentrated in degree zero."""
    if cat.kind != "linear" or not cat.quiver.is_concentrated_in_degree_zero():
        raise ValueError("Hochschild cohomology is computed for linear categories in degree zero")
    Q = cat.quiver
    F = Q.field

    def d_matrix(n):
        keys_src = cochain_space(Q, n, 0) if n >= 0 else []
        keys_tgt = cochain_space(Q, n + 1, 0)
        basis = _basis_from_keys(Q, keys_src)
        tindex = {k: r for r, k in enumerate(keys_tgt)}
        data = {}
        for j, e in enumerate(basis):
            for key, val in hochschild_differential(cat, e).terms.items():
                for g, c in val.items():
                    data.setdefault(tindex[(key, g)], {})[j] = c
        return SparseMatrix(F, len(keys_tgt), len(basis), data), basis, keys_tgt

    Dp, basis_p, _ = d_matrix(p)
    Z = kernel_basis(Dp)
    if p > 0:
        Dm, _, _ = d_matrix(p - 1)
        B = [[Dm[r, j] for r in range(Dm.rows)] for j in range(Dm.cols)]
    else:
        B = []
    B_rank = rank(SparseMatrix.from_columns(F, B, len(basis_p))) if B else 0
    reps_vecs = complement_basis(F, Z, B, len(basis_p))
    reps = [_combine(Q, basis_p, v) for v in reps_vecs]
    return HHResult(p, len(Z) - B_rank, reps, len(Z), B_rank)


# ------------------------------------------------------------------ doubling


def double_quiver(quiver):
    """Twin every arrow ``f`` with ``eps*f``; twins get ids ``f + len(arrows)``."""
    twins = [Arrow(a.source, a.target, "eps*" + a.name, a.degree) for a in quiver.arrows]
    return GradedQuiver(quiver.field, quiver.objects, list(quiver.arrows) + twins, window=quiver.window,
                        name="%s[eps]" % (quiver.name or "a"))


def extend_eps(target, X, Y=None, const=None, eps=None):
    """``k[eps]``-multilinear extension of ``X + eps Y`` onto ``target``.

    ``const`` and ``eps`` map arrow ids of the source quiver to the constant
    and ``eps`` twins in ``target`` (defaults fit :func:`double_quiver`).
    """
    cls = type(X)
    N = len(X.quiver.arrows)
    const = const or (lambda a: a)
    eps = eps or (lambda a: a + N)
    out = {}

    def put(src, args, val, twin):
        new = {(eps if twin else const)(g): c for g, c in val.items()}
        lc_add(out.setdefault((src, args), {}), new)

    for (src, args), val in X.terms.items():
        base = tuple(const(a) for a in args)
        put(src, base, val, False)
        for r in range(len(args)):
            put(src, base[:r] + (eps(args[r]),) + base[r + 1:], val, True)
    if Y is not None:
        for (src, args), val in Y.terms.items():
            put(src, tuple(const(a) for a in args), val, True)
    return cls(target, out, clean=False)


def reduce_mod_eps(cochain, base):
    """Constant part of a cochain on a doubled quiver."""
    N = len(base.arrows)
    return cochain.restrict(base, {i: i for i in range(N)})


def eps_part(cochain, base):
    """``Y`` in ``X + eps Y`` for the components with constant arguments."""
    N = len(base.arrows)
    out = {}
    for (src, args), val in cochain.terms.items():
        if any(a >= N for a in args):
            continue
        new = {g - N: c for g, c in val.items() if g >= N}
        if new:
            out[(src, args)] = new
    return type(cochain)(base, out)


# --------------------------------------------------------------- deformations


_KIND_ARITIES = [("linear", {2}), ("dg", {1, 2}), ("cdg", {0, 1, 2})]


class FirstOrderDeformation:
    """``(a[eps], mu + phi eps)`` for a Hochschild 2-cocycle ``phi``."""

    def __init__(self, base, phi, name=None, check=True):
        if phi.quiver != base.quiver:
            raise ValueError("cocycle lives on another quiver")
        if phi and phi.hochschild_degrees() != {2}:
            raise ValueError("deformation cocycles have Hochschild degree 2, got %s"
                             % sorted(phi.hochschild_degrees()))
        if check:
            dphi = hochschild_differential(base, phi)
            if dphi:
                raise ValueError("not a cocycle: d(phi) has component %s" % dphi.to_records()[0])
        self.base = base
        self.phi = phi
        self.name = name

    @property
    def field(self):
        return self.base.field

    def __repr__(self):
        return "FirstOrderDeformation(%s, %s)" % (self.base.name, self.name or "phi")


def deform_category(defo):
    """The deformed structure on the doubled quiver, checked valid modulo ``eps^2``."""
    Q = defo.base.quiver
    DQ = double_quiver(Q)
    mu = extend_eps(DQ, defo.base.mu, defo.phi)
    arities = mu.arities()
    kind = defo.base.kind
    allowed = dict(_KIND_ARITIES).get(kind)
    if allowed is not None and not arities <= allowed:
        kind = next((k for k, a in _KIND_ARITIES if arities <= a), "a-zero-infinity")
    return StructuredCategory(AInfStructure(DQ, mu, kind), name="%s_eps" % (defo.base.name or "a"))


@dataclass
class GaugeResult:
    ok: bool
    residual: object
    source: object = None  # deformation the morphism 1 + h eps starts from
    target: object = None
    h: object = None
    functor_check: bool = None

    def __bool__(self):
        return self.ok


def gauge_apply(defo, defo2, h, check_functor=True):
    """Test ``1 + h eps`` as an isomorphism between the two deformations.

    It succeeds exactly when ``d(h) = phi' - phi``; the morphism then runs
    from ``defo2`` (cocycle ``phi'``) to ``defo`` (cocycle ``phi``), and the
    functor identity is re-checked on the doubled quiver.
    """
    base = defo.base
    residual = hochschild_differential(base, h) - (defo2.phi - defo.phi)
    if residual:
        return GaugeResult(False, residual)
    if not check_functor:
        return GaugeResult(True, residual, source=defo2, target=defo, h=h)
    Q = base.quiver
    DQ = double_quiver(Q)
    b_src = suspend(extend_eps(DQ, base.mu, defo2.phi))
    b_tgt = suspend(extend_eps(DQ, base.mu, defo.phi))
    G = extend_eps(DQ, SuspendedCochain(Q), suspend(h))
    lhs = b_src + brace(G, [b_src])
    rhs = b_tgt + brace(b_tgt, [G]) + brace(b_tgt, [G, G])
    return GaugeResult(lhs == rhs, residual, source=defo2, target=defo, h=h, functor_check=lhs == rhs)


def find_gauge(defo, defo2, arity_max=4):
    """Some ``h`` with ``d(h) = phi' - phi`` (free variables zero), or ``None``."""
    diff = defo2.phi - defo.phi
    if not diff:
        return Cochain(defo.base.quiver)
    return solve_coboundary(defo.base, diff, 2, arity_max)


# --------------------------------------------------------------- complexes


def window_category(cat, objects, window=None, check=True):
    """``PCom`` on ``objects`` over the hull of their windows (or ``window``)."""
    objs = list(objects)
    if window is None:
        lo = min(C.window[0] for C in objs)
        hi = max(C.window[1] for C in objs)
        window = (lo, hi)
    return build_pcom(cat, window, objs, check=check)


def hom_differential(pcom, M, N, n):
    """Matrix of ``mu_1`` from ``hom(M, N)^n`` to ``hom(M, N)^{n+1}`` and both bases."""
    Q = pcom.quiver
    src = Q.hom(M, N, n)
    tgt = Q.hom(M, N, n + 1)
    tindex = {t: r for r, t in enumerate(tgt)}
    mu1 = pcom.mu.arity_part(1)
    data = {}
    for j, f in enumerate(src):
        for g, c in mu1.terms.get((M, (f,)), {}).items():
            data.setdefault(tindex[g], {})[j] = c
    return SparseMatrix(Q.field, len(tgt), len(src), data), src, tgt


def apply_mu1(pcom, M, f_lc):
    mu1 = pcom.mu.arity_part(1)
    return mu1.evaluate(f_lc) if f_lc else {}


def compose(pcom, g_lc, f_lc):
    """``g o f`` through the arity-2 component of the structure."""
    if not g_lc or not f_lc:
        return {}
    return pcom.mu.arity_part(2).evaluate(g_lc, f_lc)


class HomotopyHom:
    """Cocycles and coboundaries of ``hom(C, D)^n`` in a window category."""

    def __init__(self, pcom, C, D, n):
        self.pcom = pcom
        self.C, self.D, self.n = C, D, n
        F = pcom.quiver.field
        self.field = F
        self.d_out, self.basis, _ = hom_differential(pcom, C, D, n)
        self.d_in, self.prev_basis, _ = hom_differential(pcom, C, D, n - 1)
        self.cocycles = kernel_basis(self.d_out)
        self.boundary_rank = rank(self.d_in)

    @property
    def dim(self):
        return len(self.cocycles) - self.boundary_rank

    def vector(self, lc):
        pos = {t: r for r, t in enumerate(self.basis)}
        v = [self.field.zero] * len(self.basis)
        for t, c in lc.items():
            if t not in pos:
                raise ValueError("element does not lie in hom(%s, %s)^%d" % (self.C, self.D, self.n))
            v[pos[t]] = c
        return v

    def is_cocycle(self, lc):
        return not any(self.d_out.matvec(self.vector(lc)))

    def bounding(self, lc):
        """Some ``h`` in degree ``n - 1`` with ``mu_1(h) = lc``, or ``None``."""
        x = solve(self.d_in, self.vector(lc))
        if x is None:
            return None
        return {t: c for t, c in zip(self.prev_basis, x) if c}

    def rank_evidence(self, lc):
        """``(rank D, rank [D | v])``; unequal ranks certify that ``lc`` is not a boundary."""
        v = self.vector(lc)
        aug = self.d_in.hstack(SparseMatrix.from_columns(self.field, [v], len(v)))
        return rank(self.d_in), rank(aug)

    def same_class(self, a, b):
        diff = dict(a)
        lc_add(diff, b, -1)
        return self.bounding(diff) is not None


def _require_complex(cat, C):
    sq = square(cat, C)
    if sq:
        raise ValueError("%r is not a complex (delta^2 != 0)" % C.name)


def direct_contraction(cat, phi, C):
    """``sum_m (-1)^alpha phi_m(delta, ..., delta)`` as a matrix, straight on the base."""
    Q = cat.quiver
    out = {}
    shifts = [C.carrier.shift(k) for k in range(len(C.carrier))]
    for (n, i), part in phi.parts().items():
        e0 = lembr_sign(n, i, 1)
        if n == 0:
            for k, (_, A) in enumerate(C.carrier.summands):
                val = part.terms.get((A, ()), {})
                if val:
                    lc_add(out.setdefault((k, k), {}), val, -1 if e0 else 1)
            continue
        # chains k_0 -> k_1 -> ... -> k_n of delta entries
        chains = [[k] for k in range(len(shifts))]
        for _ in range(n):
            chains = [ch + [j] for ch in chains for (j, i2) in C.delta if i2 == ch[-1]]
        for ks in chains:
            entries = [C.delta[(ks[l + 1], ks[l])] for l in range(n)]  # entry l: k_l -> k_{l+1}
            mix = [shifts[ks[n - r + 1]] - shifts[ks[n - r]] for r in range(1, n + 1)]
            lcs = list(reversed(entries))  # written order: last entry first
            for combo in product(*[list(lc.items()) for lc in lcs]):
                args = tuple(f for f, _ in combo)
                val = part.terms.get((C.carrier.obj(ks[0]), args))
                if not val:
                    continue
                coeff = 1
                for _, c in combo:
                    coeff = coeff * c
                degs = [Q.degree(f) for f in args]
                for g, c in val.items():
                    e = e0 + graded.canonical_iso_sign(shifts[ks[n]] - shifts[ks[0]], mix,
                                                       Q.degree(g) - sum(degs), degs)
                    lc_add(out.setdefault((ks[n], ks[0]), {}), {g: -coeff * c if e & 1 else coeff * c})
    return {k: v for k, v in out.items() if v}


@dataclass
class CharacteristicValue:
    complex: str
    representative: dict  # lc in hom(C, C)^2 of the window quiver
    matrix: dict
    vanishes: bool
    homotopy: object  # h with mu_1(h) = representative, when vanishing
    hom: object
    direct_matrix: dict = None


class DeformationLab:
    """Window category of a set of complexes over the base of a deformation."""

    def __init__(self, defo, complexes, window=None, category=None):
        """``category`` may pass a ``(pcom, tw)`` pair from :func:`window_category` to share."""
        self.defo = defo
        cat = defo.base
        if cat.kind != "linear":
            raise ValueError("lift systems are built from the composition alone; need a linear base, got %s"
                             % cat.kind)
        for C in complexes:
            _require_complex(cat, C)
        self.complexes = list(complexes)
        if category is None:
            category = window_category(cat, complexes, window)
        self.pcom, self.tw = category
        if self.tw.base != cat.quiver or not all(C.name in self.tw.objects for C in self.complexes):
            raise ValueError("shared window category does not contain these complexes")
        self._embr_phi = None
        self._homs = {}

    @property
    def embr_phi(self):
        if self._embr_phi is None:
            self._embr_phi = self.tw.embr(self.defo.phi)
        return self._embr_phi

    def hom(self, C, D, n):
        key = (C, D, n)
        if key not in self._homs:
            self._homs[key] = HomotopyHom(self.pcom, C, D, n)
        return self._homs[key]

    def characteristic_value(self, C):
        name = C.name if isinstance(C, ComplexWindow) else C
        obj = self.tw.objects[name]
        rep = project_zero(self.embr_phi).get(name, {})
        direct = direct_contraction(self.defo.base, self.defo.phi, obj)
        mat = self.tw.to_matrix(rep)
        if mat != direct:
            raise ArithmeticError("characteristic value of %s: embr gives %s, direct contraction %s"
                                  % (name, mat, direct))
        H = self.hom(name, name, 2)
        h = H.bounding(rep)
        return CharacteristicValue(name, rep, mat, h is not None, h, H, direct)

    def lift_system(self, C):
        """Unknown ``delta'`` entries and the equation ``delta delta' + delta' delta = -phi(delta, delta)``.

        Built from base compositions only, independent of the window
        differential.
        """
        cat = self.defo.base
        Q = cat.quiver
        F = Q.field
        obj = self.tw.objects[C]
        n = len(obj.carrier)
        shifts = [obj.carrier.shift(k) for k in range(n)]
        unknowns = []  # (j, i, f): delta'_{ji} coefficient of f
        for i in range(n):
            for j in range(n):
                want = 1 - shifts[i] + shifts[j]
                for f in Q.hom(obj.carrier.obj(i), obj.carrier.obj(j), want):
                    unknowns.append((j, i, f))
        m2 = cat.mu.arity_part(2)

        def mult(g_lc, f_lc):
            out = {}
            for g, gc in g_lc.items():
                for f, fc in f_lc.items():
                    lc_add(out, m2.terms.get((Q.source(f), (g, f)), {}), gc * fc)
            return out

        cols = []
        for (j, i, f) in unknowns:
            col = {}
            for (k, j2), g in obj.delta.items():  # delta o delta'
                if j2 == j:
                    lc_add(col.setdefault((k, i), {}), mult(g, {f: F.one}))
            for (k2, i2), g in obj.delta.items():  # delta' o delta
                if k2 == i:
                    lc_add(col.setdefault((j, i2), {}), mult({f: F.one}, g))
            cols.append({k: v for k, v in col.items() if v})
        rhs = {}
        for (k, j), g in obj.delta.items():
            for (j2, i), f in obj.delta.items():
                if j2 == j:
                    phi2 = self.defo.phi.arity_part(2)
                    val = {}
                    for ga, gc in g.items():
                        for fa, fc in f.items():
                            lc_add(val, phi2.terms.get((Q.source(fa), (ga, fa)), {}), gc * fc)
                    lc_add(rhs.setdefault((k, i), {}), val, -1)
        index = {}
        for col in cols:
            for (k, i), lc in col.items():
                for g in lc:
                    index.setdefault((k, i, g), len(index))
        for (k, i), lc in rhs.items():
            for g in lc:
                index.setdefault((k, i, g), len(index))
        data = {}
        for c, col in enumerate(cols):
            for (k, i), lc in col.items():
                for g, v in lc.items():
                    data.setdefault(index[(k, i, g)], {})[c] = v
        M = SparseMatrix(F, len(index), len(unknowns), data)
        b = [F.zero] * len(index)
        for (k, i), lc in rhs.items():
            for g, v in lc.items():
                b[index[(k, i, g)]] = v
        return unknowns, M, b

    def obstruction_and_lift(self, C):
        name = C.name if isinstance(C, ComplexWindow) else C
        cv = self.characteristic_value(name)
        unknowns, M, b = self.lift_system(name)
        x = solve(M, b)
        witness = None
        if x is not None:
            witness = {}
            for (j, i, f), c in zip(unknowns, x):
                if c:
                    lc_add(witness.setdefault((j, i), {}), {f: c})
        r = rank(M)
        r_aug = rank(M.hstack(SparseMatrix.from_columns(M.field, [b], len(b)))) if b else r
        lifts = witness is not None
        if lifts != cv.vanishes:
            raise ArithmeticError("lift search and characteristic class disagree on %s" % name)
        lift_dim = self.hom(name, name, 1).dim if lifts else None
        return ObstructionReport(name, cv.matrix, cv.vanishes, witness, lift_dim, (r, r_aug),
                                 cv.hom.rank_evidence(cv.representative))

    def verify_centrality(self, maps):
        """``chi_D f - f chi_C`` is a boundary for each chain map ``(C, D, f)``."""
        out = []
        for C, D, f in maps:
            deg = {self.pcom.quiver.degree(t) for t in f}
            if len(deg) != 1:
                raise ValueError("map %s -> %s is not homogeneous" % (C, D))
            n = deg.pop()
            if apply_mu1(self.pcom, C, f):
                raise ValueError("map %s -> %s is not a chain map" % (C, D))
            zc = self.characteristic_value(C).representative
            zd = self.characteristic_value(D).representative
            diff = compose(self.pcom, zd, f)
            lc_add(diff, compose(self.pcom, f, zc), -1)
            if not diff:
                out.append(CentralityRecord(C, D, n, True, {}))
                continue
            h = self.hom(C, D, n + 2).bounding(diff)
            out.append(CentralityRecord(C, D, n, h is not None, h))
        return out

    def phi_infinity_locus(self, candidates=None):
        names = [c.name if isinstance(c, ComplexWindow) else c for c in (candidates or self.complexes)]
        inside, outside = [], []
        for name in names:
            rep = self.obstruction_and_lift(name)
            (inside if rep.vanishes else outside).append(name)
        return {"dg_deformable": inside, "obstructed": outside}


@dataclass
class ObstructionReport:
    complex: str
    representative: dict
    vanishes: bool
    witness: object
    lift_space_dim: object
    lift_ranks: tuple
    class_ranks: tuple

    @property
    def lifts(self):
        return self.witness is not None


@dataclass
class CentralityRecord:
    source: str
    target: str
    degree: int
    passed: bool
    homotopy: object


# ------------------------------------------------------- gauge enumeration


def exhaustive_gauges(defo, defo2, arity_max=2):
    """Every ``h`` in ``C^1`` (arities ``<= arity_max``) that is a gauge; needs a finite field."""
    F = defo.field
    if F.kind != "prime-field":
        raise ValueError("exhaustive search needs a finite field")
    basis = hochschild_space(defo.base.quiver, 1, arity_max)
    found = []
    for coeffs in product(F.elements(), repeat=len(basis)):
        h = _combine(defo.base.quiver, basis, coeffs)
        if gauge_apply(defo, defo2, h):
            found.append(h)
    return found, F.characteristic ** len(basis)


# ------------------------------------------------------- precomplexes


@dataclass
class PrecomplexReport:
    identity_holds: bool
    gauge_holds: bool
    objects: list
    residual: object = None

    def __bool__(self):
        return self.identity_holds and self.gauge_holds


def _lifted(C, extra, N):
    terms = {p: C.carrier.obj(k) for p, k in C.index.items()}
    diffs = {}
    for p in C.positions[:-1]:
        lc = dict(C.differential(p))
        i, j = C.index[p], C.index[p + 1]
        for f, c in extra.get((j, i), {}).items():
            lc_add(lc, {f + N: c})
        if lc:
            diffs[p] = lc
    for (j, i) in extra:
        if C.position(j) != C.position(i) + 1:
            raise ValueError("%s: lift entry %d -> %d is not adjacent" % (C.name, C.position(i), C.position(j)))
    return ComplexWindow(C.name, terms, diffs)


class PrecomplexCheck:
    """Shared setup for checking many lifts ``delta + delta' eps`` of fixed precomplexes.

    For each ``gamma`` (object name to ``delta'`` matrix, missing names mean
    ``delta' = 0``) :meth:`verify` compares ``mu~``, the ``embr`` of
    ``mu + phi eps`` over the doubled base, with ``mu_bar + d(delta') eps``
    where ``mu_bar`` is the ``eps``-extension of ``embr(mu) + embr(phi) eps``.
    """

    def __init__(self, defo, objects, window=None, category=None):
        self.defo = defo
        self.objects = list(objects)
        self.N = len(defo.base.quiver.arrows)
        self.pcom, self.tw = category or window_category(defo.base, self.objects, window)
        self.dcat = deform_category(defo)
        self.embr_phi = self.tw.embr(defo.phi)
        self.bar = FirstOrderDeformation(self.pcom, self.embr_phi, check=False)
        self.tw_eps = TwistedQuiver(self.dcat.quiver, [_lifted(C, {}, self.N) for C in self.objects])
        self.embedded = self.tw_eps.embed(self.dcat.mu)
        tw, tw_eps, N = self.tw, self.tw_eps, self.N
        self._const = [tw_eps.arrow(tw.quiver.source(t), tw.quiver.target(t), f, j, i)
                       for t, (f, j, i) in enumerate(tw.entry)]
        self._eps = [tw_eps.arrow(tw.quiver.source(t), tw.quiver.target(t), f + N, j, i)
                     for t, (f, j, i) in enumerate(tw.entry)]

    def verify(self, gamma, check_functor=True):
        tw, N = self.tw, self.N
        lifted = [_lifted(C, gamma.get(C.name, {}), N) for C in self.objects]
        tw_eps = self.tw_eps.retwist(lifted)
        mu_tilde = tw_eps.embr(self.dcat.mu, embedded=self.embedded)
        const, eps = self._const.__getitem__, self._eps.__getitem__

        delta_p = from_zero_part(tw.quiver, {C.name: tw.from_matrix(C.name, C.name, gamma.get(C.name, {}))
                                             for C in self.objects})
        d_delta = hochschild_differential(self.pcom.structure, delta_p)
        # extend_eps is linear in the eps part, so mu_bar + d(delta') eps is one extension
        rhs = extend_eps(tw_eps.quiver, self.pcom.mu, self.embr_phi + d_delta, const, eps)
        holds = mu_tilde == rhs
        residual = None if holds else mu_tilde - rhs
        tilde = FirstOrderDeformation(self.pcom, self.embr_phi + d_delta, check=False)
        g = gauge_apply(self.bar, tilde, delta_p, check_functor)
        return PrecomplexReport(holds, bool(g), [C.name for C in self.objects], residual)


def verify_precomplexes(defo, objects, gamma, window=None):
    """One-shot :class:`PrecomplexCheck`."""
    return PrecomplexCheck(defo, objects, window).verify(gamma)


# ------------------------------------------------------- zero part


@dataclass
class NormalizedCocycle:
    h: object
    phi: object


def normalize_zero_part(cat, phi, arity_max=0):
    """Find ``h`` killing the arity-0 part: ``phi - d(h)`` has no curvature component.

    Solves objectwise for ``h_C`` in ``hom(C, C)^1``.  A failing solve means
    some object carries a nonvanishing class, against the precondition.
    """
    Q = cat.quiver
    zero = project_zero(phi)
    h_total = Cochain(Q)
    for A in Q.objects:
        target = zero.get(A)
        if not target:
            continue
        basis = [from_zero_part(Q, {A: {t: Q.field.one}}) for t in Q.hom(A, A, 1)]
        images = [from_zero_part(Q, {A: project_zero(hochschild_differential(cat, e)).get(A, {})})
                  for e in basis]
        M, b = _system(Q.field, images, from_zero_part(Q, {A: target}))
        x = solve(M, b) if basis else None
        if x is None:
            raise ArithmeticError("zero part at %r is not a boundary; object is outside the locus" % A)
        h_total = h_total + _combine(Q, basis, x)
    corrected = phi - hochschild_differential(cat, h_total)
    if project_zero(corrected):
        raise ArithmeticError("normalization left a curvature component")
    return NormalizedCocycle(h_total, corrected)
