"""Graded quivers with chosen bases, shifts, and the two sign exponents.

Every sign in the package comes from :func:`koszul_swap_sign` or
:func:`canonical_iso_sign`; other modules call them through this module
(``graded.koszul_swap_sign(...)``) so a single patch point controls them.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .linalg import FieldSpec


def koszul_swap_sign(deg_m, deg_n):
    """Exponent of the sign picked up when ``m`` and ``n`` trade places."""
    return (deg_m * deg_n) & 1


def canonical_iso_sign(i, shifts, deg_phi, arg_degrees):
    """Sign exponent of the canonical isomorphism

    ``S^{i - sum(shifts)}[M_1 x ... x M_n, M] -> [S^{i_1}M_1 x ... x S^{i_n}M_n, S^i M]``

    evaluated on ``phi`` of degree ``deg_phi`` and arguments of degrees
    ``arg_degrees`` (listed left to right).  ``i`` only enters through the
    shift of ``phi`` and does not change the exponent.
    """
    if len(shifts) != len(arg_degrees):
        raise ValueError("%d shifts for %d arguments" % (len(shifts), len(arg_degrees)))
    alpha = sum(shifts) * deg_phi
    acc = 0
    for r, s in enumerate(shifts):
        if r:
            alpha += s * acc
        acc += arg_degrees[r]
    return alpha & 1


def sign(exponent):
    return -1 if exponent & 1 else 1


# ----------------------------------------------------------- linear combos
# A linear combination of basis arrows is a plain dict {arrow_id: scalar}
# without zero values.


def lc_add(target, other, scale=1):
    for k, v in other.items():
        nv = target.get(k, 0) + scale * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)
    return target


def lc_scale(lc, s):
    if not s:
        return {}
    return {k: v * s for k, v in lc.items() if v * s}


# ------------------------------------------------------------------ quivers


@dataclass(frozen=True)
class Arrow:
    source: str
    target: str
    name: str
    degree: int


class GradedQuiver:
    """Finite graded k-quiver: objects plus a named basis of each hom space.

    Arrow ids are positions in :attr:`arrows`.  ``window`` bounds the
    degrees of all basis arrows; it defaults to the observed range.
    """

    def __init__(self, field, objects, arrows, window=None, name=None):
        if not isinstance(field, FieldSpec):
            raise TypeError("field must be a FieldSpec")
        self.field = field
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("duplicate objects")
        self.arrows = tuple(arrows)
        self.name = name
        objset = set(self.objects)
        self._hom = {}
        self._by_name = {}
        for idx, a in enumerate(self.arrows):
            if a.source not in objset or a.target not in objset:
                raise ValueError("arrow %r has an unknown endpoint" % (a,))
            key = (a.source, a.target, a.name)
            if key in self._by_name:
                raise ValueError("basis name %r repeated in hom(%s, %s)" % (a.name, a.source, a.target))
            self._by_name[key] = idx
            self._hom.setdefault((a.source, a.target), []).append(idx)
        degs = [a.degree for a in self.arrows]
        if window is None:
            window = (min(degs), max(degs)) if degs else (0, 0)
        self.window = tuple(window)
        for a in self.arrows:
            if not self.window[0] <= a.degree <= self.window[1]:
                raise ValueError("arrow %r outside degree window %r" % (a, self.window))
        self._out = {}
        for idx, a in enumerate(self.arrows):
            self._out.setdefault(a.target, []).append(idx)
        self._src = [a.source for a in self.arrows]
        self._tgt = [a.target for a in self.arrows]
        self._deg = [a.degree for a in self.arrows]

    def __repr__(self):
        return "GradedQuiver(%s, %d objects, %d arrows)" % (self.name or "?", len(self.objects), len(self.arrows))

    def __eq__(self, other):
        return (isinstance(other, GradedQuiver) and self.field == other.field
                and self.objects == other.objects and self.arrows == other.arrows
                and self.window == other.window)

    def __hash__(self):
        return hash((self.field, self.objects, self.arrows))

    def hom(self, source, target, degree=None):
        ids = self._hom.get((source, target), ())
        if degree is None:
            return tuple(ids)
        return tuple(i for i in ids if self._deg[i] == degree)

    def arrow_id(self, source, target, name):
        try:
            return self._by_name[(source, target, name)]
        except KeyError:
            raise KeyError("no arrow %r in hom(%s, %s)" % (name, source, target)) from None

    def leaving(self, obj):
        return tuple(i for i, a in enumerate(self.arrows) if a.source == obj)

    def source(self, a):
        return self._src[a]

    def target(self, a):
        return self._tgt[a]

    def degree(self, a):
        return self._deg[a]

    def is_concentrated_in_degree_zero(self):
        return all(d == 0 for d in self._deg)

    def paths(self, n, objects=None):
        """Composable argument tuples of length ``n`` as ``(source, args)``.

        ``args`` is written left to right, ``(f_n, ..., f_1)``, so ``f_1``
        leaves ``source`` and each next arrow starts where the last ended.
        """
        objs = self.objects if objects is None else objects
        objset = set(objs)
        if n == 0:
            for A in objs:
                yield A, ()
            return

        def extend(obj, acc, left):
            if left == 0:
                yield tuple(reversed(acc))
                return
            for (s, t), ids in self._hom.items():
                if s != obj or t not in objset:
                    continue
                for a in ids:
                    acc.append(a)
                    yield from extend(t, acc, left - 1)
                    acc.pop()

        for A in objs:
            for args in extend(A, [], n):
                yield A, args

    def full_subquiver(self, objects):
        """Full subquiver on ``objects`` and the old-to-new arrow id map."""
        objs = [A for A in self.objects if A in set(objects)]
        unknown = set(objects) - set(self.objects)
        if unknown:
            raise KeyError("unknown objects %s" % sorted(unknown))
        keep = [i for i, a in enumerate(self.arrows) if a.source in set(objs) and a.target in set(objs)]
        sub = GradedQuiver(self.field, objs, [self.arrows[i] for i in keep], window=self.window,
                           name=self.name)
        return sub, {old: new for new, old in enumerate(keep)}


def shift_quiver(quiver, i):
    """Apply ``Sigma^i`` to every hom space: all degrees drop by ``i``."""
    arrows = [Arrow(a.source, a.target, a.name, a.degree - i) for a in quiver.arrows]
    lo, hi = quiver.window
    return GradedQuiver(quiver.field, quiver.objects, arrows, window=(lo - i, hi - i), name=quiver.name)


# -------------------------------------------------- graded linear maps


@dataclass
class GradedMap:
    """Homogeneous linear map of degree ``degree`` between spans of basis keys.

    ``table`` sends a basis key to a linear combination ``{key: scalar}``;
    absent keys map to zero.
    """

    degree: int
    table: dict = dc_field(default_factory=dict)

    def __call__(self, key):
        return self.table.get(key, {})

    def apply(self, lc):
        out = {}
        for k, c in lc.items():
            lc_add(out, self.table.get(k, {}), c)
        return out

    def then(self, other):
        """``other`` after ``self``."""
        return GradedMap(self.degree + other.degree,
                         {k: other.apply(v) for k, v in self.table.items() if other.apply(v)})

    @classmethod
    def identity(cls, keys, one=1):
        return cls(0, {k: {k: one} for k in keys})


def tensor_apply(maps, tensor, degree_of):
    """``(f_1 x ... x f_r)(x_1 x ... x x_r)`` with Koszul signs.

    Returns ``{tuple_of_keys: scalar}``.  The sign is
    ``sum_{a<b} |f_b||x_a|``: each map passes the arguments to its left.
    """
    if len(maps) != len(tensor):
        raise ValueError("%d maps for a tensor of length %d" % (len(maps), len(tensor)))
    e = 0
    for b, f in enumerate(maps):
        for a in range(b):
            e += koszul_swap_sign(f.degree, degree_of(tensor[a]))
    s = sign(e)
    images = [f(x) for f, x in zip(maps, tensor)]
    out = {}
    for combo in product(*[list(im.items()) for im in images]):
        key = tuple(k for k, _ in combo)
        c = s
        for _, v in combo:
            c = c * v
        if c:
            nv = out.get(key, 0) + c
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return out
