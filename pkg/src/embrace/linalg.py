"""Exact scalars and sparse linear algebra over Q and GF(p).

Everything here is exact: rationals are ``gmpy2.mpq`` (a C-backed
fraction type that also accepts :class:`fractions.Fraction` input), prime
field residues are :class:`Mod`.  Matrices are stored as dict-of-rows and
never hold explicit zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import random

from gmpy2 import mpq

_RATIONAL = (Fraction, type(mpq()))


class Mod:
    """Residue class modulo a prime ``p``; always reduced into ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.p = p
        self.v = int(v) % p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError("mixing GF(%d) and GF(%d)" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("0 has no inverse in GF(%d)" % self.p)
        return Mod(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Mod(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o, self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d mod %d" % (self.v, self.p)


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: ``rational`` (characteristic 0) or ``prime-field``."""

    kind: str = "rational"
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "rational":
            if self.characteristic != 0:
                raise ValueError("the rational field has characteristic 0")
        elif self.kind == "prime-field":
            if not _is_prime(self.characteristic):
                raise ValueError("GF(p) needs p prime, got %r" % self.characteristic)
        else:
            raise ValueError("unknown field kind %r" % self.kind)

    @classmethod
    def Q(cls):
        return cls("rational", 0)

    @classmethod
    def GF(cls, p):
        return cls("prime-field", p)

    @classmethod
    def parse(cls, text):
        """Accepts ``"Q"`` or ``"GF(p)"``."""
        t = str(text).strip().replace(" ", "")
        if t in ("Q", "QQ", "rational"):
            return cls.Q()
        if t.startswith("GF(") and t.endswith(")"):
            return cls.GF(int(t[3:-1]))
        raise ValueError("cannot parse field %r" % text)

    @property
    def name(self):
        return "Q" if self.kind == "rational" else "GF(%d)" % self.characteristic

    def __str__(self):
        return self.name

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        if self.kind == "rational":
            if isinstance(x, Mod):
                raise TypeError("GF element used over Q")
            if isinstance(x, str):
                return self.parse_scalar(x)
            if isinstance(x, float):
                raise TypeError("floats are not exact scalars: %r" % x)
            return mpq(x)
        if isinstance(x, Mod):
            if x.p != self.characteristic:
                raise ValueError("wrong characteristic")
            return x
        if isinstance(x, str):
            return self.parse_scalar(x)
        if isinstance(x, _RATIONAL):
            return Mod(x.numerator, self.characteristic) / Mod(x.denominator, self.characteristic)
        if isinstance(x, float):
            raise TypeError("floats are not exact scalars: %r" % x)
        return Mod(x, self.characteristic)

    def parse_scalar(self, text):
        t = str(text).strip()
        if self.kind == "rational":
            return mpq(Fraction(t))
        if "mod" in t:
            r, p = t.split("mod")
            if int(p) != self.characteristic:
                raise ValueError("scalar %r is not in %s" % (text, self.name))
            return Mod(int(r), self.characteristic)
        return self(Fraction(t))

    def format(self, x):
        """Serialize: ``"num/den"`` (den omitted when 1) or ``"r mod p"``."""
        if self.kind == "rational":
            x = mpq(x)
            if x.denominator == 1:
                return str(x.numerator)
            return "%d/%d" % (x.numerator, x.denominator)
        return "%d mod %d" % (self(x).v, self.characteristic)

    def random(self, rng, nonzero=False, bound=5):
        """Random element; over Q a small integer or half-integer."""
        while True:
            if self.kind == "rational":
                x = mpq(rng.randint(-bound, bound), rng.choice((1, 1, 2)))
            else:
                x = Mod(rng.randrange(self.characteristic), self.characteristic)
            if x or not nonzero:
                return x

    def elements(self):
        """All elements (prime fields only)."""
        if self.kind != "prime-field":
            raise ValueError("Q is infinite")
        return [Mod(i, self.characteristic) for i in range(self.characteristic)]


# ---------------------------------------------------------------- matrices


class SparseMatrix:
    """rows x cols matrix over a field, stored as ``{row: {col: value}}``."""

    def __init__(self, field, rows, cols, data=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = {}
        if data:
            for r, row in data.items():
                clean = {c: v for c, v in row.items() if v}
                if clean:
                    for c in clean:
                        if not (0 <= r < rows and 0 <= c < cols):
                            raise IndexError("entry (%d, %d) out of range" % (r, c))
                    self._data[r] = clean

    @classmethod
    def from_dense(cls, field, dense, cols=None):
        rows = len(dense)
        if cols is None:
            cols = len(dense[0]) if rows else 0
        return cls(field, rows, cols,
                   {r: {c: field(v) for c, v in enumerate(row) if v} for r, row in enumerate(dense)})

    @classmethod
    def from_columns(cls, field, columns, rows):
        data = {}
        for c, col in enumerate(columns):
            for r, v in _vec_items(col):
                if v:
                    data.setdefault(r, {})[c] = v
        return cls(field, rows, len(columns), data)

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, {i: {i: field.one} for i in range(n)})

    @property
    def entries(self):
        """``(row, col, value)`` triples in row-major order, zeros omitted."""
        return [(r, c, self._data[r][c]) for r in sorted(self._data) for c in sorted(self._data[r])]

    def row(self, r):
        return dict(self._data.get(r, {}))

    def __getitem__(self, rc):
        r, c = rc
        return self._data.get(r, {}).get(c, self.field.zero)

    def to_dense(self):
        z = self.field.zero
        return [[self._data.get(r, {}).get(c, z) for c in range(self.cols)] for r in range(self.rows)]

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        return "SparseMatrix(%dx%d, %d nonzero)" % (self.rows, self.cols, sum(len(r) for r in self._data.values()))

    def matvec(self, x):
        if len(x) != self.cols:
            raise ValueError("dimension mismatch: %d columns, vector of length %d" % (self.cols, len(x)))
        out = [self.field.zero] * self.rows
        for r, row in self._data.items():
            s = self.field.zero
            for c, v in row.items():
                if x[c]:
                    s = s + v * x[c]
            out[r] = s
        return out

    def hstack(self, other):
        if other.rows != self.rows:
            raise ValueError("row mismatch")
        data = {r: dict(row) for r, row in self._data.items()}
        for r, row in other._data.items():
            d = data.setdefault(r, {})
            for c, v in row.items():
                d[self.cols + c] = v
        return SparseMatrix(self.field, self.rows, self.cols + other.cols, data)


def _vec_items(v):
    if isinstance(v, dict):
        return v.items()
    return enumerate(v)


def _rref_rows(field, rows_list, ncols):
    """Gauss-Jordan on a list of sparse row dicts. Returns (rows, pivots)."""
    rows = [dict(r) for r in rows_list if r]
    pivots = []
    prow = 0
    for col in range(ncols):
        sel = None
        for i in range(prow, len(rows)):
            if rows[i].get(col):
                sel = i
                break
        if sel is None:
            continue
        rows[prow], rows[sel] = rows[sel], rows[prow]
        piv = rows[prow]
        inv = field.one / piv[col]
        if piv[col] != field.one:
            for c in list(piv):
                piv[c] = piv[c] * inv
        for i in range(len(rows)):
            if i == prow:
                continue
            f = rows[i].get(col)
            if not f:
                continue
            r = rows[i]
            for c, v in piv.items():
                nv = r.get(c, field.zero) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
        pivots.append(col)
        prow += 1
        if prow == len(rows):
            break
    return rows[:prow], pivots


def rref(M):
    """Reduced row echelon form. Returns ``(R, pivot_columns, rank)``."""
    rows, pivots = _rref_rows(M.field, [M._data[r] for r in sorted(M._data)], M.cols)
    R = SparseMatrix(M.field, M.rows, M.cols, {i: r for i, r in enumerate(rows)})
    return R, pivots, len(pivots)


def rank(M):
    return rref(M)[2]


def solve(M, b):
    """Some ``x`` with ``M x = b`` (free variables set to 0), or ``None``."""
    if len(b) != M.rows:
        raise ValueError("dimension mismatch: %d rows, right-hand side of length %d" % (M.rows, len(b)))
    F = M.field
    aug = []
    for r in range(M.rows):
        row = dict(M._data.get(r, {}))
        if b[r]:
            row[M.cols] = F(b[r])
        aug.append(row)
    rows, pivots = _rref_rows(F, aug, M.cols + 1)
    if pivots and pivots[-1] == M.cols:
        return None
    x = [F.zero] * M.cols
    for row, p in zip(rows, pivots):
        x[p] = row.get(M.cols, F.zero)
    return x


def kernel_basis(M):
    """Basis of the null space, one vector per free column."""
    F = M.field
    R, pivots, _ = rref(M)
    pivset = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivset:
            continue
        v = [F.zero] * M.cols
        v[f] = F.one
        for i, p in enumerate(pivots):
            a = R._data.get(i, {}).get(f)
            if a:
                v[p] = -a
        basis.append(v)
    return basis


def span_rank(field, vectors, dim):
    rows = [{i: v for i, v in _vec_items(vec) if v} for vec in vectors]
    return len(_rref_rows(field, rows, dim)[1])


def quotient_dim(field, span_A, span_B, dim=None):
    """``dim(span A / span B)``; raises if B is not contained in span A."""
    if dim is None:
        vs = list(span_A) + list(span_B)
        dim = len(vs[0]) if vs else 0
    ra = span_rank(field, span_A, dim)
    rab = span_rank(field, list(span_A) + list(span_B), dim)
    if rab != ra:
        raise ArithmeticError("span_B is not contained in span_A (rank %d -> %d)" % (ra, rab))
    return ra - span_rank(field, span_B, dim)


def complement_basis(field, vectors, subspace, dim):
    """Greedy choice of ``vectors`` extending a basis of ``subspace``.

    Deterministic: vectors are tried in order and kept when they raise the rank.
    """
    rows, _ = _rref_rows(field, [{i: v for i, v in _vec_items(s) if v} for s in subspace], dim)
    chosen = []
    current = list(rows)
    r = len(rows)
    for vec in vectors:
        trial = current + [{i: v for i, v in _vec_items(vec) if v}]
        new_rows, piv = _rref_rows(field, trial, dim)
        if len(piv) > r:
            chosen.append(vec)
            current = new_rows
            r = len(piv)
    return chosen


def random_matrix(field, rows, cols, rng=None, density=0.5):
    rng = rng or random.Random(0)
    data = {}
    for r in range(rows):
        for c in range(cols):
            if rng.random() < density:
                v = field.random(rng)
                if v:
                    data.setdefault(r, {})[c] = v
    return SparseMatrix(field, rows, cols, data)
