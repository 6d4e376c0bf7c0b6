"""Exact linear algebra over the rationals and prime fields.

Everything downstream reduces to row reduction over an exact field.  Scalars
are stored "raw" inside matrices: :class:`fractions.Fraction` for the
rationals, canonical ``int`` representatives in ``[0, p)`` for a prime field.
The :class:`Scalar` wrapper exists for the public surface where values carry
their field tag.

Subspaces are always kept in reduced row-echelon form, so two subspaces are
equal exactly when their basis matrices are equal entry by entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Field",
    "QQ",
    "GF",
    "Scalar",
    "Mat",
    "Subspace",
    "EchelonBuilder",
    "Solver",
    "FieldMismatchError",
    "rref",
    "kernel",
    "intersect",
    "quotient_basis",
    "span",
    "SPARSE_THRESHOLD",
]

# Row count above which rref switches to sparse elimination.
SPARSE_THRESHOLD = 512


class FieldMismatchError(ValueError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class Field:
    """Ground field descriptor: ``Field(0)`` is the rationals, ``Field(p)`` is F_p."""

    __slots__ = ("p",)

    def __init__(self, p=0):
        p = int(p)
        if p != 0:
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
            if p >= 2**31:
                raise ValueError(f"prime {p} exceeds 2^31")
        self.p = p

    @property
    def characteristic(self):
        return self.p

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    def __str__(self):
        return "Q" if self.p == 0 else f"F{self.p}"

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def convert(self, value):
        """Map an int, Fraction, Scalar or ``"p/q"`` string into a raw field element."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"scalar over {value.field!r} used with {self!r}")
            return value.value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool):
            value = int(value)
        if self.p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(den, self.p - 2, self.p) % self.p
        return int(value) % self.p

    def __call__(self, value):
        return Scalar(self, self.convert(value))

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return 1 / a
        return pow(a, self.p - 2, self.p)

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def to_json(self):
        return "Q" if self.p == 0 else {"Fp": self.p}

    @classmethod
    def from_json(cls, obj):
        if obj in ("Q", "QQ"):
            return QQ
        if isinstance(obj, dict) and "Fp" in obj:
            return cls(obj["Fp"])
        if isinstance(obj, str):
            s = obj.strip()
            for prefix in ("Fp:", "F", "GF"):
                if s.startswith(prefix) and s[len(prefix):].strip("()").isdigit():
                    return cls(int(s[len(prefix):].strip("()")))
        raise ValueError(f"unrecognised field descriptor {obj!r}")

    def format(self, a):
        """String form of a raw element, as used in JSON documents."""
        if self.p == 0:
            return str(a)
        return str(int(a))


QQ = Field(0)


def GF(p):
    return Field(p)


@dataclass(frozen=True)
class Scalar:
    field: Field
    value: object

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot mix {self.field!r} and {other.field!r}")
            return other.value
        return self.field.convert(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self.field.inv(self._other(other))))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.convert(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.field.format(self.value)} in {self.field}"


class Mat:
    """Dense matrix of raw field elements (``rows`` is a list of lists).

    Linear maps use the column convention: a map V -> W is a
    ``dim W x dim V`` matrix acting on column vectors.
    """

    __slots__ = ("field", "nrows", "ncols", "rows", "_sparse")

    def __init__(self, field, rows, ncols=None, *, _trusted=False):
        if not isinstance(field, Field):
            raise TypeError("first argument must be a Field")
        self.field = field
        rows = list(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if _trusted:
            self.rows = rows
        else:
            conv = field.convert
            self.rows = []
            for r in rows:
                r = list(r)
                if len(r) != ncols:
                    raise ValueError("ragged matrix rows")
                self.rows.append([conv(x) for x in r])
        self.nrows = len(self.rows)
        self.ncols = ncols
        self._sparse = None

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols, _trusted=True)

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, field, cols, nrows):
        rows = [[c[i] for c in cols] for i in range(nrows)]
        return cls(field, rows, len(cols), _trusted=True)

    @classmethod
    def from_triplets(cls, field, nrows, ncols, triplets):
        """Build from ``(row, col, value)`` triplets; duplicates are an error."""
        sparse = [dict() for _ in range(nrows)]
        conv = field.convert
        for i, j, v in triplets:
            if j in sparse[i]:
                raise ValueError(f"duplicate coordinate ({i}, {j})")
            v = conv(v)
            if v:
                sparse[i][j] = v
        m = cls.__new__(cls)
        m.field, m.nrows, m.ncols = field, nrows, ncols
        m.rows = None
        m._sparse = sparse
        return m

    def _dense_rows(self):
        if self.rows is None:
            z = self.field.zero
            rows = []
            for d in self._sparse:
                r = [z] * self.ncols
                for j, v in d.items():
                    r[j] = v
                rows.append(r)
            self.rows = rows
        return self.rows

    def sparse_rows(self):
        if self._sparse is None:
            self._sparse = [{j: v for j, v in enumerate(r) if v} for r in self.rows]
        return self._sparse

    def to_triplets(self):
        return [(i, j, v) for i, d in enumerate(self.sparse_rows()) for j, v in sorted(d.items())]

    def tolist(self):
        return [list(r) for r in self._dense_rows()]

    def __getitem__(self, ij):
        i, j = ij
        if self.rows is None:
            return self._sparse[i].get(j, self.field.zero)
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self._dense_rows()]

    def transpose(self):
        rows = self._dense_rows()
        return Mat(self.field, [list(c) for c in zip(*rows)] if self.nrows else
                   [[] for _ in range(self.ncols)], self.nrows, _trusted=True)

    @property
    def T(self):
        return self.transpose()

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_zero(self):
        return not any(self.sparse_rows())

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self.sparse_rows() == other.sparse_rows())

    def __hash__(self):
        return hash((self.field, self.shape, tuple(tuple(sorted(d.items())) for d in self.sparse_rows())))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self._dense_rows())
        return f"Mat<{self.nrows}x{self.ncols} over {self.field}>[{body}]"

    def apply(self, vec):
        """Matrix times column vector (plain list)."""
        if len(vec) != self.ncols:
            raise ValueError(f"vector of length {len(vec)} for {self.nrows}x{self.ncols} matrix")
        p = self.field.p
        nz = [(j, v) for j, v in enumerate(vec) if v]
        out = []
        for d in self.sparse_rows():
            s = 0
            for j, v in nz:
                a = d.get(j)
                if a:
                    s += a * v
            out.append(s % p if p else Fraction(s))
        return out

    def __matmul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.field != other.field:
            raise FieldMismatchError("matrices over different fields")
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        p = self.field.p
        zero = self.field.zero
        right = other.sparse_rows()
        out = []
        for d in self.sparse_rows():
            acc = {}
            for k, a in d.items():
                for j, b in right[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            row = [zero] * other.ncols
            for j, v in acc.items():
                if p:
                    v %= p
                row[j] = v
            out.append(row)
        return Mat(self.field, out, other.ncols, _trusted=True)

    def __add__(self, other):
        if self.shape != other.shape or self.field != other.field:
            raise ValueError("shape/field mismatch in addition")
        add = self.field.add
        return Mat(self.field, [[add(a, b) for a, b in zip(r, s)]
                                for r, s in zip(self._dense_rows(), other._dense_rows())],
                   self.ncols, _trusted=True)

    def __sub__(self, other):
        if self.shape != other.shape or self.field != other.field:
            raise ValueError("shape/field mismatch in subtraction")
        sub = self.field.sub
        return Mat(self.field, [[sub(a, b) for a, b in zip(r, s)]
                                for r, s in zip(self._dense_rows(), other._dense_rows())],
                   self.ncols, _trusted=True)

    def scale(self, c):
        c = self.field.convert(c)
        mul = self.field.mul
        return Mat(self.field, [[mul(c, a) for a in r] for r in self._dense_rows()], self.ncols, _trusted=True)

    def submatrix(self, rows, cols):
        dense = self._dense_rows()
        return Mat(self.field, [[dense[i][j] for j in cols] for i in rows], len(cols), _trusted=True)

    @staticmethod
    def hstack(field, mats, nrows):
        rows = [[] for _ in range(nrows)]
        ncols = 0
        for m in mats:
            if m.nrows != nrows:
                raise ValueError("hstack row mismatch")
            for r, s in zip(rows, m._dense_rows()):
                r.extend(s)
            ncols += m.ncols
        return Mat(field, rows, ncols, _trusted=True)

    @staticmethod
    def vstack(field, mats, ncols):
        rows = []
        for m in mats:
            if m.ncols != ncols:
                raise ValueError("vstack column mismatch")
            rows.extend(list(r) for r in m._dense_rows())
        return Mat(field, rows, ncols, _trusted=True)

    def rank(self):
        return rref(self)[1]


# -- elimination -------------------------------------------------------------

def _rref_dense(field, rows, ncols, pivot_limit=None):
    """Gauss-Jordan on a copy of ``rows``; returns (nonzero rows, pivots, all rows)."""
    p = field.p
    A = [list(r) for r in rows]
    nrows = len(A)
    limit = ncols if pivot_limit is None else pivot_limit
    pivots = []
    r = 0
    for c in range(limit):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        prow = A[r]
        lead = prow[c]
        if lead != 1:
            inv = field.inv(lead)
            if p:
                prow = [x * inv % p if x else x for x in prow]
            else:
                prow = [x * inv if x else x for x in prow]
            A[r] = prow
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = A[i]
            f = row[c]
            if not f:
                continue
            if p:
                for j in nz:
                    row[j] = (row[j] - f * prow[j]) % p
            else:
                for j in nz:
                    row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return A[:r], pivots, A


def _rref_sparse(field, sparse_rows, ncols, pivot_limit=None):
    """Sparse Gauss-Jordan with Markowitz-style pivot row choice.

    Pivot columns are still processed left to right (the result must be the
    reduced echelon form); within a column the candidate row with the fewest
    nonzeros is chosen to limit fill-in.
    """
    p = field.p
    rows = [dict(d) for d in sparse_rows]
    colrows = {}
    for i, d in enumerate(rows):
        for j in d:
            colrows.setdefault(j, set()).add(i)
    limit = ncols if pivot_limit is None else pivot_limit
    used = set()
    pivot_of = []
    for c in range(limit):
        cands = [i for i in colrows.get(c, ()) if i not in used]
        if not cands:
            continue
        r = min(cands, key=lambda i: (len(rows[i]), i))
        prow = rows[r]
        inv = field.inv(prow[c])
        if inv != 1:
            for j in prow:
                prow[j] = prow[j] * inv % p if p else prow[j] * inv
        for i in list(colrows[c]):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            for j, v in prow.items():
                nv = row.get(j, 0) - f * v
                if p:
                    nv %= p
                if nv:
                    if j not in row:
                        colrows.setdefault(j, set()).add(i)
                    row[j] = nv
                elif j in row:
                    del row[j]
                    colrows[j].discard(i)
        used.add(r)
        pivot_of.append((c, r))
    nz = [rows[r] for _, r in pivot_of]
    return nz, [c for c, _ in pivot_of]


def rref(m, pivot_limit=None):
    """Reduced row-echelon form of ``m``.

    Returns ``(R, rank, pivots)`` where ``R`` has the same shape as ``m`` with
    the zero rows at the bottom.  ``pivot_limit`` restricts pivot search to
    the leading columns (used for augmented systems).
    """
    field = m.field
    zero = field.zero
    if m.nrows > SPARSE_THRESHOLD:
        nz, pivots = _rref_sparse(field, m.sparse_rows(), m.ncols, pivot_limit)
        out = []
        for d in nz:
            row = [zero] * m.ncols
            for j, v in d.items():
                row[j] = v
            out.append(row)
    else:
        out, pivots, _ = _rref_dense(field, m._dense_rows(), m.ncols, pivot_limit)
    rank = len(pivots)
    out.extend([zero] * m.ncols for _ in range(m.nrows - rank))
    return Mat(field, out, m.ncols, _trusted=True), rank, pivots


def _echelon_rows(field, rows, ncols):
    """Nonzero RREF rows and pivots of a list of vectors."""
    if not rows:
        return [], []
    if len(rows) > SPARSE_THRESHOLD:
        nz, pivots = _rref_sparse(field, [{j: v for j, v in enumerate(r) if v} for r in rows], ncols)
        zero = field.zero
        out = []
        for d in nz:
            row = [zero] * ncols
            for j, v in d.items():
                row[j] = v
            out.append(row)
        return out, pivots
    out, pivots, _ = _rref_dense(field, rows, ncols)
    return out, pivots


class Subspace:
    """A subspace of K^n held as the RREF of a basis (rows are basis vectors)."""

    __slots__ = ("field", "ambient_dim", "rows", "pivots", "_hash")

    def __init__(self, field, ambient_dim, rows, pivots):
        # rows must already be in RREF with the given pivots; use span() otherwise.
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = rows
        self.pivots = pivots
        self._hash = None

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, [], [])

    @classmethod
    def full(cls, field, n):
        return cls(field, n, Mat.identity(field, n).rows, list(range(n)))

    @property
    def dim(self):
        return len(self.rows)

    @property
    def basis(self):
        return Mat(self.field, self.rows, self.ambient_dim, _trusted=True)

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.pivots == other.pivots and self.rows == other.rows)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.ambient_dim, tuple(map(tuple, self.rows))))
        return self._hash

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.field}^{self.ambient_dim})"

    def reduce(self, vec):
        """Remainder of ``vec`` modulo this subspace (zero exactly on members)."""
        p = self.field.p
        v = list(vec)
        for row, c in zip(self.rows, self.pivots):
            f = v[c]
            if f:
                if p:
                    for j, x in enumerate(row):
                        if x:
                            v[j] = (v[j] - f * x) % p
                else:
                    for j, x in enumerate(row):
                        if x:
                            v[j] = v[j] - f * x
        return v

    def contains(self, vec):
        return not any(self.reduce(vec))

    def __contains__(self, vec):
        return self.contains(vec)

    def coords(self, vec):
        """Coordinates of a member vector in the RREF basis (its pivot entries)."""
        if not self.contains(vec):
            raise ValueError("vector is not in the subspace")
        return [vec[c] for c in self.pivots]

    def from_coords(self, coords):
        p = self.field.p
        out = [self.field.zero] * self.ambient_dim
        for c, row in zip(coords, self.rows):
            if c:
                for j, x in enumerate(row):
                    if x:
                        out[j] = out[j] + c * x
        if p:
            out = [x % p for x in out]
        return out

    def is_subspace_of(self, other):
        return all(other.contains(r) for r in self.rows)

    def __add__(self, other):
        _check_same(self, other)
        return span(self.field, self.ambient_dim, self.rows + other.rows)

    def __and__(self, other):
        return intersect(self, other)

    def image(self, m):
        """Image of this subspace under the matrix ``m`` (column convention)."""
        if m.ncols != self.ambient_dim:
            raise ValueError("matrix does not act on this subspace")
        return span(self.field, m.nrows, [m.apply(r) for r in self.rows])


def _check_same(a, b):
    if a.field != b.field:
        raise FieldMismatchError("subspaces over different fields")
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def span(field, n, vectors):
    """Canonical subspace of K^n spanned by ``vectors``."""
    vecs = [list(v) for v in vectors if any(v)]
    for v in vecs:
        if len(v) != n:
            raise ValueError("vector length does not match ambient dimension")
    rows, pivots = _echelon_rows(field, vecs, n)
    return Subspace(field, n, rows, pivots)


def kernel(m):
    """The subspace {v : m v = 0} of K^cols."""
    field = m.field
    n = m.ncols
    if m.nrows > SPARSE_THRESHOLD:
        nz, pivots = _rref_sparse(field, m.sparse_rows(), n)
        R = nz
        get = lambda row, j: row.get(j, 0)  # noqa: E731
    else:
        R, pivots, _ = _rref_dense(field, m._dense_rows(), n)
        get = lambda row, j: row[j]  # noqa: E731
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    zero = field.zero
    one = field.one
    vecs = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for row, c in zip(R, pivots):
            x = get(row, f)
            if x:
                v[c] = field.neg(x)
        vecs.append(v)
    return span(field, n, vecs)


def intersect(a, b):
    """Intersection of two subspaces, via the kernel of the stacked system [A^T | -B^T]."""
    _check_same(a, b)
    field = a.field
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(field, a.ambient_dim)
    n = a.ambient_dim
    ra = a.dim
    neg = field.neg
    cols = list(a.rows) + [[neg(x) for x in r] for r in b.rows]
    system = Mat.from_columns(field, cols, n)
    ker = kernel(system)
    vecs = [a.from_coords(k[:ra]) for k in ker.rows]
    return span(field, n, vecs)


def quotient_basis(sub, ambient_dim):
    """Canonical complement and projection for K^n / sub.

    ``section`` lists the non-pivot coordinates of ``sub``; ``proj`` is the
    ``len(section) x n`` matrix sending an ambient vector to its coordinates in
    the quotient (the section coordinates of its remainder mod ``sub``).
    """
    if sub.ambient_dim != ambient_dim:
        raise ValueError("ambient dimension mismatch")
    field = sub.field
    pivset = set(sub.pivots)
    section = [j for j in range(ambient_dim) if j not in pivset]
    q = len(section)
    proj = [[field.zero] * ambient_dim for _ in range(q)]
    for k, j in enumerate(section):
        proj[k][j] = field.one
    for row, c in zip(sub.rows, sub.pivots):
        for k, j in enumerate(section):
            x = row[j]
            if x:
                proj[k][c] = field.neg(x)
    return section, Mat(field, proj, ambient_dim, _trusted=True)


class EchelonBuilder:
    """Incrementally grown span; ``add`` reports whether the span got bigger."""

    def __init__(self, field, n):
        self.field = field
        self.n = n
        self._rows = {}  # pivot column -> row with 1 at the pivot, zeros at earlier pivots

    def _reduce(self, vec):
        p = self.field.p
        v = list(vec)
        for c in sorted(self._rows):
            f = v[c]
            if f:
                row = self._rows[c]
                if p:
                    for j, x in enumerate(row):
                        if x:
                            v[j] = (v[j] - f * x) % p
                else:
                    for j, x in enumerate(row):
                        if x:
                            v[j] = v[j] - f * x
        return v

    def add(self, vec):
        v = self._reduce(vec)
        for c, x in enumerate(v):
            if x:
                inv = self.field.inv(x)
                mul = self.field.mul
                self._rows[c] = [mul(inv, y) for y in v]
                return True
        return False

    def contains(self, vec):
        return not any(self._reduce(vec))

    @property
    def dim(self):
        return len(self._rows)

    def subspace(self):
        return span(self.field, self.n, list(self._rows.values()))


class Solver:
    """Solves ``m x = b`` for many right-hand sides against one fixed matrix."""

    def __init__(self, m):
        self.m = m
        field = m.field
        n, k = m.ncols, m.nrows
        aug = []
        dense = m._dense_rows()
        for i in range(k):
            row = list(dense[i]) + [field.zero] * k
            row[n + i] = field.one
            aug.append(row)
        _, pivots, full = _rref_dense(field, aug, n + k, pivot_limit=n)
        self.rank = len(pivots)
        self.pivots = pivots
        # rows of E with E m = R (reduced form)
        self._E = [r[n:] for r in full]
        self.field = field

    def solve(self, b):
        """A particular solution of ``m x = b`` or ``None`` when inconsistent."""
        field = self.field
        p = field.p
        if len(b) != self.m.nrows:
            raise ValueError("right-hand side has wrong length")
        nzb = [(j, v) for j, v in enumerate(b) if v]

        def dot(row):
            s = 0
            for j, v in nzb:
                x = row[j]
                if x:
                    s += x * v
            return s % p if p else Fraction(s)

        for i in range(self.rank, len(self._E)):
            if dot(self._E[i]):
                return None
        x = [field.zero] * self.m.ncols
        for i, c in enumerate(self.pivots):
            x[c] = dot(self._E[i])
        return x
