"""Graded categories presented by a quiver with homogeneous relations.

Conventions
-----------
A path is a tuple of arrow names in *written* order: ``("b", "a")`` with
``a: X -> Y`` and ``b: Y -> Z`` is the composite ``b o a : X -> Z``.  The
leftmost arrow is applied last.  Every arrow has degree 1, so the degree of a
path is its length.  Length-0 paths are identities and are represented by the
empty tuple inside the piece ``(X, X, 0)``.

For each triple ``(X, Y, n)`` with ``n <= D`` the presentation caches a
:class:`HomPiece`: the lexicographically ordered paths, the degree-n piece of
the two-sided ideal as a canonical subspace of path space, and the quotient
basis.  Basis elements of ``Hom(X, Y)_n`` are the paths at the non-pivot
coordinates of the ideal, so every basis element is a single path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .xla import Field, Mat, span, quotient_basis

__all__ = [
    "Arrow",
    "HomElement",
    "HomPiece",
    "Presentation",
    "TableCategory",
    "PresentationError",
    "TruncationError",
    "check_generated_01",
    "enumerate_paths",
    "ideal_piece",
    "hom_piece",
    "compose",
    "load_presentation",
]


class PresentationError(ValueError):
    pass


class TruncationError(ValueError):
    """Raised when a computation would need degrees above the truncation."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class HomElement:
    """An element of ``Hom(source, target)_degree`` in the cached basis."""

    source: str
    target: str
    degree: int
    coords: tuple

    def is_zero(self):
        return not any(self.coords)


class HomPiece:
    __slots__ = ("key", "paths", "index", "ideal", "section", "proj", "dim", "_classes", "basis_paths")

    def __init__(self, key, paths, ideal):
        self.key = key
        self.paths = paths
        self.index = {q: i for i, q in enumerate(paths)}
        self.ideal = ideal
        self.section, self.proj = quotient_basis(ideal, len(paths))
        self.dim = len(self.section)
        self.basis_paths = [paths[j] for j in self.section]
        self._classes = None

    def classes(self):
        """Column ``j`` is the coordinate vector of path ``j`` in the quotient basis."""
        if self._classes is None:
            rows = self.proj.rows
            self._classes = [[rows[k][j] for k in range(self.dim)] for j in range(len(self.paths))]
        return self._classes

    def class_of(self, path):
        return self.classes()[self.index[path]]

    def lift(self, coords):
        """Path-space vector of the section representative of ``coords``."""
        field = self.ideal.field
        v = [field.zero] * len(self.paths)
        for c, j in zip(coords, self.section):
            v[j] = c
        return v

    def project(self, vec):
        return self.proj.apply(vec)


def _parse_coeff(field, c):
    if isinstance(c, str):
        return field.convert(Fraction(c.strip()))
    return field.convert(c)


class Presentation:
    """A positively graded K-category ``kQ / <relations>`` truncated at degree ``D``.

    ``relations`` is a list of relations, each a list of ``(coeff, path)``
    pairs with ``path`` a sequence of arrow names in written order.
    """

    def __init__(self, field, objects, arrows, relations=(), truncation=4, name=None,
                 homogeneous=True):
        if not isinstance(field, Field):
            field = Field.from_json(field)
        self.field = field
        self.name = name
        self.objects = [str(o) for o in objects]
        if len(set(self.objects)) != len(self.objects):
            raise PresentationError("duplicate object ids")
        self._objset = set(self.objects)
        self.arrows = []
        seen = set()
        for a in arrows:
            if not isinstance(a, Arrow):
                if isinstance(a, dict):
                    a = Arrow(str(a["name"]), str(a["from"]), str(a["to"]))
                else:
                    a = Arrow(*map(str, a))
            if a.name in seen:
                raise PresentationError(f"duplicate arrow name {a.name!r}")
            for end in (a.source, a.target):
                if end not in self._objset:
                    raise PresentationError(f"arrow {a.name!r} has undeclared endpoint {end!r}")
            seen.add(a.name)
            self.arrows.append(a)
        self.arrow = {a.name: a for a in self.arrows}
        self.D = int(truncation)
        if self.D < 0:
            raise PresentationError("truncation must be non-negative")
        self._source_relations = [list(r) for r in relations]
        self.relations = []
        for k, rel in enumerate(relations):
            self.relations.append(self._parse_relation(rel, k, homogeneous))
        self._pieces = {}
        self._paths = {}
        self._op = None
        # arrows grouped by endpoints
        self.arrows_into = {o: [a for a in self.arrows if a.target == o] for o in self.objects}
        self.arrows_out = {o: [a for a in self.arrows if a.source == o] for o in self.objects}
        self._rel_by_key = {}
        for terms in self.relations:
            path = terms[0][1]
            key = (self.path_source(path), self.path_target(path), len(path))
            self._rel_by_key.setdefault(key, []).append(terms)

    # -- construction helpers ------------------------------------------------

    def _parse_relation(self, rel, k, homogeneous):
        terms = []
        for t in rel:
            if isinstance(t, dict):
                c, path = t["coeff"], t["path"]
            else:
                c, path = t
            path = tuple(str(x) for x in path)
            self.check_path(path)
            c = _parse_coeff(self.field, c)
            if c:
                terms.append((c, path))
        if not terms:
            raise PresentationError(f"relation {k} has no nonzero term")
        ends = {(self.path_source(q), self.path_target(q)) for _, q in terms}
        if len(ends) != 1:
            raise PresentationError(f"relation {k} mixes non-parallel paths")
        lengths = {len(q) for _, q in terms}
        if homogeneous:
            if len(lengths) != 1:
                raise PresentationError(f"relation {k} is not homogeneous (lengths {sorted(lengths)})")
            if min(lengths) < 2:
                raise PresentationError(f"relation {k} has length < 2")
        # merge repeated paths
        acc = {}
        for c, q in terms:
            acc[q] = self.field.add(acc.get(q, self.field.zero), c)
        terms = [(c, q) for q, c in sorted(acc.items()) if c]
        if not terms:
            raise PresentationError(f"relation {k} cancels to zero")
        return terms

    def check_path(self, path):
        if not path:
            raise PresentationError("empty path in relation")
        for name in path:
            if name not in self.arrow:
                raise PresentationError(f"unknown arrow {name!r}")
        for left, right in zip(path, path[1:]):
            if self.arrow[left].source != self.arrow[right].target:
                raise PresentationError(f"arrows {left!r} and {right!r} do not compose")

    def path_source(self, path):
        return self.arrow[path[-1]].source

    def path_target(self, path):
        return self.arrow[path[0]].target

    def _check_object(self, X):
        if X not in self._objset:
            raise PresentationError(f"unknown object {X!r}")

    # -- paths and pieces ----------------------------------------------------

    def paths(self, X, Y, n):
        """Length-n paths X -> Y in lexicographic order of their arrow-name tuples."""
        self._check_object(X)
        self._check_object(Y)
        key = (X, Y, n)
        got = self._paths.get(key)
        if got is not None:
            return got
        if n == 0:
            out = [()] if X == Y else []
        else:
            out = []
            for a in self.arrows_into[Y]:
                for q in self.paths(X, a.source, n - 1):
                    out.append((a.name,) + q)
            out.sort()
        self._paths[key] = out
        return out

    def piece(self, X, Y, n):
        if n > self.D:
            raise TruncationError(f"degree {n} exceeds truncation D={self.D}")
        if n < 0:
            raise TruncationError(f"negative degree {n}")
        key = (X, Y, n)
        got = self._pieces.get(key)
        if got is not None:
            return got
        paths = self.paths(X, Y, n)
        idx = {q: i for i, q in enumerate(paths)}
        gens = []
        field = self.field
        N = len(paths)
        if n >= 2 and paths:
            # J . I_{n-1}: prepend an arrow b: W -> Y
            for b in self.arrows_into[Y]:
                prev = self.piece(X, b.source, n - 1)
                for row in prev.ideal.rows:
                    v = [field.zero] * N
                    for j, c in enumerate(row):
                        if c:
                            v[idx[(b.name,) + prev.paths[j]]] = c
                    gens.append(v)
            # I_{n-1} . J: append an arrow a: X -> W
            for a in self.arrows_out[X]:
                prev = self.piece(a.target, Y, n - 1)
                for row in prev.ideal.rows:
                    v = [field.zero] * N
                    for j, c in enumerate(row):
                        if c:
                            v[idx[prev.paths[j] + (a.name,)]] = c
                    gens.append(v)
            for terms in self._rel_by_key.get(key, ()):
                v = [field.zero] * N
                for c, q in terms:
                    v[idx[q]] = c
                gens.append(v)
        ideal = span(field, N, gens)
        piece = HomPiece(key, paths, ideal)
        self._pieces[key] = piece
        return piece

    def seal(self):
        """Populate every cached piece up to the truncation degree."""
        for n in range(self.D + 1):
            for X in self.objects:
                for Y in self.objects:
                    self.piece(X, Y, n)
        return self

    def hom_dim(self, X, Y, n):
        if n < 0:
            return 0
        return self.piece(X, Y, n).dim

    def dims_table(self, upto=None):
        upto = self.D if upto is None else upto
        return {(X, Y, n): self.hom_dim(X, Y, n)
                for X in self.objects for Y in self.objects for n in range(upto + 1)}

    def is_quadratic(self):
        return all(len(terms[0][1]) == 2 for terms in self.relations)

    def is_finite(self):
        """True when every Hom piece vanishes in degree D (so the truncation loses nothing)."""
        return all(self.hom_dim(X, Y, self.D) == 0 for X in self.objects for Y in self.objects)

    # -- elements ------------------------------------------------------------

    def identity(self, X):
        self._check_object(X)
        return HomElement(X, X, 0, (self.field.one,))

    def element(self, path, source=None):
        """The class of a path (``()`` needs ``source``)."""
        path = tuple(path)
        if not path:
            return self.identity(source)
        self.check_path(path)
        X, Y = self.path_source(path), self.path_target(path)
        piece = self.piece(X, Y, len(path))
        return HomElement(X, Y, len(path), tuple(piece.class_of(path)))

    def basis(self, X, Y, n):
        piece = self.piece(X, Y, n)
        one, zero = self.field.one, self.field.zero
        out = []
        for k in range(piece.dim):
            c = [zero] * piece.dim
            c[k] = one
            out.append(HomElement(X, Y, n, tuple(c)))
        return out

    def compose(self, g, f):
        """``g o f`` for ``f: X -> Y`` and ``g: Y -> Z``."""
        if f.target != g.source:
            raise PresentationError(f"cannot compose: {f.target!r} != {g.source!r}")
        n = f.degree + g.degree
        if n > self.D:
            raise TruncationError(f"composite degree {n} exceeds truncation D={self.D}")
        pf = self.piece(f.source, f.target, f.degree)
        pg = self.piece(g.source, g.target, g.degree)
        out_piece = self.piece(f.source, g.target, n)
        field = self.field
        p = field.p
        acc = [0] * out_piece.dim
        for cf, qf in zip(f.coords, pf.basis_paths):
            if not cf:
                continue
            for cg, qg in zip(g.coords, pg.basis_paths):
                if not cg:
                    continue
                cls = out_piece.class_of(qg + qf)
                w = cf * cg
                for k, x in enumerate(cls):
                    if x:
                        acc[k] += w * x
        coords = tuple((x % p) if p else Fraction(x) for x in acc)
        return HomElement(f.source, g.target, n, coords)

    def path_vector(self, elem):
        """Path-space representative (section lift) of an element."""
        return self.piece(elem.source, elem.target, elem.degree).lift(list(elem.coords))

    # -- structure matrices used by modules ---------------------------------

    def right_mult_matrix(self, a, C, n):
        """Matrix of ``h -> h o a`` from ``Hom(Y, C)_n`` to ``Hom(X, C)_{n+1}`` for ``a: X -> Y``."""
        arr = self.arrow[a]
        src = self.piece(arr.target, C, n)
        dst = self.piece(arr.source, C, n + 1)
        cols = [dst.class_of(q + (a,)) for q in src.basis_paths]
        return Mat.from_columns(self.field, cols, dst.dim)

    def left_mult_matrix(self, a, C, n):
        """Matrix of ``h -> a o h`` from ``Hom(C, X)_n`` to ``Hom(C, Y)_{n+1}`` for ``a: X -> Y``."""
        arr = self.arrow[a]
        src = self.piece(C, arr.source, n)
        dst = self.piece(C, arr.target, n + 1)
        cols = [dst.class_of((a,) + q) for q in src.basis_paths]
        return Mat.from_columns(self.field, cols, dst.dim)

    # -- derived presentations ----------------------------------------------

    def opposite(self):
        """The opposite category: arrows reversed (same names), paths reversed."""
        if self._op is None:
            arrows = [Arrow(a.name, a.target, a.source) for a in self.arrows]
            rels = [[(c, tuple(reversed(q))) for c, q in terms] for terms in self.relations]
            op = Presentation(self.field, self.objects, arrows, rels, self.D,
                              name=(self.name + "^op") if self.name else None)
            op._op = self
            self._op = op
        return self._op

    def with_truncation(self, D):
        if D == self.D:
            return self
        return Presentation(self.field, self.objects, self.arrows, self._source_relations, D, name=self.name)

    def with_field(self, field):
        if field == self.field:
            return self
        return Presentation(field, self.objects, self.arrows, self._source_relations, self.D, name=self.name)

    # -- serialisation ---------------------------------------------------------

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "objects": list(self.objects),
            "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in self.arrows],
            "relations": [[{"coeff": self.field.format(c), "path": list(q)} for c, q in terms]
                          for terms in self.relations],
            "truncation": self.D,
        }

    @classmethod
    def from_json(cls, doc, field=None, truncation=None, name=None):
        try:
            fld = field if field is not None else Field.from_json(doc.get("field", "Q"))
            D = truncation if truncation is not None else doc.get("truncation", 4)
            rels = []
            for rel in doc.get("relations", []):
                rels.append([(t["coeff"], t["path"]) for t in rel])
            return cls(fld, doc["objects"], doc.get("arrows", []), rels, D, name=name)
        except KeyError as exc:
            raise PresentationError(f"missing field {exc.args[0]!r} in presentation document") from None

    def __repr__(self):
        return (f"Presentation({self.name or '?'}: {len(self.objects)} objects, "
                f"{len(self.arrows)} arrows, {len(self.relations)} relations, D={self.D}, {self.field})")


def load_presentation(path, field=None, truncation=None):
    with open(path) as fh:
        doc = json.load(fh)
    import os
    name = os.path.splitext(os.path.basename(str(path)))[0]
    return Presentation.from_json(doc, field=field, truncation=truncation, name=name)


# function-style aliases

def enumerate_paths(p, X, Y, n):
    if n > p.D:
        raise TruncationError(f"degree {n} exceeds truncation D={p.D}")
    return list(p.paths(X, Y, n))


def ideal_piece(p, X, Y, n):
    return p.piece(X, Y, n).ideal


def hom_piece(p, X, Y, n):
    return p.piece(X, Y, n)


def compose(p, g, f):
    return p.compose(g, f)


class TableCategory:
    """A graded category given by explicit hom dimensions and structure constants.

    ``dims[(X, Y, n)]`` is ``dim Hom(X, Y)_n`` (missing means 0) and
    ``products[(Y, Z, j, X, i)]`` is a list of matrices ``M[t][s]`` giving
    ``e_t o f_s`` (for ``e_t`` in ``Hom(Y, Z)_j`` and ``f_s`` in ``Hom(X, Y)_i``)
    as a coordinate vector in ``Hom(X, Z)_{i+j}``.  Missing products are zero.
    Used for imports that need not come from a quiver.
    """

    def __init__(self, field, objects, D, dims, products):
        self.field = field
        self.objects = list(objects)
        self.D = D
        self.dims = dict(dims)
        self.products = dict(products)

    def hom_dim(self, X, Y, n):
        return self.dims.get((X, Y, n), 0)

    def product_vectors(self, X, Y, Z, i, j):
        table = self.products.get((Y, Z, j, X, i))
        if table is None:
            return []
        return [v for row in table for v in row]


def _degree1_products(cat, X, Y, Z, r):
    """Coordinate vectors in Hom(X, Z)_r of degree-1 elements composed with Hom(X, Y)_{r-1}."""
    if isinstance(cat, Presentation):
        out = []
        for e in cat.basis(Y, Z, 1):
            for f in cat.basis(X, Y, r - 1):
                out.append(list(cat.compose(e, f).coords))
        return out
    return cat.product_vectors(X, Y, Z, r - 1, 1)


def check_generated_01(cat):
    """Check that every ``Hom_r`` (1 <= r <= D) is spanned by composites with degree-1 maps.

    Returns ``(ok, first_failing_degree_or_None)``.
    """
    for r in range(1, cat.D + 1):
        for X in cat.objects:
            for Z in cat.objects:
                dim = cat.hom_dim(X, Z, r)
                if dim == 0:
                    continue
                if r == 1:
                    continue
                vecs = []
                for Y in cat.objects:
                    vecs.extend(_degree1_products(cat, X, Y, Z, r))
                if span(cat.field, dim, vecs).dim != dim:
                    return False, r
    return True, None

