"""Graded contravariant modules over a presentation.

A module ``F`` assigns a vector space ``F(X)_n`` to each object and degree,
and to each arrow ``a: X -> Y`` a matrix ``F(a)_n : F(Y)_n -> F(X)_{n+1}``.
For a path in written order ``(b1, ..., bd)`` we have
``F(b1 o ... o bd) = F(bd) o ... o F(b1)``.

Shift convention: ``F[j]_n = F_{n+j}``, so ``projective(p, C, -j)`` is the
representable ``Hom(-, C)`` generated in degree ``j``.

Modules are stored on a degree window ``[lo, hi]``.  ``lo_exact`` means the
module vanishes below ``lo``; ``complete`` means it vanishes above ``hi``.
Anything outside the window that is not known to vanish raises
:class:`TruncationError`.
"""

from __future__ import annotations

from fractions import Fraction

from .presentation import PresentationError, TruncationError
from .xla import Mat, Subspace, span, kernel, quotient_basis

INF = float("inf")

__all__ = [
    "GradedModule",
    "FreeModule",
    "ModuleMap",
    "Submodule",
    "CokernelData",
    "projective",
    "simple",
    "radical",
    "ideal_product",
    "top",
    "map_from_free",
    "cokernel_module",
    "tensor",
    "dual",
    "hom_degree0",
    "hom_graded_dims",
    "direct_sum",
    "module_from_json",
    "representable_data",
    "simple_data",
    "tensor_left_from_json",
]


def _zero_mat(field, r, c):
    return Mat.zeros(field, r, c)


class GradedModule:
    def __init__(self, base, lo, hi, dims, actions, complete=False, lo_exact=True, name=None):
        self.base = base
        self.field = base.field
        self.lo = lo
        self.hi = hi
        self._dims = dims
        self._actions = actions
        self.complete = complete
        self.lo_exact = lo_exact
        self.name = name

    # -- queries ---------------------------------------------------------------

    def known(self, n):
        if self.lo <= n <= self.hi:
            return True
        if n < self.lo:
            return self.lo_exact
        return self.complete

    def dim(self, X, n):
        if self.lo <= n <= self.hi:
            return self._dims.get((X, n), 0)
        if (n < self.lo and self.lo_exact) or (n > self.hi and self.complete):
            return 0
        raise TruncationError(f"degree {n} outside the certified window [{self.lo}, {self.hi}]")

    def action(self, a, n):
        """``F(a)_n : F(Y)_n -> F(X)_{n+1}`` for ``a: X -> Y``."""
        arr = self.base.arrow[a]
        got = self._actions.get((a, n))
        if got is not None:
            return got
        r = self.dim(arr.source, n + 1)
        c = self.dim(arr.target, n)
        return _zero_mat(self.field, r, c)

    def path_matrix(self, path, n):
        """``F(path)`` from ``F(target)_n`` to ``F(source)_{n+len}``."""
        m = None
        for k, b in enumerate(path):
            step = self.action(b, n + k)
            m = step if m is None else step @ m
        return m

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def dims_table(self):
        return {(X, n): self.dim(X, n) for X in self.base.objects for n in self.degrees()}

    def total_dim(self):
        return sum(self._dims.get((X, n), 0) for X in self.base.objects for n in self.degrees())

    def is_zero(self):
        return self.total_dim() == 0

    def support(self):
        """Degrees in the window carrying nonzero spaces."""
        return sorted({n for (X, n), d in self._dims.items() if d and self.lo <= n <= self.hi})

    def validate(self):
        """Check that every relation acts as zero on every slice of the window."""
        for terms in self.base.relations:
            ell = len(terms[0][1])
            Y = self.base.path_target(terms[0][1])
            X = self.base.path_source(terms[0][1])
            for n in range(self.lo, self.hi - ell + 1):
                acc = _zero_mat(self.field, self.dim(X, n + ell), self.dim(Y, n))
                for c, q in terms:
                    acc = acc + self.path_matrix(q, n).scale(c)
                if not acc.is_zero():
                    return False
        return True

    def shift(self, j):
        """``F[j]`` with ``F[j]_n = F_{n+j}``."""
        dims = {(X, n - j): d for (X, n), d in self._dims.items()}
        acts = {(a, n - j): m for (a, n), m in self._actions.items()}
        return GradedModule(self.base, self.lo - j, self.hi - j, dims, acts, self.complete,
                            self.lo_exact, name=f"{self.name}[{j}]" if self.name else None)

    def restrict(self, lo, hi):
        """The window ``[lo, hi]`` of the module (a truncation when it shrinks)."""
        lo2, hi2 = max(lo, self.lo), min(hi, self.hi)
        dims = {(X, n): d for (X, n), d in self._dims.items() if lo2 <= n <= hi2}
        acts = {(a, n): m for (a, n), m in self._actions.items() if lo2 <= n and n + 1 <= hi2}
        return GradedModule(self.base, lo2, hi2, dims, acts,
                            self.complete and hi2 == self.hi, self.lo_exact and lo2 == self.lo,
                            name=self.name)

    def with_window(self, lo, hi):
        """Extend (by known zeros) or shrink the window."""
        for n in range(lo, hi + 1):
            if not (self.lo <= n <= self.hi) and not self.known(n):
                raise TruncationError(f"cannot extend window to degree {n}")
        dims = {}
        acts = {}
        for n in range(lo, hi + 1):
            for X in self.base.objects:
                dims[(X, n)] = self.dim(X, n)
        for (a, n), m in self._actions.items():
            if lo <= n and n + 1 <= hi:
                acts[(a, n)] = m
        complete = self.complete if hi >= self.hi else False
        lo_exact = self.lo_exact if lo <= self.lo else False
        return GradedModule(self.base, lo, hi, dims, acts, complete, lo_exact, name=self.name)

    def __repr__(self):
        return (f"GradedModule({self.name or '?'}, window [{self.lo}, {self.hi}]"
                f"{', complete' if self.complete else ''}, total dim {self.total_dim()})")


def _module_from_spaces(base, lo, hi, dims, action_fn, complete, lo_exact, name=None):
    acts = {}
    for a in base.arrows:
        for n in range(lo, hi):
            if dims.get((a.target, n), 0) and dims.get((a.source, n + 1), 0):
                acts[(a.name, n)] = action_fn(a, n)
    return GradedModule(base, lo, hi, dims, acts, complete, lo_exact, name)


# -- free modules -------------------------------------------------------------

class FreeModule(GradedModule):
    """Direct sum of representables ``Hom(-, C_g)`` generated in degree ``d_g``.

    The basis at ``(X, n)`` is generator-major: for each generator in order,
    the quotient basis of ``Hom(X, C_g)_{n - d_g}``.
    """

    def __init__(self, base, gens, hi=None, name=None):
        self.gens = [(str(C), int(d)) for C, d in gens]
        finite = base.is_finite()
        lo = min((d for _, d in self.gens), default=0)
        cap = INF if finite else min((d for _, d in self.gens), default=0) + base.D
        if hi is None:
            hi = cap if cap != INF else max((d for _, d in self.gens), default=0) + base.D
        hi = int(min(hi, cap))
        complete = finite and hi >= max((d for _, d in self.gens), default=0) + base.D - 1
        if not self.gens:
            complete = True
        dims = {}
        self._offsets = {}
        for n in range(lo, hi + 1):
            for X in base.objects:
                offs = []
                tot = 0
                for C, d in self.gens:
                    offs.append(tot)
                    k = n - d
                    if 0 <= k <= base.D:
                        tot += base.hom_dim(X, C, k)
                dims[(X, n)] = tot
                self._offsets[(X, n)] = offs
        GradedModule.__init__(self, base, lo, hi, dims, {}, complete, True, name)
        field = base.field
        for a in base.arrows:
            for n in range(lo, hi):
                r = dims.get((a.source, n + 1), 0)
                c = dims.get((a.target, n), 0)
                if not (r and c):
                    continue
                m = Mat.zeros(field, r, c)
                for g, (C, d) in enumerate(self.gens):
                    k = n - d
                    if k < 0 or k + 1 > base.D:
                        continue
                    block = base.right_mult_matrix(a.name, C, k)
                    ro = self._offsets[(a.source, n + 1)][g]
                    co = self._offsets[(a.target, n)][g]
                    for i, row in enumerate(block.rows):
                        for j, x in enumerate(row):
                            if x:
                                m.rows[ro + i][co + j] = x
                self._actions[(a.name, n)] = m

    def offset(self, X, n, g):
        return self._offsets[(X, n)][g]

    def generator_vector(self, g):
        """The generator ``g`` (identity of ``C_g``) as a vector in ``F(C_g)_{d_g}``."""
        C, d = self.gens[g]
        v = [self.field.zero] * self.dim(C, d)
        v[self.offset(C, d, g)] = self.field.one
        return v

    def basis_labels(self, X, n):
        out = []
        for g, (C, d) in enumerate(self.gens):
            k = n - d
            if 0 <= k <= self.base.D:
                for q in self.base.piece(X, C, k).basis_paths:
                    out.append((g, q))
        return out


def projective(p, C, shift=0, hi=None):
    """The representable ``Hom(-, C)[shift]``."""
    if C not in p.objects:
        raise PresentationError(f"unknown object {C!r}")
    return FreeModule(p, [(C, -shift)], hi=hi, name=f"P({C})[{shift}]")


def simple(p, C):
    if C not in p.objects:
        raise PresentationError(f"unknown object {C!r}")
    dims = {(X, 0): (1 if X == C else 0) for X in p.objects}
    return GradedModule(p, 0, 0, dims, {}, complete=True, lo_exact=True, name=f"S({C})")


def direct_sum(mods):
    base = mods[0].base
    lo = min(m.lo for m in mods)
    hi = min(m.hi if not m.complete else INF for m in mods)
    if hi == INF:
        hi = max(m.hi for m in mods)
    hi = int(hi)
    dims = {(X, n): sum(m.dim(X, n) for m in mods) for X in base.objects for n in range(lo, hi + 1)}

    def act(a, n):
        r = dims[(a.source, n + 1)]
        c = dims[(a.target, n)]
        out = Mat.zeros(base.field, r, c)
        ro = co = 0
        for m in mods:
            blk = m.action(a.name, n)
            for i, row in enumerate(blk.rows):
                for j, x in enumerate(row):
                    if x:
                        out.rows[ro + i][co + j] = x
            ro += blk.nrows
            co += blk.ncols
        return out

    return _module_from_spaces(base, lo, hi, dims, act, all(m.complete for m in mods),
                               all(m.lo_exact for m in mods), name="+".join(m.name or "?" for m in mods))


# -- maps and submodules --------------------------------------------------------

class ModuleMap:
    """A degree-0 morphism given by matrices ``(X, n) -> Mat`` on a window."""

    def __init__(self, source, target, mats, lo, hi):
        self.source = source
        self.target = target
        self.mats = mats
        self.lo = lo
        self.hi = hi

    def matrix(self, X, n):
        m = self.mats.get((X, n))
        if m is None:
            return Mat.zeros(self.source.field, self.target.dim(X, n), self.source.dim(X, n))
        return m

    def is_natural(self):
        F, G = self.source, self.target
        for a in F.base.arrows:
            for n in range(self.lo, self.hi):
                left = self.matrix(a.source, n + 1) @ F.action(a.name, n)
                right = G.action(a.name, n) @ self.matrix(a.target, n)
                if left != right:
                    return False
        return True

    def kernel(self):
        spaces = {}
        for X in self.source.base.objects:
            for n in range(self.lo, self.hi + 1):
                spaces[(X, n)] = kernel(self.matrix(X, n))
        return Submodule(self.source, spaces, self.lo, self.hi)

    def image(self):
        spaces = {}
        for X in self.source.base.objects:
            for n in range(self.lo, self.hi + 1):
                m = self.matrix(X, n)
                spaces[(X, n)] = span(m.field, m.nrows, [m.column(j) for j in range(m.ncols)])
        return Submodule(self.target, spaces, self.lo, self.hi)

    def is_surjective(self):
        return all(self.matrix(X, n).rank() == self.target.dim(X, n)
                   for X in self.source.base.objects for n in range(self.lo, self.hi + 1))


def map_from_free(free, images, F, lo=None, hi=None):
    """The morphism ``free -> F`` sending generator ``g`` to ``images[g]`` in ``F(C_g)_{d_g}``."""
    lo = free.lo if lo is None else lo
    hi = min(free.hi, F.hi if not F.complete else INF) if hi is None else hi
    hi = int(hi)
    base = free.base
    field = base.field
    memo = {}

    def T(g, path):
        got = memo.get((g, path))
        if got is not None:
            return got
        C, d = free.gens[g]
        if not path:
            v = list(images[g])
        else:
            prev = T(g, path[:-1])
            b = path[-1]
            v = F.action(b, d + len(path) - 1).apply(prev)
        memo[(g, path)] = v
        return v

    mats = {}
    for X in base.objects:
        for n in range(lo, hi + 1):
            rdim = F.dim(X, n)
            labels = free.basis_labels(X, n)
            if not labels or not rdim:
                continue
            cols = [T(g, q) for g, q in labels]
            mats[(X, n)] = Mat.from_columns(field, cols, rdim)
    return ModuleMap(free, F, mats, lo, hi)


class Submodule:
    def __init__(self, parent, spaces, lo=None, hi=None):
        self.parent = parent
        self.spaces = spaces
        self.lo = parent.lo if lo is None else lo
        self.hi = parent.hi if hi is None else hi

    def space(self, X, n):
        s = self.spaces.get((X, n))
        if s is None:
            return Subspace.zero(self.parent.field, self.parent.dim(X, n))
        return s

    def dim(self, X, n):
        return self.space(X, n).dim

    def dims_table(self):
        return {(X, n): self.dim(X, n) for X in self.parent.base.objects for n in range(self.lo, self.hi + 1)}

    def is_closed(self):
        P = self.parent
        for a in P.base.arrows:
            for n in range(self.lo, self.hi):
                m = P.action(a.name, n)
                tgt = self.space(a.source, n + 1)
                for row in self.space(a.target, n).rows:
                    if not tgt.contains(m.apply(row)):
                        return False
        return True

    def __eq__(self, other):
        objs = self.parent.base.objects
        return all(self.space(X, n) == other.space(X, n)
                   for X in objs for n in range(self.lo, self.hi + 1))

    def is_contained_in(self, other):
        objs = self.parent.base.objects
        return all(self.space(X, n).is_subspace_of(other.space(X, n))
                   for X in objs for n in range(self.lo, self.hi + 1))

    def intersect(self, other):
        objs = self.parent.base.objects
        spaces = {(X, n): self.space(X, n) & other.space(X, n)
                  for X in objs for n in range(self.lo, self.hi + 1)}
        return Submodule(self.parent, spaces, self.lo, self.hi)

    def as_module(self, complete=None, name=None):
        """The submodule as a module, in the RREF basis of each subspace."""
        P = self.parent
        dims = {(X, n): self.dim(X, n) for X in P.base.objects for n in range(self.lo, self.hi + 1)}

        def act(a, n):
            m = P.action(a.name, n)
            tgt = self.space(a.source, n + 1)
            cols = [[v[c] for c in tgt.pivots] for v in (m.apply(r) for r in self.space(a.target, n).rows)]
            return Mat.from_columns(P.field, cols, tgt.dim)

        comp = P.complete if complete is None else complete
        return _module_from_spaces(P.base, self.lo, self.hi, dims, act, comp and self.hi >= P.hi,
                                   P.lo_exact or self.lo > P.lo, name)

    def inclusion_matrix(self, X, n):
        s = self.space(X, n)
        return Mat.from_columns(self.parent.field, s.rows, self.parent.dim(X, n))

    def quotient(self, name=None):
        """``parent / self`` with the canonical non-pivot section basis."""
        P = self.parent
        sect = {}
        dims = {}
        for X in P.base.objects:
            for n in range(self.lo, self.hi + 1):
                section, proj = quotient_basis(self.space(X, n), P.dim(X, n))
                sect[(X, n)] = (section, proj)
                dims[(X, n)] = len(section)

        def act(a, n):
            m = P.action(a.name, n)
            section, _ = sect[(a.target, n)]
            _, proj = sect[(a.source, n + 1)]
            cols = [proj.apply(m.column(j)) for j in section]
            return Mat.from_columns(P.field, cols, dims[(a.source, n + 1)])

        mod = _module_from_spaces(P.base, self.lo, self.hi, dims, act, P.complete and self.hi >= P.hi,
                                  P.lo_exact, name)
        mod.sections = sect
        return mod


def radical_of(F, sub=None):
    """``rad S`` for a submodule ``S`` of ``F`` (``S = F`` when omitted), as a submodule of ``F``."""
    base = F.base
    spaces = {}
    for X in base.objects:
        for n in range(F.lo, F.hi + 1):
            vecs = []
            if n - 1 >= F.lo:
                for a in base.arrows_out[X]:
                    m = F.action(a.name, n - 1)
                    if sub is None:
                        vecs.extend(m.column(j) for j in range(m.ncols))
                    else:
                        vecs.extend(m.apply(r) for r in sub.space(a.target, n - 1).rows)
            spaces[(X, n)] = span(F.field, F.dim(X, n), vecs)
    return Submodule(F, spaces)


def radical(F):
    return radical_of(F)


def ideal_product(k, F):
    """``rad^k F`` as a submodule of ``F``."""
    if k < 0:
        raise ValueError("power must be non-negative")
    if k == 0:
        return Submodule(F, {(X, n): Subspace.full(F.field, F.dim(X, n))
                             for X in F.base.objects for n in range(F.lo, F.hi + 1)})
    sub = radical_of(F)
    for _ in range(k - 1):
        sub = radical_of(F, sub)
    return sub


def top(F):
    """``F / rad F`` as a module."""
    return radical(F).quotient(name=f"top({F.name})" if F.name else None)


# -- cokernels --------------------------------------------------------------------

class CokernelData:
    """A map between finite sums of shifted representables.

    ``rows[i] = (X_i, m_i)`` stands for ``Hom(-, X_i)`` generated in degree
    ``m_i``; likewise ``cols``.  ``entries[i][j]`` is an element of
    ``Hom(Y_j, X_i)_{n_j - m_i}`` given by coordinates in the presentation's
    hom basis (or ``None`` for zero).
    """

    def __init__(self, rows, cols, entries):
        self.rows = [(str(X), int(m)) for X, m in rows]
        self.cols = [(str(Y), int(n)) for Y, n in cols]
        self.entries = entries
        if len(entries) != len(self.rows) or any(len(r) != len(self.cols) for r in entries):
            raise PresentationError("cokernel entries do not match rows x cols")

    def to_json(self, field):
        return {
            "rows": [[X, m] for X, m in self.rows],
            "cols": [[Y, n] for Y, n in self.cols],
            "entries": [[None if e is None else [field.format(x) for x in e] for e in row]
                        for row in self.entries],
        }

    @classmethod
    def from_json(cls, doc, field):
        ents = [[None if e is None else [field.convert(Fraction(str(x))) for x in e] for e in row]
                for row in doc["entries"]]
        return cls(doc["rows"], doc["cols"], ents)

    def opposite_entries(self, p):
        """Entries re-expressed in the opposite presentation's bases (path reversal)."""
        q = p.opposite()
        out = []
        for i, (X, m) in enumerate(self.rows):
            row = []
            for j, (Y, n) in enumerate(self.cols):
                e = self.entries[i][j]
                if e is None:
                    row.append(None)
                    continue
                d = n - m
                src = p.piece(X, Y, d)
                dst = q.piece(Y, X, d)
                acc = [0] * dst.dim
                for c, path in zip(e, src.basis_paths):
                    if c:
                        cls = dst.class_of(tuple(reversed(path)))
                        for k, x in enumerate(cls):
                            acc[k] += c * x
                row.append([p.field.convert(x) for x in acc])
            out.append(row)
        return CokernelData(self.rows, self.cols, out)


def representable_data(p, C, shift=0):
    """``Hom_p(C, -)`` generated in degree ``shift``, as cokernel data with no relations."""
    return CokernelData([(C, shift)], [], [[]])


def simple_data(p, C, shift=0):
    """``Hom_p(C, -) / rad``: the representable modulo the arrows leaving ``C``."""
    cols = []
    ents = []
    for a in p.arrows_out[C]:
        cols.append((a.target, shift + 1))
        ents.append(p.piece(C, a.target, 1).class_of((a.name,)))
    return CokernelData([(C, shift)], cols, [ents])


def _check_cokernel(p, data):
    for i, (X, m) in enumerate(data.rows):
        for j, (Y, n) in enumerate(data.cols):
            e = data.entries[i][j]
            if e is None:
                continue
            d = n - m
            if d < 0:
                if any(e):
                    raise PresentationError(f"entry ({i},{j}) has negative degree {d}")
                continue
            if len(e) != p.hom_dim(Y, X, d):
                raise PresentationError(
                    f"entry ({i},{j}) has {len(e)} coordinates, Hom({Y},{X})_{d} has dim {p.hom_dim(Y, X, d)}")


def cokernel_module(p, data, hi=None, name=None):
    """The module presented by ``data`` over ``p``."""
    _check_cokernel(p, data)
    R = FreeModule(p, data.rows, hi=hi)
    images = []
    field = p.field
    for j, (Y, n) in enumerate(data.cols):
        v = [field.zero] * R.dim(Y, n) if R.known(n) else None
        if v is None:
            raise TruncationError("column generator outside the window")
        for i, (X, m) in enumerate(data.rows):
            e = data.entries[i][j]
            if e is None or n - m < 0:
                continue
            off = R.offset(Y, n, i)
            for k, c in enumerate(e):
                if c:
                    v[off + k] = field.add(v[off + k], c)
        images.append(v)
    Cfree = FreeModule(p, data.cols, hi=R.hi)
    f = map_from_free(Cfree, images, R, lo=R.lo, hi=R.hi)
    img = f.image()
    mod = img.quotient(name=name)
    mod.complete = R.complete
    return mod


# -- tensor product ---------------------------------------------------------------

def tensor(p, G, F):
    """``G (x) F`` for ``G`` presented over ``p^op`` by cokernel data and ``F`` over ``p``.

    ``G.rows[i] = (X_i, m_i)`` stands for ``Hom_p(X_i, -)`` generated in degree
    ``m_i`` and ``G.entries[i][j]`` lies in ``Hom_p(X_i, Y_j)_{n_j - m_i}`` (in
    ``p``'s basis).  Returns ``{degree: dim}`` over every degree where all
    needed slices of ``F`` are known, plus the presenting matrices.
    """
    field = p.field
    for i, (X, m) in enumerate(G.rows):
        for j, (Y, n) in enumerate(G.cols):
            e = G.entries[i][j]
            if e is not None and (n - m < 0 or len(e) != p.hom_dim(X, Y, n - m)):
                raise PresentationError(f"entry ({i},{j}) is not an element of Hom({X},{Y})_{n - m}")
    shifts = [m for _, m in G.rows] + [n for _, n in G.cols]
    if not shifts:
        return {}, {}
    lo = F.lo + min(shifts)
    hi_f = F.hi if not F.complete else None
    if hi_f is None:
        hi = F.hi + max(shifts)
    else:
        hi = hi_f + min(shifts)
    dims = {}
    mats = {}
    for k in range(lo, hi + 1):
        rdims = [F.dim(X, k - m) for X, m in G.rows]
        cdims = [F.dim(Y, k - n) for Y, n in G.cols]
        R, C = sum(rdims), sum(cdims)
        M = Mat.zeros(field, R, C)
        ro = 0
        for i, (X, m) in enumerate(G.rows):
            co = 0
            for j, (Y, n) in enumerate(G.cols):
                e = G.entries[i][j]
                if e is not None and rdims[i] and cdims[j]:
                    piece = p.piece(X, Y, n - m)
                    blk = None
                    for c, q in zip(e, piece.basis_paths):
                        if c:
                            t = F.path_matrix(q, k - n) if q else Mat.identity(field, cdims[j])
                            t = t.scale(c)
                            blk = t if blk is None else blk + t
                    if blk is not None:
                        for a, row in enumerate(blk.rows):
                            for b, x in enumerate(row):
                                if x:
                                    M.rows[ro + a][co + b] = x
                co += cdims[j]
            ro += rdims[i]
        dims[k] = R - M.rank()
        mats[k] = M
    return dims, mats


# -- duality and homs -------------------------------------------------------------

def dual(F):
    """``D(F)`` over the opposite presentation: ``D(F)(X)_i = F(X)_{-i}^*``."""
    q = F.base.opposite()
    dims = {(X, -n): d for (X, n), d in F._dims.items()}
    acts = {}
    for (a, n), m in F._actions.items():
        # F(a)_n : F(Y)_n -> F(X)_{n+1}; in D(F) the reversed arrow acts from degree -(n+1)
        acts[(a, -n - 1)] = m.transpose()
    return GradedModule(q, -F.hi, -F.lo, dims, acts, complete=F.lo_exact, lo_exact=F.complete,
                        name=f"D({F.name})" if F.name else None)


def hom_degree0(F, G):
    """Basis of degree-0 natural transformations ``F -> G``.

    Computed on the common window; degrees where ``G`` is unknown are treated
    as zero, so the result is ``Hom(F, G_{<=h})`` for the window top ``h``.
    Returns ``(dim, basis)`` with each basis element a dict ``(X, n) -> Mat``.
    """
    if F.base is not G.base:
        raise PresentationError("modules over different presentations")
    base = F.base
    field = F.field
    lo = max(F.lo, G.lo)
    hi_candidates = []
    if not F.complete:
        hi_candidates.append(F.hi)
    if not G.complete:
        hi_candidates.append(G.hi)
    hi = min(hi_candidates) if hi_candidates else max(F.hi, G.hi)
    # unknown blocks
    blocks = {}
    nvar = 0
    for n in range(lo, hi + 1):
        for X in base.objects:
            r, c = G.dim(X, n), F.dim(X, n)
            if r and c:
                blocks[(X, n)] = (nvar, r, c)
                nvar += r * c
    triplets = []
    nrows = 0
    for a in base.arrows:
        X, Y = a.source, a.target
        for n in range(lo, hi):
            bY = blocks.get((Y, n))
            bX = blocks.get((X, n + 1))
            if bY is None and bX is None:
                continue
            Fa = F.action(a.name, n)       # F(Y)_n -> F(X)_{n+1}
            Ga = G.action(a.name, n)       # G(Y)_n -> G(X)_{n+1}
            rows_out = G.dim(X, n + 1)
            cols_out = F.dim(Y, n)
            # constraint matrix entries: (eta_X Fa - Ga eta_Y)[i][j] = 0
            acc = {}
            if bX is not None:
                off, r, c = bX
                for i in range(rows_out):
                    for j in range(cols_out):
                        for k in range(c):
                            x = Fa.rows[k][j]
                            if x:
                                key = (i * cols_out + j, off + i * c + k)
                                acc[key] = acc.get(key, 0) + x
            if bY is not None:
                off, r, c = bY
                for i in range(rows_out):
                    for j in range(cols_out):
                        for k in range(r):
                            x = Ga.rows[i][k]
                            if x:
                                key = (i * cols_out + j, off + k * c + j)
                                acc[key] = acc.get(key, 0) - x
            for (ri, ci), v in acc.items():
                v = field.convert(v)
                if v:
                    triplets.append((nrows + ri, ci, v))
            nrows += rows_out * cols_out
    system = Mat.from_triplets(field, nrows, nvar, triplets)
    ker = kernel(system)
    basis = []
    for vec in ker.rows:
        eta = {}
        for key, (off, r, c) in blocks.items():
            eta[key] = Mat(field, [vec[off + i * c: off + (i + 1) * c] for i in range(r)], c, _trusted=True)
        basis.append(eta)
    return ker.dim, basis


def hom_graded_dims(F, G, degrees):
    """``{n: dim Hom_0(F, G[n])}`` for the given degree list."""
    return {n: hom_degree0(F, G.shift(n))[0] for n in degrees}


# -- documents ---------------------------------------------------------------------

def module_from_json(doc, p):
    kind = doc.get("kind")
    if kind == "projective":
        return projective(p, doc["object"], int(doc.get("shift", 0)))
    if kind == "simple":
        mod = simple(p, doc["object"])
        s = int(doc.get("shift", 0))
        return mod.shift(s) if s else mod
    if kind == "cokernel":
        data = CokernelData.from_json(doc["cokernel"], p.field)
        return cokernel_module(p, data, name=doc.get("name"))
    raise PresentationError(f"unknown module kind {kind!r}")


def tensor_left_from_json(doc, p):
    """Cokernel data for the left tensor factor (a module over ``p^op``)."""
    kind = doc.get("kind", "cokernel")
    s = int(doc.get("shift", 0))
    if kind == "representable":
        return representable_data(p, doc["object"], s)
    if kind == "simple":
        return simple_data(p, doc["object"], s)
    if kind == "cokernel":
        return CokernelData.from_json(doc.get("cokernel", doc), p.field)
    raise PresentationError(f"unknown left module kind {kind!r}")
