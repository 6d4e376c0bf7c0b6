"""Finite-dimensional algebras kQ/I with possibly inhomogeneous relations.

The algebra is ``kQ / (<R> + J^N)`` where ``J`` is the arrow ideal and ``N``
the declared nilpotency bound.  Admissibility is validated at build: every
relation term has length at least 2, and (when relations are given) every
path of length ``N`` lies in ``<R> + J^{N+1}``, so adding ``J^N`` changes
nothing.  An algebra declared without relations is ``kQ / J^N``.

Modules (:class:`FModule`) are contravariant representations: an arrow
``a: X -> Y`` acts by a matrix ``M(Y) -> M(X)``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .gmod import GradedModule
from .presentation import Arrow, Presentation, PresentationError
from .resolve import is_koszul, is_linear
from .xla import EchelonBuilder, Field, Mat, Subspace, intersect, kernel, quotient_basis, span

__all__ = [
    "FDAlgebra",
    "FModule",
    "PreconditionError",
    "assoc_graded",
    "g_functor",
    "weakly_koszul",
    "weakly_koszul_algebra",
    "weak_to_koszul_check",
    "weak_to_koszul_algebra",
    "direct_sum",
    "radical_module",
    "radical_sequence",
    "ses_check",
    "filtration_report",
    "load_algebra",
    "module_from_json",
]


class PreconditionError(ValueError):
    pass


class FDAlgebra:
    def __init__(self, field, objects, arrows, relations, nilpotency, name=None):
        if not isinstance(field, Field):
            field = Field.from_json(field)
        self.field = field
        self.name = name
        self.N = int(nilpotency)
        if self.N < 2:
            raise PresentationError("nilpotency bound must be at least 2")
        # reuse the quiver bookkeeping of Presentation (no relations, no grading use)
        self.quiver = Presentation(field, objects, arrows, [], 0)
        self.objects = self.quiver.objects
        self.arrows = self.quiver.arrows
        self.arrow = self.quiver.arrow
        self._source_relations = [list(r) for r in relations]
        self.relations = []
        for k, rel in enumerate(relations):
            terms = []
            for t in rel:
                c, path = (t["coeff"], t["path"]) if isinstance(t, dict) else t
                path = tuple(str(x) for x in path)
                self.quiver.check_path(path)
                c = field.convert(Fraction(c) if isinstance(c, str) else c)
                if c:
                    terms.append((c, path))
            if not terms:
                raise PresentationError(f"relation {k} has no nonzero term")
            if any(len(q) < 2 for _, q in terms):
                raise PresentationError(f"relation {k} is not inside J^2 (has a term of length < 2)")
            ends = {(self.quiver.path_source(q), self.quiver.path_target(q)) for _, q in terms}
            if len(ends) != 1:
                raise PresentationError(f"relation {k} mixes non-parallel paths")
            self.relations.append(terms)
        self._build()

    # -- construction -------------------------------------------------------

    def _paths_upto(self, X, Y, L):
        out = []
        for n in range(L + 1):
            out.extend(self.quiver.paths(X, Y, n))
        return out

    def _saturate(self, L):
        """Ideal ``<R>`` in ``kQ / J^{L+1}``: per (X, Y) an EchelonBuilder over paths of length <= L."""
        field = self.field
        paths = {}
        index = {}
        for X in self.objects:
            for Y in self.objects:
                ps = self._paths_upto(X, Y, L)
                paths[(X, Y)] = ps
                index[(X, Y)] = {q: i for i, q in enumerate(ps)}
        builders = {k: EchelonBuilder(field, len(v)) for k, v in paths.items()}
        queue = []

        def push(X, Y, vec):
            if builders[(X, Y)].add(vec):
                queue.append((X, Y, vec))

        for terms in self.relations:
            q0 = terms[0][1]
            X, Y = self.quiver.path_source(q0), self.quiver.path_target(q0)
            v = [field.zero] * len(paths[(X, Y)])
            for c, q in terms:
                if len(q) <= L:
                    v[index[(X, Y)][q]] = field.add(v[index[(X, Y)][q]], c)
            if any(v):
                push(X, Y, v)
        while queue:
            X, Y, vec = queue.pop()
            ps = paths[(X, Y)]
            nz = [(j, c) for j, c in enumerate(vec) if c]
            for b in self.quiver.arrows_out[Y]:
                # left multiplication b o v : X -> target(b)
                Z = b.target
                idx = index[(X, Z)]
                w = [field.zero] * len(paths[(X, Z)])
                for j, c in nz:
                    q = (b.name,) + ps[j]
                    if len(q) <= L:
                        w[idx[q]] = field.add(w[idx[q]], c)
                if any(w):
                    push(X, Z, w)
            for a in self.quiver.arrows_into[X]:
                W = a.source
                idx = index[(W, Y)]
                w = [field.zero] * len(paths[(W, Y)])
                for j, c in nz:
                    q = ps[j] + (a.name,)
                    if len(q) <= L:
                        w[idx[q]] = field.add(w[idx[q]], c)
                if any(w):
                    push(W, Y, w)
        return paths, index, builders

    def _build(self):
        N = self.N
        field = self.field
        # admissibility: J^N inside <R> + J^{N+1}, so the bound adds nothing to the
        # relations.  Without relations the ideal is J^N by definition.
        paths, index, builders = self._saturate(N)
        for X in self.objects if self.relations else []:
            for Y in self.objects:
                for q in self.quiver.paths(X, Y, N):
                    v = [field.zero] * len(paths[(X, Y)])
                    v[index[(X, Y)][q]] = field.one
                    if not builders[(X, Y)].contains(v):
                        raise PresentationError(
                            f"not admissible: path {'.'.join(q)} of length {N} is not in <R> + J^{N + 1}")
        # the algebra itself: kQ_{<N} modulo (<R> + J^N)
        paths, index, builders = self._saturate(N - 1)
        self.paths = paths
        self.index = index
        self.ideal = {k: b.subspace() for k, b in builders.items()}
        self.section = {}
        self.proj = {}
        self.classes = {}
        for k, sub in self.ideal.items():
            sec, proj = quotient_basis(sub, len(paths[k]))
            self.section[k] = sec
            self.proj[k] = proj
            rows = proj.rows
            self.classes[k] = [[rows[r][j] for r in range(len(sec))] for j in range(len(paths[k]))]

    # -- queries ----------------------------------------------------------------

    def dim(self, X, Y):
        """dim of ``e_Y Lambda e_X`` (paths X -> Y)."""
        return len(self.section[(X, Y)])

    def total_dim(self):
        return sum(self.dim(X, Y) for X in self.objects for Y in self.objects)

    def basis_paths(self, X, Y):
        ps = self.paths[(X, Y)]
        return [ps[j] for j in self.section[(X, Y)]]

    def class_of(self, X, Y, path):
        if len(path) >= self.N:
            return [self.field.zero] * self.dim(X, Y)
        return self.classes[(X, Y)][self.index[(X, Y)][path]]

    def radical_power(self, X, Y, i):
        """``(V_{>=i} + I) / I`` as a subspace of the path space of (X, Y)."""
        ps = self.paths[(X, Y)]
        field = self.field
        vecs = [list(r) for r in self.ideal[(X, Y)].rows]
        for j, q in enumerate(ps):
            if len(q) >= i:
                v = [field.zero] * len(ps)
                v[j] = field.one
                vecs.append(v)
        return span(field, len(ps), vecs)

    def layer_dims(self, X, Y):
        """``[dim r^i / r^{i+1}]`` for ``i = 0 .. N-1``."""
        dims = [self.radical_power(X, Y, i).dim for i in range(self.N + 1)]
        return [dims[i] - dims[i + 1] for i in range(self.N)]

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "objects": list(self.objects),
            "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in self.arrows],
            "relations": [[{"coeff": self.field.format(c), "path": list(q)} for c, q in terms]
                          for terms in self.relations],
            "nilpotency": self.N,
        }

    @classmethod
    def from_json(cls, doc, field=None, name=None):
        try:
            fld = field if field is not None else Field.from_json(doc.get("field", "Q"))
            rels = [[(t["coeff"], t["path"]) for t in rel] for rel in doc.get("relations", [])]
            return cls(fld, doc["objects"], doc.get("arrows", []), rels, doc["nilpotency"], name=name)
        except KeyError as exc:
            raise PresentationError(f"missing field {exc.args[0]!r} in algebra document") from None

    def with_field(self, field):
        return FDAlgebra(field, self.objects, self.arrows, self._source_relations, self.N, self.name)

    def projective(self, C):
        """The indecomposable projective ``e_C Lambda`` as a contravariant module: X -> paths X -> C."""
        dims = {X: self.dim(X, C) for X in self.objects}
        mats = {}
        for a in self.arrows:
            X, Y = a.source, a.target
            cols = [self.class_of(X, C, q + (a.name,)) for q in self.basis_paths(Y, C)]
            mats[a.name] = Mat.from_columns(self.field, cols, dims[X])
        return FModule(self, dims, mats, name=f"P({C})")

    def simple(self, C):
        dims = {X: (1 if X == C else 0) for X in self.objects}
        mats = {a.name: Mat.zeros(self.field, dims[a.source], dims[a.target]) for a in self.arrows}
        return FModule(self, dims, mats, name=f"S({C})")

    def __repr__(self):
        return f"FDAlgebra({self.name or '?'}: dim {self.total_dim()}, N={self.N}, {self.field})"


class FModule:
    def __init__(self, alg, dims, mats, name=None, validate=True):
        self.alg = alg
        self.field = alg.field
        self.dims = {X: int(dims.get(X, 0)) for X in alg.objects}
        self.mats = {}
        for a in alg.arrows:
            m = mats.get(a.name)
            if m is None:
                m = Mat.zeros(self.field, self.dims[a.source], self.dims[a.target])
            elif not isinstance(m, Mat):
                m = Mat(self.field, m, self.dims[a.target]) if self.dims[a.source] else \
                    Mat.zeros(self.field, 0, self.dims[a.target])
            if m.shape != (self.dims[a.source], self.dims[a.target]):
                raise PresentationError(f"matrix for arrow {a.name!r} has shape {m.shape}, expected "
                                        f"{(self.dims[a.source], self.dims[a.target])}")
            self.mats[a.name] = m
        self.name = name
        if validate and not self.is_valid():
            raise PresentationError("module does not satisfy the relations")

    def total_dim(self):
        return sum(self.dims.values())

    def path_matrix(self, path):
        m = None
        for b in path:
            step = self.mats[b]
            m = step if m is None else step @ m
        return m

    def is_valid(self):
        alg = self.alg
        for terms in alg.relations:
            X = alg.quiver.path_source(terms[0][1])
            Y = alg.quiver.path_target(terms[0][1])
            acc = Mat.zeros(self.field, self.dims[X], self.dims[Y])
            for c, q in terms:
                acc = acc + self.path_matrix(q).scale(c)
            if not acc.is_zero():
                return False
        for X in alg.objects:
            for Y in alg.objects:
                for q in alg.quiver.paths(X, Y, alg.N):
                    if not self.path_matrix(q).is_zero():
                        return False
        return True

    def full(self):
        return {X: Subspace.full(self.field, d) for X, d in self.dims.items()}

    def radical_of(self, spaces):
        """``rad S = sum_a M(a) S`` for subspaces ``S`` of this module."""
        out = {}
        for X in self.alg.objects:
            vecs = []
            for a in self.alg.arrows:
                if a.source == X:
                    m = self.mats[a.name]
                    vecs.extend(m.apply(r) for r in spaces[a.target].rows)
            out[X] = span(self.field, self.dims[X], vecs)
        return out

    def radical_power(self, i, spaces=None):
        s = self.full() if spaces is None else spaces
        for _ in range(i):
            s = self.radical_of(s)
        return s

    def sub_module(self, spaces, name=None):
        """The submodule given by action-closed subspaces, in RREF coordinates."""
        dims = {X: spaces[X].dim for X in self.alg.objects}
        mats = {}
        for a in self.alg.arrows:
            m = self.mats[a.name]
            tgt = spaces[a.source]
            cols = []
            for r in spaces[a.target].rows:
                v = m.apply(r)
                if not tgt.contains(v):
                    raise PresentationError("subspaces are not closed under the action")
                cols.append([v[c] for c in tgt.pivots])
            mats[a.name] = Mat.from_columns(self.field, cols, dims[a.source])
        return FModule(self.alg, dims, mats, name=name, validate=False)

    def quotient_module(self, spaces, name=None):
        sect = {X: quotient_basis(spaces[X], self.dims[X]) for X in self.alg.objects}
        dims = {X: len(sect[X][0]) for X in self.alg.objects}
        mats = {}
        for a in self.alg.arrows:
            m = self.mats[a.name]
            section, _ = sect[a.target]
            _, proj = sect[a.source]
            cols = [proj.apply(m.column(j)) for j in section]
            mats[a.name] = Mat.from_columns(self.field, cols, dims[a.source])
        return FModule(self.alg, dims, mats, name=name, validate=False)

    def to_json(self):
        f = self.field
        return {"dims": dict(self.dims),
                "arrows": {k: [[f.format(x) for x in r] for r in m.tolist()] for k, m in self.mats.items()}}

    def __repr__(self):
        return f"FModule({self.name or '?'}, dims {self.dims})"


def direct_sum(mods, name=None):
    alg = mods[0].alg
    dims = {X: sum(m.dims[X] for m in mods) for X in alg.objects}
    mats = {}
    for a in alg.arrows:
        out = Mat.zeros(alg.field, dims[a.source], dims[a.target])
        ro = co = 0
        for m in mods:
            blk = m.mats[a.name]
            for i, row in enumerate(blk.tolist()):
                for j, x in enumerate(row):
                    if x:
                        out.rows[ro + i][co + j] = x
            ro += blk.nrows
            co += blk.ncols
        mats[a.name] = out
    return FModule(alg, dims, mats, name=name or "+".join(m.name or "?" for m in mods), validate=False)


# -- ungraded resolutions -------------------------------------------------------------

class _FreeF:
    """Direct sum of indecomposable projectives with generator-major bases."""

    def __init__(self, alg, gens):
        self.alg = alg
        self.gens = list(gens)
        projs = {}
        for C in set(self.gens):
            projs[C] = alg.projective(C)
        self.offsets = {}
        dims = {}
        for X in alg.objects:
            offs, tot = [], 0
            for C in self.gens:
                offs.append(tot)
                tot += alg.dim(X, C)
            self.offsets[X] = offs
            dims[X] = tot
        mats = {}
        for a in alg.arrows:
            out = Mat.zeros(alg.field, dims[a.source], dims[a.target])
            for g, C in enumerate(self.gens):
                blk = projs[C].mats[a.name]
                ro = self.offsets[a.source][g]
                co = self.offsets[a.target][g]
                for i, row in enumerate(blk.tolist()):
                    for j, x in enumerate(row):
                        if x:
                            out.rows[ro + i][co + j] = x
            mats[a.name] = out
        self.module = FModule(alg, dims, mats, name="free", validate=False)

    def labels(self, X):
        return [(g, q) for g, C in enumerate(self.gens) for q in self.alg.basis_paths(X, C)]


def _cover(M):
    """Projective cover of an FModule: (free, cover matrices per object, kernel subspaces)."""
    alg = M.alg
    field = M.field
    rad = M.radical_of(M.full())
    gens, images = [], []
    for X in alg.objects:
        section, _ = quotient_basis(rad[X], M.dims[X])
        for j in section:
            v = [field.zero] * M.dims[X]
            v[j] = field.one
            gens.append(X)
            images.append(v)
    free = _FreeF(alg, gens)
    memo = {}

    def T(g, path):
        got = memo.get((g, path))
        if got is None:
            got = images[g] if not path else M.mats[path[-1]].apply(T(g, path[:-1]))
            memo[(g, path)] = got
        return got

    cover = {}
    ker = {}
    for X in alg.objects:
        labels = free.labels(X)
        cols = [T(g, q) for g, q in labels]
        mat = Mat.from_columns(field, cols, M.dims[X]) if labels else Mat.zeros(field, M.dims[X], 0)
        cover[X] = mat
        ker[X] = kernel(mat)
    return free, cover, ker


class FResolution:
    def __init__(self, M, j_max):
        self.target = M
        self.stages = []   # (free, cover, kernel subspaces inside free.module)
        cur = M
        for j in range(j_max + 1):
            if cur.total_dim() == 0:
                break
            free, cover, ker = _cover(cur)
            self.stages.append((free, cover, ker))
            cur = free.module.sub_module(ker, name=f"Omega^{j + 1}")
        self.last = cur


def weakly_koszul(A, M, j_max=4, i_max=None, quasi=False):
    """Check ``rad^{i+1} P_j  cap  Omega^{j+1} = rad^i Omega^{j+1}`` inside ``P_j``.

    ``i`` runs over ``0..i_max`` (default ``N``; larger ``i`` give zero on both
    sides).  With ``quasi=True`` only ``i = 1`` is checked.
    """
    if M.total_dim() == 0:
        raise PreconditionError("module is zero")
    i_max = A.N if i_max is None else i_max
    res = FResolution(M, j_max)
    checked = []
    for j, (free, cover, ker) in enumerate(res.stages):
        P = free.module
        irange = [1] if quasi else range(0, i_max + 1)
        for i in irange:
            lhs_sp = P.radical_power(i + 1)
            rhs_sp = P.radical_power(i, ker)
            lhs_dim = rhs_dim = 0
            ok = True
            for X in A.objects:
                inter = intersect(lhs_sp[X], ker[X])
                lhs_dim += inter.dim
                rhs_dim += rhs_sp[X].dim
                if inter != rhs_sp[X]:
                    ok = False
            checked.append((j, i))
            if not ok:
                return {"weakly_koszul": False,
                        "violation": {"j": j, "i": i, "lhs_dim": lhs_dim, "rhs_dim": rhs_dim},
                        "j_max": j_max, "i_max": i_max, "quasi": quasi,
                        "stages": _ftable(res), "N": A.N}
    return {"weakly_koszul": True, "violation": None, "j_max": j_max, "i_max": i_max,
            "quasi": quasi, "stages": _ftable(res), "N": A.N,
            "terminated": res.last.total_dim() == 0}


def _ftable(res):
    out = []
    for j, (free, _, _) in enumerate(res.stages):
        cnt = {}
        for C in free.gens:
            cnt[C] = cnt.get(C, 0) + 1
        out.append({"stage": j, "summands": [[C, k] for C, k in cnt.items()]})
    return out


def weakly_koszul_algebra(A, j_max=4, i_max=None, quasi=False):
    per = {C: weakly_koszul(A, A.simple(C), j_max, i_max, quasi) for C in A.objects}
    return {"weakly_koszul": all(r["weakly_koszul"] for r in per.values()), "simples": per,
            "j_max": j_max, "N": A.N}


# -- associated graded -------------------------------------------------------------

def assoc_graded(A):
    """The associated graded category as a presentation with ``D = N``."""
    field = A.field
    rels = []
    arrows = [Arrow(a.name, a.source, a.target) for a in A.arrows]
    for n in range(2, A.N + 1):
        generated = Presentation(field, A.objects, arrows, rels, n)
        for X in A.objects:
            for Y in A.objects:
                gpaths = generated.paths(X, Y, n)
                if not gpaths:
                    continue
                if n >= A.N:
                    kern = Subspace.full(field, len(gpaths))
                else:
                    ps = A.paths[(X, Y)]
                    idx = A.index[(X, Y)]
                    deeper = A.radical_power(X, Y, n + 1)
                    # kQ_n as a subspace of path space, intersected with V_{>=n+1} + I
                    vecs = []
                    for q in gpaths:
                        v = [field.zero] * len(ps)
                        v[idx[q]] = field.one
                        vecs.append(v)
                    homog = span(field, len(ps), vecs)
                    inter = intersect(homog, deeper)
                    kern = span(field, len(gpaths), [[r[idx[q]] for q in gpaths] for r in inter.rows])
                have = generated.piece(X, Y, n).ideal
                builder = EchelonBuilder(field, len(gpaths))
                for r in have.rows:
                    builder.add(r)
                for r in kern.rows:
                    if builder.add(r):
                        rels.append([(c, q) for c, q in zip(r, gpaths) if c])
    return Presentation(field, A.objects, arrows, rels, A.N,
                        name=f"gr({A.name})" if A.name else None)


def g_functor(A, M, grA=None):
    """``G(M) = sum_j rad^j M / rad^{j+1} M`` as a graded module over ``assoc_graded(A)``."""
    grA = grA or assoc_graded(A)
    field = A.field
    N = A.N
    layers = [M.full()]
    for _ in range(N + 1):
        layers.append(M.radical_of(layers[-1]))
    sect = {}
    dims = {}
    for j in range(N + 1):
        for X in A.objects:
            # rad^j M(X) / rad^{j+1} M(X), inside the RREF coordinates of rad^j M(X)
            top_sp, low_sp = layers[j][X], layers[j + 1][X]
            low_coords = span(field, top_sp.dim, [top_sp.coords(r) for r in low_sp.rows])
            section, proj = quotient_basis(low_coords, top_sp.dim)
            sect[(X, j)] = (section, proj)
            dims[(X, j)] = len(section)
    acts = {}
    for a in A.arrows:
        X, Y = a.source, a.target
        m = M.mats[a.name]
        for j in range(N):
            r, c = dims[(X, j + 1)], dims[(Y, j)]
            if not (r and c):
                continue
            section, _ = sect[(Y, j)]
            _, proj = sect[(X, j + 1)]
            src_sp = layers[j][Y]
            dst_sp = layers[j + 1][X]
            cols = []
            for k in section:
                vec = src_sp.rows[k]
                img = m.apply(vec)
                cols.append(proj.apply(dst_sp.coords(img)))
            acts[(a.name, j)] = Mat.from_columns(field, cols, r)
    G = GradedModule(grA, 0, N, dims, acts, complete=True, lo_exact=True,
                     name=f"G({M.name})" if M.name else None)
    return G


def weak_to_koszul_check(A, M, m, j_max=None, grA=None):
    """Given a weakly Koszul ``M``, certify that ``G(M)`` is linear over the associated graded."""
    j_max = m if j_max is None else j_max
    wk = weakly_koszul(A, M, j_max)
    if not wk["weakly_koszul"]:
        v = wk["violation"]
        raise PreconditionError(f"module is not weakly Koszul: violation at j={v['j']}, i={v['i']}")
    grA = grA or assoc_graded(A)
    G = g_functor(A, M, grA)
    cert = is_linear(G, m)
    return {"weakly_koszul": True, "G_linear": cert.linear, "certificate": cert, "m": m}


def weak_to_koszul_algebra(A, m):
    wk = weakly_koszul_algebra(A, m)
    if not wk["weakly_koszul"]:
        bad = next(C for C, r in wk["simples"].items() if not r["weakly_koszul"])
        v = wk["simples"][bad]["violation"]
        raise PreconditionError(f"simple {bad} is not weakly Koszul: violation at j={v['j']}, i={v['i']}")
    grA = assoc_graded(A)
    kz = is_koszul(grA, m)
    lin = {C: is_linear(g_functor(A, A.simple(C), grA), m).linear for C in A.objects}
    return {"weakly_koszul": True, "assoc_graded_koszul": kz["koszul"], "G_simples_linear": lin,
            "assoc_graded": grA, "m": m}


# -- radicals and short exact sequences ------------------------------------------------

def radical_module(M):
    return M.sub_module(M.radical_of(M.full()), name=f"rad({M.name})" if M.name else None)


def radical_sequence(A, M):
    """``0 -> Omega(M) -> rad P_0 -> rad M -> 0`` from the projective cover of ``M``.

    Returns ``(F2, F1_spaces)`` with ``F2 = rad P_0`` and ``F1`` given by
    subspaces of ``F2``.
    """
    free, cover, ker = _cover(M)
    P = free.module
    radP = P.radical_of(P.full())
    F2 = P.sub_module(radP, name="radP0")
    F1 = {X: span(A.field, radP[X].dim, [radP[X].coords(r) for r in ker[X].rows]) for X in A.objects}
    return F2, F1


def ses_check(A, F2, F1_spaces, j_max=3):
    """Hypotheses and conclusion of the transfer of weak Koszulity to quotients.

    ``F1`` is a submodule of ``F2`` given by subspaces.  Reports whether
    ``rad^k F2 cap F1 = rad^k F1`` for all ``k``, whether both are weakly
    Koszul, and whether the quotient is weakly Koszul.
    """
    F1 = F2.sub_module(F1_spaces, name="F1")
    F3 = F2.quotient_module(F1_spaces, name="F3")
    compat = True
    for k in range(A.N + 1):
        lhs = F2.radical_power(k)
        rhs = F2.radical_power(k, F1_spaces)
        for X in A.objects:
            if intersect(lhs[X], F1_spaces[X]) != rhs[X]:
                compat = False

    def wk(F):
        return True if F.total_dim() == 0 else weakly_koszul(A, F, j_max)["weakly_koszul"]

    h1, h2 = wk(F1), wk(F2)
    concl = wk(F3)
    return {"radical_compatible": compat, "F1_weakly_koszul": h1, "F2_weakly_koszul": h2,
            "hypotheses": compat and h1 and h2, "F3_weakly_koszul": concl,
            "dims": {"F1": F1.total_dim(), "F2": F2.total_dim(), "F3": F3.total_dim()}}


def filtration_report(A, M=None):
    out = {"algebra": {f"{X}->{Y}": A.layer_dims(X, Y) for X in A.objects for Y in A.objects
                       if A.dim(X, Y)}, "dim": A.total_dim()}
    if M is not None:
        layers = [M.full()]
        while any(s.dim for s in layers[-1].values()):
            layers.append(M.radical_of(layers[-1]))
        out["module"] = [sum(layers[i][X].dim for X in A.objects) - sum(layers[i + 1][X].dim for X in A.objects)
                         for i in range(len(layers) - 1)]
    return out


# -- documents ---------------------------------------------------------------------

def load_algebra(path, field=None):
    import os
    with open(path) as fh:
        doc = json.load(fh)
    name = os.path.splitext(os.path.basename(str(path)))[0]
    return FDAlgebra.from_json(doc, field=field, name=name)


def module_from_json(doc, A):
    kind = doc.get("kind")
    if kind == "simple":
        return A.simple(doc["object"])
    if kind == "projective":
        return A.projective(doc["object"])
    dims = doc["dims"]
    mats = {}
    for name, rows in doc.get("arrows", {}).items():
        arr = A.arrow[name]
        r, c = int(dims.get(arr.source, 0)), int(dims.get(arr.target, 0))
        m = Mat(A.field, [[Fraction(str(x)) for x in row] for row in rows], c) if r else Mat.zeros(A.field, 0, c)
        mats[name] = m
    return FModule(A, dims, mats, name=doc.get("name"))
