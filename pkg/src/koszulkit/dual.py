"""Koszul duality: quadratic duals and Ext algebras with Yoneda products.

Orientation.  An arrow ``a: X -> Y`` of ``p`` gives an arrow ``a*: Y -> X`` of
the dual (the name toggles a trailing ``*``).  With contravariant modules
``Ext^1(S_C, S_D)`` is spanned by the arrows ``D -> C``, so
``Ext^i(S_C, S_D)`` matches ``Hom_dual(C, D)_i``.

Pairing.  A dual length-2 path written ``(a*, b*)`` pairs to 1 with the
original path ``(b, a)`` and to 0 with every other path.
"""

from __future__ import annotations

from collections import defaultdict

from .gmod import map_from_free, simple
from .presentation import Presentation, PresentationError
from .resolve import minimal_resolution, raise_truncation
from .xla import Mat, Solver, kernel, span

__all__ = [
    "ExtPresentation",
    "star",
    "orthogonal_relations",
    "quadratic_dual",
    "ext_algebra",
    "koszul_dual_compare",
    "yoneda_associativity",
]


def star(name):
    return name[:-1] if name.endswith("*") else name + "*"


class ExtPresentation(Presentation):
    """A presentation on the dual quiver together with where it came from."""

    provenance = "quadratic_dual"
    ext_dims = None
    products = None
    quadratic = True
    generated_in_degree_1 = True

    def to_json(self):
        doc = Presentation.to_json(self)
        doc["provenance"] = self.provenance
        return doc


def _dual_quiver(p):
    return [(star(a.name), a.target, a.source) for a in p.arrows]


def orthogonal_relations(p, X, Z):
    """``I_2^perp`` for the original pair ``(X, Z)``, as a subspace of dual paths ``Z -> X``.

    Returns ``(dual_paths, subspace)``.
    """
    piece = p.piece(X, Z, 2)
    dual_paths = [(star(a), star(b)) for (b, a) in piece.paths]
    # sort dual paths lexicographically, matching the dual presentation's order
    order = sorted(range(len(dual_paths)), key=lambda k: dual_paths[k])
    sorted_paths = [dual_paths[k] for k in order]
    pos = {k: i for i, k in enumerate(order)}
    rows = []
    for r in piece.ideal.rows:
        v = [p.field.zero] * len(sorted_paths)
        for j, c in enumerate(r):
            if c:
                v[pos[j]] = c
        rows.append(v)
    m = Mat(p.field, rows, len(sorted_paths), _trusted=True) if rows else Mat.zeros(p.field, 0, len(sorted_paths))
    return sorted_paths, kernel(m)


def quadratic_dual(p, truncation=None):
    """The quadratic dual ``T(dual quiver) / <I_2^perp>``."""
    for k, terms in enumerate(p.relations):
        if len(terms[0][1]) != 2:
            raise PresentationError(f"relation {k} has degree {len(terms[0][1])}; quadratic_dual needs degree 2")
    arrows = _dual_quiver(p)
    rels = []
    p2 = p.with_truncation(max(p.D, 2)) if p.D < 2 else p
    for X in p.objects:
        for Z in p.objects:
            paths, perp = orthogonal_relations(p2, X, Z)
            for row in perp.rows:
                rels.append([(c, q) for c, q in zip(row, paths) if c])
    D = p.D if truncation is None else truncation
    q = ExtPresentation(p.field, p.objects, arrows, rels, D,
                        name=f"{p.name}!" if p.name else None)
    q.provenance = "quadratic_dual"
    return q


class _Lifter:
    """Chain-map lifting between minimal resolutions of simples."""

    def __init__(self, p, resolutions):
        self.p = p
        self.res = resolutions
        self._solvers = {}

    def solver(self, D, k, X, t):
        key = (D, k, X, t)
        s = self._solvers.get(key)
        if s is None:
            s = Solver(self.res[D].differential_matrix(k, X, t))
            self._solvers[key] = s
        return s

    def lift(self, C, i, g, kmax):
        """Lift the class of generator ``g`` of stage ``i`` of ``res[C]``.

        Returns the list ``f_0..f_kmax`` of generator images: ``f_k[h]`` is a
        vector in ``P^D_k(X)_{x - d}`` for generator ``h = (X, x)`` of
        ``P^C_{i+k}``, where ``(D, d)`` is generator ``g``.
        """
        rC = self.res[C]
        D, d = rC.stages[i].gens[g]
        rD = self.res[D]
        field = self.p.field
        out = []
        # f_0: generator g -> identity of P^D_0, others -> 0
        P0 = rD.stages[0].free
        imgs = []
        for h, (X, x) in enumerate(rC.stages[i].gens):
            n = x - d
            v = [field.zero] * (P0.dim(X, n) if P0.known(n) else 0)
            if h == g:
                v[P0.offset(D, 0, 0)] = field.one
            imgs.append(v)
        out.append(imgs)
        for k in range(kmax):
            if i + k + 1 >= len(rC.stages) or k + 1 >= len(rD.stages):
                break
            src = rC.stages[i + k].free
            tgt = rD.stages[k].free.shift(-d)
            fk = map_from_free(src, out[-1], tgt, lo=src.lo, hi=src.hi)
            nxt = []
            st_next = rC.stages[i + k + 1]
            Pn = rD.stages[k + 1].free
            for h, (X, x) in enumerate(st_next.gens):
                y = rC.differential_image(i + k + 1, h)
                y = fk.matrix(X, x).apply(y)
                t = x - d
                if not any(y):
                    nxt.append([field.zero] * Pn.dim(X, t))
                    continue
                z = self.solver(D, k + 1, X, t).solve(y)
                if z is None:
                    raise ArithmeticError("chain-map lifting failed: cocycle condition violated")
                nxt.append(z)
            out.append(nxt)
        return D, d, out


def ext_algebra(p, m, product_degree=None):
    """Ext dimensions and Yoneda products between simples, up to homological degree ``m``.

    Products ``Ext^j x Ext^i -> Ext^{i+j}`` are computed for ``i, j >= 1`` and
    ``i + j <= product_degree`` (default ``m``).
    """
    p = raise_truncation(p, m)
    pd_ = m if product_degree is None else min(product_degree, m)
    res = {C: minimal_resolution(simple(p, C), m) for C in p.objects}
    field = p.field
    basis = {}  # (C, D, i) -> list of generator indices in stage i of res[C]
    for C in p.objects:
        for st in res[C].stages:
            for g, (D, _) in enumerate(st.gens):
                basis.setdefault((C, D, st.index), []).append(g)
    dims = {(C, D, i): len(basis.get((C, D, i), [])) for C in p.objects for D in p.objects
            for i in range(m + 1)}
    lifter = _Lifter(p, res)
    products = {}
    for (C, D, i), gs in sorted(basis.items()):
        if i < 1 or i >= pd_:
            continue
        for a, g in enumerate(gs):
            Dd, d, f = lifter.lift(C, i, g, pd_ - i)
            for j in range(1, len(f)):
                if i + j > pd_:
                    break
                fj = f[j]
                rD = res[D]
                for E in p.objects:
                    hs = basis.get((D, E, j), [])
                    ks = basis.get((C, E, i + j), [])
                    if not hs:
                        continue
                    for b, h in enumerate(hs):
                        Eh, e = rD.stages[j].gens[h]
                        Pj = rD.stages[j].free
                        coeffs = []
                        for k in ks:
                            X, x = res[C].stages[i + j].gens[k]
                            vec = fj[k]
                            if x - d == e and vec:
                                coeffs.append(vec[Pj.offset(E, e, h)])
                            else:
                                coeffs.append(field.zero)
                        products[((D, E, j, b), (C, D, i, a))] = coeffs
    # presentation on the Ext quiver
    arrows = []
    arrow_of = {}
    for C in p.objects:
        for D in p.objects:
            orig = [a.name for a in p.arrows_into[C] if a.source == D]
            orig.sort()
            for a_idx in range(dims[(C, D, 1)]):
                name = star(orig[a_idx]) if a_idx < len(orig) else f"e_{C}_{D}_{a_idx}"
                arrows.append((name, C, D))
                arrow_of[(C, D, a_idx)] = name
    rels = []
    gen1 = True
    for C in p.objects:
        for E in p.objects:
            # degree-2 paths C -> D -> E in written order (eta, xi)
            target_dim = dims.get((C, E, 2), 0) if m >= 2 else 0
            cols = []
            labels = []
            for D in p.objects:
                for a in range(dims[(C, D, 1)]):
                    for b in range(dims[(D, E, 1)]):
                        labels.append((arrow_of[(D, E, b)], arrow_of[(C, D, a)]))
                        vec = products.get(((D, E, 1, b), (C, D, 1, a))) if m >= 2 else None
                        cols.append(vec if vec is not None else [field.zero] * target_dim)
            if not labels:
                if target_dim:
                    gen1 = False
                continue
            M = Mat.from_columns(field, cols, target_dim)
            if M.rank() != target_dim:
                gen1 = False
            order = sorted(range(len(labels)), key=lambda k: labels[k])
            Ms = Mat.from_columns(field, [cols[k] for k in order], target_dim)
            ker = kernel(Ms)
            for row in ker.rows:
                rels.append([(c, labels[order[k]]) for k, c in enumerate(row) if c])
    # generation in degree 1 above degree 2
    for i in range(3, pd_ + 1):
        for C in p.objects:
            for E in p.objects:
                target_dim = dims.get((C, E, i), 0)
                if not target_dim:
                    continue
                vecs = []
                for D in p.objects:
                    for b in range(dims[(D, E, 1)]):
                        for a in range(dims[(C, D, i - 1)]):
                            v = products.get(((D, E, 1, b), (C, D, i - 1, a)))
                            if v:
                                vecs.append(v)
                if span(field, target_dim, vecs).dim != target_dim:
                    gen1 = False
    q = ExtPresentation(field, p.objects, arrows, rels, m, name=f"Ext({p.name})" if p.name else None)
    q.provenance = "ext_algebra"
    q.ext_dims = dims
    q.products = products
    q.generated_in_degree_1 = gen1
    match = all(q.hom_dim(C, D, i) == dims[(C, D, i)] for C in p.objects for D in p.objects
                for i in range(m + 1))
    q.quadratic = gen1 and match
    q.resolutions = res
    return q


def yoneda_associativity(ext):
    """Check ``(x y) z = x (y z)`` on all composable basis triples in the product table."""
    prods = ext.products
    dims = ext.ext_dims
    by_left = defaultdict(list)
    for (left, right), v in prods.items():
        by_left[right].append((left, v))
    failures = 0
    checked = 0
    for (l2, r), v in list(prods.items()):
        # l2 * r with r = (C, D, i, a), l2 = (D, E, j, b); multiply by (E, F, k, c) on the left
        C, D, i, a = r
        D_, E, j, b = l2
        for (ll, rr), w in list(prods.items()):
            if rr != l2:
                continue
            E_, Fo, k, c = ll
            # left side: ll * (l2 * r)
            lhs = [ext.field.zero] * dims.get((C, Fo, i + j + k), 0)
            for t, coef in enumerate(v):
                if coef:
                    u = prods.get((ll, (C, E, i + j, t)))
                    if u is None:
                        lhs = None
                        break
                    lhs = [x + coef * y for x, y in zip(lhs, u)]
            if lhs is None:
                continue
            rhs = [ext.field.zero] * dims.get((C, Fo, i + j + k), 0)
            for t, coef in enumerate(w):
                if coef:
                    u = prods.get(((D, Fo, j + k, t), r))
                    if u is None:
                        rhs = None
                        break
                    rhs = [x + coef * y for x, y in zip(rhs, u)]
            if rhs is None:
                continue
            checked += 1
            conv = ext.field.convert
            if [conv(x) for x in lhs] != [conv(x) for x in rhs]:
                failures += 1
    return checked, failures


def koszul_dual_compare(p, m, double_ext_degree=None):
    """Three comparisons between ``p``, its quadratic dual and its Ext algebra."""
    m2 = m if double_ext_degree is None else double_ext_degree
    q = quadratic_dual(p, truncation=max(m, m2, 2))
    ext = ext_algebra(p, m, product_degree=2)
    report = {"m": m, "D": p.D}

    first = None
    for C in p.objects:
        for D in p.objects:
            for i in range(m + 1):
                a, b = ext.ext_dims[(C, D, i)], q.hom_dim(C, D, i)
                if a != b and first is None:
                    first = {"C": C, "D": D, "i": i, "ext": a, "dual": b}
    report["ext_vs_dual"] = {"pass": first is None, "first_discrepancy": first}

    qq = quadratic_dual(q.with_truncation(2))
    first = None
    for X in p.objects:
        for Y in p.objects:
            if p.D >= 2 and qq.piece(X, Y, 2).ideal != p.piece(X, Y, 2).ideal and first is None:
                first = {"X": X, "Y": Y}
    report["double_orthogonal"] = {"pass": first is None, "first_discrepancy": first}

    ext2 = ext_algebra(q.with_truncation(max(q.D, m2)), m2, product_degree=2)
    first = None
    for C in p.objects:
        for D in p.objects:
            for i in range(min(m2, p.D) + 1):
                a, b = ext2.ext_dims[(C, D, i)], p.hom_dim(C, D, i)
                if a != b and first is None:
                    first = {"C": C, "D": D, "i": i, "ext_of_dual": a, "original": b}
    report["double_ext"] = {"pass": first is None, "first_discrepancy": first}
    report["pass"] = all(report[k]["pass"] for k in ("ext_vs_dual", "double_orthogonal", "double_ext"))
    report["ext"] = ext
    report["dual"] = q
    return report
