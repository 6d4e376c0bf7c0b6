"""Minimal graded projective resolutions and the certificates built on them.

A stage of a resolution is a free module ``P_i`` (a sum of representables
``Hom(-, C)`` generated in degree ``d``, i.e. shift ``-d``), the cover map
``P_i -> Omega^i`` and the next syzygy ``Omega^{i+1} = ker``.  Generators
come from the canonical section of ``Omega^i / rad Omega^i`` and are sorted
by (object position, degree).

Every stage records the top of its certified internal-degree window; a
stage is exact when the module being covered is known to vanish above its
window.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field

from .gmod import FreeModule, INF, map_from_free, radical, simple
from .presentation import check_generated_01
from .xla import quotient_basis, Mat

__all__ = [
    "Stage",
    "Resolution",
    "projective_cover",
    "minimal_resolution",
    "is_linear",
    "is_koszul",
    "butler_check",
    "global_dim_probe",
    "ext_dims",
    "raise_truncation",
]


@dataclass
class Stage:
    index: int
    gens: list                 # [(object, degree)] in generator order
    free: FreeModule
    cover: object              # ModuleMap free -> module being covered
    syzygy: object             # Submodule of free
    certified_hi: object       # int, or None when exact in every degree
    images: list = dc_field(default_factory=list)

    def summands(self):
        """``[(object, shift, multiplicity)]`` with shift ``-degree``."""
        cnt = Counter(self.gens)
        order = []
        for g in self.gens:
            if g not in order:
                order.append(g)
        return [(C, -d, cnt[(C, d)]) for C, d in order]


def projective_cover(F, hi=None):
    """Projective cover of ``F``: returns ``(P, cover_map, syzygy_submodule, generator_images)``."""
    base = F.base
    field = F.field
    rad = radical(F)
    gens = []
    images = []
    for X in base.objects:
        for n in range(F.lo, F.hi + 1):
            dim = F.dim(X, n)
            if not dim:
                continue
            section, _ = quotient_basis(rad.space(X, n), dim)
            for j in section:
                v = [field.zero] * dim
                v[j] = field.one
                gens.append((X, n))
                images.append(v)
    cap = INF if F.complete else F.hi
    if hi is not None:
        cap = min(cap, hi)
    free = FreeModule(base, gens, hi=None if cap == INF else int(cap))
    if cap != INF and not gens:
        free.hi = min(free.hi, int(cap))
    cover = map_from_free(free, images, F, lo=free.lo, hi=free.hi)
    syz = cover.kernel()
    return free, cover, syz, images


class Resolution:
    def __init__(self, target, stages, m, terminated):
        self.target = target
        self.stages = stages
        self.m = m
        self.terminated = terminated   # index of first zero syzygy known to be exactly zero, or None
        self.D = target.base.D

    @property
    def base(self):
        return self.target.base

    def generation_degree(self):
        gens = self.stages[0].gens if self.stages else []
        return min((d for _, d in gens), default=0)

    def partial(self):
        """True if some stage's window cannot even contain linear generators."""
        g = self.generation_degree()
        for st in self.stages:
            if st.certified_hi is not None and st.certified_hi < g + st.index:
                return True
        return False

    def certified_internal_degree(self):
        his = [st.certified_hi for st in self.stages if st.certified_hi is not None]
        return min(his) if his else None

    def differential_image(self, k, g):
        """Image of generator ``g`` of ``P_k`` in ``P_{k-1}`` (k >= 1) as a vector at its degree."""
        st = self.stages[k]
        prev = self.stages[k - 1]
        C, d = st.gens[g]
        incl = prev.syzygy.space(C, d)
        coords = st.images[g]
        return incl.from_coords(coords)

    def differential_matrix(self, k, X, n):
        """Matrix of ``d_k : P_k(X)_n -> P_{k-1}(X)_n``."""
        st = self.stages[k]
        prev = self.stages[k - 1]
        cov = st.cover.matrix(X, n)
        incl = prev.syzygy.inclusion_matrix(X, n)
        return incl @ cov

    def pd(self):
        """Projective dimension if the resolution terminated, else ``None``."""
        return self.terminated

    def table(self):
        return [{"stage": st.index,
                 "summands": [[C, s, k] for C, s, k in st.summands()],
                 "certified_hi": st.certified_hi}
                for st in self.stages]


def minimal_resolution(F, m):
    """Stages ``0..m`` of the minimal projective resolution of ``F``."""
    stages = []
    M = F
    terminated = None
    for i in range(m + 1):
        if M.is_zero() and M.complete:
            terminated = i
            # remaining stages are zero
            for k in range(i, m + 1):
                free = FreeModule(F.base, [], hi=0)
                stages.append(Stage(k, [], free, None, _ZeroSub(free), None, []))
            break
        free, cover, syz, images = projective_cover(M)
        cert = None if M.complete else M.hi
        stages.append(Stage(i, [g for g in free.gens], free, cover, syz, cert, images))
        M = syz.as_module(name=f"Omega^{i + 1}")
    else:
        if M.is_zero() and M.complete:
            terminated = m
    if terminated is not None:
        # a zero syzygy only certifies termination if every stage was exact
        if any(st.certified_hi is not None for st in stages):
            terminated = None
        else:
            terminated = max((st.index for st in stages if st.gens), default=0)
    return Resolution(F, stages, m, terminated)


class _ZeroSub:
    def __init__(self, free):
        self.parent = free

    def space(self, X, n):
        from .xla import Subspace
        return Subspace.zero(self.parent.field, 0)

    def dim(self, X, n):
        return 0

    def inclusion_matrix(self, X, n):
        return Mat.zeros(self.parent.field, 0, 0)


@dataclass
class LinearityCertificate:
    linear: bool
    failing_stage: object = None
    failing_shift: object = None
    expected_shift: object = None
    generation_degree: int = 0
    partial: bool = False
    certified_hi: object = None
    m: int = 0
    D: int = 0
    table: list = dc_field(default_factory=list)

    def to_json(self):
        return {
            "linear": self.linear,
            "failing_stage": self.failing_stage,
            "failing_shift": self.failing_shift,
            "expected_shift": self.expected_shift,
            "generation_degree": self.generation_degree,
            "partial": self.partial,
            "certified_internal_degree": self.certified_hi,
            "m": self.m,
            "D": self.D,
            "stages": self.table,
        }


def is_linear(F, m, resolution=None):
    """Check that stage ``i`` of the minimal resolution is generated in degree ``g + i``.

    ``g`` is the lowest generation degree of ``F``; shifts are reported as
    ``-degree``.
    """
    res = resolution or minimal_resolution(F, m)
    g = res.generation_degree()
    cert = LinearityCertificate(True, generation_degree=g, partial=res.partial(),
                                certified_hi=res.certified_internal_degree(), m=m, D=F.base.D,
                                table=res.table())
    for st in res.stages:
        for C, d in st.gens:
            if d != g + st.index:
                cert.linear = False
                cert.failing_stage = st.index
                cert.failing_shift = -d
                cert.expected_shift = -(g + st.index)
                return cert
    if cert.partial:
        cert.linear = False
    return cert


def raise_truncation(p, m, generation_degree=0):
    """The presentation with ``D`` raised to ``max(D, m + generation_degree)`` when needed."""
    if p.is_finite():
        return p
    need = m + generation_degree
    if need > p.D:
        return p.with_truncation(need)
    return p


def is_koszul(p, m):
    """Linearity of every simple up to stage ``m``; returns a report dict."""
    p = raise_truncation(p, m)
    per = {}
    ok = True
    for C in p.objects:
        cert = is_linear(simple(p, C), m)
        per[C] = cert
        ok = ok and cert.linear
    gen01, fail = check_generated_01(p)
    return {
        "koszul": ok,
        "simples": per,
        "generated_01": gen01,
        "generated_01_failure": fail,
        "m": m,
        "D": p.D,
        "presentation": p,
    }


def butler_check(p, C, resolution=None):
    """Compare ``Omega^2(S_C) / rad`` with the degree-2 relation spaces ``I_2(-, C)``."""
    p2 = p
    res = resolution or minimal_resolution(simple(p2, C), 2)
    top_dims = Counter()
    if len(res.stages) > 2:
        for X, d in res.stages[2].gens:
            top_dims[(X, d)] += 1
    quadratic = p.is_quadratic()
    i2 = {}
    for X in p.objects:
        i2[(X, 2)] = p.piece(X, C, 2).ideal.dim if p.D >= 2 else 0
    if quadratic:
        keys = set(top_dims) | set(i2)
        equal = all(top_dims.get(k, 0) == i2.get(k, 0) for k in keys)
    else:
        equal = all(top_dims.get((X, 2), 0) == i2[(X, 2)] for X in p.objects)
    return {
        "object": C,
        "omega2_top_dims": {f"{X}@{d}": k for (X, d), k in sorted(top_dims.items()) if k},
        "I2_dims": {f"{X}@2": k for (X, _), k in sorted(i2.items()) if k},
        "equal": equal,
        "quadratic": quadratic,
    }


def global_dim_probe(p, m):
    """Projective dimension of each simple, exact when the resolution terminates."""
    out = {}
    worst = 0
    unbounded = False
    for C in p.objects:
        res = minimal_resolution(simple(p, C), m)
        pd = res.pd()
        if pd is None:
            # zero syzygy inside a truncated window: report the last nonzero stage
            last = max((st.index for st in res.stages if st.gens), default=0)
            zero_after = all(not st.gens for st in res.stages[last + 1:]) and last < m
            if zero_after:
                out[C] = {"pd": last, "exact": False, "certified_hi": res.certified_internal_degree()}
                worst = max(worst, last)
            else:
                out[C] = {"pd": f">= {m + 1}", "exact": False,
                          "certified_hi": res.certified_internal_degree()}
                unbounded = True
        else:
            out[C] = {"pd": pd, "exact": True, "certified_hi": None}
            worst = max(worst, pd)
    return {"simples": out, "max_pd": f">= {m + 1}" if unbounded else worst, "m": m, "D": p.D}


def ext_dims(p, m, resolutions=None):
    """``{(C, D, i): dim Ext^i(S_C, S_D)}`` for ``i <= m`` read off minimal resolutions."""
    out = {}
    for C in p.objects:
        res = resolutions[C] if resolutions else minimal_resolution(simple(p, C), m)
        for st in res.stages[: m + 1]:
            cnt = Counter(X for X, _ in st.gens)
            for Dobj in p.objects:
                out[(C, Dobj, st.index)] = cnt.get(Dobj, 0)
    return out
