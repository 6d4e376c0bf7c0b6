"""Mesh categories built from user-supplied translation quivers.

The translation quiver is input, not computed.  Each vertex is an
indecomposable module, arrows are irreducible maps (with multiplicity) and
``tau`` is defined exactly on the non-projective vertices.  The mesh
presentation has one degree-2 relation per non-projective vertex ``C``:
the sum over the middle terms ``E`` of ``(E -> C) o (tauC -> E)``, all signs
``+1``.  Projective vertices get no relation.
"""

from __future__ import annotations

import json
from collections import Counter

from .gmod import simple
from .presentation import Presentation, PresentationError
from .resolve import is_koszul, minimal_resolution
from .xla import QQ

__all__ = ["TranslationQuiver", "mesh_presentation", "verify_ar_resolutions", "load_translation_quiver"]


def arrow_name(src, dst, k, mult):
    return f"{src}->{dst}" if mult == 1 else f"{src}->{dst}#{k}"


class TranslationQuiver:
    def __init__(self, vertices, arrows, tau, name=None):
        self.name = name
        self.vertices = []
        self.projective = {}
        self.rad = {}
        for v in vertices:
            if isinstance(v, dict):
                nm, proj, rad = str(v["name"]), bool(v.get("projective", False)), list(v.get("rad", []))
            else:
                nm, proj, rad = str(v[0]), bool(v[1]), list(v[2]) if len(v) > 2 else []
            if nm in self.projective:
                raise PresentationError(f"duplicate vertex {nm!r}")
            self.vertices.append(nm)
            self.projective[nm] = proj
            self.rad[nm] = [str(x) for x in rad]
        self.mult = Counter()
        for a in arrows:
            if isinstance(a, dict):
                s, t, m = str(a["from"]), str(a["to"]), int(a.get("mult", 1))
            else:
                s, t, m = str(a[0]), str(a[1]), int(a[2]) if len(a) > 2 else 1
            if m < 1:
                raise PresentationError(f"arrow {s}->{t} has multiplicity {m}")
            self.mult[(s, t)] += m
        self.tau = {str(k): str(v) for k, v in dict(tau).items()}
        self.validate()

    def validate(self):
        vs = set(self.vertices)
        for (s, t) in self.mult:
            if s not in vs or t not in vs:
                raise PresentationError(f"arrow {s}->{t} has an unknown endpoint")
        for v in self.vertices:
            if self.projective[v] and v in self.tau:
                raise PresentationError(f"tau is defined on projective vertex {v!r}")
            if not self.projective[v] and v not in self.tau:
                raise PresentationError(f"tau is missing for non-projective vertex {v!r}")
            for r in self.rad[v]:
                if r not in vs:
                    raise PresentationError(f"rad list of {v!r} names unknown vertex {r!r}")
        for C, tC in self.tau.items():
            if C not in vs or tC not in vs:
                raise PresentationError(f"tau({C!r}) = {tC!r} names an unknown vertex")
            into = {s: m for (s, t), m in self.mult.items() if t == C}
            out = {t: m for (s, t), m in self.mult.items() if s == tC}
            if into != out:
                raise PresentationError(
                    f"mesh at {C!r} is inconsistent: arrows into {C!r} {sorted(into.items())} "
                    f"vs arrows out of {tC!r} {sorted(out.items())}")
        return True

    def middle_terms(self, C):
        return sorted((s, m) for (s, t), m in self.mult.items() if t == C)

    @classmethod
    def from_json(cls, doc, name=None):
        try:
            return cls(doc["vertices"], doc.get("arrows", []), doc.get("tau", {}), name=name)
        except KeyError as exc:
            raise PresentationError(f"missing field {exc.args[0]!r} in translation quiver document") from None

    def to_json(self):
        return {
            "vertices": [{"name": v, "projective": self.projective[v], "rad": self.rad[v]} for v in self.vertices],
            "arrows": [{"from": s, "to": t, "mult": m} for (s, t), m in sorted(self.mult.items())],
            "tau": dict(self.tau),
        }


def load_translation_quiver(path):
    import os
    with open(path) as fh:
        doc = json.load(fh)
    return TranslationQuiver.from_json(doc, name=os.path.splitext(os.path.basename(str(path)))[0])


def mesh_presentation(tq, field=QQ, truncation=None):
    """The degree-2 mesh presentation of the translation quiver."""
    arrows = []
    for (s, t), m in sorted(tq.mult.items()):
        for k in range(m):
            arrows.append((arrow_name(s, t, k, m), s, t))
    rels = []
    for C in tq.vertices:
        if tq.projective[C]:
            continue
        tC = tq.tau[C]
        terms = []
        for E, m in tq.middle_terms(C):
            for k in range(m):
                terms.append((1, (arrow_name(E, C, k, m), arrow_name(tC, E, k, m))))
        if terms:
            rels.append(terms)
    D = truncation if truncation is not None else len(tq.vertices) + 2
    return Presentation(field, tq.vertices, arrows, rels, D, name=f"mesh({tq.name})" if tq.name else "mesh")


def expected_shape(tq, C):
    """Stage summands ``[[(object, shift, mult)], ...]`` predicted for the simple at ``C``."""
    if tq.projective[C]:
        stages = [[(C, 0, 1)]]
        rad = Counter(tq.rad[C])
        if rad:
            stages.append(sorted((R, -1, k) for R, k in rad.items()))
        return stages
    stages = [[(C, 0, 1)], sorted((E, -1, m) for E, m in tq.middle_terms(C)), [(tq.tau[C], -2, 1)]]
    return stages


def verify_ar_resolutions(tq, m=6, field=QQ, p=None):
    """Compare the resolution of every simple functor with its predicted shape."""
    p = p or mesh_presentation(tq, field)
    per = {}
    ok = True
    for C in tq.vertices:
        res = minimal_resolution(simple(p, C), m)
        got = []
        for st in res.stages:
            if st.gens:
                got.append(sorted(st.summands()))
        exp = expected_shape(tq, C)
        exp = [sorted(s) for s in exp][: m + 1]
        passed = got == exp
        ok = ok and passed
        per[C] = {"pass": passed, "expected": [[list(t) for t in s] for s in exp],
                  "got": [[list(t) for t in s] for s in got],
                  "length": len(got) - 1}
    kz = is_koszul(p, m)
    return {"pass": ok and kz["koszul"], "shapes_pass": ok, "koszul": kz["koszul"], "vertices": per,
            "m": m, "D": p.D, "presentation": p}
