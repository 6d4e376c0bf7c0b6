"""Acceptance suite: thirteen criteria, each checked over Q and F101.

Run under pytest (a summary table is printed at the end of the session) or
directly with ``python3 tests/test_acceptance.py``.
"""

import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from koszulkit import library as L
from koszulkit.ar import TranslationQuiver, verify_ar_resolutions
from koszulkit.dual import ext_algebra, quadratic_dual
from koszulkit.filtered import (direct_sum as fsum, g_functor, assoc_graded, radical_module, weakly_koszul,
                                weakly_koszul_algebra)
from koszulkit.gmod import (cokernel_module, dual, hom_degree0, hom_graded_dims, projective, representable_data,
                            simple, simple_data, tensor, top)
from koszulkit.presentation import check_generated_01
from koszulkit.resolve import butler_check, ext_dims, global_dim_probe, is_koszul, is_linear
from koszulkit.xla import GF, QQ

from oracles import redundant_presentation
from test_filtered import random_quotient

FIELDS = [("Q", QQ), ("F101", GF(101))]
RESULTS = []


def koszul_corpus(f):
    return L.koszul_corpus(f)


def module_corpus(f):
    """Ten modules over finite presentations (every window is exact)."""
    a3 = L.radsq_a3(f)
    sq = L.commuting_square(f)
    cube = L.loop(3, f, D=4)
    ext = L.exterior_plane(f, D=3)
    return [(a3, projective(a3, "1")), (a3, projective(a3, "2")), (a3, projective(a3, "3")), (a3, simple(a3, "2")),
            (sq, projective(sq, "4")), (sq, projective(sq, "1")), (sq, simple(sq, "4")),
            (cube, projective(cube, "v")), (cube, simple(cube, "v")), (ext, projective(ext, "v"))]


# -- criteria (each returns (ok, detail)) -----------------------------------------

def c1_orthogonality_involution(f):
    bad = []
    for seed in range(25):
        p = L.random_quadratic(seed, f, D=2)
        qq = quadratic_dual(quadratic_dual(p))
        for X in p.objects:
            for Z in p.objects:
                if qq.piece(X, Z, 2).ideal != p.piece(X, Z, 2).ideal:
                    bad.append(seed)
    return not bad, f"25 random presentations, mismatches {sorted(set(bad))}"


def c2_ext_matches_dual(f):
    bad = []
    for p in koszul_corpus(f):
        ext = ext_algebra(p, 6, product_degree=2)
        q = quadratic_dual(p, truncation=6)
        for C in p.objects:
            for D in p.objects:
                for i in range(7):
                    if ext.ext_dims[(C, D, i)] != q.hom_dim(C, D, i):
                        bad.append((p.name, C, D, i))
    return not bad, f"5 corpus entries, i <= 6, mismatches {bad[:3]}"


def c3_double_dual(f):
    bad = []
    for p in koszul_corpus(f):
        q = quadratic_dual(p, truncation=5)
        ext2 = ext_algebra(q, 5, product_degree=2)
        for C in p.objects:
            for D in p.objects:
                for i in range(6):
                    if ext2.ext_dims[(C, D, i)] != p.hom_dim(C, D, i):
                        bad.append((p.name, C, D, i))
    return not bad, f"5 corpus entries, degrees <= 5, mismatches {bad[:3]}"


def c4_koszul_generated_01(f):
    cases = koszul_corpus(f) + [L.random_quadratic(seed, f, D=4) for seed in range(25)]
    koszul = failures = 0
    for p in cases:
        r = is_koszul(p, 4)
        if r["koszul"]:
            koszul += 1
            if not check_generated_01(r["presentation"])[0]:
                failures += 1
    return failures == 0 and koszul >= 5, f"{koszul}/{len(cases)} Koszul, {failures} not generated in 0,1"


def c5_negative_controls(f):
    cert = is_linear(simple(L.loop(3, f), "v"), 6)
    lin_ok = (not cert.linear) and cert.failing_stage == 2 and cert.failing_shift == -3
    A = L.truncated_polynomial(3, f)
    r = weakly_koszul(A, A.simple("v"))
    wk_ok = (not r["weakly_koszul"]) and r["violation"] == {"j": 1, "i": 1, "lhs_dim": 1, "rhs_dim": 0}
    return lin_ok and wk_ok, (f"x^3 fails at stage {cert.failing_stage} shift {cert.failing_shift}; "
                              f"k[x]/x^3 violation {r['violation']}")


def c6_weak_transfer(f):
    algs = [L.truncated_polynomial(2, f)] + L.radsq_algebras(f)
    bad = []
    for A in algs:
        if not weakly_koszul_algebra(A, 6)["weakly_koszul"]:
            bad.append((A.name, "weak"))
            continue
        gr = assoc_graded(A)
        if not is_koszul(gr, 6)["koszul"]:
            bad.append((A.name, "assoc_graded"))
        for C in A.objects:
            if not is_linear(g_functor(A, A.simple(C), gr), 6).linear:
                bad.append((A.name, "G", C))
    return not bad, f"{len(algs)} algebras, failures {bad}"


def c7_tensor_identities(f):
    bad = []
    for p, F in module_corpus(f):
        T = top(F)
        for C in p.objects:
            for data, want in ((representable_data(p, C), lambda n: F.dim(C, n)),
                               (simple_data(p, C), lambda n: T.dim(C, n))):
                dims, _ = tensor(p, data, F)
                if any(dims.get(n, 0) != want(n) for n in range(F.lo, F.hi + 1)):
                    bad.append((p.name, C, "identity"))
                if tensor(p, redundant_presentation(data, p), F)[0] != dims:
                    bad.append((p.name, C, "presentation"))
    return not bad, f"10 modules, failures {bad[:3]}"


def c8_duality(f):
    bad = []
    mods = module_corpus(f)
    for p, F in mods:
        if dual(dual(F)).dims_table() != F.dims_table():
            bad.append((p.name, "D^2"))
    pairs = [(mods[0], "2"), (mods[3], "1"), (mods[4], "1"), (mods[6], "2"), (mods[8], "v")]
    for (p, F), C in pairs:
        G_data = simple_data(p, C) if p.name != "loop_x3" else representable_data(p, C)
        G = cokernel_module(p.opposite(), G_data.opposite_entries(p))
        DG = dual(G)
        dims, _ = tensor(p, G_data, F)
        # D(G (x) F) in degree n has the dimension of (G (x) F)_{-n}
        d_dims = {-k: v for k, v in dims.items()}
        homs = hom_graded_dims(F, DG, sorted(d_dims))
        if any(d_dims[n] != homs[n] for n in d_dims):
            bad.append((p.name, C, "adjunction"))
    return not bad, f"D^2 on 10 modules, adjunction on 5 pairs, failures {bad}"


def c9_graded_yoneda(f):
    bad = 0
    count = 0
    loop2 = L.loop(2, f)
    for p, F in module_corpus(f) + [(loop2, projective(loop2, "v"))]:
        for C in p.objects:
            for j in range(F.lo, F.hi + 1):
                count += 1
                if hom_degree0(projective(p, C, -j), F)[0] != F.dim(C, j):
                    bad += 1
    return bad == 0, f"{count} (module, object, degree) cases, {bad} mismatches"


def c10_hereditary(f):
    frees = [L.a2(f), L.a3(f), L.free(["v"], [("x", "v", "v"), ("y", "v", "v")], f),
             L.free(["1", "2"], [("a", "1", "2"), ("b", "1", "2"), ("c", "2", "1")], f, D=5)]
    bad = []
    for p in frees:
        probe = global_dim_probe(p, 4)
        if any(not isinstance(v["pd"], int) or v["pd"] > 1 for v in probe["simples"].values()):
            bad.append((p.name, "pd"))
        if any(v for (C, D, i), v in ext_dims(p, 4).items() if i >= 2):
            bad.append((p.name, "ext"))
    return not bad, f"{len(frees)} free presentations, failures {bad}"


AR_A2 = {"vertices": [{"name": "S2", "projective": True, "rad": []},
                      {"name": "P1", "projective": True, "rad": ["S2"]},
                      {"name": "S1", "projective": False}],
         "arrows": [{"from": "S2", "to": "P1"}, {"from": "P1", "to": "S1"}], "tau": {"S1": "S2"}}
AR_DUAL_NUMBERS = {"vertices": [{"name": "L", "projective": True, "rad": ["S"]}, {"name": "S", "projective": False}],
                   "arrows": [{"from": "S", "to": "L"}, {"from": "L", "to": "S"}], "tau": {"S": "S"}}


def c11_ar_pipeline(f):
    out = []
    for doc in (AR_A2, AR_DUAL_NUMBERS):
        r = verify_ar_resolutions(TranslationQuiver.from_json(doc), 6, f)
        out.append(r["pass"])
    return all(out), f"A2 {out[0]}, k[x]/x^2 {out[1]}"


def c12_butler(f):
    bad = []
    n = 0
    for p in koszul_corpus(f) + [L.commutative_plane(f), L.exterior_plane(f), L.loop(3, f).with_truncation(4)]:
        if not p.is_quadratic():
            continue
        for C in p.objects:
            n += 1
            if not butler_check(p, C)["equal"]:
                bad.append((p.name, C))
    return not bad, f"{n} (presentation, object) cases, failures {bad}"


def c13_radical_weakly_koszul(f):
    algs = [L.truncated_polynomial(2, f), L.inhomogeneous_example(f)] + L.radsq_algebras(f)
    certified = bad = 0
    for A in algs:
        mods = [A.simple(C) for C in A.objects] + [A.projective(C) for C in A.objects]
        mods.append(fsum([A.projective(A.objects[0]), A.simple(A.objects[-1])]))
        if A.N == 2:
            mods += [random_quotient(A, seed) for seed in range(4)]
        for M in mods:
            if M.total_dim() == 0 or not weakly_koszul(A, M, 4)["weakly_koszul"]:
                continue
            certified += 1
            R = radical_module(M)
            if R.total_dim() and not weakly_koszul(A, R, 4)["weakly_koszul"]:
                bad += 1
    return bad == 0 and certified > 0, f"{certified} certified modules, {bad} with a failing radical"


CRITERIA = [
    (1, "orthogonality involution", c1_orthogonality_involution),
    (2, "Ext dims match quadratic dual", c2_ext_matches_dual),
    (3, "double Koszul dual", c3_double_dual),
    (4, "Koszul implies generated in degrees 0,1", c4_koszul_generated_01),
    (5, "negative controls", c5_negative_controls),
    (6, "weakly Koszul transfer", c6_weak_transfer),
    (7, "tensor identities", c7_tensor_identities),
    (8, "duality", c8_duality),
    (9, "graded Yoneda", c9_graded_yoneda),
    (10, "free presentations are hereditary", c10_hereditary),
    (11, "AR pipeline", c11_ar_pipeline),
    (12, "Butler identity", c12_butler),
    (13, "radical of weakly Koszul", c13_radical_weakly_koszul),
]


def evaluate(num, title, fn):
    t0 = time.perf_counter()
    parts = []
    ok = True
    for label, f in FIELDS:
        good, detail = fn(f)
        ok = ok and good
        parts.append(f"{label}: {detail}")
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 60
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d} {title} ({elapsed:.1f}s) | " + " | ".join(parts)
    RESULTS.append(line)
    print(line)
    return ok, line


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn):
    ok, line = evaluate(num, title, fn)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c)[0] for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
