import random

import pytest
from hypothesis import given, settings, strategies as st

from koszulkit import library as L
from koszulkit.filtered import (FDAlgebra, FModule, PreconditionError, assoc_graded, direct_sum, filtration_report,
                                g_functor, module_from_json, radical_module, radical_sequence, ses_check,
                                weak_to_koszul_algebra, weak_to_koszul_check, weakly_koszul, weakly_koszul_algebra)
from koszulkit.presentation import PresentationError
from koszulkit.resolve import is_koszul, is_linear
from koszulkit.xla import QQ, span


def wk(A, M, j_max=4):
    return M.total_dim() == 0 or weakly_koszul(A, M, j_max)["weakly_koszul"]


def random_quotient(A, seed):
    """``P`` (a sum of projectives) modulo a random subspace of its radical; valid when rad^2 = 0."""
    rng = random.Random(seed)
    P = direct_sum([A.projective(rng.choice(A.objects)) for _ in range(rng.randint(1, 2))])
    rad = P.radical_of(P.full())
    sub = {}
    for X in A.objects:
        vecs = [[sum(rng.randint(-2, 2) * r[j] for r in rad[X].rows) for j in range(P.dims[X])]
                for _ in range(rng.randint(0, rad[X].dim))]
        sub[X] = span(A.field, P.dims[X], vecs)
    return P.quotient_module(sub, name=f"q{seed}")


def test_algebra_dimensions(field):
    assert L.truncated_polynomial(3, field).total_dim() == 3
    assert [A.total_dim() for A in L.radsq_algebras(field)] == [3, 5, 3]
    inh = L.inhomogeneous_example(field)
    assert inh.total_dim() == 2
    assert inh.layer_dims("v", "v") == [1, 1, 0, 0]


def test_admissibility_is_checked():
    with pytest.raises(PresentationError):
        FDAlgebra(QQ, ["v"], [("x", "v", "v")], [[(1, ("x", "x", "x"))]], 2)
    with pytest.raises(PresentationError):
        FDAlgebra(QQ, ["v"], [("x", "v", "v")], [[(1, ("x",))]], 3)


def test_modules_are_validated(field):
    A = L.truncated_polynomial(2, field)
    with pytest.raises(PresentationError):
        FModule(A, {"v": 1}, {"x": [[1]]})
    M = FModule(A, {"v": 2}, {"x": [[0, 0], [1, 0]]})
    assert M.is_valid()
    again = module_from_json(M.to_json(), A)
    assert again.dims == M.dims


def test_truncated_cube_fails_at_j1_i1(field):
    A = L.truncated_polynomial(3, field)
    r = weakly_koszul(A, A.simple("v"))
    assert not r["weakly_koszul"]
    assert r["violation"] == {"j": 1, "i": 1, "lhs_dim": 1, "rhs_dim": 0}
    # quasi mode looks at the same slice
    assert not weakly_koszul(A, A.simple("v"), quasi=True)["weakly_koszul"]


def test_weakly_koszul_algebras(field):
    for A in [L.truncated_polynomial(2, field), L.inhomogeneous_example(field)] + L.radsq_algebras(field):
        assert weakly_koszul_algebra(A)["weakly_koszul"], A.name


def test_assoc_graded_of_inhomogeneous():
    g = assoc_graded(L.inhomogeneous_example())
    assert g.relations == [[(1, ("x", "x"))]]
    assert is_koszul(g, 6)["koszul"]


def test_assoc_graded_of_homogeneous_is_itself(field):
    for A in L.radsq_algebras(field):
        g = assoc_graded(A)
        for X in A.objects:
            for Y in A.objects:
                assert [g.hom_dim(X, Y, n) for n in range(A.N)] == A.layer_dims(X, Y)


def test_transfer_to_koszul(field):
    for A in [L.truncated_polynomial(2, field)] + L.radsq_algebras(field):
        r = weak_to_koszul_algebra(A, 6)
        assert r["assoc_graded_koszul"]
        assert all(r["G_simples_linear"].values())


def test_transfer_refuses_non_weakly_koszul():
    A = L.truncated_polynomial(3)
    with pytest.raises(PreconditionError, match="j=1, i=1"):
        weak_to_koszul_check(A, A.simple("v"), 4)


def test_g_functor_dims_are_layers(field):
    A = L.truncated_polynomial(3, field)
    G = g_functor(A, A.projective("v"))
    assert G.validate()
    assert [G.dim("v", n) for n in range(4)] == [1, 1, 1, 0]


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10**6), k=st.integers(0, 3))
def test_radical_of_weakly_koszul_is_weakly_koszul(seed, k):
    A = ([L.truncated_polynomial(2)] + L.radsq_algebras())[k]
    M = random_quotient(A, seed)
    if M.total_dim() and wk(A, M):
        assert wk(A, radical_module(M))


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 10**6), k=st.integers(0, 3))
def test_syzygies_stay_weakly_koszul(seed, k):
    from koszulkit.filtered import _cover
    A = ([L.truncated_polynomial(2)] + L.radsq_algebras())[k]
    M = random_quotient(A, seed)
    if M.total_dim() and wk(A, M):
        free, _, ker = _cover(M)
        assert wk(A, free.module.sub_module(ker))


def test_radical_sequence_quotient(field):
    for A in [L.truncated_polynomial(2, field)] + L.radsq_algebras(field):
        for M in [A.projective(A.objects[0]), direct_sum([A.projective(A.objects[-1]), A.simple(A.objects[0])])]:
            F2, F1 = radical_sequence(A, M)
            r = ses_check(A, F2, F1)
            assert r["hypotheses"] and r["F3_weakly_koszul"]
            assert r["dims"]["F3"] == radical_module(M).total_dim()


def test_filtration_report():
    rep = filtration_report(L.truncated_polynomial(3), L.truncated_polynomial(3).projective("v"))
    assert rep["module"] == [1, 1, 1]
    assert rep["dim"] == 3
