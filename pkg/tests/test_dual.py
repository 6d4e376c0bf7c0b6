import pytest
from hypothesis import given, settings, strategies as st

from koszulkit import library as L
from koszulkit.dual import (ext_algebra, koszul_dual_compare, orthogonal_relations, quadratic_dual, star,
                            yoneda_associativity)
from koszulkit.presentation import Presentation, PresentationError
from koszulkit.xla import QQ, GF


def pairing_is_zero(p, X, Z):
    """Every relation pairs to zero with every dual relation, under (b, a) <-> (a*, b*)."""
    piece = p.piece(X, Z, 2)
    paths, perp = orthogonal_relations(p, X, Z)
    idx = {q: i for i, q in enumerate(paths)}
    f = p.field
    for r in piece.ideal.rows:
        for s in perp.rows:
            tot = f.zero
            for c, (b, a) in zip(r, piece.paths):
                tot = f.add(tot, f.mul(c, s[idx[(star(a), star(b))]]))
            if tot != f.zero:
                return False
    return piece.ideal.dim + perp.dim == len(piece.paths)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10**6), prime=st.sampled_from([0, 101]))
def test_orthogonal_complement_pairs_to_zero(seed, prime):
    p = L.random_quadratic(seed, QQ if prime == 0 else GF(prime), D=2)
    for X in p.objects:
        for Z in p.objects:
            assert pairing_is_zero(p, X, Z)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10**6), prime=st.sampled_from([0, 101]))
def test_orthogonality_is_an_involution(seed, prime):
    p = L.random_quadratic(seed, QQ if prime == 0 else GF(prime), D=2)
    qq = quadratic_dual(quadratic_dual(p))
    assert [a.name for a in qq.arrows] == [a.name for a in p.arrows]
    for X in p.objects:
        for Z in p.objects:
            assert qq.piece(X, Z, 2).ideal == p.piece(X, Z, 2).ideal


def test_dual_of_square_has_orthogonal_relations(field):
    q = quadratic_dual(L.commuting_square(field))
    # the dual keeps one relation per pair with two length-2 paths: the complement of c a - d b
    assert len(q.relations) == 1
    (c1, p1), (c2, p2) = q.relations[0]
    assert {p1, p2} == {("a*", "c*"), ("b*", "d*")}
    assert c1 == c2


def test_known_duals(field):
    assert [quadratic_dual(L.loop(2, field)).hom_dim("v", "v", n) for n in range(5)] == [1] * 5
    ext = quadratic_dual(L.exterior_plane(field))
    assert [ext.hom_dim("v", "v", n) for n in range(5)] == [1, 2, 3, 4, 5]
    plane = quadratic_dual(L.commutative_plane(field))
    assert [plane.hom_dim("v", "v", n) for n in range(4)] == [1, 2, 1, 0]


def test_dual_needs_quadratic():
    with pytest.raises(PresentationError, match="relation 0"):
        quadratic_dual(L.loop(3))


def test_ext_dims_match_dual_dims(field):
    for p in L.koszul_corpus(field):
        ext = ext_algebra(p, 6, product_degree=2)
        q = quadratic_dual(p, truncation=6)
        for C in p.objects:
            for D in p.objects:
                for i in range(7):
                    assert ext.ext_dims[(C, D, i)] == q.hom_dim(C, D, i), (p.name, C, D, i)


def test_ext_of_square():
    ext = ext_algebra(L.commuting_square(), 3)
    assert ext.generated_in_degree_1 and ext.quadratic
    assert len(ext.relations) == 1
    assert sorted(q for _, q in ext.relations[0]) == [("a*", "c*"), ("b*", "d*")]


def test_ext_of_non_koszul_loop_is_not_generated_in_degree_1():
    ext = ext_algebra(L.loop(3), 3)
    assert ext.ext_dims[("v", "v", 2)] == 1
    assert not ext.generated_in_degree_1


def test_yoneda_products_are_associative(field):
    for p in (L.commuting_square(field), L.radsq_two_loops(field), L.loop(2, field)):
        ext = ext_algebra(p, 4)
        checked, failures = yoneda_associativity(ext)
        assert failures == 0
        assert checked > 0 or p.name == "square"


@pytest.mark.parametrize("build", [L.loop, L.radsq_a2, L.radsq_a3, L.radsq_two_loops, L.commuting_square])
def test_dual_compare_passes(build, field):
    p = build(2, field) if build is L.loop else build(field)
    r = koszul_dual_compare(p, 6, 5)
    assert r["pass"], {k: r[k] for k in ("ext_vs_dual", "double_orthogonal", "double_ext")}


def test_dual_compare_on_monomial_relations():
    # quadratic monomial relations always give a Koszul presentation
    p = Presentation(QQ, ["v"], [("x", "v", "v"), ("y", "v", "v")],
                     [[(1, ("x", "y"))], [(1, ("y", "x"))], [(1, ("x", "x"))]], 6)
    assert koszul_dual_compare(p, 4, 4)["pass"]
