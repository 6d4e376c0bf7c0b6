"""The commuting square, its quadratic dual and its Ext algebra.

The dual quiver reverses every arrow.  The dual relation is the orthogonal
complement of c a - d b, and the Yoneda algebra of the simples recovers
exactly that presentation.
"""

from koszulkit import library as L
from koszulkit.dual import ext_algebra, koszul_dual_compare, quadratic_dual


def fmt(rel):
    return " + ".join(f"{c}*{''.join(q)}" for c, q in rel)


if __name__ == "__main__":
    sq = L.commuting_square()
    q = quadratic_dual(sq)
    print("square relations:", [fmt(r) for r in sq.relations])
    print("dual relations:  ", [fmt(r) for r in q.relations])
    ext = ext_algebra(sq, 3)
    print("Ext relations:   ", [fmt(r) for r in ext.relations])
    print("Ext^i(S_4, S_1):", [ext.ext_dims[("4", "1", i)] for i in range(4)])
    r = koszul_dual_compare(sq, 6, 5)
    print("comparison:", {k: r[k]["pass"] for k in ("ext_vs_dual", "double_orthogonal", "double_ext")})
