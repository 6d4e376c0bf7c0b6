"""Radical filtrations of small algebras.

k[x]/x^2 is weakly Koszul and so is anything presented by x^2 - x^3 (the
same algebra).  k[x]/x^3 is not: the first syzygy of the simple meets the
square of the radical in a line that the radical of the syzygy misses.
"""

from koszulkit import library as L
from koszulkit.filtered import assoc_graded, weak_to_koszul_algebra, weakly_koszul


if __name__ == "__main__":
    for A in (L.truncated_polynomial(2), L.inhomogeneous_example(), L.truncated_polynomial(3)):
        r = weakly_koszul(A, A.simple("v"))
        print(f"{A.name}: layers {A.layer_dims('v', 'v')}, weakly koszul {r['weakly_koszul']}", end="")
        print("" if r["weakly_koszul"] else f", violation {r['violation']}")
    g = assoc_graded(L.inhomogeneous_example())
    print("associated graded of x^2 - x^3 has relations", [[q for _, q in r] for r in g.relations])
    r = weak_to_koszul_algebra(L.truncated_polynomial(2), 6)
    print("k[x]/x^2: associated graded koszul", r["assoc_graded_koszul"], "| G(S) linear", r["G_simples_linear"])
