"""Linear and non-linear resolutions on a single loop.

With x^2 = 0 the simple functor has a linear resolution (every syzygy is
generated one degree higher than the last).  With x^3 = 0 the second
syzygy jumps by two degrees and the certificate says where.
"""

from koszulkit import library as L
from koszulkit.gmod import simple
from koszulkit.resolve import is_koszul, minimal_resolution


def show(p, m=5):
    res = minimal_resolution(simple(p, "v"), m)
    print(f"{p.name}: generator degrees", [st.gens[0][1] for st in res.stages])
    r = is_koszul(p, m)
    cert = r["simples"]["v"]
    if r["koszul"]:
        print(f"  koszul up to stage {m} (D={r['D']})")
    else:
        print(f"  not linear: stage {cert.failing_stage} has shift {cert.failing_shift}, "
              f"expected {cert.expected_shift}")


if __name__ == "__main__":
    show(L.loop(2))
    show(L.loop(3))
