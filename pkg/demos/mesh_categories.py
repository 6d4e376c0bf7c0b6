"""Mesh categories of two tiny translation quivers.

For the path algebra of A2 the three indecomposables line up as S2 -> P1 -> S1
with one mesh.  For the dual numbers the quiver is S -> L -> S with tau S = S.
The simple functors resolve in at most two steps, shaped by the meshes.
"""

from koszulkit.ar import TranslationQuiver, verify_ar_resolutions

A2 = {"vertices": [{"name": "S2", "projective": True, "rad": []},
                   {"name": "P1", "projective": True, "rad": ["S2"]},
                   {"name": "S1", "projective": False}],
      "arrows": [{"from": "S2", "to": "P1"}, {"from": "P1", "to": "S1"}], "tau": {"S1": "S2"}}
DUAL_NUMBERS = {"vertices": [{"name": "L", "projective": True, "rad": ["S"]}, {"name": "S", "projective": False}],
                "arrows": [{"from": "S", "to": "L"}, {"from": "L", "to": "S"}], "tau": {"S": "S"}}

if __name__ == "__main__":
    for name, doc in (("A2", A2), ("dual numbers", DUAL_NUMBERS)):
        r = verify_ar_resolutions(TranslationQuiver.from_json(doc), 6)
        print(f"{name}: pass={r['pass']}")
        for C, v in r["vertices"].items():
            print(f"  S_{C}:", " <- ".join("+".join(f"{X}[{s}]" for X, s, _ in st) for st in v["got"]))
