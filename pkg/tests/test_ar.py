import pytest

from koszulkit.ar import TranslationQuiver, mesh_presentation, verify_ar_resolutions
from koszulkit.dual import quadratic_dual
from koszulkit.presentation import PresentationError

A2 = {"vertices": [{"name": "S2", "projective": True, "rad": []},
                   {"name": "P1", "projective": True, "rad": ["S2"]},
                   {"name": "S1", "projective": False}],
      "arrows": [{"from": "S2", "to": "P1"}, {"from": "P1", "to": "S1"}],
      "tau": {"S1": "S2"}}

DUAL_NUMBERS = {"vertices": [{"name": "L", "projective": True, "rad": ["S"]}, {"name": "S", "projective": False}],
                "arrows": [{"from": "S", "to": "L"}, {"from": "L", "to": "S"}],
                "tau": {"S": "S"}}


def renamed(doc, suffix):
    r = lambda v: v + suffix
    return {"vertices": [dict(v, name=r(v["name"]), rad=[r(x) for x in v.get("rad", [])]) for v in doc["vertices"]],
            "arrows": [dict(a, **{"from": r(a["from"]), "to": r(a["to"])}) for a in doc["arrows"]],
            "tau": {r(k): r(v) for k, v in doc["tau"].items()}}


def union(a, b):
    return {"vertices": a["vertices"] + b["vertices"], "arrows": a["arrows"] + b["arrows"],
            "tau": dict(a["tau"], **b["tau"])}


def test_a2_mesh_presentation(field):
    p = mesh_presentation(TranslationQuiver.from_json(A2), field)
    assert p.objects == ["S2", "P1", "S1"]
    assert p.relations == [[(field.one, ("P1->S1", "S2->P1"))]]
    assert p.hom_dim("S2", "S1", 2) == 0
    assert p.is_quadratic() and p.is_finite()


def test_a2_resolution_shapes(field):
    r = verify_ar_resolutions(TranslationQuiver.from_json(A2), 6, field)
    assert r["pass"]
    assert r["vertices"]["S1"]["got"] == [[["S1", 0, 1]], [["P1", -1, 1]], [["S2", -2, 1]]]
    assert r["vertices"]["P1"]["got"] == [[["P1", 0, 1]], [["S2", -1, 1]]]
    assert r["vertices"]["S2"]["length"] == 0


def test_dual_numbers(field):
    tq = TranslationQuiver.from_json(DUAL_NUMBERS)
    p = mesh_presentation(tq, field)
    assert p.hom_dim("L", "L", 2) == 1          # projective mesh is open
    assert p.hom_dim("S", "S", 2) == 0
    r = verify_ar_resolutions(tq, 6, field)
    assert r["pass"] and r["koszul"]


def test_semisimple():
    tq = TranslationQuiver.from_json({"vertices": [{"name": "A", "projective": True},
                                                   {"name": "B", "projective": True}], "arrows": [], "tau": {}})
    p = mesh_presentation(tq)
    assert p.arrows == [] and p.relations == []
    r = verify_ar_resolutions(tq, 3)
    assert r["pass"] and all(v["length"] == 0 for v in r["vertices"].values())


def test_mesh_is_quadratic_so_dual_applies():
    q = quadratic_dual(mesh_presentation(TranslationQuiver.from_json(A2)))
    assert q.hom_dim("S1", "S2", 2) == 1


def test_components_are_independent(field):
    doc = union(renamed(A2, "_a"), renamed(DUAL_NUMBERS, "_b"))
    tq = TranslationQuiver.from_json(doc)
    p = mesh_presentation(tq, field)
    left = [v for v in p.objects if v.endswith("_a")]
    right = [v for v in p.objects if v.endswith("_b")]
    for X in left:
        for Y in right:
            for n in range(p.D + 1):
                assert p.hom_dim(X, Y, n) == 0 and p.hom_dim(Y, X, n) == 0
    assert verify_ar_resolutions(tq, 4, field)["pass"]


def test_multiplicity_gives_parallel_arrows():
    doc = {"vertices": [{"name": "P", "projective": True, "rad": ["Q", "Q"]},
                        {"name": "Q", "projective": True, "rad": []},
                        {"name": "C", "projective": False}],
           "arrows": [{"from": "Q", "to": "P", "mult": 2}, {"from": "P", "to": "C", "mult": 2}],
           "tau": {"C": "Q"}}
    p = mesh_presentation(TranslationQuiver.from_json(doc))
    names = sorted(a.name for a in p.arrows)
    assert names == ["P->C#0", "P->C#1", "Q->P#0", "Q->P#1"]
    assert len(p.relations) == 1 and len(p.relations[0]) == 2


def test_validation():
    bad_tau = union(A2, {"vertices": [], "arrows": [], "tau": {"P1": "S2"}})
    with pytest.raises(PresentationError, match="projective"):
        TranslationQuiver.from_json(bad_tau)
    missing = dict(A2, tau={})
    with pytest.raises(PresentationError, match="missing"):
        TranslationQuiver.from_json(missing)
    broken = dict(A2, arrows=[{"from": "S2", "to": "P1"}, {"from": "P1", "to": "S1", "mult": 2}])
    with pytest.raises(PresentationError, match="inconsistent"):
        TranslationQuiver.from_json(broken)


def test_round_trip():
    tq = TranslationQuiver.from_json(A2)
    assert TranslationQuiver.from_json(tq.to_json()).to_json() == tq.to_json()
