import json
import os
import shutil
import subprocess
import sys

import pytest

import koszulkit
from koszulkit.cli import corpus_verify, main, run
from koszulkit.presentation import Presentation

CORPUS = os.path.join(os.path.dirname(koszulkit.__file__), "corpus")


def c(*parts):
    return os.path.join(CORPUS, *parts)


def test_check_koszul_pass():
    code, text = run(["check-koszul", c("presentations", "loop_x2.json"), "-m", "6"])
    assert code == 0
    assert json.loads(text)["summary"] == "koszul: true (certified m=6, D=8)"


def test_check_koszul_finding():
    code, text = run(["check-koszul", c("presentations", "loop_x3.json"), "-m", "6"])
    rep = json.loads(text)
    assert code == 1
    assert rep["simples"]["v"]["failing_stage"] == 2 and rep["simples"]["v"]["failing_shift"] == -3
    assert "stage 2, shift -3" in rep["summary"]


def test_quadratic_dual_reloads(tmp_path):
    out = tmp_path / "dual.json"
    assert main(["quadratic-dual", c("presentations", "square.json"), "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    q = Presentation.from_json(doc)
    assert len(q.relations) == 1 and doc["provenance"] == "quadratic_dual"


def test_field_override():
    code, text = run(["check-koszul", c("presentations", "square.json"), "--field", "Fp:101"])
    assert code == 0 and json.loads(text)["field"] == {"Fp": 101}


def test_input_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"objects": ["v"],\n "arrows": [}')
    code, text = run(["check-koszul", str(bad)])
    assert code == 2 and "bad.json:2:" in text
    noobj = tmp_path / "noobj.json"
    noobj.write_text('{"arrows": []}')
    code, text = run(["check-koszul", str(noobj)])
    assert code == 2 and "'objects'" in text
    assert run(["check-koszul", str(tmp_path / "missing.json")])[0] == 2
    assert run(["check-koszul", c("presentations", "loop_x2.json"), "-m", "-1"])[0] == 2
    assert run(["frobnicate", "x"])[0] == 2
    assert run(["quadratic-dual", c("presentations", "loop_x3.json")])[0] == 2
    assert run(["check-koszul", c("presentations", "loop_x2.json"), "--field", "Fp:4"])[0] == 2


def test_each_command_runs():
    cases = [
        (["resolve", c("presentations", "square.json"), "--object", "4", "-m", "3"], 0),
        (["ext-algebra", c("presentations", "square.json"), "-m", "3"], 0),
        (["dual-compare", c("presentations", "radsq_A2.json"), "-m", "4", "--double", "4"], 0),
        (["assoc-graded", c("algebras", "x2_minus_x3.json")], 0),
        (["check-weakly-koszul", c("algebras", "kx_x3.json")], 1),
        (["check-weakly-koszul", c("algebras", "radsq_A3.json")], 0),
        (["ar-verify", c("ar", "A2.json")], 0),
        (["ar-verify", c("ar", "kx_x2.json"), "-m", "6"], 0),
        (["tensor", c("presentations", "loop_x2.json"), "--left", c("modules", "repr_v.json"),
          "--right", c("modules", "simple_v.json")], 0),
        (["gdual", c("presentations", "loop_x2.json"), "--module", c("modules", "proj_v.json")], 0),
        (["check-koszul", "random", "--seed", "11", "-m", "3"], None),
    ]
    for argv, want in cases:
        code, text = run(argv)
        assert code in (0, 1) if want is None else code == want, (argv, text)
        rep = json.loads(text)
        assert rep["command"] == argv[0]
        assert "summary" in rep or argv[0] in ("quadratic-dual", "assoc-graded")


def test_reports_are_deterministic():
    argv = ["check-koszul", "random", "--seed", "5", "-m", "4"]
    assert run(argv) == run(argv)
    a = run(["dual-compare", c("presentations", "square.json")])[1]
    b = run(["dual-compare", c("presentations", "square.json")])[1]
    assert a == b


def test_shipped_corpus_is_green():
    rep = corpus_verify(c("jobs"))
    assert rep["jobs"] >= 15
    assert rep["counts"] == {"green": rep["jobs"], "red": 0, "missing": 0}


def test_tampered_golden_is_red(tmp_path):
    root = tmp_path / "corpus"
    shutil.copytree(CORPUS, root)
    golden = root / "jobs" / "koszul_loop_x2.golden.json"
    golden.write_text(golden.read_text().replace('"koszul": true', '"koszul": false'))
    (root / "jobs" / "dual_square.golden.json").unlink()
    rep = corpus_verify(str(root / "jobs"), threads=2)
    assert rep["counts"]["red"] == 1 and rep["counts"]["missing"] == 1
    red = next(r for r in rep["results"] if r["status"] == "red")
    assert red["job"] == "koszul_loop_x2" and red["detail"].startswith("---")
    assert run(["corpus-verify", str(root / "jobs")])[0] == 1


def test_empty_corpus(tmp_path):
    code, text = run(["corpus-verify", str(tmp_path)])
    assert code == 0 and json.loads(text)["summary"].startswith("0 jobs")


def test_explain(tmp_path):
    for argv, needle in [
        (["check-koszul", c("presentations", "loop_x3.json")], "1xv[-3]"),
        (["check-weakly-koszul", c("algebras", "kx_x3.json")], "j=1, i=1"),
        (["dual-compare", c("presentations", "square.json")], "double_ext"),
        (["ar-verify", c("ar", "A2.json")], "S1: ok"),
    ]:
        path = tmp_path / "r.json"
        path.write_text(run(argv)[1])
        code, text = run(["explain", str(path)])
        assert code == 0 and needle in text
    path.write_text('{"hello": 1}')
    assert run(["explain", str(path)])[0] == 2
    path.write_text('{"command": "check-koszul"}')
    assert run(["explain", str(path)])[0] == 2


def test_module_entry_point(tmp_path):
    out = tmp_path / "r.json"
    proc = subprocess.run([sys.executable, "-m", "koszulkit", "check-koszul", c("presentations", "loop_x3.json"),
                           "-o", str(out)], capture_output=True, text=True)
    assert proc.returncode == 1
    assert "shift -3" in proc.stdout
    assert json.loads(out.read_text())["koszul"] is False
