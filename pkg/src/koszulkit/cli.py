"""Command-line front end.

Every subcommand writes a JSON report (sorted keys, two-space indent) to
``-o`` or stdout.  Exit codes: 0 the certificate passed, 1 it failed (a
finding), 2 the input or usage was bad.
"""

from __future__ import annotations

import argparse
import difflib
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .presentation import Presentation, PresentationError, TruncationError
from .xla import Field

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- loading -----------------------------------------------------------------------

def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"{path}: file not found") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _stem(path):
    return os.path.splitext(os.path.basename(str(path)))[0]


def _field(args, doc=None):
    if args.field:
        try:
            return Field.from_json(args.field)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    try:
        return Field.from_json((doc or {}).get("field", "Q"))
    except ValueError as exc:
        raise InputError(f"field 'field': {exc}") from None


def _presentation(args, path=None):
    path = path or args.input
    if path == "random":
        from .library import random_quadratic
        fld = _field(args)
        p = random_quadratic(args.seed, fld, D=args.D or 4)
        return p
    doc = _read_json(path)
    try:
        return Presentation.from_json(doc, field=_field(args, doc), truncation=args.D, name=_stem(path))
    except (PresentationError, TruncationError, ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _algebra(args, path=None):
    from .filtered import FDAlgebra
    path = path or args.input
    doc = _read_json(path)
    try:
        return FDAlgebra.from_json(doc, field=_field(args, doc), name=_stem(path))
    except (PresentationError, ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _header(args, p=None):
    out = {"command": args.command, "input": "random" if args.input == "random" else os.path.basename(args.input)}
    if args.input == "random":
        out["seed"] = args.seed
    if p is not None:
        out["field"] = p.field.to_json()
    return out


def _dims_grid(table):
    return {f"{k[0]}@{k[1]}": v for k, v in sorted(table.items(), key=lambda kv: (str(kv[0][0]), kv[0][1])) if v}


def _hom_table(p, upto):
    return {f"{X}->{Y}": [p.hom_dim(X, Y, n) for n in range(upto + 1)] for X in p.objects for Y in p.objects}


# -- subcommands -------------------------------------------------------------------

def cmd_check_koszul(args):
    from .resolve import is_koszul
    p = _presentation(args)
    m = args.m if args.m is not None else 6
    r = is_koszul(p, m)
    rep = _header(args, p)
    rep.update({"m": m, "D": r["D"], "koszul": r["koszul"], "generated_01": r["generated_01"],
                "generated_01_failure": r["generated_01_failure"],
                "simples": {C: c.to_json() for C, c in r["simples"].items()}})
    if r["koszul"]:
        rep["summary"] = f"koszul: true (certified m={m}, D={r['D']})"
    else:
        C, c = next((C, c) for C, c in r["simples"].items() if not c.linear)
        if c.failing_stage is None:
            why = f"simple {C} has a partial window"
        else:
            why = f"simple {C} fails at stage {c.failing_stage}, shift {c.failing_shift}"
        rep["summary"] = f"koszul: false ({why}; certified m={m}, D={r['D']})"
    return (EXIT_PASS if r["koszul"] else EXIT_FAIL), rep


def cmd_resolve(args):
    from .gmod import module_from_json, simple
    from .resolve import minimal_resolution
    p = _presentation(args)
    m = args.m if args.m is not None else 4
    if args.module:
        doc = _read_json(args.module)
        try:
            F = module_from_json(doc, p)
        except (KeyError, PresentationError, TruncationError, ValueError) as exc:
            raise InputError(f"{args.module}: {exc}") from None
        label = os.path.basename(args.module)
    else:
        C = args.object or p.objects[0]
        if C not in p.objects:
            raise InputError(f"--object: unknown object {C!r}")
        F = simple(p, C)
        label = f"S({C})"
    res = minimal_resolution(F, m)
    rep = _header(args, p)
    rep.update({"module": label, "m": m, "D": p.D, "stages": res.table(), "pd": res.pd(),
                "certified_internal_degree": res.certified_internal_degree()})
    rep["summary"] = f"resolved {label} to stage {m} (D={p.D})"
    return EXIT_PASS, rep


def cmd_quadratic_dual(args):
    from .dual import quadratic_dual
    p = _presentation(args)
    try:
        q = quadratic_dual(p, truncation=args.D)
    except PresentationError as exc:
        raise InputError(str(exc)) from None
    rep = q.to_json()
    rep.update({"command": args.command, "input": os.path.basename(args.input),
                "hom_dims": _hom_table(q, q.D)})
    return EXIT_PASS, rep


def _ext_json(ext, m):
    objs = sorted({C for C, _, _ in ext.ext_dims})
    return {f"{C}->{D}": [ext.ext_dims[(C, D, i)] for i in range(m + 1)] for C in objs for D in objs}


def cmd_ext_algebra(args):
    from .dual import ext_algebra, yoneda_associativity
    p = _presentation(args)
    m = args.m if args.m is not None else 4
    ext = ext_algebra(p, m)
    checked, failures = yoneda_associativity(ext)
    rep = _header(args, p)
    rep.update({"m": m, "D": ext.resolutions[p.objects[0]].D, "ext_dims": _ext_json(ext, m),
                "presentation": ext.to_json(), "generated_in_degree_1": ext.generated_in_degree_1,
                "quadratic": ext.quadratic,
                "associativity": {"checked": checked, "failures": failures}})
    rep["summary"] = (f"ext algebra to degree {m}: generated in degree 1: {str(ext.generated_in_degree_1).lower()}, "
                      f"associativity failures: {failures}")
    return (EXIT_PASS if failures == 0 else EXIT_FAIL), rep


def cmd_dual_compare(args):
    from .dual import koszul_dual_compare
    p = _presentation(args)
    m = args.m if args.m is not None else 6
    r = koszul_dual_compare(p, m, args.double)
    rep = _header(args, p)
    for k in ("m", "D", "ext_vs_dual", "double_orthogonal", "double_ext", "pass"):
        rep[k] = r[k]
    rep["double_ext_degree"] = args.double if args.double is not None else m
    rep["summary"] = "dual-compare: " + ", ".join(
        f"{k} {'pass' if r[k]['pass'] else 'FAIL'}" for k in ("ext_vs_dual", "double_orthogonal", "double_ext"))
    return (EXIT_PASS if r["pass"] else EXIT_FAIL), rep


def cmd_assoc_graded(args):
    from .filtered import assoc_graded
    A = _algebra(args)
    g = assoc_graded(A)
    rep = g.to_json()
    rep.update({"command": args.command, "input": os.path.basename(args.input), "nilpotency": A.N,
                "layers": {f"{X}->{Y}": A.layer_dims(X, Y) for X in A.objects for Y in A.objects if A.dim(X, Y)}})
    return EXIT_PASS, rep


def cmd_check_weakly_koszul(args):
    from .filtered import PreconditionError, module_from_json, weakly_koszul, weakly_koszul_algebra
    A = _algebra(args)
    j_max = args.j_max if args.j_max is not None else 4
    rep = {"command": args.command, "input": os.path.basename(args.input), "field": A.field.to_json(),
           "N": A.N, "j_max": j_max, "i_max": args.i_max if args.i_max is not None else A.N, "quasi": args.quasi}
    try:
        if args.module:
            doc = _read_json(args.module)
            try:
                M = module_from_json(doc, A)
            except (KeyError, PresentationError, ValueError) as exc:
                raise InputError(f"{args.module}: {exc}") from None
            r = weakly_koszul(A, M, j_max, args.i_max, args.quasi)
            rep["module"] = os.path.basename(args.module)
            rep["modules"] = {rep["module"]: r}
        else:
            r = weakly_koszul_algebra(A, j_max, args.i_max, args.quasi)
            rep["modules"] = {f"S({C})": v for C, v in r["simples"].items()}
    except PreconditionError as exc:
        raise InputError(str(exc)) from None
    ok = all(v["weakly_koszul"] for v in rep["modules"].values())
    rep["weakly_koszul"] = ok
    if ok:
        rep["summary"] = f"weakly koszul: true (j <= {j_max})"
    else:
        name, v = next((k, v) for k, v in rep["modules"].items() if not v["weakly_koszul"])
        w = v["violation"]
        rep["summary"] = (f"weakly koszul: false ({name} at j={w['j']}, i={w['i']}: "
                          f"dims {w['lhs_dim']} vs {w['rhs_dim']})")
    return (EXIT_PASS if ok else EXIT_FAIL), rep


def cmd_ar_verify(args):
    from .ar import TranslationQuiver, verify_ar_resolutions
    doc = _read_json(args.input)
    try:
        tq = TranslationQuiver.from_json(doc, name=_stem(args.input))
    except (PresentationError, ValueError, TypeError) as exc:
        raise InputError(f"{args.input}: {exc}") from None
    m = args.m if args.m is not None else 6
    fld = _field(args, doc)
    r = verify_ar_resolutions(tq, m, fld)
    p = r["presentation"]
    rep = {"command": args.command, "input": os.path.basename(args.input), "field": fld.to_json(),
           "m": m, "D": r["D"], "pass": r["pass"], "shapes_pass": r["shapes_pass"], "koszul": r["koszul"],
           "vertices": r["vertices"], "presentation": p.to_json()}
    bad = [C for C, v in r["vertices"].items() if not v["pass"]]
    rep["summary"] = ("ar-verify: all resolution shapes match" if not bad else
                      f"ar-verify: shape mismatch at {', '.join(bad)}") + f"; koszul: {str(r['koszul']).lower()}"
    return (EXIT_PASS if r["pass"] else EXIT_FAIL), rep


def cmd_tensor(args):
    from .gmod import module_from_json, tensor, tensor_left_from_json
    p = _presentation(args)
    if not args.left or not args.right:
        raise InputError("tensor needs --left and --right module documents")
    try:
        G = tensor_left_from_json(_read_json(args.left), p)
        F = module_from_json(_read_json(args.right), p)
        dims, _ = tensor(p, G, F)
    except (KeyError, PresentationError, TruncationError, ValueError) as exc:
        raise InputError(str(exc)) from None
    rep = _header(args, p)
    rep.update({"D": p.D, "left": os.path.basename(args.left), "right": os.path.basename(args.right),
                "dims": {str(k): v for k, v in sorted(dims.items())}, "total": sum(dims.values())})
    rep["summary"] = f"tensor: total dimension {rep['total']} over degrees {min(dims, default=0)}..{max(dims, default=0)}"
    return EXIT_PASS, rep


def cmd_gdual(args):
    from .gmod import dual, module_from_json
    p = _presentation(args)
    if not args.module:
        raise InputError("gdual needs --module")
    try:
        F = module_from_json(_read_json(args.module), p)
    except (KeyError, PresentationError, TruncationError, ValueError) as exc:
        raise InputError(f"{args.module}: {exc}") from None
    DF = dual(F)
    DDF = dual(DF)
    ok = DF.validate() and DDF.dims_table() == F.dims_table()
    rep = _header(args, p)
    rep.update({"D": p.D, "module": os.path.basename(args.module), "window": [DF.lo, DF.hi],
                "dims": _dims_grid(DF.dims_table()), "double_dual_preserves_dims": ok, "pass": ok})
    rep["summary"] = f"gdual: window [{DF.lo}, {DF.hi}], D^2 preserves dims: {str(ok).lower()}"
    return (EXIT_PASS if ok else EXIT_FAIL), rep


# -- corpus and explain ----------------------------------------------------------------

def _run_job(job_path):
    """Run one job file; returns ``(name, status, detail)``."""
    base = os.path.dirname(job_path)
    name = os.path.basename(job_path)[: -len(".job.json")]
    try:
        job = _read_json(job_path)
    except InputError as exc:
        return name, "red", str(exc)
    argv = [os.path.join(base, a) if isinstance(a, str) and a.endswith(".json") else str(a)
            for a in job.get("argv", [])]
    code, text = run(argv)
    golden = os.path.join(base, name + ".golden.json")
    want = job.get("exit")
    if want is not None and code != want:
        return name, "red", f"exit {code}, expected {want}"
    if not os.path.exists(golden):
        return name, "missing", "no golden file"
    with open(golden) as fh:
        expect = fh.read()
    if expect == text:
        return name, "green", ""
    diff = "".join(difflib.unified_diff(expect.splitlines(True), text.splitlines(True),
                                        fromfile=name + ".golden.json", tofile=name + ".report"))
    return name, "red", diff


def corpus_verify(directory, threads=None):
    if not os.path.isdir(directory):
        raise InputError(f"{directory}: not a directory")
    jobs = sorted(os.path.join(directory, f) for f in os.listdir(directory) if f.endswith(".job.json"))
    threads = threads or int(os.environ.get("KOSZULKIT_THREADS", "1") or 1)
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        results = list(pool.map(_run_job, jobs))
    counts = {"green": 0, "red": 0, "missing": 0}
    for _, status, _ in results:
        counts[status] += 1
    return {"command": "corpus-verify", "jobs": len(jobs), "counts": counts,
            "results": [{"job": n, "status": s, "detail": d} for n, s, d in results],
            "summary": f"{len(jobs)} jobs: {counts['green']} green, {counts['red']} red, {counts['missing']} missing golden"}


def cmd_corpus_verify(args):
    rep = corpus_verify(args.input)
    return (EXIT_PASS if rep["counts"]["red"] == 0 else EXIT_FAIL), rep


def _table(rows, header):
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    return [fmt.format(*header).rstrip()] + [fmt.format(*map(str, r)).rstrip() for r in rows]


def explain(rep):
    """Human-readable rendering of a report."""
    if not isinstance(rep, dict) or "command" not in rep:
        raise InputError("not a koszulkit report: missing 'command'")
    cmd = rep["command"]
    lines = []
    if "summary" in rep:
        lines.append(rep["summary"])
    try:
        if cmd == "check-koszul":
            for C, c in sorted(rep["simples"].items()):
                lines.append(f"simple {C}: linear={str(c['linear']).lower()}")
                rows = [[s["stage"], " + ".join(f"{k}x{X}[{sh}]" for X, sh, k in s["summands"]) or "0",
                         "exact" if s["certified_hi"] is None else f"<= {s['certified_hi']}"]
                        for s in c["stages"]]
                lines += ["  " + ln for ln in _table(rows, ["stage", "summands (mult x object[shift])", "window"])]
            lines.append(f"generated in degrees 0,1: {str(rep['generated_01']).lower()}")
        elif cmd == "resolve":
            rows = [[s["stage"], " + ".join(f"{k}x{X}[{sh}]" for X, sh, k in s["summands"]) or "0",
                     "exact" if s["certified_hi"] is None else f"<= {s['certified_hi']}"] for s in rep["stages"]]
            lines += _table(rows, ["stage", "summands", "window"])
        elif cmd == "check-weakly-koszul":
            for name, v in sorted(rep["modules"].items()):
                w = v["violation"]
                if w:
                    lines.append(f"{name}: violation at j={w['j']}, i={w['i']}: "
                                 f"dim(rad^(i+1) P_j cap Omega^(j+1)) = {w['lhs_dim']}, "
                                 f"dim(rad^i Omega^(j+1)) = {w['rhs_dim']}")
                else:
                    lines.append(f"{name}: weakly koszul up to j={v['j_max']}")
        elif cmd == "dual-compare":
            for k in ("ext_vs_dual", "double_orthogonal", "double_ext"):
                sec = rep[k]
                lines.append(f"{k:<18} {'pass' if sec['pass'] else 'FAIL'}"
                             + ("" if sec["pass"] else f"  first discrepancy: {sec['first_discrepancy']}"))
        elif cmd == "ext-algebra":
            rows = [[k] + v for k, v in sorted(rep["ext_dims"].items())]
            lines += _table(rows, ["pair"] + [f"i={i}" for i in range(rep["m"] + 1)])
        elif cmd in ("quadratic-dual", "assoc-graded"):
            lines.append(f"objects: {', '.join(rep['objects'])}")
            lines.append(f"arrows: {', '.join(a['name'] + ': ' + a['from'] + '->' + a['to'] for a in rep['arrows'])}")
            lines.append(f"relations: {len(rep['relations'])}")
            if "hom_dims" in rep:
                rows = [[k] + v for k, v in sorted(rep["hom_dims"].items())]
                lines += _table(rows, ["pair"] + [f"n={n}" for n in range(rep["truncation"] + 1)])
        elif cmd == "ar-verify":
            for C, v in rep["vertices"].items():
                got = " | ".join(" + ".join(f"{X}[{sh}]" + (f"^{k}" if k > 1 else "") for X, sh, k in s)
                                 for s in v["got"])
                lines.append(f"{C}: {'ok' if v['pass'] else 'MISMATCH'}  {got}")
        elif cmd == "tensor":
            lines += _table([[k, v] for k, v in rep["dims"].items()], ["degree", "dim"])
        elif cmd == "gdual":
            lines += _table([[k, v] for k, v in rep["dims"].items()], ["object@degree", "dim"])
        elif cmd == "corpus-verify":
            for r in rep["results"]:
                lines.append(f"{r['status']:<8} {r['job']}")
                if r["status"] == "red" and r["detail"]:
                    lines += ["    " + ln for ln in r["detail"].splitlines()]
        else:
            raise InputError(f"unknown report command {cmd!r}")
    except (KeyError, TypeError, IndexError) as exc:
        raise InputError(f"report does not match the {cmd!r} schema: {exc}") from None
    return "\n".join(lines) + "\n"


# -- driver ------------------------------------------------------------------------

COMMANDS = {
    "check-koszul": cmd_check_koszul,
    "resolve": cmd_resolve,
    "quadratic-dual": cmd_quadratic_dual,
    "ext-algebra": cmd_ext_algebra,
    "dual-compare": cmd_dual_compare,
    "assoc-graded": cmd_assoc_graded,
    "check-weakly-koszul": cmd_check_weakly_koszul,
    "ar-verify": cmd_ar_verify,
    "tensor": cmd_tensor,
    "gdual": cmd_gdual,
    "corpus-verify": cmd_corpus_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"usage: {message}")


def _positive(s):
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"{s} is negative")
    return v


def build_parser():
    ap = _Parser(prog="koszulkit", description="Koszul certificates for graded presentations.")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    for name in list(COMMANDS) + ["explain"]:
        sp = sub.add_parser(name)
        sp.add_argument("input", help="input JSON file (a directory for corpus-verify, 'random' for a seeded presentation)")
        sp.add_argument("-m", type=_positive, default=None, help="homological degree")
        sp.add_argument("-D", type=_positive, default=None, help="internal-degree truncation")
        sp.add_argument("--field", default=None, help="Q or Fp:<p>")
        sp.add_argument("-o", "--output", default=None, help="report path (default stdout)")
        sp.add_argument("--seed", type=_positive, default=0)
        sp.add_argument("--object", default=None)
        sp.add_argument("--module", default=None)
        sp.add_argument("--left", default=None)
        sp.add_argument("--right", default=None)
        sp.add_argument("--j-max", dest="j_max", type=_positive, default=None)
        sp.add_argument("--i-max", dest="i_max", type=_positive, default=None)
        sp.add_argument("--quasi", action="store_true")
        sp.add_argument("--double", type=_positive, default=None, help="degree for the double dual comparison")
    return ap


def run(argv):
    """Run a command; returns ``(exit_code, text)``.  Text is the report, or a diagnostic on exit 2."""
    try:
        args = build_parser().parse_args(argv)
        if not args.command:
            raise InputError("usage: a subcommand is required")
        if args.command == "explain":
            return EXIT_PASS, explain(_read_json(args.input))
        code, rep = COMMANDS[args.command](args)
        return code, dumps(rep)
    except InputError as exc:
        return EXIT_INPUT, f"error: {exc}\n"
    except (PresentationError, TruncationError) as exc:
        return EXIT_INPUT, f"error: {exc}\n"


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    code, text = run(argv)
    if code == EXIT_INPUT:
        sys.stderr.write(text)
        return code
    out = None
    if "-o" in argv or "--output" in argv:
        k = argv.index("-o") if "-o" in argv else argv.index("--output")
        out = argv[k + 1] if k + 1 < len(argv) else None
    if out:
        with open(out, "w") as fh:
            fh.write(text)
        first = text.splitlines()[0] if text else ""
        sys.stdout.write((json.loads(text).get("summary", "") if text.startswith("{") else first) + "\n")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
