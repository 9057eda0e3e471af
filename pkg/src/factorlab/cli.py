"""``factorlab`` command line.

Exit status: 0 when the property holds (or a theorem check is consistent),
1 when it fails and a witness is printed, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import deficiency, properties
from .errors import FactorLabError, InvalidArgumentError
from .experiments import ExperimentConfig, run_batch
from .extremal import build_critical_sharpness, build_id_sharpness, critical_chains, id_chains
from .factors import VertexFuncs, factor_defect_witness, has_fractional_factor
from .fileio import assignment_json, dumps_report, one_based, parse_graph_file, serialize_graph, witness_json
from .graph import degree_stats
from .theorems import RESULTS, ScenarioParams, verify_implication

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class UsageError(FactorLabError):
    pass


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")


def _load(args, need_funcs: bool = True):
    graph, file_vf = parse_graph_file(_read_input(args.file))
    flags = args.a is not None or args.b is not None
    if file_vf is not None and flags:
        raise UsageError("vertex functions given both by 'v' lines and by --a/--b flags")
    if file_vf is not None:
        return graph, file_vf
    if not flags:
        if need_funcs:
            raise UsageError("no vertex functions: add 'v' lines or pass --a and --b")
        return graph, None
    if args.a is None or args.b is None:
        raise UsageError("--a and --b must be given together")
    if not 0 <= args.a <= args.b:
        raise UsageError("need 0 <= a <= b")
    return graph, VertexFuncs.constant(graph.order, args.a, args.b)


def _params(args) -> dict:
    return {
        "a": getattr(args, "a", None),
        "b": getattr(args, "b", None),
        "delta": getattr(args, "delta", None),
        "nprime": getattr(args, "np", None),
        "m": getattr(args, "m", None),
    }


def _report(command, args, verdict, witness=None, assignment=None, details=None) -> dict:
    return {
        "command": command,
        "params": _params(args),
        "verdict": verdict,
        "witness": witness,
        "assignment": assignment,
        "details": details or {},
        "timing": {},
    }


def _workers(args) -> int:
    return args.threads if args.threads else (os.cpu_count() or 1)


def cmd_factor(args):
    graph, vf = _load(args)
    ok, h = has_fractional_factor(graph, vf)
    if ok:
        return _report("factor", args, "holds", assignment=assignment_json(h))
    return _report("factor", args, "fails", witness=witness_json(factor_defect_witness(graph, vf)))


def _method(args, order):
    if args.method == "auto":
        return "both" if order <= 10 else "criterion"
    return args.method


def _cross_checked(args, graph, brute_fn, crit_fn):
    method = _method(args, graph.order)
    details = {"method": method}
    brute = crit = None
    if method in ("brute", "both"):
        brute = brute_fn()
        details["brute"] = _brute_json(brute)
    if method in ("criterion", "both"):
        crit = crit_fn()
    if brute is not None and crit is not None and brute.holds != crit.holds:
        raise FactorLabError(f"brute force ({brute.holds}) and criterion ({crit.holds}) disagree")
    holds = (crit or brute).holds
    return holds, crit, details


def _brute_json(r: properties.PropertyCheck) -> dict:
    return {
        "holds": r.holds,
        "removed_vertices": one_based(r.removed_vertices) if r.removed_vertices is not None else None,
        "removed_edges": [one_based(e) for e in r.removed_edges] if r.removed_edges is not None else None,
        "solves": r.solves,
    }


def cmd_deleted(args):
    graph, vf = _load(args)
    holds, crit, details = _cross_checked(
        args, graph,
        lambda: properties.check_deleted(graph, vf, args.m),
        lambda: deficiency.check_lemma1(graph, vf, 0, args.m, _workers(args)),
    )
    w = witness_json(crit.witness) if crit is not None else None
    return _report("deleted", args, "holds" if holds else "fails", witness=w, details=details)


def cmd_critical(args):
    graph, vf = _load(args)
    holds, crit, details = _cross_checked(
        args, graph,
        lambda: properties.check_critical_deleted(graph, vf, args.np, args.m),
        lambda: deficiency.check_lemma1(graph, vf, args.np, args.m, _workers(args)),
    )
    w = witness_json(crit.witness) if crit is not None else None
    return _report("critical-deleted", args, "holds" if holds else "fails", witness=w, details=details)


def cmd_id_deleted(args):
    graph, vf = _load(args)
    holds, crit, details = _cross_checked(
        args, graph,
        lambda: properties.check_id_deleted(graph, vf, args.m),
        lambda: deficiency.check_id_deleted(graph, vf, args.m, _workers(args)),
    )
    w = None
    if crit is not None and not crit.holds:
        w = witness_json(crit.witness)
        details["independent_set"] = one_based(crit.independent_set)
    return _report("id-deleted", args, "holds" if holds else "fails", witness=w, details=details)


def cmd_criterion(args):
    graph, vf = _load(args)
    v = deficiency.check_lemma1(graph, vf, args.np, args.m, _workers(args))
    return _report("criterion", args, "holds" if v.holds else "fails", witness=witness_json(v.witness))


def cmd_theorem(args):
    graph, vf = _load(args)
    if args.a is None and args.params_a is None:
        raise UsageError("theorem checks need --a/--b (or --band-a/--band-b with 'v' lines)")
    a = args.a if args.a is not None else args.params_a
    b = args.b if args.b is not None else args.params_b
    if b is None:
        raise UsageError("theorem checks need b")
    p = ScenarioParams(a, b, args.delta, args.np, args.m)
    method = "brute" if args.method == "auto" else args.method
    if method == "both":
        raise UsageError("theorem checks take --method brute or criterion")
    v = verify_implication(graph, vf, p, args.which, method, force=args.force)
    stats = degree_stats(graph)
    details = v.to_dict()
    details["counterexample"] = _one_based_cex(v.counterexample)
    details["min_degree"] = stats.min_degree
    details["sigma2"] = str(stats.sigma2) if not isinstance(stats.sigma2, int) else stats.sigma2
    verdict = "consistent" if v.consistent else "inconsistent"
    report = _report("theorem", args, verdict, details=details)
    report["params"].update(a=a, b=b)
    return report


def _one_based_cex(cex):
    if cex is None:
        return None
    out = dict(cex)
    if out.get("witness"):
        w = out["witness"]
        out["witness"] = {
            "S": one_based(w["S"]), "T": one_based(w["T"]), "U": one_based(w["U"]),
            "H": [one_based(e) for e in w["H"]], "slack": w["slack"],
        }
    for key in ("removed_vertices", "independent_set"):
        if out.get(key) is not None:
            out[key] = one_based(out[key])
    if out.get("removed_edges") is not None:
        out["removed_edges"] = [one_based(e) for e in out["removed_edges"]]
    return out


def cmd_extremal(args):
    if args.kind == "critical":
        c = build_critical_sharpness(args.a, args.delta, args.np, args.m, args.t)
        chains = critical_chains(c)
    else:
        c = build_id_sharpness(args.a, args.delta, args.m, args.t)
        chains = id_chains(c)
    stats = degree_stats(c.graph)
    details = {
        "kind": args.kind,
        "t": c.t,
        "order": c.graph.order,
        "edges": c.graph.size,
        "min_degree": stats.min_degree,
        "sigma2": stats.sigma2,
        "chains": [ch.to_dict() for ch in chains],
        "independent_set": one_based(c.independent_set) if c.independent_set is not None else None,
    }
    if args.out:
        comment = f"{args.kind} sharpness a={args.a} delta={args.delta} nprime={args.np} m={args.m} t={c.t}"
        Path(args.out).write_text(serialize_graph(c.graph, c.vf, [comment]))
        details["out"] = args.out
    report = _report("extremal", args, "built", witness=witness_json(c.witness), details=details)
    report["params"].update(b=c.params.b, nprime=c.params.nprime)
    return report


def cmd_experiment(args):
    if args.config:
        cfg = json.loads(_read_input(args.config))
    else:
        cfg = {}
    for key in ("seed", "trials", "n_min", "n_max", "method", "factor_sweep_max_n", "lemma_sweep_trials", "near_miss"):
        value = getattr(args, key)
        if value is not None:
            cfg[key] = value
    if args.theorem:
        cfg["theorems"] = args.theorem
    if args.params:
        cfg["params"] = [_parse_params(s) for s in args.params]
    report = run_batch(ExperimentConfig.from_dict(cfg))
    details = report.to_dict()
    timing = details.pop("timing")
    out = _report("experiment", args, "consistent" if report.inconsistent == 0 and report.disagreements == 0 else "inconsistent", details=details)
    out["params"] = {"a": None, "b": None, "delta": None, "nprime": None, "m": None}
    out["timing"].update(timing)
    return out


def _parse_params(text: str) -> dict:
    fields = text.split(",")
    if len(fields) != 5:
        raise UsageError(f"--params expects a,b,delta,nprime,m; got {text!r}")
    try:
        a, b, d, np_, m = (int(x) for x in fields)
    except ValueError:
        raise UsageError(f"--params expects integers; got {text!r}")
    return {"a": a, "b": b, "delta": d, "nprime": np_, "m": m}


def _text(report: dict) -> str:
    lines = [f"{report['command']}: {report['verdict']}"]
    w = report.get("witness")
    if w:
        lines.append(f"witness S={w['S']} T={w['T']} U={w['U']} H={w['H']} slack={w['slack']}")
    if report.get("assignment"):
        lines.extend(f"e {e['edge'][0]} {e['edge'][1]} {e['value']}" for e in report["assignment"])
    d = report.get("details") or {}
    if report["command"] == "theorem":
        for c in d["clauses"]:
            lines.append(f"  [{'ok' if c['holds'] else 'FAIL'}] {c['name']}: {c['detail']}")
        lines.append(f"conclusion ({d['conclusion']}): {d['conclusion_checked']}")
    elif report["command"] == "extremal":
        lines.append(f"t={d['t']} n={d['order']} min_degree={d['min_degree']} sigma2={d['sigma2']}")
        for ch in d["chains"]:
            lines.append(f"  {ch['name']}: {ch['lower']} {'<' if ch['lower_strict'] else '<='} {ch['value']} < {ch['upper']} -> {ch['holds']}")
    elif report["command"] == "experiment":
        for name, t in d["theorems"].items():
            lines.append(f"  {name}: trials={t['trials']} held={t['hypotheses_held']} true={t['conclusion_true']} inconsistent={t['inconsistent']} skipped={len(t['skipped'])}")
        fs, ls = d["factor_sweep"], d["lemma_sweep"]
        lines.append(f"  factor sweep: {fs['agreements']}/{fs['instances']} agree")
        lines.append(f"  lemma sweep: {ls['agreements']}/{ls['instances']} agree")
    elif "independent_set" in d:
        lines.append(f"independent set {d['independent_set']}")
    return "\n".join(lines)


def _exit_code(report: dict) -> int:
    return EXIT_OK if report["verdict"] in ("holds", "consistent", "built") else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="factorlab", description="Fractional (g,f)-factor toolkit")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--threads", type=int, default=None, help="worker processes for criterion searches")

    graph_args = argparse.ArgumentParser(add_help=False, parents=[common])
    graph_args.add_argument("file", help="fgf graph file, or - for stdin")
    graph_args.add_argument("--a", "--g", dest="a", type=int, help="constant g")
    graph_args.add_argument("--b", "--f", dest="b", type=int, help="constant f")
    graph_args.add_argument("--delta", type=int, default=0)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", parents=[graph_args], help="decide fractional (g,f)-factor existence")
    p.set_defaults(func=cmd_factor)

    methods = ("auto", "brute", "criterion", "both")
    p = sub.add_parser("deleted", parents=[graph_args], help="fractional (g,f,m)-deleted")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--method", choices=methods, default="auto")
    p.set_defaults(func=cmd_deleted)

    p = sub.add_parser("critical-deleted", parents=[graph_args], help="fractional (g,f,n',m)-critical deleted")
    p.add_argument("--np", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--method", choices=methods, default="auto")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("id-deleted", parents=[graph_args], help="fractional ID-(g,f,m)-deleted")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--method", choices=methods, default="auto")
    p.set_defaults(func=cmd_id_deleted)

    p = sub.add_parser("criterion", parents=[graph_args], help="minimum-slack deficiency witness")
    p.add_argument("--np", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.set_defaults(func=cmd_criterion)

    p = sub.add_parser("theorem", parents=[graph_args], help="check a degree-condition result on an instance")
    p.add_argument("--which", required=True, choices=sorted(RESULTS))
    p.add_argument("--np", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--band-a", dest="params_a", type=int, help="band a when g, f come from 'v' lines")
    p.add_argument("--band-b", dest="params_b", type=int, help="band b when g, f come from 'v' lines")
    p.add_argument("--method", choices=("auto", "brute", "criterion"), default="auto")
    p.add_argument("--force", action="store_true", help="check the conclusion even if hypotheses fail")
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("extremal", parents=[common], help="build a sharpness construction")
    p.add_argument("kind", choices=("critical", "id"))
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--delta", type=int, default=0)
    p.add_argument("--np", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--out", help="write the graph (with g, f lines) here")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("experiment", parents=[common], help="randomised implication and oracle sweeps")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--theorem", action="append")
    p.add_argument("--params", action="append", help="a,b,delta,nprime,m (repeatable)")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--n-min", dest="n_min", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--method", choices=("brute", "criterion"))
    p.add_argument("--near-miss", dest="near_miss", type=int)
    p.add_argument("--factor-sweep-max-n", dest="factor_sweep_max_n", type=int)
    p.add_argument("--lemma-sweep-trials", dest="lemma_sweep_trials", type=int)
    p.add_argument("--out", help="also write the JSON report here")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is not None and args.threads < 1:
        parser.error("--threads must be positive")
    start = time.perf_counter()
    try:
        report = args.func(args)
    except (FactorLabError, InvalidArgumentError) as exc:
        print(f"factorlab: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report["timing"]["seconds"] = time.perf_counter() - start
    text = dumps_report(report)
    if getattr(args, "out", None) and args.command == "experiment":
        Path(args.out).write_text(text + "\n")
    print(text if args.json else _text(report))
    return _exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
