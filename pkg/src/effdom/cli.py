"""``effdom`` command line.

Exit codes: 0 solution / property holds / certificate valid, 1 infeasible /
property fails / certificate invalid, 2 input error, 3 forced method
inapplicable or resource-limited.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import generators as gen
from .certificates import INFEASIBLE, SOLUTION
from .ed import solve_ed, verify_ed
from .eed import solve_eed, solve_mim, verify_eed, verify_mim
from .errors import EffdomError, InputError, MethodNotApplicable
from .graph import Graph
from .hyper import (solve_exact_cover, solve_hyper_ed, solve_hyper_eed, solve_hyper_mim,
                    verify_exact_cover, verify_hyper_eed, verify_hyper_mim)
from .hypergraph import (Hypergraph, is_alpha_acyclic, is_conformal, is_helly, is_hypertree,
                         two_section)
from .io import format_instance, parse_certificate, read_instance
from .orderings import MnoResult, is_chordal, is_dually_chordal

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_METHOD = 0, 1, 2, 3

PROBLEMS = ("ed", "eed", "mim", "xc")
METHODS = ("auto", "dc", "chordal-square", "brute")
CLASSES = ("chordal", "dually-chordal", "helly", "conformal", "alpha-acyclic", "hypertree")
GEN_CLASSES = ("chordal", "dually-chordal", "hypertree", "alpha-acyclic",
               "random-graph", "random-hypergraph")


@dataclass
class RunReport:
    problem: str
    status: str
    certificate: list | None = None
    method: str = ""
    weight_check: dict | None = None  # {"sum": ..., "target": ...}
    time_ms: float = 0.0
    warnings: list = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["certificate"] is not None:
            d["certificate"] = [list(x) if isinstance(x, tuple) else x for x in d["certificate"]]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        d = dict(d)
        if d.get("certificate") is not None:
            d["certificate"] = [tuple(x) if isinstance(x, list) else x for x in d["certificate"]]
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls.from_dict(json.loads(text))

    def exit_code(self) -> int:
        return {SOLUTION: EXIT_OK, INFEASIBLE: EXIT_NO}.get(self.status, EXIT_METHOD)


def _warnings(inst) -> list:
    if isinstance(inst, Graph) and inst.duplicate_edges:
        return [f"{inst.duplicate_edges} duplicate edge(s) collapsed"]
    return []


def run_solve(problem: str, method: str, inst) -> RunReport:
    """Solve one parsed instance; raises MethodNotApplicable for forced misfits."""
    start = time.perf_counter()
    hyper = isinstance(inst, Hypergraph)
    check = None
    if problem == "xc":
        if not hyper:
            raise InputError("exact cover needs a hypergraph file")
        c = solve_exact_cover(inst, method)
        status, cert, used = c.status, list(c.C), c.method
        check = {"sum": c.covered_count, "target": c.target}
    elif problem == "ed":
        c = solve_hyper_ed(inst, method) if hyper else solve_ed(inst, method)
        status, cert, used = c.status, list(c.D), c.method
        check = {"sum": c.weight_sum, "target": c.target}
    elif problem == "eed":
        if hyper:
            c = solve_hyper_eed(inst, method)
            status, cert, used = c.status, list(c.D), c.method
            check = {"sum": c.weight_sum, "target": c.target}
        else:
            c = solve_eed(inst, method)
            status, cert, used = c.status, list(c.M), c.method
    elif problem == "mim":
        c = solve_hyper_mim(inst, method) if hyper else solve_mim(inst, method)
        status, cert, used = c.status, list(c.M), c.method
    else:
        raise InputError(f"unknown problem {problem!r}")
    elapsed = (time.perf_counter() - start) * 1000
    return RunReport(problem, status, cert if status == SOLUTION else None, used, check,
                     round(elapsed, 3), _warnings(inst))


def _print_report(rep: RunReport, as_json: bool, out=None):
    out = out or sys.stdout
    if as_json:
        print(rep.to_json(), file=out)
        return
    print(f"{rep.problem}: {rep.status} (method {rep.method}, {rep.time_ms:.1f} ms)", file=out)
    if rep.weight_check and rep.weight_check.get("sum") is not None:
        print(f"weight check: {rep.weight_check['sum']} / {rep.weight_check['target']}", file=out)
    if rep.certificate is not None:
        print("certificate: " + " ".join(f"{x[0]}-{x[1]}" if isinstance(x, tuple) else str(x)
                                         for x in rep.certificate), file=out)
    for w in rep.warnings:
        print(f"warning: {w}", file=out)


def _solve_file(args):
    problem, method, path = args
    try:
        rep = run_solve(problem, method, read_instance(path))
        d = rep.to_dict()
        code = rep.exit_code()
    except (InputError, OSError) as exc:
        d, code = {"problem": problem, "status": "input-error", "error": str(exc)}, EXIT_INPUT
    except MethodNotApplicable as exc:
        d, code = {"problem": problem, "status": "method-inapplicable", "error": str(exc)}, EXIT_METHOD
    d["instance"] = os.path.basename(path)
    return d, code


def cmd_solve(args) -> int:
    if os.path.isdir(args.input):
        files = sorted(os.path.join(args.input, f) for f in os.listdir(args.input)
                       if os.path.isfile(os.path.join(args.input, f)))
        jobs = [(args.problem, args.method, f) for f in files]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_solve_file, jobs))
        else:
            results = [_solve_file(j) for j in jobs]
        for d, _ in results:
            print(json.dumps(d, sort_keys=True))
        return max((c for _, c in results), default=EXIT_OK)
    inst = read_instance(args.input)
    try:
        rep = run_solve(args.problem, args.method, inst)
    except MethodNotApplicable as exc:
        print(f"method not applicable: {exc}", file=sys.stderr)
        return EXIT_METHOD
    _print_report(rep, args.json)
    return rep.exit_code()


def _recognize(name: str, inst):
    if name in ("chordal", "dually-chordal"):
        if not isinstance(inst, Graph):
            inst = two_section(inst)
        return (is_chordal if name == "chordal" else is_dually_chordal)(inst)
    if not isinstance(inst, Hypergraph):
        raise InputError(f"class {name} needs a hypergraph file")
    return {"helly": is_helly, "conformal": is_conformal, "alpha-acyclic": is_alpha_acyclic,
            "hypertree": is_hypertree}[name](inst)


def _witness_json(w):
    if isinstance(w, MnoResult):
        return {"sigma": list(w.sigma), "maxneighbor": {str(k): v for k, v in w.maxneighbor.items()}}
    if hasattr(w, "edges") and hasattr(w, "m"):  # join tree
        return [list(e) for e in w.edges]
    if isinstance(w, (tuple, list)):
        return [_witness_json(x) for x in w]
    return w


def cmd_recognize(args) -> int:
    inst = read_instance(args.input)
    rep = _recognize(args.cls, inst)
    witness = _witness_json(rep.witness)
    if args.json:
        print(json.dumps({"class": args.cls, "verdict": rep.verdict,
                          "witness_kind": rep.witness_kind, "witness": witness}, sort_keys=True))
    else:
        print(f"{args.cls}: {'yes' if rep.verdict else 'no'}")
        if rep.witness_kind:
            print(f"{rep.witness_kind}: {json.dumps(witness)}")
    return EXIT_OK if rep.verdict else EXIT_NO


def cmd_verify(args) -> int:
    inst = read_instance(args.input)
    hyper = isinstance(inst, Hypergraph)
    edge_cert = args.problem in ("eed", "mim") and not hyper
    with open(args.certificate, encoding="utf-8") as fh:
        cert = parse_certificate(fh.read(), edges=edge_cert)
    if args.problem == "ed":
        ok = verify_ed(two_section(inst) if hyper else inst, cert)
    elif args.problem == "eed":
        ok = verify_hyper_eed(inst, cert) if hyper else verify_eed(inst, cert)
    elif args.problem == "mim":
        ok = verify_hyper_mim(inst, cert) if hyper else verify_mim(inst, cert)
    else:
        if not hyper:
            raise InputError("exact cover needs a hypergraph file")
        ok = verify_exact_cover(inst, cert)
    print("valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_NO


def cmd_generate(args) -> int:
    n, m, seed = args.n, args.m, args.seed
    if n < 1:
        raise InputError("--n must be at least 1")
    k = m if m is not None else n
    if args.cls == "chordal":
        inst = gen.gen_chordal(n, seed)
    elif args.cls == "dually-chordal":
        inst = gen.gen_dually_chordal(n, k, seed)
    elif args.cls == "hypertree":
        inst = gen.gen_hypertree(n, k, seed)
    elif args.cls == "alpha-acyclic":
        inst = gen.gen_alpha_acyclic(n, k, seed)
    elif args.cls == "random-graph":
        inst = gen.gen_random_graph(n, args.p, seed)
    else:
        inst = gen.gen_random_hypergraph(n, k, seed)
    text = format_instance(inst, f"{args.cls} n={n} m={m} seed={seed}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="effdom", description="Efficient domination solvers and recognizers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("recognize", help="test class membership")
    r.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    r.add_argument("--json", action="store_true")
    r.add_argument("input")

    s = sub.add_parser("solve", help="solve ed, eed, mim or xc")
    s.add_argument("problem", choices=PROBLEMS)
    s.add_argument("--method", default="auto", choices=METHODS)
    s.add_argument("--json", action="store_true")
    s.add_argument("--jobs", type=int, default=1, help="workers when INPUT is a directory")
    s.add_argument("input")

    v = sub.add_parser("verify", help="check a certificate")
    v.add_argument("problem", choices=PROBLEMS)
    v.add_argument("--certificate", required=True)
    v.add_argument("input")

    g = sub.add_parser("generate", help="write a seeded random instance")
    g.add_argument("cls", metavar="class", choices=GEN_CLASSES)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, default=None, help="hyperedge count where it applies")
    g.add_argument("--p", type=float, default=0.3, help="edge probability for random-graph")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("-o", "--output")
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    handler = {"recognize": cmd_recognize, "solve": cmd_solve,
               "verify": cmd_verify, "generate": cmd_generate}[args.command]
    try:
        return handler(args)
    except (InputError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MethodNotApplicable as exc:
        print(f"method not applicable: {exc}", file=sys.stderr)
        return EXIT_METHOD
    except EffdomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
