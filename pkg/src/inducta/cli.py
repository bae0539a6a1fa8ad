"""The inducta command line: parse graphs, dispatch the library, report
witnesses.

Exit codes: 0 = answer produced, 1 = negative answer with witness,
2 = precondition or class breach, 3 = I/O or parse error.  Machine
output (--format=json-lines) is deterministic: identical commands on
identical inputs print byte-identical records.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import berge as berge_mod
from . import classify as classify_mod
from . import decompose as decompose_mod
from . import detect as detect_mod
from . import gap as gap_mod
from . import kintree as kintree_mod
from . import oracle
from .bienstock import Cnf3, gamma_gadget, parse_dimacs_cnf, prism_reduction
from .graphs import Graph, GraphError, TooLargeError, WeightedGraph, format_graph, parse_graph
from .named import parse_named_spec
from .sgraph import find_realization, prism_sgraph


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_graph(args) -> WeightedGraph:
    if getattr(args, "named", None):
        try:
            return WeightedGraph(parse_named_spec(args.named))
        except GraphError as e:
            raise CliError(3, f"bad named graph spec: {e}")
    path = getattr(args, "input", None)
    if path is None:
        raise CliError(3, "no input graph: pass a file or --named=...")
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise CliError(3, f"cannot read {path}: {e}")
    try:
        return parse_graph(text)
    except GraphError as e:
        raise CliError(3, f"parse error in {path}: {e}")


def _emit(args, record: dict, human: str):
    if args.format == "json-lines":
        print(json.dumps(record, sort_keys=True))
    else:
        print(human)


def _oracle_bound(args) -> int:
    if args.oracle_bound is not None:
        return args.oracle_bound
    env = os.environ.get("INDUCTA_ORACLE_BOUND")
    return int(env) if env else oracle.CHI_BOUND


def cmd_invariants(args) -> int:
    wg = _load_graph(args)
    bound = _oracle_bound(args)
    rep = oracle.exact_invariants(wg, alpha_bound=max(bound, 30), chi_bound=bound)
    rec = {
        "alpha": rep.alpha,
        "omega": rep.omega,
        "theta": rep.theta,
        "chi": rep.chi,
        "alpha_witness": sorted_bits(rep.alpha_witness),
        "omega_witness": sorted_bits(rep.omega_witness),
    }
    _emit(args, rec, f"alpha={rep.alpha} omega={rep.omega} theta={rep.theta} chi={rep.chi}")
    return 0


def sorted_bits(mask: int) -> list[int]:
    from .graphs import bits

    return sorted(bits(mask))


def cmd_detect(args) -> int:
    wg = _load_graph(args)
    g = wg.graph
    if args.what == "prism":
        w = detect_mod.detect_prism_pyramid_free(g)
        if w is None:
            _emit(args, {"prism": None}, "no prism (assuming pyramid-free input)")
            return 1
        rec = {
            "prism": {
                "triangles": [list(w.triangle_a), list(w.triangle_b)],
                "paths": [list(p) for p in w.paths],
            }
        }
        _emit(args, rec, f"prism on triangles {w.triangle_a} and {w.triangle_b}")
        return 0
    if args.what == "hole-through":
        if args.x is None or args.y is None:
            raise CliError(3, "hole-through needs --x and --y")
        hole = detect_mod.hole_through_two(g, args.x, args.y)
        if hole is None:
            _emit(args, {"hole": None}, "no hole through the two vertices")
            return 1
        _emit(args, {"hole": hole}, f"hole: {hole}")
        return 0
    if args.what == "k-in-a-tree":
        if not args.terminals:
            raise CliError(3, "k-in-a-tree needs --terminals=a,b,c,...")
        terms = [int(t) for t in args.terminals.split(",")]
        try:
            res = kintree_mod.k_in_a_tree(g, terms)
        except GraphError as e:
            raise CliError(2, str(e))
        if res.has_tree:
            _emit(args, {"tree": res.tree}, f"tree: {res.tree}")
            return 0
        rec = {"certificate": res.kind}
        if res.square:
            rec["square"] = {
                "A": [sorted_bits(m) for m in res.square.a],
                "S": [sorted_bits(m) for m in res.square.s],
                "R": sorted_bits(res.square.r),
            }
        if res.cubic:
            rec["cubic"] = {
                "A": [sorted_bits(m) for m in res.cubic.a],
                "B": [sorted_bits(m) for m in res.cubic.b],
                "S": [sorted_bits(m) for m in res.cubic.s],
                "R": sorted_bits(res.cubic.r),
            }
        if res.kstruct:
            rec["kstructure"] = {"paths": res.kstruct.paths}
        if res.k4:
            rec["k4"] = {"hubs": res.k4.hubs, "paths": res.k4.paths}
        _emit(args, rec, f"no tree: {res.kind} certificate")
        return 1
    raise CliError(3, f"unknown detect target {args.what}")


def cmd_recognize(args) -> int:
    wg = _load_graph(args)
    g = wg.graph
    if args.klass == "chordless":
        got = decompose_mod.is_chordless(g)
        if got is None:
            _emit(args, {"chordless": True}, "chordless")
            return 0
        cyc, chord = got
        _emit(
            args,
            {"chordless": False, "cycle": cyc, "chord": list(chord)},
            f"not chordless: cycle {cyc} with chord {chord}",
        )
        return 1
    if args.klass == "unique-chord-free":
        res = decompose_mod.recognize_unique_chord_free(g)
        if res.member:
            leaves = [l.kind for l in res.tree.leaves()]
            _emit(args, {"member": True, "leaves": leaves}, f"member; leaves: {leaves}")
            return 0
        _emit(
            args,
            {
                "member": False,
                "cycle": res.witness_cycle,
                "chord": list(res.witness_chord),
            },
            f"not a member: cycle {res.witness_cycle} with unique chord {res.witness_chord}",
        )
        return 1
    if args.klass == "weakly-triangulated":
        got = classify_mod.is_weakly_triangulated(g)
        if got is None:
            _emit(args, {"weakly_triangulated": True}, "weakly triangulated")
            return 0
        kind, wit = got
        _emit(
            args,
            {"weakly_triangulated": False, "witness_kind": kind, "witness": wit},
            f"not weakly triangulated: long {kind} {wit}",
        )
        return 1
    raise CliError(3, f"unknown class {args.klass}")


def cmd_classify(args) -> int:
    wg = _load_graph(args)
    theorem = args.theorem.replace("-", "_")
    try:
        res = classify_mod.classify_small(wg.graph, theorem)
    except GraphError as e:
        raise CliError(2, str(e))
    rec = {"verdict": res.verdict}
    if res.witness:
        rec["witness"] = res.witness
        rec["witness_name"] = res.witness_name
    if res.complement_of is not None:
        rec["complement_of"] = res.complement_of.verdict
    _emit(args, rec, f"{res.verdict}" + (f" (witness {res.witness_name}: {res.witness})" if res.witness else ""))
    return 0 if res.in_class else 1


def cmd_color(args) -> int:
    wg = _load_graph(args)
    g = wg.graph
    try:
        if args.klass == "chordless":
            col = decompose_mod.three_color_chordless(g)
        elif args.klass == "wt":
            col = classify_mod.color_weakly_triangulated(g)
        elif args.klass == "unique-chord-free":
            chi, col = decompose_mod.chi_unique_chord_free(g)
        elif args.klass == "berge":
            col = berge_mod.color_berge(g)
        else:
            raise CliError(3, f"unknown coloring class {args.klass}")
    except (GraphError, berge_mod.OutsideClassError) as e:
        raise CliError(2, str(e))
    k = max(col) + 1 if col else 0
    _emit(args, {"colors": k, "coloring": col}, f"{k} colors: {col}")
    return 0


def cmd_gap(args) -> int:
    if args.action == "verify":
        rep = gap_mod.verify_gap_chapter()
        rows = [{"check": c.name, "passed": c.passed, "detail": c.detail} for c in rep.checks]
        if args.format == "json-lines":
            for r in rows:
                print(json.dumps(r, sort_keys=True))
            for note in rep.notes:
                print(json.dumps({"note": note}, sort_keys=True))
        else:
            for c in rep.checks:
                print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else ""))
            for note in rep.notes:
                print(f"note: {note}")
        return 0 if rep.ok() else 1
    wg = _load_graph(args)
    rep = gap_mod.gap_report(wg.graph)
    rec = {
        "theta": rep.theta,
        "alpha": rep.alpha,
        "gap": rep.gap,
        "gap_critical": rep.is_gap_critical,
        "factor_critical_components": rep.component_factor_critical,
    }
    _emit(
        args,
        rec,
        f"gap={rep.gap} (theta={rep.theta}, alpha={rep.alpha})"
        + (" gap-critical" if rep.is_gap_critical else ""),
    )
    return 0


def cmd_berge(args) -> int:
    wg = _load_graph(args)
    try:
        if args.action in ("alpha", "omega"):
            ans = berge_mod.berge_alpha_omega(wg)
            if args.action == "alpha":
                rec = {"alpha": ans.alpha, "stable_set": ans.alpha_set}
                _emit(args, rec, f"alpha={ans.alpha} witness={ans.alpha_set}")
            else:
                rec = {"omega": ans.omega, "clique": ans.omega_set}
                _emit(args, rec, f"omega={ans.omega} witness={ans.omega_set}")
            return 0
        col = berge_mod.color_berge(wg.graph)
        k = max(col) + 1 if col else 0
        _emit(args, {"colors": k, "coloring": col}, f"{k} colors: {col}")
        return 0
    except berge_mod.OutsideClassError as e:
        raise CliError(2, f"outside class: {e}")
    except (GraphError, TooLargeError) as e:
        raise CliError(2, str(e))


def cmd_gadget(args) -> int:
    if args.kind == "gamma":
        if not args.cnf:
            raise CliError(3, "gamma needs --cnf=<dimacs file>")
        try:
            text = sys.stdin.read() if args.cnf == "-" else Path(args.cnf).read_text()
        except OSError as e:
            raise CliError(3, f"cannot read {args.cnf}: {e}")
        try:
            f = parse_dimacs_cnf(text)
            gg = gamma_gadget(f)
        except GraphError as e:
            raise CliError(3, str(e))
        if args.format == "json-lines":
            rec = {
                "n": gg.graph.n,
                "a": gg.a,
                "b": gg.b,
                "edges": gg.graph.edges(),
                "labels": {str(k): v for k, v in gg.labels.items()},
            }
            print(json.dumps(rec, sort_keys=True))
        else:
            sys.stdout.write(format_graph(gg.graph))
            print(f"# a={gg.a} b={gg.b}")
            for v in range(gg.graph.n):
                print(f"# label {v} {gg.labels[v]}")
        return 0
    if args.kind == "prism":
        wg = _load_graph(args)
        if args.x is None or args.y is None:
            raise CliError(3, "prism reduction needs --x and --y")
        try:
            out, labels = prism_reduction(wg.graph, args.x, args.y)
        except GraphError as e:
            raise CliError(2, str(e))
        if args.format == "json-lines":
            print(json.dumps({"n": out.n, "edges": out.edges()}, sort_keys=True))
        else:
            sys.stdout.write(format_graph(out))
            for v, lab in sorted(labels.items()):
                print(f"# label {v} {lab}")
        return 0
    raise CliError(3, f"unknown gadget {args.kind}")


def cmd_verify(args) -> int:
    if args.what == "gap":
        args.action = "verify"
        return cmd_gap(args)
    raise CliError(3, f"unknown verification target {args.what}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["human", "json-lines"], default="human")
    common.add_argument("--oracle-bound", type=int, default=None)
    common.add_argument("--each", metavar="DIR",
                        help="run once per graph file in DIR, with independent reports")
    p = argparse.ArgumentParser(prog="inducta", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_graph_args(sp):
        sp.add_argument("input", nargs="?", help="graph file ('-' for stdin)")
        sp.add_argument("--named", help="named graph spec, e.g. petersen or c:7")

    sp = sub.add_parser("invariants", parents=[common], help="exact alpha/omega/theta/chi")
    add_graph_args(sp)
    sp.set_defaults(fn=cmd_invariants)

    sp = sub.add_parser("detect", parents=[common], help="induced-substructure detectors")
    sp.add_argument("what", choices=["prism", "k-in-a-tree", "hole-through"])
    add_graph_args(sp)
    sp.add_argument("--terminals")
    sp.add_argument("--x", type=int)
    sp.add_argument("--y", type=int)
    sp.set_defaults(fn=cmd_detect)

    sp = sub.add_parser("recognize", parents=[common], help="class recognition with witnesses")
    sp.add_argument("--class", dest="klass", required=True,
                    choices=["chordless", "unique-chord-free", "weakly-triangulated"])
    add_graph_args(sp)
    sp.set_defaults(fn=cmd_recognize)

    sp = sub.add_parser("classify", parents=[common], help="small decomposition theorems")
    sp.add_argument("--theorem", required=True,
                    choices=["p3", "paw", "hh", "claw-coclaw"])
    add_graph_args(sp)
    sp.set_defaults(fn=cmd_classify)

    sp = sub.add_parser("color", parents=[common], help="class-specific optimal colorings")
    sp.add_argument("--class", dest="klass", required=True,
                    choices=["chordless", "wt", "unique-chord-free", "berge"])
    add_graph_args(sp)
    sp.set_defaults(fn=cmd_color)

    sp = sub.add_parser("gap", parents=[common], help="gap computations and chapter checks")
    sp.add_argument("action", choices=["compute", "verify"])
    add_graph_args(sp)
    sp.set_defaults(fn=cmd_gap)

    sp = sub.add_parser("berge", parents=[common], help="2-join optimization pipeline")
    sp.add_argument("action", choices=["alpha", "omega", "color"])
    add_graph_args(sp)
    sp.add_argument("--weights", help="unused: weights ride in the graph file")
    sp.set_defaults(fn=cmd_berge)

    sp = sub.add_parser("gadget", parents=[common], help="hardness gadget generators")
    sp.add_argument("kind", choices=["gamma", "prism"])
    add_graph_args(sp)
    sp.add_argument("--cnf")
    sp.add_argument("--x", type=int)
    sp.add_argument("--y", type=int)
    sp.set_defaults(fn=cmd_gadget)

    sp = sub.add_parser("verify", parents=[common], help="verification harnesses")
    sp.add_argument("what", choices=["gap"])
    sp.set_defaults(fn=cmd_verify)

    return p


def _run_one(args) -> int:
    try:
        return args.fn(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except TooLargeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "each", None):
        base = Path(args.each)
        if not base.is_dir():
            print(f"error: {base} is not a directory", file=sys.stderr)
            return 3
        worst = 0
        for f in sorted(base.iterdir()):
            if not f.is_file():
                continue
            print(f"== {f.name}")
            args.input = str(f)
            args.named = None
            worst = max(worst, _run_one(args))
        return worst
    return _run_one(args)


if __name__ == "__main__":
    sys.exit(main())
