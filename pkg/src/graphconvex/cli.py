"""Command-line front end.

Exit codes: 0 success, 1 usage error (or a failed ``verify`` suite), 2 input
parse error, 3 exact-solver cap exceeded.  ``GRAPHCONVEX_CAP`` overrides the
default solver caps when ``--cap`` is not given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .convexity import ConvexityKind, hull, interval, iteration_trace
from .errors import InfeasibleError, ParseError, UsageError
from .graph import (FAMILIES, generate, parse_edge_list, read_edge_list, serialize_edge_list,
                    simplicial_closure, write_edge_list)
from .kernels import nd_kernel, vc_kernel
from .parameters import (dissociation_number, gp_decision_xp, gp_number, iteration_time_graph,
                         tree_iteration_time_p3)
from .reductions import (MulticoloredInstance, build_mcis_gp_gadget, build_monophonic_gp_gadget,
                         build_sat_iteration_gadget, parse_colors, parse_dimacs)
from .suites import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INFEASIBLE = 0, 1, 2, 3

PARAMS = ("interval", "hull", "ti-set", "ti-graph", "gp", "gp-decide", "diss", "tree-ti")
CAP_ENV = "GRAPHCONVEX_CAP"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graphconvex", description="Graph convexity parameters, gadgets and kernels.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="evaluate a convexity parameter on a graph")
    c.add_argument("--param", required=True, choices=PARAMS)
    c.add_argument("--convexity", choices=[k.value for k in ConvexityKind])
    c.add_argument("--graph", required=True, help="edge-list file")
    c.add_argument("--set", nargs="?", const="", default=None,
                   help="comma-separated vertex set (empty for the empty set)")
    c.add_argument("--k", type=int)
    c.add_argument("--json", action="store_true")
    c.add_argument("--cap", type=int)

    r = sub.add_parser("reduce", help="build a hardness gadget")
    r.add_argument("target", choices=("sat-ti", "clique-gp", "mcis-gp", "simplicial"))
    r.add_argument("--input", required=True)
    r.add_argument("--output", required=True)
    r.add_argument("--colors")
    r.add_argument("--x", type=int)
    r.add_argument("--y", type=int)
    r.add_argument("--k", type=int, help="clique size for clique-gp (default: the clique number)")

    v = sub.add_parser("verify", help="run a randomised verification suite")
    v.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    v.add_argument("--trials", type=int)
    v.add_argument("--seed", type=int, default=0)

    g = sub.add_parser("generate", help="write a graph from a named family")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--output")

    k = sub.add_parser("kernel", help="kernelize 'gp_p3(G) >= k'")
    k.add_argument("method", choices=("nd", "vc"))
    k.add_argument("--graph", required=True)
    k.add_argument("--k", type=int, required=True)
    k.add_argument("--output")
    k.add_argument("--json", action="store_true")
    return p


def _read_text(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str):
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _parse_set(text: str | None) -> list[int]:
    if text is None or not text.strip():
        return []
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"--set: expected comma-separated integers, got {text!r}") from None


def _cap(args) -> int | None:
    if args.cap is not None:
        return args.cap
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{CAP_ENV} must be an integer, got {env!r}") from None
    return None


def cmd_compute(args) -> dict:
    g = _load_graph(args.graph)
    kind = args.convexity
    if args.param in ("diss", "tree-ti"):
        kind = kind or "p3"
    elif kind is None:
        raise UsageError(f"--convexity is required for --param {args.param}")
    seed = _parse_set(args.set)
    if args.param in ("interval", "hull", "ti-set") and args.set is None:
        raise UsageError(f"--set is required for --param {args.param}")
    cap = _cap(args)
    start = time.perf_counter()
    if args.param == "interval":
        s = sorted(interval(kind, g, seed))
        value, witness = len(s), s
    elif args.param == "hull":
        s = sorted(hull(kind, g, seed))
        value, witness = len(s), s
    elif args.param == "ti-set":
        value, witness = iteration_trace(kind, g, seed).steps, sorted(seed)
    elif args.param == "ti-graph":
        rep = iteration_time_graph(kind, g, cap=cap)
        value, witness = rep.value, sorted(rep.witness)
    elif args.param == "gp":
        rep = gp_number(kind, g, cap=cap)
        value, witness = rep.value, sorted(rep.witness)
    elif args.param == "gp-decide":
        if args.k is None:
            raise UsageError("--k is required for --param gp-decide")
        dec = gp_decision_xp(kind, g, args.k)
        value, witness = dec.answer, sorted(dec.witness or [])
    elif args.param == "diss":
        rep = dissociation_number(g, cap=cap)
        value, witness = rep.value, sorted(rep.witness)
    else:
        value, witness = tree_iteration_time_p3(g), []
    return {
        "command": "compute",
        "parameter": args.param,
        "convexity": kind,
        "value": value,
        "witness": witness,
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
        "status": "ok",
    }


def _print_record(rec: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(rec))
        return
    width = max(map(len, rec))
    for key, val in rec.items():
        if isinstance(val, list):
            val = "{" + ", ".join(map(str, val)) + "}"
        print(f"{key:<{width}}  {val}")


def cmd_reduce(args) -> None:
    text = _read_text(args.input)
    if args.target == "sat-ti":
        gadget = build_sat_iteration_gadget(parse_dimacs(text))
        out = gadget.graph
    elif args.target == "clique-gp":
        gadget = build_monophonic_gp_gadget(parse_edge_list(text), args.k)
        out = gadget.graph
    elif args.target == "mcis-gp":
        if not args.colors:
            raise UsageError("reduce mcis-gp requires --colors")
        g = parse_edge_list(text)
        color, k = parse_colors(_read_text(args.colors), g.n)
        gadget = build_mcis_gp_gadget(MulticoloredInstance(g, color, k))
        out = gadget.graph
    else:
        if args.x is None or args.y is None:
            raise UsageError("reduce simplicial requires --x and --y")
        h = parse_edge_list(text)
        out = simplicial_closure(h, args.x, args.y)
        gadget = None
    with open(args.output, "w") as fh:
        fh.write(serialize_edge_list(out))
    print(f"wrote {args.output}: n={out.n} m={out.m}")
    if gadget is not None:
        print(f"target {gadget.target}")


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        res = run_suite(name, args.trials, args.seed)
        for line in res.lines():
            print(line)
        if not res.checks:
            print(f"[PASS] {name}: no trials run")
        ok &= res.ok
    return EXIT_OK if ok else EXIT_USAGE


def cmd_generate(args) -> None:
    g = generate(args.family, args.n, args.p, args.seed)
    if args.output:
        write_edge_list(g, args.output)
    else:
        sys.stdout.write(serialize_edge_list(g))


def cmd_kernel(args) -> None:
    g = _load_graph(args.graph)
    out = (nd_kernel if args.method == "nd" else vc_kernel)(g, args.k)
    rec = {
        "command": f"kernel {args.method}",
        "k": out.k,
        "decided": out.decided,
        "reason": out.reason,
        "kernel_vertices": None if out.graph is None else out.graph.n,
        "bound": out.bound,
        "origin": list(out.origin),
    }
    if out.graph is not None and args.output:
        write_edge_list(out.graph, args.output)
    _print_record(rec, args.json)


def main(argv=None) -> int:
    parser = build_parser()
    as_json = False
    try:
        args = parser.parse_args(argv)
        as_json = getattr(args, "json", False)
        if args.command == "compute":
            _print_record(cmd_compute(args), as_json)
        elif args.command == "reduce":
            cmd_reduce(args)
        elif args.command == "verify":
            return cmd_verify(args)
        elif args.command == "generate":
            cmd_generate(args)
        else:
            cmd_kernel(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InfeasibleError as exc:
        if as_json:
            print(json.dumps({"command": args.command, "parameter": getattr(args, "param", None),
                              "convexity": getattr(args, "convexity", None), "value": None,
                              "witness": [], "elapsed_ms": None, "status": "infeasible"}))
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
