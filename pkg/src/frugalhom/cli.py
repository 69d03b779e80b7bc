"""Command-line frontend.

Decision subcommands carry their answer in the exit code so shell
pipelines can compose without parsing: 0 = yes/success, 1 = no,
2 = usage or input error, 3 = search budget exceeded.  All errors go to
standard error prefixed with "error:".
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import fileio
from .classifier import classify
from .errors import BudgetExceededError, FrugalhomError
from .gadgets import build_f, build_f0, build_f1, build_star_g
from .indicator import indicator_graph
from .polydecide import compute_core_delta1, decide_t_frugal_delta1
from .satkit import chain_from_1in3, check_exactly, lift_half, sat_to_digraph, solve, widen
from .solver import find_t_frugal, is_homomorphism, is_t_frugal

DEFAULT_BUDGET = 10**8


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _build_parser() -> _Parser:
    parser = _Parser(prog="frugalhom")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="dichotomy verdict for a target")
    p.add_argument("-H", dest="target", required=True, metavar="H.dg")
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--explain", action="store_true")

    p = sub.add_parser("solve", help="search for a t-frugal colouring")
    p.add_argument("-G", dest="instance", required=True, metavar="G.dg")
    p.add_argument("-H", dest="target", required=True, metavar="H.dg")
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--cert", metavar="out.map")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("verify", help="check a colouring certificate")
    p.add_argument("-G", dest="instance", required=True, metavar="G.dg")
    p.add_argument("-H", dest="target", required=True, metavar="H.dg")
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--cert", required=True, metavar="f.map")

    p = sub.add_parser("indicator", help="build the indicator graph of a target")
    p.add_argument("-H", dest="target", required=True, metavar="H.dg")
    p.add_argument("-o", dest="out", required=True, metavar="out.ug")

    p = sub.add_parser("gadget", help="emit a forcing gadget")
    p.add_argument("which", choices=["f0", "f1", "f"])
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("-o", dest="out", required=True, metavar="out.dg")

    p = sub.add_parser("reduce", help="compile a hardness reduction")
    rsub = p.add_subparsers(dest="route", required=True)
    r = rsub.add_parser("hstar", help="undirected instance -> edge-replacement digraph")
    r.add_argument("-G", dest="instance", required=True, metavar="G.ug")
    r.add_argument("-H", dest="target", required=True, metavar="H.dg")
    r.add_argument("-t", type=int, required=True)
    r.add_argument("-o", dest="out", required=True, metavar="out.dg")
    r.add_argument("--legend", metavar="out.txt")
    r = rsub.add_parser("sat", help="monotone SAT instance -> incidence digraph")
    r.add_argument("-S", dest="sat", required=True, metavar="S.mks")
    r.add_argument("-t", type=int, required=True)
    r.add_argument("-o", dest="out", required=True, metavar="out.dg")
    r.add_argument("--legend", metavar="out.txt")

    p = sub.add_parser("sat", help="monotone exact-count SAT toolkit")
    ssub = p.add_subparsers(dest="action", required=True)
    s = ssub.add_parser("solve", help="brute-force a satisfying assignment")
    s.add_argument("-S", dest="sat", required=True, metavar="S.mks")
    s.add_argument("-l", "--ell", dest="ell", type=int, required=True)
    s.add_argument("--cert", metavar="out.asg")
    s = ssub.add_parser("check", help="verify an assignment certificate")
    s.add_argument("-S", dest="sat", required=True, metavar="S.mks")
    s.add_argument("-l", "--ell", dest="ell", type=int, required=True)
    s.add_argument("--cert", required=True, metavar="a.asg")
    s = ssub.add_parser("widen", help="width k -> k+1 at the same exact count")
    s.add_argument("-S", dest="sat", required=True, metavar="S.mks")
    s.add_argument("-l", "--ell", dest="ell", type=int, required=True)
    s.add_argument("-o", dest="out", required=True, metavar="out.mks")
    s = ssub.add_parser("lift", help="count ell-1 of width 2ell-1 -> ell of width 2ell")
    s.add_argument("-S", dest="sat", required=True, metavar="S.mks")
    s.add_argument("-l", "--ell", dest="ell", type=int, required=True)
    s.add_argument("-o", dest="out", required=True, metavar="out.mks")
    s = ssub.add_parser("chain", help="compose transformations from a width-3 base")
    s.add_argument("-S", dest="sat", required=True, metavar="S.mks")
    s.add_argument("-l", "--ell", dest="ell", type=int, required=True)
    s.add_argument("-k", dest="k", type=int, required=True)
    s.add_argument("-o", dest="out", required=True, metavar="out.mks")

    p = sub.add_parser("core", help="core shape of a max-in-degree-1 target")
    p.add_argument("-H", dest="target", required=True, metavar="H.dg")

    p = sub.add_parser("decide", help="polynomial decision for max-in-degree-1 targets")
    p.add_argument("-G", dest="instance", required=True, metavar="G.dg")
    p.add_argument("-H", dest="target", required=True, metavar="H.dg")
    p.add_argument("-t", type=int, required=True)

    return parser


def _cmd_classify(args) -> int:
    verdict = classify(fileio.read_digraph(args.target), args.t)
    print(verdict.complexity.value)
    if args.explain:
        print(f"complexity: {verdict.complexity.value}")
        print(f"delta_minus: {verdict.delta_minus}")
        bip = verdict.hstar_bipartite
        print(f"hstar_bipartite: {'null' if bip is None else str(bip).lower()}")
        print(f"route: {verdict.route or 'null'}")
        print(f"note: {verdict.note}")
    print(verdict.note, file=sys.stderr)
    return 0


def _cmd_solve(args) -> int:
    G = fileio.read_digraph(args.instance)
    H = fileio.read_digraph(args.target)
    witness = find_t_frugal(G, H, args.t, budget=args.budget)
    if witness is None:
        return 1
    if args.cert:
        fileio.write_colouring(args.cert, witness)
    else:
        sys.stdout.write(fileio.serialize_colouring(witness))
    return 0


def _cmd_verify(args) -> int:
    G = fileio.read_digraph(args.instance)
    H = fileio.read_digraph(args.target)
    f = fileio.read_colouring(args.cert)
    if len(f) != G.n or any(not 0 <= h < H.n for h in f):
        print("error: certificate does not fit the instance/target", file=sys.stderr)
        return 1
    if is_homomorphism(G, H, f) and is_t_frugal(G, H, f, args.t):
        return 0
    return 1


def _cmd_indicator(args) -> int:
    result = indicator_graph(fileio.read_digraph(args.target))
    fileio.write_ugraph(args.out, result.graph)
    return 0


def _cmd_gadget(args) -> int:
    if args.which == "f0":
        g = build_f0(args.t, args.delta)
        fileio.write_digraph(args.out, g.graph)
        print(f"w {g.w}")
        print(f"x {g.x}")
        print(f"y {g.y}")
        print(f"z {g.z}")
        print("commons " + " ".join(str(c) for c in g.commons))
    elif args.which == "f1":
        g = build_f1(args.t, args.delta)
        fileio.write_digraph(args.out, g.graph)
        print("markers " + " ".join(str(m) for m in g.markers))
    else:
        g = build_f(args.t, args.delta)
        fileio.write_digraph(args.out, g.graph)
        print("markers " + " ".join(str(m) for m in g.markers))
        print(f"v1 {g.v1}")
        print(f"v2 {g.v2}")
        print(f"q {g.q}")
    return 0


def _cmd_reduce(args) -> int:
    if args.route == "hstar":
        G = fileio.read_ugraph(args.instance)
        H = fileio.read_digraph(args.target)
        star = build_star_g(G, args.t, H.max_in_degree())
        fileio.write_digraph(args.out, star.graph)
        if args.legend:
            lines = [f"{g} {sv}" for g, sv in enumerate(star.origin_map)]
            with open(args.legend, "w", encoding="ascii", newline="\n") as fh:
                fh.write("\n".join(lines) + "\n")
        return 0
    S = fileio.read_sat_instance(args.sat)
    graph, legend = sat_to_digraph(S, args.t)
    fileio.write_digraph(args.out, graph)
    if args.legend:
        lines = [f"var {i} {v}" for i, v in enumerate(legend.variable_vertices)]
        lines += [f"clause {j} {v}" for j, v in enumerate(legend.clause_vertices)]
        with open(args.legend, "w", encoding="ascii", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    return 0


def _cmd_sat(args) -> int:
    S = fileio.read_sat_instance(args.sat)
    if args.action == "solve":
        witness = solve(S, args.ell)
        if witness is None:
            return 1
        if args.cert:
            fileio.write_assignment(args.cert, witness)
        else:
            sys.stdout.write(fileio.serialize_assignment(witness))
        return 0
    if args.action == "check":
        a = fileio.read_assignment(args.cert)
        if len(a) != S.n:
            print("error: assignment length does not match the instance", file=sys.stderr)
            return 1
        return 0 if check_exactly(S, a, args.ell) else 1
    if args.action == "widen":
        result, _ = widen(S, args.ell)
    elif args.action == "lift":
        result, _ = lift_half(S, args.ell)
    else:
        result, _ = chain_from_1in3(S, args.ell, args.k)
    fileio.write_sat_instance(args.out, result)
    return 0


def _cmd_core(args) -> int:
    shape = compute_core_delta1(fileio.read_digraph(args.target))
    if shape.kind == "loop":
        print(f"loop {shape.core_vertices[0]}")
    elif shape.kind == "path":
        print(f"path {shape.path_order}")
    else:
        print("cycles " + " ".join(str(k) for k in shape.lengths))
    return 0


def _cmd_decide(args) -> int:
    G = fileio.read_digraph(args.instance)
    H = fileio.read_digraph(args.target)
    return 0 if decide_t_frugal_delta1(G, H, args.t) else 1


_DISPATCH = {
    "classify": _cmd_classify,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "indicator": _cmd_indicator,
    "gadget": _cmd_gadget,
    "reduce": _cmd_reduce,
    "sat": _cmd_sat,
    "core": _cmd_core,
    "decide": _cmd_decide,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (FrugalhomError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
