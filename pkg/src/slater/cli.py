"""Command-line interface.

Exit codes: 0 success, 1 counterexample found by an audit, 2 usage or
input error.  Graph arguments are file paths (graph6 or ``n m`` edge
list) or ``-`` for standard input.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys
from pathlib import Path

from . import __version__
from .audits import SUITES, run_suite
from .domination import Variant, brute_force_domination, domination_number
from .formats import read_graph, to_graph6
from .generators import (
    family_clique_plus_isolated,
    family_gstar,
    family_outerplanar_extremal,
    gadget_from_cnf,
    parse_dimacs,
    random_cactus,
    random_graph,
    random_maximal_outerplanar,
    random_outerplanar,
    random_tree,
)
from .graph import Graph, InputError, bits
from .greedy import decide_slater_gap
from .hereditary import is_forbidden_free
from .slater import slater_report
from .sparse import RationalPair, is_member, parse_rational


class UsageError(Exception):
    pass


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None


def _load_graph(source: str) -> Graph:
    return read_graph(_read_text(source))


def _emit(args, command: str, inputs: dict, results: dict, counterexamples=None, seed=None) -> None:
    if args.json:
        report = {
            "command": command,
            "inputs": inputs,
            "results": results,
            "counterexamples": counterexamples or [],
            "seed": seed,
            "version": __version__,
        }
        print(json.dumps(report, sort_keys=True))
        return
    for key, value in results.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        print(f"{key}: {value}")


def cmd_slater(args) -> int:
    g = _load_graph(args.graph)
    _emit(args, "slater", {"graph6": to_graph6(g)}, slater_report(g).as_dict())
    return 0


def cmd_dom(args) -> int:
    g = _load_graph(args.graph)
    solve = brute_force_domination if args.oracle else domination_number
    result = solve(g, Variant(args.variant))
    if result is None:
        results = {"variant": args.variant, "value": None, "witness": None}
    else:
        results = result.as_dict()
    _emit(args, "dom", {"graph6": to_graph6(g), "variant": args.variant,
                        "method": "oracle" if args.oracle else "exact"}, results)
    return 0


def cmd_decide(args) -> int:
    g = _load_graph(args.graph)
    _emit(args, "decide", {"graph6": to_graph6(g)}, decide_slater_gap(g).as_dict())
    return 0


def cmd_member(args) -> int:
    g = _load_graph(args.graph)
    params = RationalPair(parse_rational(args.alpha), parse_rational(args.beta))
    verdict = is_member(g, params)
    _emit(args, "member", {"graph6": to_graph6(g), "alpha": str(params.alpha), "beta": str(params.beta)},
          verdict.as_dict())
    return 0


def cmd_recognize(args) -> int:
    g = _load_graph(args.graph)
    free, witness = is_forbidden_free(g)
    _emit(args, "recognize", {"graph6": to_graph6(g)},
          {"forbidden_free": free, "witness": None if witness is None else list(bits(witness))})
    return 0


def cmd_reduce(args) -> int:
    gadget = gadget_from_cnf(parse_dimacs(_read_text(args.cnf)))
    if args.json:
        _emit(args, "reduce", {"cnf": args.cnf}, {"graph6": to_graph6(gadget.graph), **gadget.metadata()})
    else:
        print(to_graph6(gadget.graph))
        print(json.dumps(gadget.metadata(), sort_keys=True), file=sys.stderr)
    return 0


GEN_FAMILIES = {
    "clique-plus-isolated": lambda k, seed: (family_clique_plus_isolated(k), None),
    "gstar": lambda k, seed: (family_gstar(k), None),
    "outerplanar-extremal": lambda k, seed: family_outerplanar_extremal(k),
    "random-tree": lambda k, seed: (random_tree(k, seed), None),
    "random-cactus": lambda k, seed: (random_cactus(k, seed), None),
    "random-graph": lambda k, seed: (random_graph(k, seed), None),
    "maximal-outerplanar": lambda k, seed: random_maximal_outerplanar(k, seed),
    "random-outerplanar": lambda k, seed: random_outerplanar(k, seed, min_slater=2),
}


def cmd_gen(args) -> int:
    g, emb = GEN_FAMILIES[args.family](args.param, args.seed)
    print(to_graph6(g))
    if args.embedding:
        if emb is None:
            raise UsageError(f"family {args.family} has no embedding")
        Path(args.embedding).write_text(emb.to_text(g.n))
    return 0


def cmd_audit(args) -> int:
    func = SUITES[args.suite]
    accepted = inspect.signature(func).parameters
    kwargs = {}
    for name, value in (("seed", args.seed), ("trials", args.trials), ("max_n", args.max_n)):
        if value is None:
            continue
        if name not in accepted:
            raise UsageError(f"suite {args.suite} does not take --{name.replace('_', '-')}")
        kwargs[name] = value
    report = run_suite(args.suite, **kwargs)
    if args.json:
        _emit(args, "audit", {"suite": args.suite, **kwargs}, report.as_dict(),
              counterexamples=report.counterexamples, seed=kwargs.get("seed"))
    else:
        status = "ok" if report.ok else "COUNTEREXAMPLE"
        print(f"{args.suite}: {status} checked={report.checked} "
              f"counterexamples={len(report.counterexamples)} findings={len(report.findings)} "
              f"seconds={report.seconds:.1f}")
        for item in report.counterexamples[:20]:
            print(f"counterexample: {json.dumps(item, sort_keys=True)}")
        for item in report.findings:
            print(f"finding: {json.dumps(item, sort_keys=True)}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    parser = argparse.ArgumentParser(prog="slater", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("slater", parents=[common], help="Slater-type lower bounds")
    p.add_argument("graph")
    p.set_defaults(func=cmd_slater)

    p = sub.add_parser("dom", parents=[common], help="exact domination number with witness")
    p.add_argument("graph")
    p.add_argument("--variant", choices=["plain", "total", "paired"], default="plain")
    method = p.add_mutually_exclusive_group()
    method.add_argument("--exact", action="store_true", help="branch and bound (default)")
    method.add_argument("--oracle", action="store_true", help="subset enumeration, n <= 24")
    p.set_defaults(func=cmd_dom)

    p = sub.add_parser("decide", parents=[common], help="greedy Slater-gap decision")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("member", parents=[common], help="membership in G(alpha, beta)")
    p.add_argument("graph")
    p.add_argument("--alpha", required=True, help="exact rational p/q")
    p.add_argument("--beta", required=True, help="exact rational p/q")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("audit", parents=[common], help="run a named invariant suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("gen", parents=[common], help="emit a generated graph as graph6")
    p.add_argument("family", choices=sorted(GEN_FAMILIES))
    p.add_argument("param", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--embedding", help="write the outerplanar embedding to this file")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", parents=[common], help="3-SAT gadget from a DIMACS CNF file")
    p.add_argument("cnf")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("recognize", parents=[common], help="forbidden induced subgraph test")
    p.add_argument("graph")
    p.set_defaults(func=cmd_recognize)
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, UsageError) as exc:
        print(f"slater: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
