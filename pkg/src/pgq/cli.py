"""Command-line interface.

Subcommands:
    scan   --t-min INT --t-max INT [--format csv|json] [--out PATH]
    check  --s INT --t INT [--format json]
    bound  --t INT [--theta INT --beta INT]
    graph  verify|claw|extract-gq FILE [--s INT --t INT] [--out PATH]
    gen    rook|bipartite|kneser|w3|shrikhande [--m INT] [--out PATH]
    inc    verify|dual|collinearity FILE

Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 semantic
negative (parameters ruled out / verification failed).  stdout carries
data only, in the declared format; diagnostics go to stderr.  FILE may be
'-' for standard input.  Identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bounds import (
    BoundChoice,
    claw_bound_terms,
    neumaier_bound,
    optimal_claw_bound,
    quadratic_claw_bound,
)
from .errors import PgqError
from .graph import claw_lower_bound_check, claw_number, parse_pgqgraph, verify_srg, write_pgqgraph
from .incidence import (
    collinearity_graph,
    dual,
    extract_gq,
    gen_complete_bipartite,
    gen_kneser_6_2,
    gen_rook,
    gen_shrikhande,
    gen_symplectic_w3,
    parse_pgqinc,
    verify_axioms,
    write_pgqinc,
)
from .params import GQParams, derive_srg, identify_gq_form
from .scan import (
    RULED_OUT_NEW,
    RULED_OUT_PRIOR,
    ScanRange,
    check_one,
    emit,
    report_to_dict,
    scan,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_NEGATIVE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 instead of argparse's default 2
        raise UsageError(message)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _frac(f: Fraction) -> dict:
    # Decimal rendering is for humans only; verdicts never use it.
    return {"fraction": str(f), "decimal": f"{float(f):.6g}"}


def _build_parser() -> _Parser:
    parser = _Parser(prog="pgq", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_scan = sub.add_parser("scan", help="emit parameter sets eliminated by the four-term bound")
    p_scan.add_argument("--t-min", type=int, required=True)
    p_scan.add_argument("--t-max", type=int, required=True)
    p_scan.add_argument("--format", choices=("csv", "json"), default="csv")
    p_scan.add_argument("--out")

    p_check = sub.add_parser("check", help="feasibility report for one (s, t)")
    p_check.add_argument("--s", type=int, required=True)
    p_check.add_argument("--t", type=int, required=True)
    p_check.add_argument("--format", choices=("json",), default=None)

    p_bound = sub.add_parser("bound", help="bound values at t, or the four terms at (theta, beta)")
    p_bound.add_argument("--t", type=int, required=True)
    p_bound.add_argument("--theta", type=int, default=None)
    p_bound.add_argument("--beta", type=int, default=None)

    p_graph = sub.add_parser("graph", help="verify/analyze a pgqgraph file")
    p_graph.add_argument("action", choices=("verify", "claw", "extract-gq"))
    p_graph.add_argument("file")
    p_graph.add_argument("--s", type=int, default=None)
    p_graph.add_argument("--t", type=int, default=None)
    p_graph.add_argument("--out")

    p_gen = sub.add_parser("gen", help="write a generator graph in pgqgraph format")
    p_gen.add_argument("name", choices=("rook", "bipartite", "kneser", "w3", "shrikhande"))
    p_gen.add_argument("--m", type=int, default=None)
    p_gen.add_argument("--out")

    p_inc = sub.add_parser("inc", help="verify/transform a pgqinc file")
    p_inc.add_argument("action", choices=("verify", "dual", "collinearity"))
    p_inc.add_argument("file")

    return parser


def _cmd_scan(args) -> int:
    reports = scan(ScanRange(args.t_min, args.t_max))
    _write_output(emit(reports, args.format), args.out)
    return EXIT_OK


def _cmd_check(args) -> int:
    report = check_one(GQParams(args.s, args.t))
    if args.format == "json":
        sys.stdout.write(_json(report_to_dict(report)))
    else:
        sys.stdout.write(report.classification + "\n")
    ruled_out = report.classification in (RULED_OUT_NEW, RULED_OUT_PRIOR)
    return EXIT_NEGATIVE if ruled_out else EXIT_OK


def _cmd_bound(args) -> int:
    t = args.t
    if (args.theta is None) != (args.beta is None):
        raise UsageError("--theta and --beta must be given together")
    if args.theta is not None:
        result = claw_bound_terms(t, BoundChoice(args.theta, args.beta))
        sys.stdout.write(_json({
            "t": t,
            "theta": args.theta,
            "beta": args.beta,
            "terms": {tag: _frac(term) for tag, term in result.tagged_terms()},
            "bound": _frac(result.bound),
        }))
        return EXIT_OK
    opt = optimal_claw_bound(t)
    sys.stdout.write(_json({
        "t": t,
        "neumaier_bound": neumaier_bound(t),
        "quadratic_bound": quadratic_claw_bound(t),
        "optimal_bound": {
            "threshold": opt.threshold,
            "exact": _frac(opt.exact),
            "theta": opt.choice.theta,
            "beta": opt.choice.beta,
            "terms": {tag: _frac(term) for tag, term in opt.terms.tagged_terms()},
        },
    }))
    return EXIT_OK


def _graph_params(args, g) -> GQParams:
    if (args.s is None) != (args.t is None):
        raise UsageError("--s and --t must be given together")
    if args.s is not None:
        return GQParams(args.s, args.t)
    check = verify_srg(g)
    if not check.ok:
        raise PgqError(f"graph is not strongly regular: {check.failure}")
    p = identify_gq_form(check.params)
    if p is None:
        raise PgqError(
            f"srg{check.params.as_tuple()} is not of (P)GQ form; pass --s and --t explicitly"
        )
    return p


def _cmd_graph(args) -> int:
    g = parse_pgqgraph(_read_input(args.file))
    if args.action == "verify":
        check = verify_srg(g)
        if not check.ok:
            sys.stdout.write(_json({"srg": False, "failure": check.failure}))
            return EXIT_NEGATIVE
        q = check.params
        payload = {"srg": True, "v": q.v, "k": q.k, "lambda": q.lam, "mu": q.mu}
        if args.s is not None or args.t is not None:
            if (args.s is None) != (args.t is None):
                raise UsageError("--s and --t must be given together")
            expected = derive_srg(GQParams(args.s, args.t))
            payload["matches_params"] = q == expected
            sys.stdout.write(_json(payload))
            return EXIT_OK if q == expected else EXIT_NEGATIVE
        sys.stdout.write(_json(payload))
        return EXIT_OK
    if args.action == "claw":
        if args.s is not None or args.t is not None:
            p = _graph_params(args, g)
            check = claw_lower_bound_check(g, p)
            sys.stdout.write(_json({
                "histogram": {str(r): c for r, c in check.histogram.items()},
                "min": check.minimum,
                "max": max(check.histogram),
                "threshold": check.threshold,
                "ok": check.ok,
            }))
            return EXIT_OK if check.ok else EXIT_NEGATIVE
        claws = sorted(claw_number(g, x) for x in range(g.n))
        hist: dict[str, int] = {}
        for r in claws:
            hist[str(r)] = hist.get(str(r), 0) + 1
        sys.stdout.write(_json({"histogram": hist, "min": claws[0], "max": claws[-1]}))
        return EXIT_OK
    # extract-gq
    p = _graph_params(args, g)
    result = extract_gq(g, p)
    if not result.ok:
        print(result.reason, file=sys.stderr)
        return EXIT_NEGATIVE
    _write_output(write_pgqinc(result.structure), args.out)
    return EXIT_OK


def _cmd_gen(args) -> int:
    name = args.name
    if name in ("rook", "bipartite"):
        if args.m is None:
            raise UsageError(f"gen {name} requires --m")
        g = gen_rook(args.m) if name == "rook" else gen_complete_bipartite(args.m)
    else:
        if args.m is not None:
            raise UsageError(f"gen {name} does not take --m")
        g = {
            "kneser": gen_kneser_6_2,
            "w3": gen_symplectic_w3,
            "shrikhande": gen_shrikhande,
        }[name]()
    _write_output(write_pgqgraph(g), args.out)
    return EXIT_OK


def _cmd_inc(args) -> int:
    inc = parse_pgqinc(_read_input(args.file))
    if args.action == "verify":
        check = verify_axioms(inc)
        if check.ok:
            sys.stdout.write(_json({
                "ok": True,
                "points": inc.points,
                "lines": len(inc.lines),
                "s": inc.s,
                "t": inc.t,
            }))
            return EXIT_OK
        sys.stdout.write(_json({"ok": False, "axiom": check.axiom, "witness": check.witness}))
        return EXIT_NEGATIVE
    if args.action == "dual":
        sys.stdout.write(write_pgqinc(dual(inc)))
        return EXIT_OK
    sys.stdout.write(write_pgqgraph(collinearity_graph(inc)))
    return EXIT_OK


_HANDLERS = {
    "scan": _cmd_scan,
    "check": _cmd_check,
    "bound": _cmd_bound,
    "graph": _cmd_graph,
    "gen": _cmd_gen,
    "inc": _cmd_inc,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # argparse --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    except (PgqError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
