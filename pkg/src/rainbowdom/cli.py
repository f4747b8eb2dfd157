"""Command-line front end.

Exit codes: 0 when everything verified/valid, 1 on disagreement, invalid
input data or a domain error, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .errors import RainbowError
from .formulas import (
    construct_c14, gamma_r2_c13, gamma_r2_c14, gamma_r2_p5kk, gamma_r2_pn2,
)
from .graphs import make_circulant, parse_graph_spec, to_dot
from .rdf import beta_audit, format_assignment, parse_assignment, validate_krdf
from .solvers import (
    SearchLimits, solve_branch_bound, solve_bruteforce, solve_transfer_dp_graph,
)


def _emit(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def cmd_formula(args, out):
    if args.which == "c14":
        _emit(gamma_r2_c14(args.n).to_dict(), out)
    elif args.which == "c13":
        _emit({"n": args.n, "value": gamma_r2_c13(args.n)}, out)
    elif args.which == "pn2":
        _emit({"n": args.n, "value": gamma_r2_pn2(args.n)}, out)
    else:
        # for P(5k,k) the parameter is k
        _emit({"k": args.n, **gamma_r2_p5kk(args.n).to_dict()}, out)
    return 0


def cmd_construct(args, out):
    f = construct_c14(args.n)
    g = make_circulant(args.n, [1, 4])
    if args.format == "pattern":
        out.write(format_assignment(f) + "\n")
    elif args.format == "dot":
        out.write(to_dot(g, f))
    else:
        rep = validate_krdf(g, f)
        _emit({"n": args.n, "assignment": format_assignment(f), "weight": f.weight(),
               "valid": rep.valid, "formula": gamma_r2_c14(args.n).value}, out)
    return 0


def cmd_validate(args, out):
    g = parse_graph_spec(args.graph)
    f = parse_assignment(args.assignment, args.k)
    rep = validate_krdf(g, f)
    _emit({"graph": g.spec(), "weight": f.weight(), **rep.to_dict()}, out)
    return 0 if rep.valid else 1


def cmd_audit(args, out):
    g = parse_graph_spec(args.graph)
    f = parse_assignment(args.assignment, 2)
    rep = validate_krdf(g, f)
    audit = beta_audit(g, f)
    _emit({"valid": rep.valid, **audit.to_dict()}, out)
    return 0 if rep.valid and audit.identity_holds else 1


def _limits(args):
    return SearchLimits(max_nodes=args.max_nodes, max_seconds=args.max_seconds)


def cmd_solve(args, out):
    g = parse_graph_spec(args.graph)
    if args.method == "brute":
        res = solve_bruteforce(g, args.k, allow_large=args.allow_large)
    elif args.method == "bb":
        res = solve_branch_bound(g, args.k, _limits(args))
    else:
        res = solve_transfer_dp_graph(g, args.k)
    _emit({"graph": g.spec(), **res.to_dict()}, out)
    return 0 if res.exact else 1


def cmd_verify(args, out):
    oracles = harness.parse_oracles(args.oracles)
    rows = harness.verify_range(args.family, args.lo, args.hi, oracles)
    text = harness.rows_to_csv(rows) if args.format == "csv" else harness.rows_to_json(rows) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0 if harness.all_agree(rows) else 1


def cmd_beta_report(args, out):
    rep = harness.beta_report(args.n)
    _emit(rep, out)
    return 0 if harness.beta_report_ok(rep) else 1


def cmd_adjudicate(args, out):
    rep = harness.adjudicate_p10_2(SearchLimits(max_nodes=args.max_nodes, max_seconds=args.max_seconds))
    _emit(rep, out)
    return 0 if rep["exact"] and rep["witness_valid"] else 1


def cmd_bench(args, out):
    _emit(harness.bench(args.family, args.hi, args.lo), out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="rainbowdom", description="2-rainbow domination on circulant and generalized Petersen graphs")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("formula", help="closed-form value or bound")
    s.add_argument("which", choices=["c14", "c13", "pn2", "p5kk"])
    s.add_argument("--n", type=int, required=True, help="vertex parameter (k for p5kk)")
    s.set_defaults(func=cmd_formula)

    s = sub.add_parser("construct", help="explicit labelling of C(n;{1,4})")
    s.add_argument("family", choices=["c14"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["pattern", "json", "dot"], default="json")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("validate", help="check the rainbow domination condition")
    s.add_argument("--graph", required=True)
    s.add_argument("--assignment", required=True)
    s.add_argument("--k", type=int, default=2)
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("audit", help="class counts and beta for a 2-colour assignment")
    s.add_argument("--graph", required=True)
    s.add_argument("--assignment", required=True)
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("solve", help="exact optimum")
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--method", choices=["brute", "bb", "dp"], default="bb")
    s.add_argument("--allow-large", action="store_true", help="lift the brute-force size guard")
    s.add_argument("--max-nodes", type=int)
    s.add_argument("--max-seconds", type=float)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="cross-check formula, construction and solvers over a range")
    s.add_argument("--family", required=True)
    s.add_argument("--from", dest="lo", type=int, required=True)
    s.add_argument("--to", dest="hi", type=int, required=True)
    s.add_argument("--oracles", default=",".join(harness.ORACLES))
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("--output", help="write the report here instead of stdout")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("beta-report", help="beta over every optimum of C(n;{1,4})")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_beta_report)

    s = sub.add_parser("adjudicate-p10-2", help="exact value of P(10,2) against both published values")
    s.add_argument("--max-nodes", type=int)
    s.add_argument("--max-seconds", type=float, default=1800.0)
    s.set_defaults(func=cmd_adjudicate)

    s = sub.add_parser("bench", help="transfer DP timing")
    s.add_argument("--family", choices=list(harness.FAMILIES), default="c14")
    s.add_argument("--from", dest="lo", type=int)
    s.add_argument("--to", dest="hi", type=int, required=True)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except RainbowError as e:
        _emit(e.to_dict(), out)
        return 1


if __name__ == "__main__":
    sys.exit(main())
