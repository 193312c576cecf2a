"""Command-line entry point.

Subcommands::

    eval EXPR                 evaluate a DSL expression and print the report
    homology EXPR             homology of a simplicial-set expression
    hocolim DIAGRAM           hocolim of a named diagram document
    canonical-hocolim DIAGRAM EXPR
                              resolution-graded hocolim of a diagram over the
                              target given by EXPR
    check-we MAP              homology-iso verdict for a named map document
    hocored-check SCENARIO    run a reduction scenario document
    verify --suite NAME       run a named verification suite

Exit codes: 0 success / iso, 1 not-iso, 2 hypotheses-not-met, 3 budget
exceeded, 64 usage errors.  Reports are JSON with sorted keys; ``--deterministic``
suppresses the timestamp so repeated runs are byte-identical.
"""

import argparse
import datetime
import json
import sys

from . import documents as docs
from . import dsl
from . import sset as ss
from . import suites
from .errors import BudgetExceeded, DocumentError, EngineError

EXIT_OK = 0
EXIT_NOT_ISO = 1
EXIT_HYPOTHESES = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64


def _make_parser():
    p = argparse.ArgumentParser(
        prog="hocolim",
        description="exact homotopy-colimit engine for truncated "
                    "simplicial sets")
    p.add_argument("--truncation", type=int, default=3,
                   help="dimension bound N (default 3)")
    p.add_argument("--budget", type=int, default=ss.DEFAULT_BUDGET,
                   help="search budget for map enumeration")
    p.add_argument("--method", choices=("bk", "srep"), default="srep",
                   help="hocolim model to use")
    p.add_argument("--force", action="store_true",
                   help="accept non-resolution cosimplicial inputs "
                        "(taints provenance)")
    p.add_argument("--deterministic", action="store_true",
                   help="omit the timestamp so output bytes are stable")
    p.add_argument("--docs", default=None,
                   help="directory of fixture documents")
    sub = p.add_subparsers(dest="command")

    s = sub.add_parser("eval", help="evaluate a DSL expression")
    s.add_argument("expr")
    s = sub.add_parser("homology", help="homology of an expression")
    s.add_argument("expr")
    s = sub.add_parser("hocolim", help="hocolim of a named diagram")
    s.add_argument("diagram")
    s = sub.add_parser("canonical-hocolim",
                       help="resolution-graded hocolim over a target")
    s.add_argument("diagram")
    s.add_argument("target")
    s = sub.add_parser("check-we", help="homology-iso verdict for a map")
    s.add_argument("map")
    s = sub.add_parser("hocored-check", help="run a reduction scenario")
    s.add_argument("scenario")
    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", required=True)
    return p


def _report(args, payload):
    payload = dict(payload)
    payload["truncation"] = args.truncation
    payload["budget"] = args.budget
    if not args.deterministic:
        payload["timestamp"] = datetime.datetime.now(
            datetime.timezone.utc).isoformat()
    print(json.dumps(payload, sort_keys=True, indent=2, default=str))


def _context(args):
    env = None
    if args.docs is not None:
        env = docs.Environment(args.docs, truncation=args.truncation)
    return dsl.EvalContext(env=env, truncation=args.truncation,
                           budget=args.budget, force=args.force)


def _run(args):
    ctx = _context(args)
    if args.command == "eval":
        rep = dsl.evaluate(dsl.parse(args.expr), ctx)
        _report(args, rep)
        return rep.get("exit_code", EXIT_OK)
    if args.command == "homology":
        rep = dsl.evaluate(dsl.parse(f"homology({args.expr})"), ctx)
        _report(args, rep)
        return EXIT_OK
    if args.command == "hocolim":
        expr = dsl.Call("hocolim", (dsl.Ref(args.diagram),), args.method)
        rep = dsl.evaluate(expr, ctx)
        _report(args, rep)
        return EXIT_OK
    if args.command == "canonical-hocolim":
        target = dsl.parse(args.target)
        expr = dsl.Call("canonical_hocolim",
                        (dsl.Ref(args.diagram), target), args.method)
        rep = dsl.evaluate(expr, ctx)
        _report(args, rep)
        return EXIT_OK
    if args.command == "check-we":
        rep = dsl.evaluate(dsl.Call("check_we", (dsl.Ref(args.map),)), ctx)
        _report(args, rep)
        return rep["exit_code"]
    if args.command == "hocored-check":
        rep = dsl.evaluate(
            dsl.Call("hocored_check", (dsl.Ref(args.scenario),)), ctx)
        _report(args, rep)
        return rep["exit_code"]
    if args.command == "verify":
        try:
            rep = suites.run_suite(args.suite, truncation=args.truncation,
                                   budget=args.budget)
        except KeyError:
            print(f"unknown suite {args.suite!r}; known: "
                  f"{', '.join(sorted(suites.SUITES))}", file=sys.stderr)
            return EXIT_USAGE
        _report(args, rep)
        return EXIT_OK if rep["passed"] else EXIT_NOT_ISO
    return EXIT_USAGE


def main(argv=None):
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return _run(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except dsl.DslError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except DocumentError as exc:
        print(f"document error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
