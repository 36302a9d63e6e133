"""Command line: ``twistedhopf {axioms,coproduct,primitives,verify}``.

Exit codes: 0 when every check passes, 1 on a verification failure, 2 on
usage errors (unknown operad, unparsable element, bad flags).
"""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial, prod

from . import __version__
from .grammar import parse_element
from .hopf import big_delta, primitive_space, reduced_big_delta
from .operads import applicable_laws, check_operad_laws, get_operad
from .perm import PermutationError
from .smod import InvalidInput, UnsupportedInput, set_partitions
from .verify import PROFILES, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _operad(name: str):
    try:
        return get_operad(name)
    except InvalidInput as exc:
        raise UsageError(str(exc)) from exc


def cmd_axioms(args) -> int:
    P = _operad(args.operad)
    reports = [check_operad_laws(P, law, args.max_n, args.seed) for law in applicable_laws(P)]
    ok = all(r.passed for r in reports)
    if args.json:
        payload = {
            "operad": P.name,
            "seed": args.seed,
            "arity_range": [1, args.max_n],
            "status": "pass" if ok else "fail",
            "laws": [r.to_json() for r in reports],
        }
        print(json.dumps(payload, indent=2))
    else:
        for r in reports:
            print(f"{r.law}: {r.status} ({r.checked} instances)")
            for ce in r.counterexamples:
                print(f"  inputs {json.dumps(ce['inputs'])}\n    lhs {ce['lhs']}\n    rhs {ce['rhs']}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_coproduct(args) -> int:
    P = _operad(args.operad)
    x = parse_element(P, args.element)
    t = reduced_big_delta(P, x) if args.reduced else big_delta(P, x)
    print(t)
    return EXIT_OK


def _pbw_lines(n_max: int) -> list[str]:
    lines = []
    for n in range(1, n_max + 1):
        total = sum(prod(factorial(len(b) - 1) for b in blocks) for blocks in set_partitions(range(1, n + 1)))
        lines.append(f"# n={n}: sum over set partitions of prod (|B|-1)! = {total} = {n}!")
    return lines


def cmd_primitives(args) -> int:
    P = _operad(args.operad)
    if args.n < 1:
        raise UsageError("arity must be at least 1")
    if args.dims_only:
        dims = [primitive_space(P, n).dimension for n in range(1, args.n + 1)]
        print(",".join(str(d) for d in dims))
        if P.name == "pois":
            print("\n".join(_pbw_lines(args.n)))
        return EXIT_OK
    space = primitive_space(P, args.n)
    for v in space.basis:
        print(v)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verify(args.profile, args.seed)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for r in report["records"]:
            lo, hi = r["arity_range"]
            print(f"{r['status']:4}  {r['name']:<32} {r['operad']:<6} n={lo}..{hi}  {r['timing']['seconds']:.2f}s")
            for ce in r["counterexamples"]:
                print(f"      inputs {json.dumps(ce['inputs'])}\n        lhs {ce['lhs']}\n        rhs {ce['rhs']}")
        print(f"overall: {report['status']}")
    return EXIT_OK if report["status"] == "pass" else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistedhopf", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", help="check the operad axioms")
    p.add_argument("operad")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("coproduct", help="print the twisted coproduct of an element")
    p.add_argument("operad")
    p.add_argument("element")
    p.add_argument("--reduced", action="store_true")
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("primitives", help="print a basis of the primitive elements in arity N")
    p.add_argument("operad")
    p.add_argument("n", type=int)
    p.add_argument("--dims-only", action="store_true", help="print dimensions for arities 1..N")
    p.set_defaults(func=cmd_primitives)

    p = sub.add_parser("verify", help="run the whole verification program")
    p.add_argument("--profile", choices=PROFILES, default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, InvalidInput, UnsupportedInput, PermutationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
