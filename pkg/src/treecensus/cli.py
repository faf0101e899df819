"""Command line interface.

One binary with subcommands; all configuration is by flags, never files or
environment variables, so identical invocations produce identical bytes.
Exit codes: 0 success, 1 verification or invariant failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census, codec, construct, partitions
from .bigraph import to_dot
from .checks import run_verification
from .errors import BudgetExceeded


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not a positive integer")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma list of integers: {text}")


def _tree_json(tree, code=None) -> str:
    payload = {
        "a_size": tree.a_size,
        "b_size": tree.b_size,
        "edges": [list(e) for e in tree.edges],
    }
    if code is not None:
        payload["code"] = code.to_text()
    return json.dumps(payload)


def _cmd_partitions(args) -> int:
    count = partitions.count_partitions(args.m, args.k)
    print(count)
    if args.list:
        for p in partitions.enumerate_partitions(args.m, args.k):
            print(p)
    return 0


def _cmd_construct(args) -> int:
    tree = construct.construct_tree(args.s, args.t)
    if args.format == "dot":
        sys.stdout.write(to_dot(tree))
    else:
        print(_tree_json(tree))
    return 0


def _cmd_census(args) -> int:
    if args.max_n < 4:
        print("census requires --max-n >= 4", file=sys.stderr)
        return 2
    reports = census.census_table(args.max_n, budget=args.budget,
                                  jobs=args.jobs)
    for r in reports:
        if not r.sandwich_ok():
            print(f"invariant violation in row ({r.a},{r.b}): "
                  f"lower {r.lower}, exact {r.exact}, uppers "
                  f"({r.upper_thm26}, {r.upper_lemma25}), labeled {r.scoins}",
                  file=sys.stderr)
            return 1
    text = census.to_csv(reports) if args.format == "csv" \
        else census.to_json(reports)
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    if args.max_n < 4:
        print("verify requires --max-n >= 4", file=sys.stderr)
        return 2
    results = run_verification(args.max_n)
    failed = False
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        print(f"{mark} {r.name}: {r.detail}")
        failed = failed or not r.passed
    print(f"{sum(r.passed for r in results)}/{len(results)} families passed")
    return 1 if failed else 0


def _cmd_sample(args) -> int:
    for tree in codec.sample_trees(args.a, args.b, args.seed, args.count):
        code = codec.encode(tree)
        if args.format == "dot":
            sys.stdout.write(f"// code: {code.to_text()}\n")
            sys.stdout.write(to_dot(tree))
        else:
            print(_tree_json(tree, code))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treecensus",
        description=("Count, bound, construct and sample spanning trees of "
                     "complete bipartite graphs, exactly."),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions",
                       help="count (and list) partitions of m into k parts")
    p.add_argument("m", type=_positive)
    p.add_argument("k", type=_positive)
    p.add_argument("--list", action="store_true",
                   help="also print one partition per line")
    p.set_defaults(func=_cmd_partitions)

    p = sub.add_parser("construct",
                       help="build a tree with the given degree partitions")
    p.add_argument("s", type=_int_list, help="A-side degrees, e.g. 2,1")
    p.add_argument("t", type=_int_list, help="B-side degrees, e.g. 2,1")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("census",
                       help="table of bounds and exact class counts")
    p.add_argument("--max-n", type=int, required=True,
                   help="largest a+b to tabulate (>= 4)")
    p.add_argument("--budget", type=int,
                   default=census.DEFAULT_CLASS_BUDGET,
                   help="largest code space enumerated exactly")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=_positive, default=1,
                   help="worker threads for the exact census")
    p.add_argument("--output", help="write to this file instead of stdout")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify",
                       help="run every invariant family at desk scale")
    p.add_argument("--max-n", type=int, default=9,
                   help="cap a+b for enumeration-bound families (>= 4)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sample", help="uniform random labeled spanning trees")
    p.add_argument("a", type=_positive)
    p.add_argument("b", type=_positive)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=_cmd_sample)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
