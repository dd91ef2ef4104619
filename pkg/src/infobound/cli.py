"""Command-line front end.

Exit codes: 0 success, 1 I/O failure, 2 usage or validation error,
3 a report row violated entropy floor <= oracle minimum <= worst case.
"""
from __future__ import annotations

import argparse
import math
import sys

from . import comparisons, oracle, states
from .entropy import ceil_log2, stirling_log2_factorial
from .report import build_report, parse_range
from .states import CapExceededError, ModelKind

EXIT_IO = 1
EXIT_USAGE = 2
EXIT_VIOLATION = 3


class UsageError(Exception):
    pass


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def cmd_bound(args) -> int:
    model = states.build_model(ModelKind(args.problem), args.n)
    print(f"problem: {args.problem}")
    print(f"n: {args.n}")
    print(f"state_count: {model.state_count}")
    print(f"entropy_exact_bits: {model.entropy_bits:.7g}")
    if model.kind is ModelKind.SORT_PERMUTATION:
        print(f"entropy_stirling_bits: {stirling_log2_factorial(args.n):.7g}")
    if args.mode == "stirling":
        if model.kind is not ModelKind.SORT_PERMUTATION:
            raise UsageError("--mode stirling applies only to --problem sort")
        bound = stirling_log2_factorial(args.n)
        print(f"bound_bits: {bound:.7g}")
        print(f"ceil_entropy: {max(0, math.ceil(bound))}")
    else:
        print(f"bound_bits: {model.entropy_bits:.7g}")
        print(f"ceil_entropy: {ceil_log2(model.state_count)}")
    return 0


def cmd_enumerate(args) -> int:
    if args.model == "pairwise":
        stream = states.enumerate_pairwise(args.n)
        verdict = lambda a: states.check_consistency(a).consistent
    else:
        stream = states.enumerate_max_keys(args.n)
        verdict = lambda a: True  # every max-key pattern is realisable
    total = consistent = 0
    for assignment in stream:
        ok = verdict(assignment)
        total += 1
        consistent += ok
        if args.list:
            print(f"{assignment.to_line()} {'consistent' if ok else 'inconsistent'}")
    print(f"total: {total}")
    print(f"consistent: {consistent}")
    print(f"inconsistent: {total - consistent}")
    return 0


def cmd_measure(args) -> int:
    if args.mode == "exhaustive":
        result = comparisons.worst_case_exhaustive(args.algo, args.n, workers=args.workers)
    else:
        if args.seed is None:
            raise UsageError("--seed is required with --mode sampled")
        result = comparisons.worst_case_sampled(args.algo, args.n, args.trials, args.seed)
    for name in ("algorithm", "n", "worst_case", "best_case", "exhaustive", "trials", "seed"):
        value = getattr(result, name)
        print(f"{name}: {'' if value is None else value}")
    return 0


def cmd_oracle(args) -> int:
    solve = oracle.min_comparisons_sort if args.problem == "sort" else oracle.min_comparisons_max
    result = solve(args.n)
    print(f"problem: {args.problem}")
    print(f"n: {args.n}")
    print(f"min_worst_case: {result.min_worst_case}")
    print(f"entropy_floor: {result.entropy_floor}")
    print(f"bound_met: {'met' if result.bound_met else 'not met'}")
    first = result.optimal_first_comparison
    print(f"optimal_first_comparison: {'' if first is None else f'{first[0]} {first[1]}'}")
    if args.tree:
        sys.stdout.write(oracle.optimal_strategy(args.problem, args.n).render())
    return 0


def cmd_report(args) -> int:
    try:
        lo, hi = parse_range(args.n_range)
    except ValueError as exc:
        raise UsageError(f"--n-range: {exc}") from None
    report = build_report(lo, hi, workers=args.workers)
    text = report.to_csv() if args.format == "csv" else report.to_markdown()
    if args.out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"infobound report: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    problems = report.violations()
    for msg in problems:
        print(f"infobound report: violation: {msg}", file=sys.stderr)
    return EXIT_VIOLATION if problems else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="infobound",
        description="Entropy lower bounds versus exact and measured comparison counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="print the entropy bound of a problem model")
    p.add_argument("--problem", required=True, choices=[k.value for k in ModelKind])
    p.add_argument("--n", required=True, type=positive_int)
    p.add_argument("--mode", choices=("exact", "stirling"), default="exact")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("enumerate", help="count (and list) key assignments")
    p.add_argument("--model", required=True, choices=("pairwise", "maxkeys"))
    p.add_argument("--n", required=True, type=positive_int)
    p.add_argument("--list", action="store_true", help="stream every assignment")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("measure", help="worst/best comparison counts of an algorithm")
    p.add_argument("--algo", required=True, choices=sorted(comparisons.ALGORITHMS))
    p.add_argument("--n", required=True, type=positive_int)
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--trials", type=positive_int, default=1000)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=positive_int, default=1)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("oracle", help="exact minimax comparison count")
    p.add_argument("--problem", required=True, choices=("sort", "max"))
    p.add_argument("--n", required=True, type=positive_int)
    p.add_argument("--tree", action="store_true", help="also print an optimal decision tree")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("report", help="write the bound/oracle/measurement table")
    p.add_argument("--n-range", required=True, help="inclusive range A..B")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "md"), default="csv")
    p.add_argument("--workers", type=positive_int, default=1)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"infobound {args.command}: error: --n {exc.n} exceeds cap {exc.cap}",
              file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"infobound {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
