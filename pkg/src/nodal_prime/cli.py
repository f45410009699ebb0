"""Command line entry point.

Exit codes are shared by every subcommand: 0 probable prime / success,
1 composite / disagreement found, 2 inconclusive or usage / I/O error.
"""

import argparse
import json
import logging
import sys

from . import bench, verify
from .primality import DEFAULT_MAX_POINTS, Inconclusive, full_test, quick_test

EXIT_OK = 0
EXIT_COMPOSITE = 1
EXIT_ERROR = 2


class UsageError(Exception):
    pass


def parse_int(text):
    """Decimal, or hexadecimal with a ``0x`` prefix."""
    s = text.strip().replace("_", "")
    try:
        if s[:2].lower() == "0x":
            value = int(s[2:], 16)
        else:
            value = int(s, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"negative value: {text!r}")
    return value


def parse_bits(text):
    try:
        return [int(b) for b in text.split(",") if b.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad bit list: {text!r}") from None


def _emit(args, record, human):
    if args.json:
        print(json.dumps(record, separators=(",", ":")))
    else:
        print(human)


def cmd_test(args):
    n = args.n
    try:
        if args.full:
            verdict = full_test(n, t_start=args.t, max_points=args.max_points)
        else:
            verdict = quick_test(n, t_start=args.t)
    except Inconclusive as exc:
        _emit(args, {"n": n, "verdict": "inconclusive", "error": str(exc)}, f"{n}: inconclusive: {exc}")
        return EXIT_ERROR
    _emit(args, verdict.to_dict(), f"{n}: {verdict.describe()}")
    return EXIT_COMPOSITE if verdict.is_composite else EXIT_OK


def cmd_scan(args):
    if args.start > args.stop:
        raise UsageError(f"--from {args.start} is greater than --to {args.stop}")
    if args.start < 3:
        raise UsageError("--from must be >= 3")
    summary = verify.scan_range(
        args.start, args.stop, out=args.out, checkpoint=args.checkpoint, jobs=args.jobs
    )
    record = summary._asdict()
    human = (
        f"scanned {summary.count} odd n in [{summary.start}, {summary.stop}]: "
        f"disagreements={summary.disagreements}"
    )
    if summary.counterexamples:
        human += f" counterexamples={summary.counterexamples}"
    _emit(args, record, human)
    return EXIT_OK if summary.disagreements == 0 else EXIT_COMPOSITE


def cmd_spsp_check(args):
    summary = verify.check_spsp_list(args.list)
    human = f"total={summary.total} caught={summary.caught} missed={summary.missed}"
    if summary.inconclusive:
        human += f" inconclusive={summary.inconclusive}"
    _emit(args, summary._asdict(), human)
    if summary.missed:
        return EXIT_COMPOSITE
    return EXIT_ERROR if summary.inconclusive else EXIT_OK


def cmd_group(args):
    try:
        g = verify.enumerate_group(args.q, args.a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(
        args,
        {"q": args.q, "a": args.a, "order": g.order, "cyclic": g.is_cyclic},
        f"order={g.order} cyclic={str(g.is_cyclic).lower()}",
    )
    return EXIT_OK


def cmd_bench(args):
    bits = args.bits
    if not bits or min(bits) < 16:
        raise UsageError("--bits entries must be >= 16")
    if args.reps < 1:
        raise UsageError("--reps must be >= 1")
    rows = bench.run_bench(bits, args.reps, args.seed)
    sys.stdout.write(bench.format_rows(rows, args.format))
    if args.format == "text":
        for lo, hi, ratio in bench.growth_ratios(rows):
            print(f"growth {lo}->{hi} bits: x{ratio:.2f}")
    return EXIT_OK


def cmd_bench_backends(args):
    if args.start > args.stop:
        raise UsageError(f"--from {args.start} is greater than --to {args.stop}")
    try:
        cmp = bench.compare_backends(args.start, args.stop)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(
        f"{cmp.count} odd n in [{cmp.start}, {cmp.stop}]: "
        f"cython {cmp.kernel_s:.3f}s  python {cmp.python_s:.3f}s  speedup x{cmp.speedup:.1f}"
    )
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="nodal-prime", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("test", help="test one integer")
    p.add_argument("n", type=parse_int)
    p.add_argument("--full", action="store_true", help="primorial-multiplied variant with point search")
    p.add_argument("--t", type=parse_int, default=2, help="starting slope for the point (default 2)")
    p.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS, help=argparse.SUPPRESS)
    p.add_argument("--json", action="store_true", help="one JSON record instead of text")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("scan", help="compare the quick test with trial division over a range")
    p.add_argument("--from", dest="start", type=parse_int, required=True)
    p.add_argument("--to", dest="stop", type=parse_int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="JSON-lines record file")
    p.add_argument("--checkpoint", help="checkpoint file; resumed if present")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("spsp-check", help="check a list of known composites")
    p.add_argument("--list", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spsp_check)

    p = sub.add_parser("group", help="enumerate the curve group over F_q")
    p.add_argument("--q", type=parse_int, required=True)
    p.add_argument("--a", type=parse_int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("bench", help="timing table for probable primes of given sizes")
    p.add_argument("--bits", type=parse_bits, default=[256, 512, 1024, 2048])
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--format", choices=["text", "csv", "markdown"], default="text")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("bench-backends", help="compare compiled and pure-Python quick test")
    p.add_argument("--from", dest="start", type=parse_int, default=3)
    p.add_argument("--to", dest="stop", type=parse_int, default=200_000)
    p.set_defaults(func=cmd_bench_backends)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
