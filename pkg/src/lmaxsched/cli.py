"""Command line front end.

Exit codes: 0 success (or feasible), 1 infeasible, 2 parse error,
3 resource limit, 4 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from .binpack import pack
from .errors import ParseError, ResourceLimitError, SchedulingError
from .feasibility import DEFAULT_MEMORY_CAP_BITS
from .instance import generate_random
from .oracle import DEFAULT_ENUM_CAP, brute_force_min_lmax
from .solver import OptimalResult, min_lmax, probe
from .textio import format_instance, parse_binpack, parse_instance

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_USAGE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lmaxsched",
        description="Exact Lmax scheduling on identical or uniformly related machines.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="instance file, or - for standard input")

    def with_memory(p: argparse.ArgumentParser) -> None:
        p.add_argument("--memory-cap-bits", type=int, default=DEFAULT_MEMORY_CAP_BITS,
                       help="largest DP table allowed, in bits (default 2**31)")

    p = sub.add_parser("solve", help="minimum Lmax with a witness schedule")
    with_input(p)
    with_memory(p)

    p = sub.add_parser("feasible", help="is Lmax <= L achievable?")
    with_input(p)
    p.add_argument("--lmax", type=int, default=0, help="lateness bound L (default 0)")
    with_memory(p)

    p = sub.add_parser("oracle", help="minimum Lmax by exhaustive enumeration")
    with_input(p)
    p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP,
                   help="largest number of assignments to enumerate")

    p = sub.add_parser("binpack", help="minimum bin count via the scheduling reduction")
    with_input(p)
    p.add_argument("--strategy", choices=("scan", "bisect"), default="scan")
    with_memory(p)

    p = sub.add_parser("gen", help="print a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-work", type=int, required=True)
    p.add_argument("--max-deadline", type=int, required=True)
    p.add_argument("--max-rate", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _read(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _format_solution(result: OptimalResult) -> str:
    lmax = "none" if result.lmax is None else str(result.lmax)
    lines = [f"lmax: {lmax}"]
    lines.extend(f"job {i} -> machine {j}" for i, j in enumerate(result.assignment.machine_of))
    return "\n".join(lines) + "\n"


def run(
    argv: Optional[Sequence[str]] = None,
    stdin: TextIO = sys.stdin,
    stdout: TextIO = sys.stdout,
    stderr: TextIO = sys.stderr,
) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE

    source = getattr(args, "input", None)
    try:
        if args.command == "gen":
            instance = generate_random(
                args.n, args.m, args.max_work, args.max_deadline, args.max_rate, args.seed
            )
            stdout.write(format_instance(instance))
            return EXIT_OK

        text = _read(source, stdin)
        if args.command == "binpack":
            bp = parse_binpack(text)
            if bp.n == 0:
                stdout.write("bins: 0\n")
                return EXIT_OK
            packing = pack(bp, args.strategy, args.memory_cap_bits)
            lines = [f"bins: {packing.bins}"]
            lines.extend(f"item {i} -> bin {k}" for i, k in enumerate(packing.bin_of))
            stdout.write("\n".join(lines) + "\n")
            return EXIT_OK

        instance = parse_instance(text)
        if args.command == "solve":
            stdout.write(_format_solution(min_lmax(instance, args.memory_cap_bits)))
            return EXIT_OK
        if args.command == "oracle":
            stdout.write(_format_solution(brute_force_min_lmax(instance, args.enum_cap)))
            return EXIT_OK
        # feasible
        ok = probe(instance, args.lmax, args.memory_cap_bits).feasible
        stdout.write(f"feasible: {'true' if ok else 'false'}\n")
        return EXIT_OK if ok else EXIT_INFEASIBLE
    except ParseError as exc:
        stderr.write(f"error: {source}:{exc.line}:{exc.column}: {exc.message}\n")
        return EXIT_PARSE
    except ResourceLimitError as exc:
        stderr.write(f"error: resource limit: {exc}\n")
        return EXIT_RESOURCE
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SchedulingError as exc:
        # out-of-range generator bounds or a --lmax shift that overflows
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
