"""Command-line entry point.

Each subcommand builds one dataset and writes it as CSV (default) or JSON to
stdout or ``--output``.  Exit status: 0 on success, 1 on a runtime error,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import conjecture as cj
from .emit import emit_csv, emit_json
from .errors import DomainError, SapPrimesError
from .primes import sieve
from .sap import SampleWindow, extrapolate_k, verify_shift_identity
from .stats import DEFAULT_BINS, compare_distributions

COMMANDS = ("extrapolate", "verify-identity", "sieve", "scan", "gaps", "twins", "histogram")
PRIME_COMMANDS = ("sieve", "scan", "gaps", "twins", "histogram")


@dataclass
class RunConfig:
    command: str
    limit: int = 10_000
    mode: cj.WindowMode = cj.WindowMode.STRICT
    bins: int = DEFAULT_BINS
    output_format: str = "csv"
    output_path: Path | None = None
    threshold: int = cj.DEFAULT_MIN_MIDPOINT
    threads: int = 1
    # extrapolate
    degree: int = 1
    values: tuple[Fraction, ...] = ()
    steps: int = 1
    # verify-identity
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    sweep: int | None = None
    # scan / twins
    summary_only: bool = False
    twins_only: bool = False
    range_min: int = 3

    def validate(self):
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        if self.command in PRIME_COMMANDS and self.limit < 2:
            raise DomainError("--limit must be >= 2")
        if self.bins < 1:
            raise DomainError("--bins must be >= 1")
        if self.threads < 1:
            raise DomainError("--threads must be >= 1")
        if self.output_format not in ("csv", "json"):
            raise DomainError("--format must be csv or json")


def _build(config: RunConfig):
    """Returns ``(data, kind)`` for the emitters."""
    cmd = config.command
    if cmd == "extrapolate":
        window = SampleWindow(config.values, config.degree)
        return extrapolate_k(window, config.steps), "extrapolation"
    if cmd == "verify-identity":
        if config.sweep is None:
            return [verify_shift_identity(config.degree, config.x, config.y)], "shift_identity"
        r = config.sweep
        checks = [verify_shift_identity(config.degree, x, y)
                  for x in range(-r, r + 1) for y in range(-r, r + 1)]
        return checks, "shift_identity"

    table = sieve(config.limit)
    if cmd == "sieve":
        return table, "sieve"
    if cmd == "scan":
        result = cj.scan(table, config.mode, config.threshold, config.threads)
        if config.summary_only:
            return result.summary, "scan_summary"
        return result, "scan"
    if cmd == "gaps":
        found = cj.condition_primes(table, config.mode, config.threshold, config.threads)
        return cj.gap_series(found), "gaps"
    if cmd == "twins":
        records = cj.twin_scan(table, config.limit, config.mode, config.range_min)
        if config.twins_only:
            records = cj.twin_pairs(records)
        return records, "twins"
    if cmd == "histogram":
        found = cj.condition_primes(table, config.mode, config.threshold, config.threads)
        if not found:
            raise DomainError(f"no condition primes up to {config.limit}; nothing to histogram")
        return compare_distributions(found, table.tolist(), config.bins), "comparison"
    raise DomainError(f"unknown command {cmd!r}")


def render(config: RunConfig) -> bytes:
    config.validate()
    data, kind = _build(config)
    if config.output_format == "json":
        return emit_json(data, kind)
    return emit_csv(data, kind)


def run(config: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout.buffer
    stderr = stderr if stderr is not None else sys.stderr
    try:
        payload = render(config)
        if config.output_path is None:
            stdout.write(payload)
            stdout.flush()
        else:
            Path(config.output_path).write_bytes(payload)
    except (SapPrimesError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    return 0


def _fraction_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(t.strip()) for t in text.split(",") if t.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a comma-separated list of rationals: {text!r}")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _mode(text: str) -> cj.WindowMode:
    try:
        return cj.WindowMode.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sapprimes",
        description="Binomial-weight polynomial extrapolation and a consecutive-prime window scanner.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", "-o", dest="output_path", type=Path, default=None,
                        help="write here instead of stdout")

    primes = argparse.ArgumentParser(add_help=False)
    primes.add_argument("--limit", type=int, default=10_000, help="sieve bound (default 10000)")

    window = argparse.ArgumentParser(add_help=False)
    window.add_argument("--mode", type=_mode, default=cj.WindowMode.STRICT,
                        help="strict (M-2, M+2), odd3 (M-2, M, M+2) or interval ([M-2, M+2])")
    window.add_argument("--threshold", type=int, default=cj.DEFAULT_MIN_MIDPOINT,
                        help="skip pairs whose midpoint 2b-a is below this (default 10)")
    window.add_argument("--threads", type=_positive, default=1,
                        help="worker threads; output does not depend on it")

    p = sub.add_parser("extrapolate", parents=[common], help="continue a polynomial sequence")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--values", type=_fraction_list, required=True,
                   help="comma-separated samples, oldest first; rationals like 1/3 allowed")
    p.add_argument("--steps", type=_positive, default=1)

    p = sub.add_parser("verify-identity", parents=[common],
                       help="check (x+y)^n against the weighted sum of shifted powers")
    p.add_argument("--degree", "-n", type=int, required=True)
    p.add_argument("--x", type=_fraction, default=Fraction(0))
    p.add_argument("--y", type=_fraction, default=Fraction(0))
    p.add_argument("--sweep", type=int, default=None, metavar="R",
                   help="check every integer x, y in [-R, R] instead of one point")

    sub.add_parser("sieve", parents=[common, primes], help="list primes up to --limit")

    p = sub.add_parser("scan", parents=[common, primes, window],
                       help="per-pair window verdicts (figures 1-2 data)")
    p.add_argument("--summary", dest="summary_only", action="store_true",
                   help="emit only totals, hit rate and counterexamples")

    sub.add_parser("gaps", parents=[common, primes, window],
                   help="differences between successive condition primes (figures 3, 3a)")

    p = sub.add_parser("twins", parents=[common, primes, window],
                       help="each prime with its successor, difference and window verdict (figures 4, 4a)")
    p.add_argument("--range-min", type=int, default=3)
    p.add_argument("--twins-only", action="store_true", help="keep only difference-2 pairs")

    p = sub.add_parser("histogram", parents=[common, primes, window],
                       help="condition primes vs all primes on shared bins (figure 1)")
    p.add_argument("--bins", type=_positive, default=DEFAULT_BINS)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    known = set(RunConfig.__dataclass_fields__)
    kwargs = {k: v for k, v in vars(args).items() if k in known}
    return RunConfig(**kwargs)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = config_from_args(args)
    try:
        config.validate()
    except DomainError as exc:
        parser.error(str(exc))
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
