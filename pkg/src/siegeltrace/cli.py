"""Command-line front end: census generation, trace evaluation over
weight/prime grids, and the self-test battery.

Results go to standard output, progress notes to standard error.  Exit
codes: 0 success, 2 usage, 3 cache problems, 4 failed mathematical
checks (mass identities, divisibility, selftest suites).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .census import CacheError, CensusBank, CensusError
from .ff import build_prime_field
from .selftest import run_selftest
from .trace2 import (CSV_COLUMNS, FormulaConsistencyError, WeightPair,
                     csv_row, hecke_trace_genus2)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CACHE = 3
EXIT_CHECK = 4

CACHE_ENV_VAR = "SIEGELTRACE_CACHE"


def _prime_list(text: str) -> list[int]:
    """Parse a comma-separated list of odd primes."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            p = int(chunk)
            build_prime_field(p)  # validates odd prime
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
        out.append(p)
    if not out:
        raise argparse.ArgumentTypeError("no primes given")
    return out


def _default_cache() -> str | None:
    return os.environ.get(CACHE_ENV_VAR) or None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siegeltrace",
        description="Exact Hecke traces on genus-2 Siegel cusp forms via "
                    "finite-field censuses.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_census = sub.add_parser(
        "census", help="build or refresh census caches for given primes")
    p_census.add_argument("--primes", type=_prime_list, required=True,
                          help="comma-separated odd primes, e.g. 3,5,7")
    p_census.add_argument("--cache", default=_default_cache(),
                          help=f"cache directory (default ${CACHE_ENV_VAR})")
    p_census.add_argument("--workers", type=int, default=1,
                          help="parallel workers for the genus-2 enumeration")

    p_trace = sub.add_parser(
        "trace", help="evaluate Hecke traces for weights and primes")
    p_trace.add_argument("--k1", type=int, help="first weight component")
    p_trace.add_argument("--k2", type=int, help="second weight component")
    p_trace.add_argument("--max-weight-sum", type=int, dest="max_weight_sum",
                         help="evaluate every regular even-sum weight with "
                              "k1 + k2 up to this bound")
    p_trace.add_argument("--primes", type=_prime_list, required=True)
    p_trace.add_argument("--cache", default=_default_cache())
    p_trace.add_argument("--format", choices=("csv", "json"), default="csv")
    p_trace.add_argument("--normalization", type=int, default=4,
                         help="divisor applied to the assembled trace "
                              "(default 4)")
    p_trace.add_argument("--auto-census", action="store_true",
                         dest="auto_census",
                         help="build missing censuses instead of failing")
    p_trace.add_argument("--workers", type=int, default=1)

    p_self = sub.add_parser("selftest", help="run the invariant battery")
    p_self.add_argument("--cache", default=_default_cache())
    p_self.add_argument("--workers", type=int, default=1)
    return parser


def _census_status(bank: CensusBank, name: str) -> str:
    path = bank._path(name)
    return "cached" if path is not None and os.path.exists(path) else "built"


def cmd_census(args) -> int:
    if args.cache is None:
        print("census: a cache directory is required "
              f"(--cache or ${CACHE_ENV_VAR})", file=sys.stderr)
        return EXIT_USAGE
    bank = CensusBank(cache_dir=args.cache, workers=args.workers)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(("census", "p", "q", "classes", "total", "mass",
                     "status", "checksum"))
    for p in args.primes:
        for name, getter in ((f"elliptic-p{p}", bank.elliptic),
                             (f"elliptic-q{p * p}", bank.elliptic_ext),
                             (f"genus2-p{p}", bank.genus2)):
            status = _census_status(bank, name)
            if status == "built":
                print(f"building {name} ...", file=sys.stderr)
            try:
                census = getter(p)
                census.check()
            except CacheError as exc:
                print(f"census: {exc}", file=sys.stderr)
                return EXIT_CACHE
            except CensusError as exc:
                print(f"census: {exc}", file=sys.stderr)
                return EXIT_CHECK
            mass = census.mass()
            writer.writerow((name, p, census.q if hasattr(census, "q") else p,
                             len(census.counts), census.total_models,
                             mass, status, bank.checksums[name][:16]))
    return EXIT_OK


def _weights_from_args(args, parser) -> list[WeightPair]:
    if (args.k1 is None) != (args.k2 is None):
        parser.error("--k1 and --k2 must be given together")
    if args.k1 is not None and args.max_weight_sum is not None:
        parser.error("give either --k1/--k2 or --max-weight-sum, not both")
    if args.k1 is not None:
        try:
            return [WeightPair(args.k1, args.k2)]
        except ValueError as exc:
            parser.error(str(exc))
    if args.max_weight_sum is None:
        parser.error("need --k1/--k2 or --max-weight-sum")
    weights = []
    for k2 in range(4, args.max_weight_sum // 2 + 1):
        k1 = k2 + 2
        while k1 + k2 <= args.max_weight_sum:
            weights.append(WeightPair(k1, k2))
            k1 += 2
    if not weights:
        parser.error(f"no regular even-sum weights with k1 + k2 <= "
                     f"{args.max_weight_sum}")
    return weights


def cmd_trace(args, parser) -> int:
    weights = _weights_from_args(args, parser)
    if args.normalization <= 0:
        parser.error("--normalization must be a positive integer")
    bank = CensusBank(cache_dir=args.cache, workers=args.workers,
                      auto_build=args.auto_census or args.cache is None)
    reports = []
    try:
        for w in weights:
            for p in args.primes:
                print(f"trace ({w.k1},{w.k2}) p={p} ...", file=sys.stderr)
                reports.append(hecke_trace_genus2(
                    w, p, bank, normalization=args.normalization,
                    strict=False))
    except CacheError as exc:
        print(f"trace: {exc}", file=sys.stderr)
        return EXIT_CACHE
    except (CensusError, FormulaConsistencyError) as exc:
        print(f"trace: {exc}", file=sys.stderr)
        return EXIT_CHECK

    if args.format == "json":
        json.dump([r.to_json_dict() for r in reports], sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in reports:
            writer.writerow(csv_row(r))
    return EXIT_OK if all(r.checks_passed for r in reports) else EXIT_CHECK


def cmd_selftest(args) -> int:
    ok = run_selftest(cache_dir=args.cache, workers=args.workers)
    return EXIT_OK if ok else EXIT_CHECK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "census":
        return cmd_census(args)
    if args.command == "trace":
        return cmd_trace(args, parser)
    return cmd_selftest(args)


if __name__ == "__main__":
    sys.exit(main())
