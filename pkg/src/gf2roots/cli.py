"""Command-line interface: census, enumerate, bijection, cholesky, verify.

Everything meant for consumption goes to stdout and is byte-identical
across runs; timing and diagnostics go to stderr.  Exit codes: 0 success,
1 a verification or existence check failed, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from collections import Counter
from dataclasses import dataclass

from .census import identity_root_table, recurrence_table, unified_closed_form
from .cholesky import all_roots, canonical_root, root_count
from .gf2 import Gf2Matrix, structural_predicates
from .rootsets import (
    DEFAULT_ORACLE_BUDGET,
    MAX_ORACLE_OVERRIDE_N,
    ORACLE_BUDGET_ENV,
    OracleBudgetError,
    RootFamily,
    brute_force_enumerate,
    canonical_bijection,
    enumerate_bijection,
    structured_enumerate,
)
from .verify import SUITE_NAMES, run_suites

FAMILY_NAMES = tuple(f.value for f in RootFamily)


@dataclass(frozen=True)
class CommandConfig:
    """Validated cross-command settings."""

    oracle_budget: int
    workers: int

    def __post_init__(self) -> None:
        if self.oracle_budget < 1:
            raise ValueError("oracle budget must be at least 1")
        if self.workers < 1:
            raise ValueError("worker count must be at least 1")


def _config_from(args: argparse.Namespace) -> CommandConfig:
    budget = args.oracle_budget
    if budget is None:
        raw = os.environ.get(ORACLE_BUDGET_ENV)
        if raw is None:
            budget = DEFAULT_ORACLE_BUDGET
        else:
            try:
                budget = int(raw)
            except ValueError:
                raise ValueError(
                    f"{ORACLE_BUDGET_ENV}={raw!r} is not an integer"
                ) from None
    if budget > MAX_ORACLE_OVERRIDE_N and not args.acknowledge_oracle_cost:
        raise ValueError(
            f"oracle budget {budget} exceeds {MAX_ORACLE_OVERRIDE_N}; scans that "
            "deep take a very long time, pass --acknowledge-oracle-cost to proceed"
        )
    return CommandConfig(oracle_budget=budget, workers=args.workers)


def _read_matrix(source: str) -> Gf2Matrix:
    if source == "-":
        return Gf2Matrix.from_text(sys.stdin.read())
    with open(source, "r", encoding="ascii") as handle:
        return Gf2Matrix.from_text(handle.read())


def _entry_line(n: int, rank: int, matrix: Gf2Matrix) -> str:
    return json.dumps({"n": n, "rank": rank, "matrix": matrix.to_strings()})


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------


def _cmd_census(args: argparse.Namespace) -> int:
    config = _config_from(args)
    family = RootFamily.from_name(args.family)
    if args.max_n < 1:
        raise ValueError("--max-n must be at least 1")

    cells: list[tuple[int, int, int]] | None
    if args.engine == "recurrence":
        if family is RootFamily.SQRT_IDENTITY:
            table = identity_root_table(args.max_n)
        else:
            table = recurrence_table(family, args.max_n)
        cells = list(table.rows())
        totals = {n: table.total(n) for n in range(1, args.max_n + 1)}
    elif args.engine == "closed-form":
        cells = None
        totals = {n: unified_closed_form(n) for n in range(1, args.max_n + 1)}
    else:
        cells = []
        totals = {}
        for n in range(1, args.max_n + 1):
            strata = Counter(
                e.rank
                for e in brute_force_enumerate(
                    n, family, budget=config.oracle_budget, workers=config.workers
                )
            )
            ranks = [n] if family is RootFamily.SQRT_IDENTITY else range(n // 2 + 1)
            cells.extend((n, r, strata.get(r, 0)) for r in ranks)
            totals[n] = sum(strata.values())

    if args.format == "table":
        for n in range(1, args.max_n + 1):
            parts = [f"{family.value}", f"n={n}:"]
            if cells is not None:
                parts += [f"r{r}={c}" for (m, r, c) in cells if m == n]
            parts.append(f"total={totals[n]}")
            print(" ".join(parts))
    elif args.format == "csv":
        print("family,n,r,count")
        if cells is not None:
            for n, r, count in cells:
                print(f"{family.value},{n},{r},{count}")
        else:
            for n, total in totals.items():
                print(f"{family.value},{n},,{total}")
    else:
        obj: dict = {"family": family.value}
        if cells is not None:
            obj["rows"] = [
                {"n": n, "r": r, "count": str(c)} for n, r, c in cells
            ]
        else:
            obj["rows"] = [{"n": n, "count": str(t)} for n, t in totals.items()]
        print(json.dumps(obj))
    return 0


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------


def _cmd_enumerate(args: argparse.Namespace) -> int:
    config = _config_from(args)
    family = RootFamily.from_name(args.set)
    if args.engine == "structured":
        entries = structured_enumerate(args.n, family)
    else:
        entries = brute_force_enumerate(
            args.n, family, budget=config.oracle_budget, workers=config.workers
        )
    if args.rank is not None:
        entries = (e for e in entries if e.rank == args.rank)
    if args.count_only:
        print(sum(1 for _ in entries))
        return 0
    for entry in entries:
        print(_entry_line(args.n, entry.rank, entry.matrix))
    return 0


# ---------------------------------------------------------------------------
# bijection
# ---------------------------------------------------------------------------


def _cmd_bijection(args: argparse.Namespace) -> int:
    _config_from(args)
    if args.rank is not None:
        pairs = canonical_bijection(args.n, args.rank)
    else:
        pairs = enumerate_bijection(args.n)
    for pair in pairs:
        print(
            json.dumps(
                {
                    "n": args.n,
                    "rank": pair.rank,
                    "b": pair.sqrt_zero.to_strings(),
                    "c": pair.cholesky_zero.to_strings(),
                }
            )
        )
    return 0


# ---------------------------------------------------------------------------
# cholesky
# ---------------------------------------------------------------------------


def _cmd_cholesky(args: argparse.Namespace) -> int:
    config = _config_from(args)
    matrix = _read_matrix(args.input)

    if args.count:
        print(root_count(matrix, budget=config.oracle_budget))
        return 0

    if args.all:
        enumeration = all_roots(matrix, budget=config.oracle_budget)
        print(f"method: {enumeration.method.value}", file=sys.stderr)
        for index, root in enumerate(enumeration.roots):
            if args.format == "json":
                print(_entry_line(matrix.n, root.rank(), root))
            else:
                if index:
                    print()
                sys.stdout.write(root.to_text())
        return 0

    flags = structural_predicates(matrix)
    if flags.is_symmetric and flags.is_lpn:
        root = canonical_root(matrix).root
    else:
        enumeration = all_roots(matrix, budget=config.oracle_budget)
        if not enumeration.roots:
            print("no upper-triangular root exists for this matrix", file=sys.stderr)
            return 1
        root = enumeration.roots[0]
    if args.format == "json":
        print(_entry_line(matrix.n, root.rank(), root))
    else:
        sys.stdout.write(root.to_text())
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> int:
    config = _config_from(args)
    report = run_suites(
        args.suite or None,
        max_n=args.max_n,
        budget=config.oracle_budget,
        workers=config.workers,
    )
    for suite in report.suites:
        print(f"{suite.name}: {'PASS' if suite.passed else 'FAIL'}")
        if suite.first_failure:
            print(f"  first failure: {suite.first_failure}")
        for note in suite.notes:
            print(f"  note: {note}")
        print(f"[time] {suite.name}: {suite.wall_time:.3f}s", file=sys.stderr)
    passed = sum(1 for s in report.suites if s.passed)
    print(f"overall: {'PASS' if report.ok else 'FAIL'} ({passed}/{len(report.suites)} suites)")
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--oracle-budget",
        type=int,
        default=None,
        metavar="N",
        help=f"largest size brute-force scans accept (default {DEFAULT_ORACLE_BUDGET}, "
        f"or {ORACLE_BUDGET_ENV} if set)",
    )
    common.add_argument(
        "--acknowledge-oracle-cost",
        action="store_true",
        help=f"permit budgets beyond {MAX_ORACLE_OVERRIDE_N} despite the runtime",
    )
    common.add_argument(
        "--workers",
        type=int,
        default=1,
        metavar="K",
        help="worker processes for brute-force scans (default 1)",
    )

    parser = argparse.ArgumentParser(
        prog="gf2roots",
        description="enumerate, count and cross-check upper-triangular matrix "
        "roots over GF(2), and factor symmetric matrices as U^T U",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    census = sub.add_parser(
        "census", parents=[common], help="rank-stratified family counts"
    )
    census.add_argument("--max-n", type=int, required=True, metavar="N")
    census.add_argument(
        "--family", choices=FAMILY_NAMES, default=RootFamily.CHOLESKY_ZERO.value
    )
    census.add_argument(
        "--engine",
        choices=("recurrence", "closed-form", "oracle"),
        default="recurrence",
        help="closed-form gives totals only; oracle rescans every candidate",
    )
    census.add_argument("--format", choices=("table", "csv", "json"), default="table")
    census.set_defaults(handler=_cmd_census)

    enumerate_cmd = sub.add_parser(
        "enumerate", parents=[common], help="list family members as JSON lines"
    )
    enumerate_cmd.add_argument("--set", choices=FAMILY_NAMES, required=True)
    enumerate_cmd.add_argument("--n", type=int, required=True)
    enumerate_cmd.add_argument("--rank", type=int, default=None)
    enumerate_cmd.add_argument("--count-only", action="store_true")
    enumerate_cmd.add_argument(
        "--engine", choices=("structured", "oracle"), default="structured"
    )
    enumerate_cmd.set_defaults(handler=_cmd_enumerate)

    bijection = sub.add_parser(
        "bijection",
        parents=[common],
        help="the canonical rank-preserving pairing, as JSON lines",
    )
    bijection.add_argument("--n", type=int, required=True)
    bijection.add_argument("--rank", type=int, default=None)
    bijection.set_defaults(handler=_cmd_bijection)

    cholesky = sub.add_parser(
        "cholesky", parents=[common], help="factor a symmetric matrix as U^T U"
    )
    cholesky.add_argument(
        "--input",
        required=True,
        metavar="FILE",
        help="matrix text file, or - for stdin",
    )
    group = cholesky.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="print every root")
    group.add_argument("--count", action="store_true", help="print the root count")
    cholesky.add_argument(
        "--format", choices=("matrix-text", "json"), default="matrix-text"
    )
    cholesky.set_defaults(handler=_cmd_cholesky)

    verify = sub.add_parser(
        "verify", parents=[common], help="run the self-verification suites"
    )
    verify.add_argument(
        "--suite",
        action="append",
        choices=SUITE_NAMES,
        default=None,
        metavar="NAME",
        help=f"suite to run, repeatable (default: all of {', '.join(SUITE_NAMES)})",
    )
    verify.add_argument("--max-n", type=int, default=None)
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        code = args.handler(args)
    except OracleBudgetError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    print(f"[time] total: {time.perf_counter() - started:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
