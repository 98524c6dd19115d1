"""Self-contained verification suites wiring the independent routes together.

Each suite recomputes one advertised fact from scratch and reports the
first failure it finds, if any.  Several suites also attach notes for
facts that are easy to get wrong; the notes travel with passing results
so the boundary cases stay visible.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass

from .census import (
    cross_verify,
    recurrence_table,
    summand_range_check,
)
from .cholesky import canonical_root
from .gf2 import Gf2Matrix, _gram_rows, _row_rank, structural_predicates
from .rootsets import (
    DEFAULT_ORACLE_BUDGET,
    RootFamily,
    brute_force_enumerate,
    check_oracle_budget,
    enumerate_bijection,
    iter_upper_triangular,
)

__all__ = ["SuiteResult", "VerifyReport", "SUITE_NAMES", "run_suites"]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    first_failure: str | None
    wall_time: float
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class VerifyReport:
    suites: tuple[SuiteResult, ...]

    @property
    def ok(self) -> bool:
        return all(s.passed for s in self.suites)


def _suite_counts(max_n: int, budget: int, workers: int) -> tuple[str | None, tuple[str, ...]]:
    report = cross_verify(max_n, max(64, max_n), budget=budget, workers=workers)
    failure = report.first_failure()
    if failure is not None:
        return f"{failure.name}: {failure.detail}", ()
    return None, (f"scan depth n={max_n}; formula depth n={max(64, max_n)}",)


def _suite_involution(max_n: int, budget: int, workers: int) -> tuple[str | None, tuple[str, ...]]:
    for n in range(1, max_n + 1):
        zero_roots = {
            e.matrix.rows: e.rank
            for e in brute_force_enumerate(n, RootFamily.SQRT_ZERO, budget=budget, workers=workers)
        }
        identity_roots = {
            e.matrix.rows
            for e in brute_force_enumerate(n, RootFamily.SQRT_IDENTITY, budget=budget, workers=workers)
        }
        shifted = {
            tuple(row ^ (1 << i) for i, row in enumerate(rows)) for rows in zero_roots
        }
        if shifted != identity_roots:
            extra = next(iter(shifted.symmetric_difference(identity_roots)))
            return (
                f"shift mismatch at n={n}: matrix rows {extra} on one side only",
                (),
            )
        if any(_row_rank(rows, n) != n for rows in identity_roots):
            return f"identity-root of deficient rank at n={n}", ()
    return None, ("every identity root is the identity-shift of a zero root, and invertible",)


def _suite_bijection(max_n: int, budget: int, workers: int) -> tuple[str | None, tuple[str, ...]]:
    table = recurrence_table(RootFamily.SQRT_ZERO, max(max_n, 1))
    for n in range(1, max_n + 1):
        strata: Counter = Counter()
        seen_left: set[tuple[int, ...]] = set()
        seen_right: set[tuple[int, ...]] = set()
        for pair in enumerate_bijection(n):
            b, c = pair.sqrt_zero, pair.cholesky_zero
            if not RootFamily.SQRT_ZERO.contains(b):
                return f"invalid left member at n={n}: rows {b.rows}", ()
            if not RootFamily.CHOLESKY_ZERO.contains(c):
                return f"invalid right member at n={n}: rows {c.rows}", ()
            if b.rank() != pair.rank or c.rank() != pair.rank:
                return f"rank mismatch at n={n}: pair labelled {pair.rank}", ()
            seen_left.add(b.rows)
            seen_right.add(c.rows)
            strata[pair.rank] += 1
        if len(seen_left) != sum(strata.values()) or len(seen_right) != sum(strata.values()):
            return f"repeated member at n={n}", ()
        for r in range(n + 1):
            if strata.get(r, 0) != table.get(n, r):
                return (
                    f"stratum size at (n={n}, r={r}): "
                    f"{strata.get(r, 0)} pairs, table says {table.get(n, r)}",
                    (),
                )
    return None, ("pairing is bijective and rank-preserving on every stratum",)


def _suite_emptiness(max_n: int, budget: int, workers: int) -> tuple[str | None, tuple[str, ...]]:
    for n in range(1, max_n + 1):
        for family in (RootFamily.SQRT_ZERO, RootFamily.CHOLESKY_ZERO):
            for entry in brute_force_enumerate(n, family, budget=budget, workers=workers):
                if entry.rank > n // 2:
                    return (
                        f"rank {entry.rank} member at n={n} in {family.value}; "
                        f"rows {entry.matrix.rows}",
                        (),
                    )
    notes = (
        "strata empty exactly above rank floor(n/2)",
        "the stratum (n=2, r=1) is nonempty, so a cutoff at r >= n/2 would be wrong",
    )
    if max_n >= 6:
        table = recurrence_table(RootFamily.SQRT_ZERO, 6)
        if table.get(6, 3) != 568:
            return "expected 568 members at (n=6, r=3)", ()
        notes += ("odd boundary strata like (n=6, r=3) are populated: 568 members",)
    return None, notes


def _suite_cholesky_lpn(max_n: int, budget: int, workers: int) -> tuple[str | None, tuple[str, ...]]:
    corank_totals = recurrence_table(RootFamily.CHOLESKY_ZERO, max(max_n, 1))
    for n in range(1, max_n + 1):
        check_oracle_budget(n, budget)
        roots_by_gram: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        for rows in iter_upper_triangular(n):
            roots_by_gram.setdefault(tuple(_gram_rows(rows, n)), []).append(rows)
        # Walk every symmetric matrix, not only the Gram values.
        for sym in _iter_symmetric(n):
            matrix = Gf2Matrix(n, sym)
            actual = roots_by_gram.get(sym, [])
            if structural_predicates(matrix).is_lpn:
                rank = matrix.rank()
                expected = (
                    1 if rank == n else corank_totals.total(n - rank)
                )
                if len(actual) != expected:
                    return (
                        f"LPN count law fails at n={n}, rank {rank}: "
                        f"{len(actual)} roots, expected {expected}; rows {sym}",
                        (),
                    )
                if canonical_root(matrix).root.rows not in actual:
                    return f"canonical root not among the roots; rows {sym}", ()
            elif matrix.rank() == n and actual:
                return (
                    f"full-rank non-LPN matrix with a root at n={n}: rows {sym}",
                    (),
                )
    notes = (
        "root count equals the zero-root family size at the corank",
        "rank-deficient non-LPN matrices may still have roots "
        "(diag(0, 1) has two), so LPN is not necessary below full rank",
    )
    return None, notes


def _iter_symmetric(n: int):
    """All symmetric matrices, driven by their upper-triangular part."""
    for rows in iter_upper_triangular(n):
        sym = list(rows)
        for i in range(n):
            m = rows[i] >> (i + 1)
            j = i + 1
            while m:
                if m & 1:
                    sym[j] |= 1 << i
                j += 1
                m >>= 1
        yield tuple(sym)


def _suite_summand_range(max_n: int, budget: int, workers: int) -> tuple[str | None, tuple[str, ...]]:
    for n in range(1, max_n + 1):
        result = summand_range_check(n)
        if not result.ok:
            return (
                f"live summand outside [{result.lo}, {result.hi}] at n={n}: "
                f"indices {list(result.offenders)}",
                (),
            )
    return None, (f"window verified with guard band 3 through n={max_n}",)


_SUITES = {
    "counts": (_suite_counts, 5),
    "involution": (_suite_involution, 5),
    "bijection": (_suite_bijection, 5),
    "emptiness-bound": (_suite_emptiness, 6),
    "cholesky-lpn": (_suite_cholesky_lpn, 5),
    "summand-range": (_suite_summand_range, 200),
}

SUITE_NAMES = tuple(_SUITES)


def run_suites(
    names: list[str] | None = None,
    *,
    max_n: int | None = None,
    budget: int = DEFAULT_ORACLE_BUDGET,
    workers: int = 1,
) -> VerifyReport:
    """Run the selected suites (all of them by default).

    ``max_n`` overrides each suite's default depth; suites that scan
    candidates still refuse depths beyond the oracle budget.
    """
    selected = list(names) if names else list(SUITE_NAMES)
    results = []
    for name in selected:
        if name not in _SUITES:
            known = ", ".join(SUITE_NAMES)
            raise ValueError(f"unknown suite {name!r}; expected one of: {known}")
        func, default_depth = _SUITES[name]
        depth = max_n if max_n is not None else default_depth
        start = time.perf_counter()
        failure, notes = func(depth, budget, workers)
        elapsed = time.perf_counter() - start
        results.append(
            SuiteResult(
                name=name,
                passed=failure is None,
                first_failure=failure,
                wall_time=elapsed,
                notes=notes,
            )
        )
    return VerifyReport(tuple(results))
