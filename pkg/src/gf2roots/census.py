"""Exact counts for the root families, by recurrence and by closed form.

Write count(n, r) for the number of rank-r members of either nilpotent
family (square roots of zero and Cholesky roots of zero share one count).
The bordered extensions give the rank-stratified recurrence

    count(n, r) = count(n-1, r) * 2^r
                + count(n-1, r-1) * (2^(n-r) - 2^(r-1)),

with count(1, 0) = 1, and count(n, r) = 0 once r exceeds floor(n/2).

The family total also has closed forms as signed binomial sums over a
handful of indices j.  With h = floor(n/2):

    even n:  sum_j [ C(n, h-3j) - C(n, h-3j-1) ] * 2^(h*h - 3j*j - j)
    odd  n:  sum_j [ C(n, h-3j) - C(n, h-3j-1) ] * 2^(h*h + h - 3j*j - 2j)

and both cases merge into a single expression with exponent

    floor(n/2) * ceil(n/2) - 3j*j - (ceil(n/2) - floor(n/2) + 1) * j.

Every quantity here is an exact Python integer; no floats appear at any
point, which matters because the counts overflow 64 bits near n = 30.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping

from .rootsets import DEFAULT_ORACLE_BUDGET, RootFamily, brute_force_enumerate

__all__ = [
    "CheckResult",
    "ClosedFormTerm",
    "CountTable",
    "CrossVerifyReport",
    "SummandRangeResult",
    "closed_form_term",
    "cross_verify",
    "identity_root_table",
    "recurrence_table",
    "split_closed_form",
    "summand_range_check",
    "unified_closed_form",
]


@dataclass(frozen=True)
class CountTable:
    """Rank-stratified counts for one family up to a maximum size.

    ``counts`` maps (n, r) to the number of rank-r members at size n;
    absent cells are zero.  Tables compare equal when their cells agree.
    """

    family: RootFamily
    max_n: int
    counts: Mapping[tuple[int, int], int]

    def get(self, n: int, r: int) -> int:
        return self.counts.get((n, r), 0)

    def total(self, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise ValueError(f"size {n} outside table range 1..{self.max_n}")
        return sum(v for (m, _), v in self.counts.items() if m == n)

    def rows(self) -> Iterator[tuple[int, int, int]]:
        """Yield (n, r, count) over the meaningful rank range of each size."""
        for n in range(1, self.max_n + 1):
            if self.family is RootFamily.SQRT_IDENTITY:
                yield n, n, self.get(n, n)
            else:
                for r in range(n // 2 + 1):
                    yield n, r, self.get(n, r)

    def to_csv(self) -> str:
        lines = ["family,n,r,count"]
        for n, r, count in self.rows():
            lines.append(f"{self.family.value},{n},{r},{count}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "family": self.family.value,
            "rows": [
                {"n": n, "r": r, "count": str(count)} for n, r, count in self.rows()
            ],
        }


def recurrence_table(family: RootFamily, max_n: int) -> CountTable:
    """Fill the rank-stratified recurrence up to size max_n.

    Only the two nilpotent families satisfy this recurrence; asking for
    the identity-root family is rejected (see identity_root_table).
    """
    if family is RootFamily.SQRT_IDENTITY:
        raise ValueError(
            "the recurrence counts the nilpotent families; "
            "use identity_root_table for square roots of the identity"
        )
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    counts: dict[tuple[int, int], int] = {(1, 0): 1}
    for n in range(2, max_n + 1):
        for r in range(n // 2 + 1):
            value = 0
            kept = counts.get((n - 1, r), 0)
            if kept:
                value += kept << r
            grown = counts.get((n - 1, r - 1), 0)
            if grown:
                # r >= 1 here, so both shifts are legal; the coefficient
                # 2^(n-r) - 2^(r-1) is nonnegative whenever the cell is live.
                value += grown * ((1 << (n - r)) - (1 << (r - 1)))
            if value < 0:
                raise AssertionError(f"negative count at (n={n}, r={r})")
            if value:
                counts[(n, r)] = value
    return CountTable(family, max_n, counts)


def identity_root_table(max_n: int) -> CountTable:
    """Counts for square roots of the identity: all mass sits at rank n."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    nilpotent = recurrence_table(RootFamily.SQRT_ZERO, max_n)
    counts = {(n, n): nilpotent.total(n) for n in range(1, max_n + 1)}
    return CountTable(RootFamily.SQRT_IDENTITY, max_n, counts)


# ---------------------------------------------------------------------------
# Closed forms.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClosedFormTerm:
    """One summand of the unified closed form at index j."""

    n: int
    j: int
    binomial_difference: int
    value: int


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def closed_form_term(n: int, j: int) -> ClosedFormTerm:
    """Evaluate one summand of the unified closed form.

    When the binomial difference vanishes the term is zero by definition
    and the power of two is never formed; its exponent can be negative out
    there, and forming it would also be wasteful for giant n.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    half_down, half_up = n // 2, (n + 1) // 2
    diff = _binom(n, half_down - 3 * j) - _binom(n, half_down - 3 * j - 1)
    if diff == 0:
        return ClosedFormTerm(n, j, 0, 0)
    exponent = half_down * half_up - 3 * j * j - (half_up - half_down + 1) * j
    if exponent < 0:
        raise AssertionError(f"negative exponent {exponent} on a live term (n={n}, j={j})")
    return ClosedFormTerm(n, j, diff, diff * (1 << exponent))


def _support_indices(n: int) -> range:
    # Outside this range both binomials in the difference are zero: the
    # upper index is h - 3j with h = floor(n/2), and it must land in
    # [0, n+1] for either C(n, .) to survive.
    h = n // 2
    lo = -((n + 1 - h) // 3)
    hi = h // 3
    return range(lo, hi + 1)


def split_closed_form(n: int) -> int:
    """Family total by the parity-split closed form (separate even/odd shapes)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    h = n // 2
    total = 0
    for j in _support_indices(n):
        diff = _binom(n, h - 3 * j) - _binom(n, h - 3 * j - 1)
        if diff == 0:
            continue
        if n % 2 == 0:
            exponent = h * h - 3 * j * j - j
        else:
            exponent = h * h + h - 3 * j * j - 2 * j
        if exponent < 0:
            raise AssertionError(f"negative exponent on a live term (n={n}, j={j})")
        total += diff * (1 << exponent)
    if total < 0:
        raise AssertionError(f"negative total at n={n}")
    return total


def unified_closed_form(n: int) -> int:
    """Family total by the single floor/ceil closed form."""
    if n < 1:
        raise ValueError("n must be at least 1")
    total = sum(closed_form_term(n, j).value for j in _support_indices(n))
    if total < 0:
        raise AssertionError(f"negative total at n={n}")
    return total


@dataclass(frozen=True)
class SummandRangeResult:
    """Outcome of checking that summation indices outside a window are dead."""

    n: int
    lo: int
    hi: int
    guard_band: int
    offenders: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.offenders


def summand_range_check(n: int, guard_band: int = 3) -> SummandRangeResult:
    """Confirm every live summand has index in [-ceil((n+3)/6), floor(n/6)].

    Indices in a guard band just outside the window are evaluated and must
    all be zero; beyond the band the binomial support argument makes terms
    structurally zero, so nothing needs evaluating there.
    """
    lo = -((n + 8) // 6)  # -ceil((n+3)/6)
    hi = n // 6
    offenders = []
    for j in range(lo - guard_band, hi + guard_band + 1):
        value = closed_form_term(n, j).value
        if value != 0 and not lo <= j <= hi:
            offenders.append(j)
    return SummandRangeResult(n, lo, hi, guard_band, tuple(offenders))


# ---------------------------------------------------------------------------
# Cross-verification of the independent routes.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class CrossVerifyReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)


def _compare_cells(
    name: str,
    max_n: int,
    left: Callable[[int, int], int],
    right: Callable[[int, int], int],
    describe: str,
) -> CheckResult:
    for n in range(1, max_n + 1):
        for r in range(n + 1):
            a, b = left(n, r), right(n, r)
            if a != b:
                return CheckResult(
                    name, False, f"{describe} diverge at (n={n}, r={r}): {a} != {b}"
                )
    return CheckResult(name, True, f"agreement on all cells through n={max_n}")


def cross_verify(
    max_oracle_n: int = 5,
    max_formula_n: int = 64,
    *,
    budget: int = DEFAULT_ORACLE_BUDGET,
    workers: int = 1,
    table_sqrt_zero: CountTable | None = None,
    table_cholesky_zero: CountTable | None = None,
) -> CrossVerifyReport:
    """Check every counting route against every other.

    Routes: brute-force scans (up to max_oracle_n), the recurrence, and
    both closed forms (up to max_formula_n).  Tables may be injected to
    verify externally produced counts; by default fresh recurrence tables
    are used.  Each check reports the first divergent cell if it fails.
    """
    if not 1 <= max_oracle_n:
        raise ValueError("max_oracle_n must be at least 1")
    if max_formula_n < max_oracle_n:
        raise ValueError("max_formula_n must cover the oracle range")
    table_b = table_sqrt_zero or recurrence_table(RootFamily.SQRT_ZERO, max_formula_n)
    table_c = table_cholesky_zero or recurrence_table(
        RootFamily.CHOLESKY_ZERO, max_formula_n
    )
    checks = []

    scans: dict[RootFamily, list[dict[int, int]]] = {}
    for family in (RootFamily.SQRT_ZERO, RootFamily.CHOLESKY_ZERO, RootFamily.SQRT_IDENTITY):
        per_n: list[dict[int, int]] = [{}]
        for n in range(1, max_oracle_n + 1):
            strata: dict[int, int] = {}
            for entry in brute_force_enumerate(n, family, budget=budget, workers=workers):
                strata[entry.rank] = strata.get(entry.rank, 0) + 1
            per_n.append(strata)
        scans[family] = per_n

    for family, table in (
        (RootFamily.SQRT_ZERO, table_b),
        (RootFamily.CHOLESKY_ZERO, table_c),
    ):
        checks.append(
            _compare_cells(
                f"oracle-vs-recurrence[{family.value}]",
                max_oracle_n,
                lambda n, r, f=family: scans[f][n].get(r, 0),
                table.get,
                "scan and recurrence",
            )
        )

    checks.append(
        _compare_cells(
            "identity-vs-zero-roots",
            max_oracle_n,
            lambda n, r: scans[RootFamily.SQRT_IDENTITY][n].get(r, 0),
            lambda n, r: (
                sum(scans[RootFamily.SQRT_ZERO][n].values()) if r == n else 0
            ),
            "identity-root scan and shifted zero-root totals",
        )
    )

    formula_check = CheckResult(
        "recurrence-vs-closed-forms", True, f"totals agree through n={max_formula_n}"
    )
    for n in range(1, max_formula_n + 1):
        by_table = table_c.total(n)
        by_split = split_closed_form(n)
        by_unified = unified_closed_form(n)
        if not by_table == by_split == by_unified:
            formula_check = CheckResult(
                "recurrence-vs-closed-forms",
                False,
                f"totals diverge at n={n}: recurrence {by_table}, "
                f"split {by_split}, unified {by_unified}",
            )
            break
    checks.append(formula_check)

    checks.append(
        _compare_cells(
            "nilpotent-table-equality",
            min(table_b.max_n, table_c.max_n),
            table_b.get,
            table_c.get,
            "the two nilpotent family tables",
        )
    )

    return CrossVerifyReport(tuple(checks))
