"""The three root families of upper-triangular matrices over GF(2).

At each size n this module enumerates, for upper-triangular U:

* square roots of the identity, U * U = I;
* square roots of zero, U * U = 0;
* Cholesky roots of zero, U^T * U = 0.

Two independent routes exist on purpose.  ``brute_force_enumerate`` scans
every upper-triangular candidate (2^(n(n+1)/2) of them) and keeps the
members; it is the ground truth everything else is checked against, and is
budgeted because the scan grows brutally fast.  ``structured_enumerate``
never looks at a non-member: a square root of zero of size n is exactly a
size n-1 member bordered by a final column from its null space, and a
Cholesky root of zero is a size n-1 member bordered by a final column and
diagonal entry solving an augmented homogeneous system (the new column
must be orthogonal to every old column and have even total weight).

Adding the identity is an involution swapping square roots of zero with
square roots of the identity, since (X + I)^2 = X^2 + I in characteristic
two.  Between square roots of zero and Cholesky roots of zero no such
shortcut exists, but the two border constructions always offer the same
number of rank-preserving and rank-increasing extensions, which yields the
canonical rank-preserving pairing at the bottom of the module.
"""

from __future__ import annotations

import enum
import multiprocessing
from dataclasses import dataclass
from typing import Iterator, Sequence

from .gf2 import (
    Gf2Matrix,
    _gram_rows,
    _mul_rows,
    _nullspace_rows,
    _row_rank,
    _span_values,
    _transpose_rows,
)

__all__ = [
    "DEFAULT_ORACLE_BUDGET",
    "MAX_ORACLE_OVERRIDE_N",
    "MAX_STRUCTURED_N",
    "BijectionPair",
    "OracleBudgetError",
    "RootCensusEntry",
    "RootFamily",
    "brute_force_enumerate",
    "canonical_bijection",
    "enumerate_bijection",
    "shift_by_identity",
    "structured_enumerate",
]

DEFAULT_ORACLE_BUDGET = 6
MAX_ORACLE_OVERRIDE_N = 7
MAX_STRUCTURED_N = 12

ORACLE_BUDGET_FLAG = "--oracle-budget"
ORACLE_BUDGET_ENV = "GF2ROOTS_ORACLE_BUDGET"


class RootFamily(enum.Enum):
    """One of the three families; values double as CLI spellings."""

    SQRT_IDENTITY = "sqrt-identity"
    SQRT_ZERO = "sqrt-zero"
    CHOLESKY_ZERO = "cholesky-zero"

    @classmethod
    def from_name(cls, name: str) -> "RootFamily":
        for family in cls:
            if family.value == name:
                return family
        known = ", ".join(f.value for f in cls)
        raise ValueError(f"unknown family {name!r}; expected one of: {known}")

    def contains(self, matrix: Gf2Matrix) -> bool:
        """Membership test straight from the definition."""
        if not matrix.is_upper_triangular():
            return False
        rows = matrix.rows
        if self is RootFamily.SQRT_ZERO:
            return not any(_mul_rows(rows, rows))
        if self is RootFamily.SQRT_IDENTITY:
            return all(r == 1 << i for i, r in enumerate(_mul_rows(rows, rows)))
        return not any(_gram_rows(rows, matrix.n))


class OracleBudgetError(ValueError):
    """Raised when a brute-force scan is requested beyond its budget."""


@dataclass(frozen=True)
class RootCensusEntry:
    """One enumerated family member together with its rank."""

    matrix: Gf2Matrix
    rank: int


@dataclass(frozen=True)
class BijectionPair:
    """Matched square root of zero and Cholesky root of zero of equal rank."""

    sqrt_zero: Gf2Matrix
    cholesky_zero: Gf2Matrix
    rank: int


# ---------------------------------------------------------------------------
# Brute-force oracle.
# ---------------------------------------------------------------------------
#
# Candidate number k (the "counter") encodes the strictly-upper-and-diagonal
# entries row-major: bit 0 is entry (0, 0), bit 1 is (0, 1), and so on, row
# by row.  Ascending counters therefore give a fixed, reproducible order.


def _counter_layout(n: int) -> list[tuple[int, int, int]]:
    """(bit offset, width mask, column shift) for each row's counter slice."""
    layout = []
    offset = 0
    for i in range(n):
        width = n - i
        layout.append((offset, (1 << width) - 1, i))
        offset += width
    return layout


def _scan_counters(
    n: int, family: RootFamily, start: int, stop: int
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (rows, rank) for every family member with counter in [start, stop)."""
    layout = _counter_layout(n)
    if family is RootFamily.SQRT_ZERO or family is RootFamily.SQRT_IDENTITY:
        want_identity = family is RootFamily.SQRT_IDENTITY
        for counter in range(start, stop):
            rows = [((counter >> off) & mask) << shift for off, mask, shift in layout]
            ok = True
            for i in range(n):
                acc = (1 << i) if want_identity else 0
                m = rows[i]
                while m:
                    acc ^= rows[(m & -m).bit_length() - 1]
                    m &= m - 1
                if acc:
                    ok = False
                    break
            if ok:
                yield tuple(rows), _row_rank(rows, n)
    else:
        for counter in range(start, stop):
            rows = [((counter >> off) & mask) << shift for off, mask, shift in layout]
            parity = 0
            for row in rows:
                parity ^= row
            if parity:
                # Some column has odd weight, so some diagonal Gram entry is 1.
                continue
            gram = [0] * n
            for row in rows:
                m = row
                while m:
                    gram[(m & -m).bit_length() - 1] ^= row
                    m &= m - 1
            if not any(gram):
                yield tuple(rows), _row_rank(rows, n)


def _scan_span(args: tuple[int, str, int, int]) -> list[tuple[tuple[int, ...], int]]:
    """Process-pool worker: materialize one counter chunk of _scan_counters."""
    n, family_name, start, stop = args
    return list(_scan_counters(n, RootFamily(family_name), start, stop))


def iter_upper_triangular(n: int) -> Iterator[tuple[int, ...]]:
    """All upper-triangular candidates as packed row tuples, counter order."""
    layout = _counter_layout(n)
    for counter in range(1 << (n * (n + 1) // 2)):
        yield tuple(((counter >> off) & mask) << shift for off, mask, shift in layout)


def check_oracle_budget(n: int, budget: int) -> None:
    if n > budget:
        raise OracleBudgetError(
            f"brute-force scan at n={n} exceeds the oracle budget of {budget} "
            f"(2^{n * (n + 1) // 2} candidates); raise it with {ORACLE_BUDGET_FLAG} "
            f"or {ORACLE_BUDGET_ENV}"
        )


def brute_force_enumerate(
    n: int,
    family: RootFamily,
    *,
    budget: int = DEFAULT_ORACLE_BUDGET,
    workers: int = 1,
) -> Iterator[RootCensusEntry]:
    """Scan all upper-triangular candidates of size n and yield the members.

    Entries come out exactly once each, in ascending candidate-counter
    order, so repeated runs produce identical streams.  The scan refuses
    n beyond ``budget``; with more than one worker the counter range is
    split into contiguous chunks handled by a process pool and merged
    back in order, which keeps the stream deterministic.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    check_oracle_budget(n, budget)
    total = 1 << (n * (n + 1) // 2)

    def generate() -> Iterator[RootCensusEntry]:
        if workers <= 1 or total <= (1 << 16):
            for rows, rank in _scan_counters(n, family, 0, total):
                yield RootCensusEntry(Gf2Matrix(n, rows), rank)
            return
        chunk = max(1 << 16, total // (workers * 8))
        spans = [
            (n, family.value, lo, min(lo + chunk, total))
            for lo in range(0, total, chunk)
        ]
        with multiprocessing.Pool(workers) as pool:
            for hits in pool.imap(_scan_span, spans):
                for rows, rank in hits:
                    yield RootCensusEntry(Gf2Matrix(n, rows), rank)

    return generate()


# ---------------------------------------------------------------------------
# Structured enumeration by bordered extension.
# ---------------------------------------------------------------------------


def _zero_square_children(rows: Sequence[int], k: int) -> list[tuple[int, ...]]:
    """All size k+1 square roots of zero extending a size-k one.

    The child is the parent bordered with final column v and a zero final
    row; the square stays zero exactly when the parent annihilates v.
    Children are listed by ascending packed value of v.
    """
    children = []
    for v in sorted(_span_values(_nullspace_rows(rows, k))):
        bordered = tuple(
            row | (((v >> i) & 1) << k) for i, row in enumerate(rows)
        )
        children.append(bordered + (0,))
    return children


def _gram_zero_children(rows: Sequence[int], k: int) -> list[tuple[int, ...]]:
    """All size k+1 Cholesky roots of zero extending a size-k one.

    Border with final column w and diagonal entry c.  The Gram matrix
    stays zero exactly when every old column is orthogonal to w and the
    extended column (w, c) has even weight; both conditions together say
    the stacked vector (w, c) lies in the null space of the parent's
    transpose augmented with an all-ones row.  Children are listed by
    ascending packed value of that stacked vector.
    """
    augmented = _transpose_rows(rows, k) + [(1 << (k + 1)) - 1]
    children = []
    for wc in sorted(_span_values(_nullspace_rows(augmented, k + 1))):
        bordered = tuple(
            row | (((wc >> i) & 1) << k) for i, row in enumerate(rows)
        )
        children.append(bordered + (((wc >> k) & 1) << k,))
    return children


def _bordered_stream(
    n: int, children_of
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Depth-first stream of (rows, rank) for one bordered construction."""
    if n == 1:
        yield (0,), 0
        return
    for rows, _ in _bordered_stream(n - 1, children_of):
        for child in children_of(rows, n - 1):
            yield child, _row_rank(child, n)


def _check_structured_size(n: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_STRUCTURED_N:
        raise ValueError(
            f"structured enumeration is capped at n={MAX_STRUCTURED_N}; "
            f"the family at n={n} is far too large to stream"
        )


def structured_enumerate(n: int, family: RootFamily) -> Iterator[RootCensusEntry]:
    """Stream every member of the family at size n without scanning.

    Members are produced depth-first over the bordered extensions, each
    extension in ascending packed order, so the stream is deterministic.
    Square roots of the identity are produced by shifting square roots of
    zero by the identity; they always have full rank n.
    """
    _check_structured_size(n)

    def generate() -> Iterator[RootCensusEntry]:
        if family is RootFamily.SQRT_ZERO:
            for rows, rank in _bordered_stream(n, _zero_square_children):
                yield RootCensusEntry(Gf2Matrix(n, rows), rank)
        elif family is RootFamily.CHOLESKY_ZERO:
            for rows, rank in _bordered_stream(n, _gram_zero_children):
                yield RootCensusEntry(Gf2Matrix(n, rows), rank)
        else:
            for rows, _ in _bordered_stream(n, _zero_square_children):
                shifted = tuple(row ^ (1 << i) for i, row in enumerate(rows))
                yield RootCensusEntry(Gf2Matrix(n, shifted), n)

    return generate()


def shift_by_identity(matrix: Gf2Matrix) -> Gf2Matrix:
    """Add the identity: an involution exchanging the two square-root families."""
    return matrix.add(Gf2Matrix.identity(matrix.n))


# ---------------------------------------------------------------------------
# Canonical rank-preserving pairing.
# ---------------------------------------------------------------------------


def _paired_stream(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Grow both families in lockstep, matching extensions class by class.

    For a paired parent of rank r, both constructions split their children
    into rank-preserving and rank-increasing classes of equal sizes (2^r
    and 2^(n-1-r) - 2^(r-1) at size n).  Children are matched index-wise
    within each class, preserving first, each class in ascending packed
    extension order.
    """
    if n == 1:
        yield (0,), (0,), 0
        return
    k = n - 1
    for b_rows, c_rows, rank in _paired_stream(k):
        b_split = _split_by_rank(_zero_square_children(b_rows, k), n, rank)
        c_split = _split_by_rank(_gram_zero_children(c_rows, k), n, rank)
        for cls in (0, 1):
            if len(b_split[cls]) != len(c_split[cls]):
                raise AssertionError(
                    f"extension class sizes diverged at n={n}, parent rank {rank}: "
                    f"{len(b_split[cls])} vs {len(c_split[cls])}"
                )
            for b_child, c_child in zip(b_split[cls], c_split[cls]):
                yield b_child, c_child, rank + cls


def _split_by_rank(
    children: list[tuple[int, ...]], n: int, parent_rank: int
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    keep: list[tuple[int, ...]] = []
    grow: list[tuple[int, ...]] = []
    for child in children:
        child_rank = _row_rank(child, n)
        if child_rank == parent_rank:
            keep.append(child)
        elif child_rank == parent_rank + 1:
            grow.append(child)
        else:
            raise AssertionError("bordering changed the rank by more than one")
    return keep, grow


def enumerate_bijection(n: int) -> Iterator[BijectionPair]:
    """Stream the canonical pairing across all ranks at size n."""
    _check_structured_size(n)

    def generate() -> Iterator[BijectionPair]:
        for b_rows, c_rows, rank in _paired_stream(n):
            yield BijectionPair(Gf2Matrix(n, b_rows), Gf2Matrix(n, c_rows), rank)

    return generate()


def canonical_bijection(n: int, r: int) -> Iterator[BijectionPair]:
    """The canonical pairing restricted to one rank stratum.

    Yields exactly one pair per rank-r square root of zero; the stratum is
    empty when r exceeds floor(n/2).
    """
    _check_structured_size(n)
    if not 0 <= r <= n:
        raise ValueError(f"rank must lie in 0..{n}, got {r}")

    def generate() -> Iterator[BijectionPair]:
        for pair in enumerate_bijection(n):
            if pair.rank == r:
                yield pair

    return generate()
