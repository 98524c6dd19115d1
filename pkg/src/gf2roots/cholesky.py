"""Cholesky decomposition over GF(2): factor M = U^T U, U upper triangular.

Existence is delicate in characteristic two.  A symmetric full-rank matrix
factors exactly when all its leading principal minors are 1, and then the
root is unique.  For singular symmetric matrices the right condition is
the LPN shape (leading principal minors equal 1 up to the rank, 0 after):
a rank-r LPN matrix of size n has its first r root rows forced, its last
n - r rows free up to a Cholesky root of zero of size n - r, and hence
exactly as many roots as that family has members.  Symmetric matrices
outside LPN shape may still have roots (or none at all); those cases fall
back to a budgeted brute-force scan.

Every returned root is verified by multiplication before it leaves this
module, so a result in hand is a proof.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .census import recurrence_table
from .gf2 import (
    Gf2Matrix,
    Gf2Vector,
    _gram_rows,
    solve_upper_triangular,
    structural_predicates,
)
from .rootsets import (
    DEFAULT_ORACLE_BUDGET,
    RootFamily,
    check_oracle_budget,
    iter_upper_triangular,
    structured_enumerate,
)

__all__ = [
    "CholeskyResult",
    "RootEnumeration",
    "RootMethod",
    "all_roots",
    "canonical_root",
    "has_root",
    "root_count",
    "unique_root_full_rank",
]


class RootMethod(enum.Enum):
    """How a root enumeration was produced."""

    ORACLE = "oracle"
    LPN_PARAMETRIZED = "lpn-parametrized"


@dataclass(frozen=True)
class CholeskyResult:
    """A verified factorization: root^T root equals the input matrix."""

    root: Gf2Matrix
    rank: int
    residual_checked: bool


@dataclass(frozen=True)
class RootEnumeration:
    """Every upper-triangular root of one symmetric matrix."""

    input: Gf2Matrix
    roots: tuple[Gf2Matrix, ...]
    method: RootMethod


def _require_symmetric(matrix: Gf2Matrix) -> None:
    if not matrix.is_symmetric():
        raise ValueError("matrix is not symmetric; no Gram factorization can exist")


def _verify(matrix: Gf2Matrix, root: Gf2Matrix) -> Gf2Matrix:
    if root.gram() != matrix:
        raise AssertionError("constructed root failed verification by multiplication")
    return root


def unique_root_full_rank(matrix: Gf2Matrix) -> CholeskyResult:
    """Factor a symmetric full-rank matrix with all leading minors 1.

    Symmetric outer-product elimination: at step k the pivot row is peeled
    off every later row containing column k, which both triangularizes the
    matrix and writes down the root one row at a time.  The three
    preconditions (symmetric, full rank, minors all 1) are checked up
    front and reported individually.
    """
    _require_symmetric(matrix)
    n = matrix.n
    rank = matrix.rank()
    if rank != n:
        raise ValueError(f"matrix has rank {rank} < {n}; it is not full rank")
    if not structural_predicates(matrix).is_lpn:
        raise ValueError(
            "some leading principal minor is 0; a full-rank matrix factors "
            "only when every leading principal minor is 1"
        )
    work = list(matrix.rows)
    for k in range(n):
        pivot = work[k]
        if not (pivot >> k) & 1:
            raise AssertionError(f"zero pivot at step {k} despite unit minors")
        for i in range(k + 1, n):
            if (work[i] >> k) & 1:
                work[i] ^= pivot
    root = _verify(matrix, Gf2Matrix(n, tuple(work)))
    return CholeskyResult(root, n, True)


def canonical_root(matrix: Gf2Matrix) -> CholeskyResult:
    """One distinguished root of a symmetric LPN matrix of any rank.

    Block construction for rank r: the leading r-by-r block is full rank
    with unit minors, so it has a unique root V; the off-diagonal root
    block solves V^T X = (leading r rows, trailing columns); and the
    bottom rows are zero.  That only factors the whole matrix if the
    trailing block equals X^T X, which the LPN shape guarantees; it is
    still checked, and a mismatch is a hard error rather than a wrong
    answer.
    """
    _require_symmetric(matrix)
    if not structural_predicates(matrix).is_lpn:
        raise ValueError(
            "matrix is not in LPN shape (leading principal minors 1 exactly "
            "up to the rank); use all_roots for the general search"
        )
    n = matrix.n
    rank = matrix.rank()
    if rank == n:
        return unique_root_full_rank(matrix)
    if rank == 0:
        root = _verify(matrix, Gf2Matrix.zero(n))
        return CholeskyResult(root, 0, True)

    width = n - rank
    leading = Gf2Matrix(rank, tuple(row & ((1 << rank) - 1) for row in matrix.rows[:rank]))
    head = unique_root_full_rank(leading).root
    rhs = [Gf2Vector(width, matrix.rows[i] >> rank) for i in range(rank)]
    off_block = solve_upper_triangular(head, rhs, transposed=True)
    off_rows = [v.bits for v in off_block]

    trailing = [matrix.rows[rank + t] >> rank for t in range(width)]
    if _gram_rows(off_rows, width) != trailing:
        raise AssertionError(
            "trailing block is not the Gram matrix of the solved off-diagonal "
            "rows; the input was not actually in LPN shape"
        )

    rows = tuple(head.rows[i] | (off_rows[i] << rank) for i in range(rank))
    rows += (0,) * width
    root = _verify(matrix, Gf2Matrix(n, rows))
    return CholeskyResult(root, rank, True)


def all_roots(
    matrix: Gf2Matrix, *, budget: int = DEFAULT_ORACLE_BUDGET
) -> RootEnumeration:
    """Enumerate every upper-triangular root of a symmetric matrix.

    LPN inputs are handled without search: each root is the canonical
    one with a Cholesky root of zero of size n - rank written into its
    free bottom-right block, so the enumeration order follows the
    structured stream of that family.  Anything else falls back to the
    budgeted scan over all upper-triangular candidates.  Either way every
    root is verified by multiplication before being returned.
    """
    _require_symmetric(matrix)
    n = matrix.n
    if structural_predicates(matrix).is_lpn:
        rank = matrix.rank()
        if rank == n:
            roots = (unique_root_full_rank(matrix).root,)
        else:
            base = canonical_root(matrix).root
            head = base.rows[:rank]
            collected = []
            for entry in structured_enumerate(n - rank, RootFamily.CHOLESKY_ZERO):
                tail = tuple(row << rank for row in entry.matrix.rows)
                collected.append(_verify(matrix, Gf2Matrix(n, head + tail)))
            roots = tuple(collected)
        return RootEnumeration(matrix, roots, RootMethod.LPN_PARAMETRIZED)

    check_oracle_budget(n, budget)
    target = list(matrix.rows)
    found = tuple(
        _verify(matrix, Gf2Matrix(n, rows))
        for rows in iter_upper_triangular(n)
        if _gram_rows(rows, n) == target
    )
    return RootEnumeration(matrix, found, RootMethod.ORACLE)


def root_count(matrix: Gf2Matrix, *, budget: int = DEFAULT_ORACLE_BUDGET) -> int:
    """Count upper-triangular roots, without enumerating when LPN applies.

    For LPN inputs the count is the size of the Cholesky-root-of-zero
    family at n - rank, read off the recurrence table, so this stays fast
    for sizes far beyond anything enumerable.
    """
    _require_symmetric(matrix)
    if structural_predicates(matrix).is_lpn:
        corank = matrix.n - matrix.rank()
        if corank == 0:
            return 1
        return recurrence_table(RootFamily.CHOLESKY_ZERO, corank).total(corank)
    return len(all_roots(matrix, budget=budget).roots)


def has_root(matrix: Gf2Matrix, *, budget: int = DEFAULT_ORACLE_BUDGET) -> bool:
    """Decide whether any upper-triangular root exists.

    LPN shape settles it immediately (yes).  Otherwise the scan stops at
    the first hit, and only a full miss costs the whole candidate range.
    """
    _require_symmetric(matrix)
    if structural_predicates(matrix).is_lpn:
        return True
    check_oracle_budget(matrix.n, budget)
    target = list(matrix.rows)
    return any(
        _gram_rows(rows, matrix.n) == target
        for rows in iter_upper_triangular(matrix.n)
    )
