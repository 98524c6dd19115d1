"""Dense linear algebra over GF(2), the field with two elements.

Matrices here are square, with each row packed into a Python integer: bit j
of row i holds entry (i, j).  Arbitrary-precision ints make row operations
(XOR for addition, AND plus popcount parity for dot products) word-parallel
at any dimension, and enumeration code can treat whole rows as hashable
values.  Everything is exact; there is no floating point anywhere.

All public objects are immutable.  Operations return new values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "Gf2Matrix",
    "Gf2Vector",
    "StructuralFlags",
    "SubspaceBasis",
    "enumerate_subspace",
    "leading_principal_minors",
    "null_space",
    "solve_upper_triangular",
    "structural_predicates",
]


# ---------------------------------------------------------------------------
# Raw kernels on packed rows.  These are shared by the enumeration modules,
# which work on plain ints in their hot loops and only wrap results in
# dataclasses at the edges.
# ---------------------------------------------------------------------------


def _mul_rows(a_rows: Sequence[int], b_rows: Sequence[int]) -> list[int]:
    """Rows of A*B: row i of the product XORs the b-rows picked by a-row i."""
    out = []
    for row in a_rows:
        acc = 0
        m = row
        while m:
            acc ^= b_rows[(m & -m).bit_length() - 1]
            m &= m - 1
        out.append(acc)
    return out


def _transpose_rows(rows: Sequence[int], ncols: int) -> list[int]:
    out = [0] * ncols
    for i, row in enumerate(rows):
        bit = 1 << i
        m = row
        while m:
            out[(m & -m).bit_length() - 1] |= bit
            m &= m - 1
    return out


def _gram_rows(rows: Sequence[int], ncols: int) -> list[int]:
    """Rows of M^T M, accumulated as XORs of outer products row x row."""
    out = [0] * ncols
    for row in rows:
        m = row
        while m:
            out[(m & -m).bit_length() - 1] ^= row
            m &= m - 1
    return out


def _row_rank(rows: Sequence[int], ncols: int) -> int:
    work = list(rows)
    rank = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = next((i for i in range(rank, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for i in range(rank + 1, len(work)):
            if work[i] & bit:
                work[i] ^= prow
        rank += 1
    return rank


def _rref_rows(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero reduced rows, pivot columns)."""
    work = list(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        prow = work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= prow
        pivots.append(col)
        r += 1
    return work[:r], pivots


def _nullspace_rows(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis vectors (packed) of {x : M x = 0}, one per free column, ascending."""
    reduced, pivots = _rref_rows(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = 1 << free
        fbit = 1 << free
        for prow, pcol in zip(reduced, pivots):
            if prow & fbit:
                vec |= 1 << pcol
        basis.append(vec)
    return basis


def _span_values(basis: Sequence[int]) -> list[int]:
    """Every XOR combination of the basis vectors (2^dim values, unsorted)."""
    vals = [0]
    for b in basis:
        vals += [v ^ b for v in vals]
    return vals


# ---------------------------------------------------------------------------
# Public value types.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Gf2Vector:
    """A length-n bit vector; bit j of ``bits`` holds entry j."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("vector length must be at least 1")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits 0x{self.bits:x} do not fit in length {self.n}")

    @classmethod
    def zero(cls, n: int) -> "Gf2Vector":
        return cls(n, 0)

    @classmethod
    def from_entries(cls, entries: Sequence[int]) -> "Gf2Vector":
        bits = 0
        for j, e in enumerate(entries):
            if e not in (0, 1):
                raise ValueError(f"entry {j} is {e!r}, expected 0 or 1")
            bits |= e << j
        return cls(len(entries), bits)

    def entry(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise IndexError(f"entry index {j} out of range for length {self.n}")
        return (self.bits >> j) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def add(self, other: "Gf2Vector") -> "Gf2Vector":
        if other.n != self.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return Gf2Vector(self.n, self.bits ^ other.bits)

    def dot(self, other: "Gf2Vector") -> int:
        if other.n != self.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return (self.bits & other.bits).bit_count() & 1

    def to_entries(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.n)]


@dataclass(frozen=True)
class Gf2Matrix:
    """A square n-by-n matrix over GF(2) with packed integer rows."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.n < 1:
            raise ValueError("matrix dimension must be at least 1")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for i, row in enumerate(self.rows):
            if not 0 <= row < limit:
                raise ValueError(f"row {i} has bits outside columns 0..{self.n - 1}")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Gf2Matrix":
        return cls(n, (0,) * n)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "Gf2Matrix":
        vec = Gf2Vector.from_entries(entries)
        return cls(vec.n, tuple(((vec.bits >> i) & 1) << i for i in range(vec.n)))

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "Gf2Matrix":
        n = len(entries)
        rows = []
        for i, row in enumerate(entries):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
            packed = 0
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise ValueError(f"entry ({i}, {j}) is {e!r}, expected 0 or 1")
                packed |= e << j
            rows.append(packed)
        return cls(n, tuple(rows))

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "Gf2Matrix":
        """Parse one line per row, each a string of '0'/'1' characters."""
        n = len(lines)
        if n == 0:
            raise ValueError("matrix text is empty")
        rows = []
        for i, line in enumerate(lines):
            if len(line) != n:
                raise ValueError(
                    f"line {i + 1} has {len(line)} characters, expected {n} "
                    "(matrix text must be square)"
                )
            packed = 0
            for j, ch in enumerate(line):
                if ch == "1":
                    packed |= 1 << j
                elif ch != "0":
                    raise ValueError(
                        f"line {i + 1} column {j + 1}: {ch!r} is not '0' or '1'"
                    )
            rows.append(packed)
        return cls(n, tuple(rows))

    @classmethod
    def from_text(cls, text: str) -> "Gf2Matrix":
        """Parse the matrix text format: n lines of n '0'/'1' characters."""
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        return cls.from_strings(lines)

    # -- arithmetic ---------------------------------------------------------

    def multiply(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return Gf2Matrix(self.n, tuple(_mul_rows(self.rows, other.rows)))

    def add(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return Gf2Matrix(self.n, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix(self.n, tuple(_transpose_rows(self.rows, self.n)))

    def gram(self) -> "Gf2Matrix":
        """The Gram matrix of the columns, M^T M."""
        return Gf2Matrix(self.n, tuple(_gram_rows(self.rows, self.n)))

    def mul_vector(self, vec: Gf2Vector) -> Gf2Vector:
        if vec.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {vec.n}")
        bits = 0
        for i, row in enumerate(self.rows):
            bits |= ((row & vec.bits).bit_count() & 1) << i
        return Gf2Vector(self.n, bits)

    def rank(self) -> int:
        return _row_rank(self.rows, self.n)

    # -- inspection ---------------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(f"entry ({i}, {j}) out of range for dimension {self.n}")
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> Gf2Vector:
        return Gf2Vector(self.n, self.rows[i])

    def column(self, j: int) -> Gf2Vector:
        if not 0 <= j < self.n:
            raise IndexError(f"column {j} out of range for dimension {self.n}")
        bits = 0
        for i, row in enumerate(self.rows):
            bits |= ((row >> j) & 1) << i
        return Gf2Vector(self.n, bits)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def is_identity(self) -> bool:
        return all(row == 1 << i for i, row in enumerate(self.rows))

    def is_upper_triangular(self) -> bool:
        return all(row & ((1 << i) - 1) == 0 for i, row in enumerate(self.rows))

    def is_symmetric(self) -> bool:
        return list(self.rows) == _transpose_rows(self.rows, self.n)

    # -- formatting ---------------------------------------------------------

    def to_lists(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.n)] for row in self.rows]

    def to_strings(self) -> list[str]:
        return [
            "".join("1" if (row >> j) & 1 else "0" for j in range(self.n))
            for row in self.rows
        ]

    def to_text(self) -> str:
        """Render the matrix text format; every line newline-terminated."""
        return "".join(line + "\n" for line in self.to_strings())


@dataclass(frozen=True)
class SubspaceBasis:
    """An independent list of length-n vectors spanning a subspace of GF(2)^n."""

    n: int
    vectors: tuple[Gf2Vector, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vectors", tuple(self.vectors))
        if self.n < 1:
            raise ValueError("ambient dimension must be at least 1")
        for vec in self.vectors:
            if vec.n != self.n:
                raise ValueError(f"basis vector length {vec.n} != ambient {self.n}")
        packed = [vec.bits for vec in self.vectors]
        if _row_rank(packed, self.n) != len(packed):
            raise ValueError("basis vectors are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class StructuralFlags:
    """Shape facts about one matrix, computed together by structural_predicates."""

    is_upper_triangular: bool
    is_symmetric: bool
    is_lpn: bool


# ---------------------------------------------------------------------------
# Derived operations.
# ---------------------------------------------------------------------------


def null_space(matrix: Gf2Matrix) -> SubspaceBasis:
    """Basis of the right null space {x : M x = 0}.

    The basis has one vector per free column of the reduced echelon form,
    listed by ascending free-column index, so dim + rank = n always holds.
    """
    rows = _nullspace_rows(matrix.rows, matrix.n)
    return SubspaceBasis(matrix.n, tuple(Gf2Vector(matrix.n, b) for b in rows))


def enumerate_subspace(basis: SubspaceBasis) -> Iterator[Gf2Vector]:
    """Yield all 2^dim vectors spanned by the basis, without repeats.

    Order is by ascending coefficient word: combination k uses basis vector
    i exactly when bit i of k is set, for k = 0, 1, 2, ...  The zero vector
    therefore always comes first.
    """
    packed = [vec.bits for vec in basis.vectors]
    for word in range(1 << len(packed)):
        bits = 0
        m = word
        while m:
            bits ^= packed[(m & -m).bit_length() - 1]
            m &= m - 1
        yield Gf2Vector(basis.n, bits)


RhsLike = Union[Gf2Matrix, Sequence[Gf2Vector]]


def solve_upper_triangular(
    matrix: Gf2Matrix, rhs: RhsLike, *, transposed: bool = False
) -> Union[Gf2Matrix, list[Gf2Vector]]:
    """Solve M X = rhs, or M^T X = rhs when ``transposed`` is set.

    M must be upper triangular with an all-ones diagonal (so it is
    invertible and the system has exactly one solution).  The right-hand
    side is either a square matrix of the same dimension or a sequence of
    n row vectors of any common length; the result mirrors the input form.
    Back substitution handles the plain orientation, forward substitution
    the transposed one.
    """
    n = matrix.n
    if not matrix.is_upper_triangular():
        raise ValueError("coefficient matrix is not upper triangular")
    for i in range(n):
        if not (matrix.rows[i] >> i) & 1:
            raise ValueError(f"diagonal entry {i} is zero; matrix is not invertible")

    if isinstance(rhs, Gf2Matrix):
        if rhs.n != n:
            raise ValueError(f"dimension mismatch: {n} vs {rhs.n}")
        solved = _solve_unit_upper_rows(matrix.rows, n, list(rhs.rows), transposed)
        return Gf2Matrix(n, tuple(solved))

    vectors = list(rhs)
    if len(vectors) != n:
        raise ValueError(f"expected {n} right-hand-side rows, got {len(vectors)}")
    widths = {vec.n for vec in vectors}
    if len(widths) != 1:
        raise ValueError("right-hand-side rows have mixed lengths")
    width = widths.pop()
    solved = _solve_unit_upper_rows(matrix.rows, n, [v.bits for v in vectors], transposed)
    return [Gf2Vector(width, bits) for bits in solved]


def _solve_unit_upper_rows(
    u_rows: Sequence[int], n: int, rhs_rows: Sequence[int], transposed: bool
) -> list[int]:
    x = [0] * n
    if transposed:
        # U^T is lower triangular: substitute forward along its rows,
        # which are the columns of U.
        cols = _transpose_rows(u_rows, n)
        order: Iterable[int] = range(n)
        rows = cols
    else:
        order = reversed(range(n))
        rows = list(u_rows)
    for i in order:
        acc = rhs_rows[i]
        m = rows[i] ^ (1 << i)  # strictly off-diagonal bits of this row
        while m:
            acc ^= x[(m & -m).bit_length() - 1]
            m &= m - 1
        x[i] = acc
    return x


def leading_principal_minors(matrix: Gf2Matrix) -> tuple[int, ...]:
    """Determinants of the k-by-k leading blocks for k = 1..n.

    Over GF(2) the determinant is 1 exactly when the block has full rank,
    so each minor is computed as a rank check on the masked leading rows.
    """
    out = []
    for k in range(1, matrix.n + 1):
        mask = (1 << k) - 1
        sub = [row & mask for row in matrix.rows[:k]]
        out.append(1 if _row_rank(sub, k) == k else 0)
    return tuple(out)


def structural_predicates(matrix: Gf2Matrix) -> StructuralFlags:
    """Evaluate the shape predicates used across the package in one pass.

    ``is_lpn`` means the leading principal minors are 1 up to the rank and
    0 afterwards: det_k = 1 exactly for k <= rank(M).  A full-rank matrix
    in this form has all minors equal to 1.
    """
    rank = matrix.rank()
    minors = leading_principal_minors(matrix)
    is_lpn = all(minors[k - 1] == (1 if k <= rank else 0) for k in range(1, matrix.n + 1))
    return StructuralFlags(
        is_upper_triangular=matrix.is_upper_triangular(),
        is_symmetric=matrix.is_symmetric(),
        is_lpn=is_lpn,
    )
