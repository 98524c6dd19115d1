"""Unit tests for family enumeration: oracle, bordered extensions, pairing."""

from collections import Counter

import pytest

from gf2roots.gf2 import Gf2Matrix
from gf2roots.rootsets import (
    MAX_STRUCTURED_N,
    OracleBudgetError,
    RootFamily,
    brute_force_enumerate,
    canonical_bijection,
    enumerate_bijection,
    shift_by_identity,
    structured_enumerate,
)

B, C, A = RootFamily.SQRT_ZERO, RootFamily.CHOLESKY_ZERO, RootFamily.SQRT_IDENTITY


def M(*lines: str) -> Gf2Matrix:
    return Gf2Matrix.from_strings(lines)


class TestFamilyBasics:
    def test_from_name(self):
        assert RootFamily.from_name("cholesky-zero") is C
        with pytest.raises(ValueError, match="unknown family"):
            RootFamily.from_name("sqrt-two")

    def test_contains(self):
        assert B.contains(M("01", "00"))
        assert not B.contains(M("01", "01"))
        assert C.contains(M("01", "01"))
        assert A.contains(Gf2Matrix.identity(3))
        assert A.contains(M("11", "01"))

    def test_contains_rejects_non_triangular(self):
        exchange = M("01", "10")
        assert exchange.multiply(exchange).is_identity()
        assert not A.contains(exchange)


class TestBruteForce:
    def test_size_one(self):
        assert [e.matrix.rows for e in brute_force_enumerate(1, B)] == [(0,)]
        assert [e.matrix.rows for e in brute_force_enumerate(1, A)] == [(1,)]

    def test_cholesky_zero_size_two(self):
        got = [(e.matrix, e.rank) for e in brute_force_enumerate(2, C)]
        assert got == [(Gf2Matrix.zero(2), 0), (M("01", "01"), 1)]

    def test_sqrt_zero_size_two(self):
        got = [(e.matrix, e.rank) for e in brute_force_enumerate(2, B)]
        assert got == [(Gf2Matrix.zero(2), 0), (M("01", "00"), 1)]

    def test_sqrt_identity_size_two(self):
        got = [(e.matrix, e.rank) for e in brute_force_enumerate(2, A)]
        assert got == [(Gf2Matrix.identity(2), 2), (M("11", "01"), 2)]

    def test_counter_order_is_ascending(self):
        # Entry (0,1) is counter bit 1 and (1,1) is bit 2, so the nonzero
        # member of the Cholesky family at n=2 sits at counter 6, after 0.
        mats = [e.matrix for e in brute_force_enumerate(2, C)]
        assert mats[0].is_zero()

    def test_budget_enforced_and_names_the_flag(self):
        with pytest.raises(OracleBudgetError, match=r"--oracle-budget"):
            brute_force_enumerate(7, B)
        with pytest.raises(OracleBudgetError, match="GF2ROOTS_ORACLE_BUDGET"):
            brute_force_enumerate(9, C, budget=8)

    def test_budget_override_allows_larger_n(self):
        # Only check that validation passes; do not run the scan.
        gen = brute_force_enumerate(7, B, budget=7)
        assert gen is not None

    def test_n_must_be_positive(self):
        with pytest.raises(ValueError):
            brute_force_enumerate(0, B)

    def test_members_satisfy_definitions(self, oracle):
        for family in (A, B, C):
            for entry in oracle.entries(3, family):
                assert family.contains(entry.matrix)
                assert entry.rank == entry.matrix.rank()

    def test_worker_pool_matches_serial(self):
        serial = [(e.matrix.rows, e.rank) for e in brute_force_enumerate(5, C)]
        pooled = [
            (e.matrix.rows, e.rank)
            for e in brute_force_enumerate(5, C, workers=2)
        ]
        assert serial == pooled


class TestStructured:
    @pytest.mark.parametrize("family", [B, C])
    def test_matches_oracle_through_n5(self, oracle, family):
        for n in range(1, 6):
            structured = sorted(
                (e.matrix.rows, e.rank) for e in structured_enumerate(n, family)
            )
            scanned = sorted(
                (e.matrix.rows, e.rank) for e in oracle.entries(n, family)
            )
            assert structured == scanned, f"divergence at n={n}"

    def test_sqrt_identity_matches_oracle_through_n5(self, oracle):
        for n in range(1, 6):
            structured = sorted(e.matrix.rows for e in structured_enumerate(n, A))
            scanned = sorted(e.matrix.rows for e in oracle.entries(n, A))
            assert structured == scanned

    def test_known_rank_distributions(self):
        dist4 = Counter(e.rank for e in structured_enumerate(4, B))
        assert dist4 == {0: 1, 1: 17, 2: 10}
        dist6 = Counter(e.rank for e in structured_enumerate(6, C))
        assert dist6 == {0: 1, 1: 129, 2: 1254, 3: 568}

    def test_totals_through_n8(self):
        totals = [sum(1 for _ in structured_enumerate(n, C)) for n in range(1, 9)]
        assert totals == [1, 2, 6, 28, 192, 1952, 28800, 618496]

    def test_sqrt_identity_ranks_are_full(self):
        for entry in structured_enumerate(4, A):
            assert entry.rank == 4 == entry.matrix.rank()

    def test_sqrt_zero_members_have_zero_diagonal(self):
        for entry in structured_enumerate(5, B):
            assert all(entry.matrix.entry(i, i) == 0 for i in range(5))

    def test_cholesky_zero_members_have_even_columns(self):
        # Diagonal entries need not vanish here; column weights are even.
        seen_nonzero_diagonal = False
        for entry in structured_enumerate(4, C):
            for j in range(4):
                assert entry.matrix.column(j).weight() % 2 == 0
            if any(entry.matrix.entry(i, i) for i in range(4)):
                seen_nonzero_diagonal = True
        assert seen_nonzero_diagonal

    def test_no_duplicates(self):
        mats = [e.matrix for e in structured_enumerate(6, B)]
        assert len(mats) == len(set(mats))

    def test_size_cap(self):
        with pytest.raises(ValueError, match=str(MAX_STRUCTURED_N)):
            structured_enumerate(MAX_STRUCTURED_N + 1, C)

    def test_deterministic_stream(self):
        first = [e.matrix.rows for e in structured_enumerate(5, C)]
        second = [e.matrix.rows for e in structured_enumerate(5, C)]
        assert first == second


class TestShift:
    def test_zero_goes_to_identity(self):
        assert shift_by_identity(Gf2Matrix.zero(3)).is_identity()

    def test_is_involution(self):
        m = M("0110", "0010", "0001", "0000")
        assert shift_by_identity(shift_by_identity(m)) == m

    def test_swaps_the_square_root_families(self, oracle):
        for n in range(1, 6):
            shifted = {shift_by_identity(e.matrix) for e in oracle.entries(n, B)}
            assert shifted == oracle.matrices(n, A)

    def test_preserves_membership_pointwise(self):
        u = M("01", "00")
        image = shift_by_identity(u)
        assert image == M("11", "01")
        assert image.multiply(image).is_identity()


class TestBijection:
    def test_smallest_nontrivial_pair(self):
        pairs = list(canonical_bijection(2, 1))
        assert len(pairs) == 1
        assert pairs[0].sqrt_zero == M("01", "00")
        assert pairs[0].cholesky_zero == M("01", "01")
        assert pairs[0].rank == 1

    def test_rank_zero_is_zero_matrix_pair(self):
        pairs = list(canonical_bijection(4, 0))
        assert pairs == [
            p for p in pairs if p.sqrt_zero.is_zero() and p.cholesky_zero.is_zero()
        ]
        assert len(pairs) == 1

    def test_stratum_counts(self):
        assert sum(1 for _ in canonical_bijection(4, 2)) == 10
        assert sum(1 for _ in canonical_bijection(6, 3)) == 568

    def test_empty_above_half(self):
        assert list(canonical_bijection(5, 3)) == []
        assert list(canonical_bijection(4, 4)) == []

    def test_rank_bounds_checked(self):
        with pytest.raises(ValueError, match="rank"):
            canonical_bijection(4, 5)

    def test_pairs_are_valid_and_exhaustive(self, oracle):
        for n in range(1, 6):
            pairs = list(enumerate_bijection(n))
            lefts = [p.sqrt_zero for p in pairs]
            rights = [p.cholesky_zero for p in pairs]
            assert len(set(lefts)) == len(pairs)
            assert len(set(rights)) == len(pairs)
            assert set(lefts) == oracle.matrices(n, B)
            assert set(rights) == oracle.matrices(n, C)
            for p in pairs:
                assert p.sqrt_zero.rank() == p.cholesky_zero.rank() == p.rank

    def test_extension_class_sizes_follow_the_recurrence_coefficients(self):
        # Each rank-r pair at size n-1 spawns 2^r rank-preserving children
        # and 2^(n-1-r) - 2^(r-1) rank-increasing ones on both sides.
        parents = Counter(p.rank for p in enumerate_bijection(5))
        children = Counter(p.rank for p in enumerate_bijection(6))
        for r in range(4):
            expected = parents.get(r, 0) * (1 << r)
            if r >= 1:
                expected += parents.get(r - 1, 0) * ((1 << (6 - r)) - (1 << (r - 1)))
            assert children.get(r, 0) == expected
