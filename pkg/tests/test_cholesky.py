"""Unit tests for GF(2) Cholesky factorization and root enumeration."""

import pytest

from gf2roots.cholesky import (
    RootMethod,
    all_roots,
    canonical_root,
    has_root,
    root_count,
    unique_root_full_rank,
)
from gf2roots.census import recurrence_table
from gf2roots.gf2 import Gf2Matrix, structural_predicates
from gf2roots.rootsets import OracleBudgetError, RootFamily


def M(*lines: str) -> Gf2Matrix:
    return Gf2Matrix.from_strings(lines)


class TestUniqueRootFullRank:
    def test_identity(self):
        result = unique_root_full_rank(Gf2Matrix.identity(4))
        assert result.root.is_identity()
        assert result.rank == 4
        assert result.residual_checked

    def test_two_by_two(self):
        result = unique_root_full_rank(M("11", "10"))
        assert result.root == M("11", "01")

    def test_root_reproduces_input(self):
        # Gram matrix of the invertible bidiagonal root, so minors are all 1.
        m = M("110", "101", "010")
        assert m.is_symmetric() and m.rank() == 3
        result = unique_root_full_rank(m)
        assert result.root == M("110", "011", "001")
        assert result.root.gram() == m

    def test_rejects_non_symmetric(self):
        with pytest.raises(ValueError, match="not symmetric"):
            unique_root_full_rank(M("01", "00"))

    def test_rejects_rank_deficient(self):
        with pytest.raises(ValueError, match="rank 1 < 2"):
            unique_root_full_rank(Gf2Matrix.diagonal([1, 0]))

    def test_rejects_full_rank_with_zero_minor(self):
        exchange = M("01", "10")
        with pytest.raises(ValueError, match="leading principal minor"):
            unique_root_full_rank(exchange)


class TestCanonicalRoot:
    def test_zero_matrix(self):
        result = canonical_root(Gf2Matrix.zero(3))
        assert result.root.is_zero()
        assert result.rank == 0

    def test_rank_one_projector(self):
        result = canonical_root(Gf2Matrix.diagonal([1, 0, 0]))
        assert result.root == Gf2Matrix.diagonal([1, 0, 0])
        assert result.rank == 1

    def test_full_rank_delegates(self):
        m = M("110", "101", "010")
        assert canonical_root(m).root == unique_root_full_rank(m).root

    def test_off_diagonal_block_solved(self):
        m = M("1100", "1000", "0000", "0000")
        assert m.is_symmetric()
        result = canonical_root(m)
        assert result.root.gram() == m
        assert result.root.rows[2:] == (0, 0)

    def test_rejects_non_lpn(self):
        with pytest.raises(ValueError, match="LPN"):
            canonical_root(Gf2Matrix.diagonal([0, 1]))

    def test_rejects_non_symmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            canonical_root(M("01", "00"))


class TestAllRoots:
    def test_zero_matrix_roots_are_the_family(self):
        enum = all_roots(Gf2Matrix.zero(2))
        assert enum.method is RootMethod.LPN_PARAMETRIZED
        assert [r.to_strings() for r in enum.roots] == [
            ["00", "00"],
            ["01", "01"],
        ]

    def test_full_rank_has_single_root(self):
        enum = all_roots(M("11", "10"))
        assert enum.method is RootMethod.LPN_PARAMETRIZED
        assert enum.roots == (M("11", "01"),)

    def test_rank_one_projector_has_two_roots(self):
        enum = all_roots(Gf2Matrix.diagonal([1, 0, 0]))
        assert len(enum.roots) == 2
        want = {
            Gf2Matrix.diagonal([1, 0, 0]),
            M("100", "001", "001"),
        }
        assert set(enum.roots) == want

    def test_non_lpn_falls_back_to_scan(self):
        enum = all_roots(Gf2Matrix.diagonal([0, 1]))
        assert enum.method is RootMethod.ORACLE
        assert set(enum.roots) == {M("01", "00"), M("00", "01")}

    def test_scan_can_come_up_empty(self):
        enum = all_roots(M("01", "10"))
        assert enum.method is RootMethod.ORACLE
        assert enum.roots == ()

    def test_all_roots_verified(self):
        m = Gf2Matrix.zero(4)
        enum = all_roots(m)
        assert len(enum.roots) == 28
        for root in enum.roots:
            assert root.gram() == m
            assert root.is_upper_triangular()

    def test_every_root_recovered_exhaustively(self, gram_roots):
        # Group all upper-triangular matrices by their Gram matrix, then
        # check all_roots returns exactly each group.  Every U therefore
        # round-trips: U is among the roots of U^T U.
        for n in (3, 4):
            by_gram = gram_roots.roots_by_gram(n)
            for gram_rows, root_rows in by_gram.items():
                enum = all_roots(Gf2Matrix(n, gram_rows))
                assert sorted(r.rows for r in enum.roots) == sorted(root_rows)

    def test_round_trip_on_the_parametrized_branch_at_n5(self, gram_roots):
        # At n=5 the oracle branch is exercised by the n<=4 sweep above;
        # here every LPN Gram matrix goes through the structured route.
        by_gram = gram_roots.roots_by_gram(5)
        checked = 0
        for gram_rows, root_rows in by_gram.items():
            matrix = Gf2Matrix(5, gram_rows)
            if not structural_predicates(matrix).is_lpn:
                continue
            enum = all_roots(matrix)
            assert enum.method is RootMethod.LPN_PARAMETRIZED
            assert sorted(r.rows for r in enum.roots) == sorted(root_rows)
            checked += 1
        assert checked > 100

    def test_budget_guards_the_scan(self):
        big = Gf2Matrix.diagonal([0, 1, 1, 1, 1, 1, 1, 1])
        with pytest.raises(OracleBudgetError):
            all_roots(big)

    def test_rejects_non_symmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            all_roots(M("010", "000", "000"))


class TestCountsAndExistence:
    def test_count_matches_enumeration_when_lpn(self):
        for m in (Gf2Matrix.zero(4), Gf2Matrix.diagonal([1, 0, 0]), M("11", "10")):
            assert root_count(m) == len(all_roots(m).roots)

    def test_count_matches_enumeration_when_not_lpn(self):
        m = Gf2Matrix.diagonal([0, 1])
        assert root_count(m) == 2 == len(all_roots(m).roots)

    def test_count_without_enumeration_at_large_size(self):
        # LPN with corank 40: the count comes straight from the table.
        zero40 = Gf2Matrix.zero(40)
        expected = recurrence_table(RootFamily.CHOLESKY_ZERO, 40).total(40)
        assert root_count(zero40) == expected
        assert expected > 1 << 300

    def test_has_root(self):
        assert has_root(Gf2Matrix.zero(3))
        assert has_root(Gf2Matrix.diagonal([0, 1]))
        assert not has_root(M("01", "10"))

    def test_full_rank_count_is_one(self):
        assert root_count(Gf2Matrix.identity(30)) == 1
