"""Unit tests for the counting routes and their cross-checks."""

import json

import pytest

from gf2roots.census import (
    CountTable,
    closed_form_term,
    cross_verify,
    identity_root_table,
    recurrence_table,
    split_closed_form,
    summand_range_check,
    unified_closed_form,
)
from gf2roots.rootsets import RootFamily

B, C, A = RootFamily.SQRT_ZERO, RootFamily.CHOLESKY_ZERO, RootFamily.SQRT_IDENTITY

KNOWN_TOTALS = [1, 2, 6, 28, 192, 1952, 28800, 618496, 19132416, 853508096]


class TestRecurrence:
    def test_known_totals(self):
        table = recurrence_table(C, 10)
        assert [table.total(n) for n in range(1, 11)] == KNOWN_TOTALS

    def test_known_strata(self):
        table = recurrence_table(B, 7)
        assert table.get(4, 0) == 1
        assert table.get(4, 1) == 17
        assert table.get(4, 2) == 10
        assert table.get(6, 3) == 568
        assert table.get(7, 3) == 19592

    def test_rank_zero_is_always_one(self):
        table = recurrence_table(C, 40)
        assert all(table.get(n, 0) == 1 for n in range(1, 41))

    def test_zero_above_half(self):
        table = recurrence_table(B, 12)
        for n in range(1, 13):
            for r in range(n // 2 + 1, n + 1):
                assert table.get(n, r) == 0

    def test_counts_are_ints_even_when_huge(self):
        table = recurrence_table(C, 64)
        for (_, _), v in table.counts.items():
            assert type(v) is int
        assert table.total(20) == 8995016610010996686943525374263296
        assert table.total(20) > 1 << 90

    def test_identity_family_rejected(self):
        with pytest.raises(ValueError, match="identity_root_table"):
            recurrence_table(A, 5)

    def test_identity_root_table_masses_at_full_rank(self):
        table = identity_root_table(6)
        assert table.get(6, 6) == 1952
        assert table.get(6, 3) == 0
        assert [n for n, r, _ in table.rows()] == list(range(1, 7))

    def test_nilpotent_tables_identical(self):
        assert recurrence_table(B, 16).counts == recurrence_table(C, 16).counts

    def test_max_n_validated(self):
        with pytest.raises(ValueError):
            recurrence_table(B, 0)

    def test_total_range_validated(self):
        with pytest.raises(ValueError, match="range"):
            recurrence_table(B, 4).total(5)


class TestClosedForms:
    def test_small_values_both_forms(self):
        for n, expected in enumerate(KNOWN_TOTALS, start=1):
            assert split_closed_form(n) == expected
            assert unified_closed_form(n) == expected

    def test_individual_terms(self):
        assert closed_form_term(5, 0).value == 320
        assert closed_form_term(5, -1).value == -128
        assert closed_form_term(6, 0).value == 2560
        assert closed_form_term(6, 1).value == 32
        assert closed_form_term(6, -1).value == -640

    def test_dead_term_skips_power(self):
        # The binomial difference vanishes here; the value must be an exact
        # zero even though the nominal exponent would be negative.
        term = closed_form_term(6, 2)
        assert term.binomial_difference == 0
        assert term.value == 0

    def test_edge_term_with_upper_index_n_plus_one(self):
        term = closed_form_term(4, -1)
        assert term.binomial_difference == -1
        assert term.value == -4

    def test_forms_match_recurrence_to_64(self):
        table = recurrence_table(C, 64)
        for n in range(1, 65):
            total = table.total(n)
            assert split_closed_form(n) == total
            assert unified_closed_form(n) == total

    def test_forms_match_each_other_to_200(self):
        for n in range(65, 201):
            assert split_closed_form(n) == unified_closed_form(n)

    def test_n_validated(self):
        with pytest.raises(ValueError):
            unified_closed_form(0)


class TestSummandRange:
    def test_window_formula(self):
        result = summand_range_check(6)
        assert (result.lo, result.hi) == (-2, 1)
        assert result.ok

    def test_all_sizes_to_200(self):
        for n in range(1, 201):
            assert summand_range_check(n).ok, f"offender at n={n}"

    def test_offender_detection_on_narrowed_window(self):
        # Shrinking the window by hand must expose the live index j=-1.
        result = summand_range_check(5)
        assert result.ok
        live = [j for j in range(-3, 4) if closed_form_term(5, j).value != 0]
        assert live == [-1, 0]


class TestTableFormats:
    def test_csv_shape(self):
        table = recurrence_table(C, 2)
        assert table.to_csv() == (
            "family,n,r,count\n"
            "cholesky-zero,1,0,1\n"
            "cholesky-zero,2,0,1\n"
            "cholesky-zero,2,1,1\n"
        )

    def test_csv_counts_are_decimal_strings(self):
        table = recurrence_table(B, 24)
        line = table.to_csv().splitlines()[-1]
        count = line.split(",")[-1]
        assert count == str(table.get(24, 12))
        assert count.isdigit()

    def test_json_obj_round_trips(self):
        obj = recurrence_table(C, 3).to_json_obj()
        parsed = json.loads(json.dumps(obj))
        assert parsed["family"] == "cholesky-zero"
        assert set(parsed) == {"family", "rows"}
        assert {(c["n"], c["r"]): int(c["count"]) for c in parsed["rows"]}[(3, 1)] == 5

    def test_identity_rows_only_full_rank(self):
        rows = list(identity_root_table(4).rows())
        assert rows == [(1, 1, 1), (2, 2, 2), (3, 3, 6), (4, 4, 28)]


class TestCrossVerify:
    def test_all_routes_agree_at_small_scale(self):
        report = cross_verify(max_oracle_n=4, max_formula_n=24)
        assert report.ok
        assert report.first_failure() is None
        names = [c.name for c in report.checks]
        assert "oracle-vs-recurrence[sqrt-zero]" in names
        assert "nilpotent-table-equality" in names

    def test_corrupted_cell_is_named(self):
        good = recurrence_table(B, 24)
        corrupted = dict(good.counts)
        corrupted[(19, 4)] += 1
        report = cross_verify(
            max_oracle_n=2,
            max_formula_n=24,
            table_sqrt_zero=CountTable(B, 24, corrupted),
        )
        assert not report.ok
        failure = report.first_failure()
        assert failure is not None
        assert "(n=19, r=4)" in failure.detail

    def test_corrupted_total_breaks_formula_check(self):
        good = recurrence_table(C, 16)
        corrupted = dict(good.counts)
        corrupted[(16, 8)] -= 1
        report = cross_verify(
            max_oracle_n=2,
            max_formula_n=16,
            table_cholesky_zero=CountTable(C, 16, corrupted),
        )
        failing = [c.name for c in report.checks if not c.passed]
        assert "recurrence-vs-closed-forms" in failing

    def test_formula_range_must_cover_oracle_range(self):
        with pytest.raises(ValueError, match="cover"):
            cross_verify(max_oracle_n=5, max_formula_n=4)
