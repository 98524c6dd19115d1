"""Exact counting three ways: recurrence, split closed form, unified form.

Everything is arbitrary-precision integer arithmetic; the counts pass
2^100 before n = 20 and the three routes still agree bit for bit.
"""

from gf2roots import (
    RootFamily,
    closed_form_term,
    recurrence_table,
    split_closed_form,
    summand_range_check,
    unified_closed_form,
)

print("=== the recurrence table, stratified by rank ===\n")
table = recurrence_table(RootFamily.CHOLESKY_ZERO, 12)
for n in range(1, 13):
    cells = "  ".join(f"r{r}={table.get(n, r)}" for r in range(n // 2 + 1))
    print(f"n={n:>2}: {cells}")
print()

print("=== three routes, one answer ===\n")
big = recurrence_table(RootFamily.CHOLESKY_ZERO, 64)
for n in (8, 16, 20, 32, 64):
    a, b, c = big.total(n), split_closed_form(n), unified_closed_form(n)
    assert a == b == c
    print(f"n={n:>2}: {a}  ({a.bit_length()} bits)")
print()

print("=== the closed form is a short signed sum ===\n")
n = 20
live = [(j, closed_form_term(n, j)) for j in range(-4, 4)]
for j, term in live:
    if term.value:
        print(f"  j={j:+d}: binomial diff {term.binomial_difference:+d}, term {term.value:+d}")
window = summand_range_check(n)
print(f"live indices stay inside [{window.lo}, {window.hi}]: {window.ok}")
