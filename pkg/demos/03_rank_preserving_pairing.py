"""The canonical pairing between the two nilpotent families.

Square roots of zero and Cholesky roots of zero are equinumerous on every
rank stratum.  The pairing is built by growing both families size by size
and matching their bordered extensions class by class.
"""

from collections import Counter

from gf2roots import canonical_bijection, enumerate_bijection, shift_by_identity

print("=== every pair at n = 3 ===\n")
for pair in enumerate_bijection(3):
    b = " ".join(pair.sqrt_zero.to_strings())
    c = " ".join(pair.cholesky_zero.to_strings())
    print(f"rank {pair.rank}:  B-side [{b}]   <->   C-side [{c}]")
print()

print("=== strata line up at n = 6 ===\n")
strata = Counter(p.rank for p in enumerate_bijection(6))
for r, count in sorted(strata.items()):
    sample = next(canonical_bijection(6, r))
    assert sample.sqrt_zero.rank() == sample.cholesky_zero.rank() == r
    print(f"rank {r}: {count} pairs")
print()

print("=== one pair in full, rank 3 at n = 6 ===\n")
pair = next(canonical_bijection(6, 3))
left = pair.sqrt_zero.to_strings()
right = pair.cholesky_zero.to_strings()
print("square root of zero        cholesky root of zero")
for lrow, rrow in zip(left, right):
    print(f"   {lrow}                  {rrow}")
print()

print("=== and the B-side shifts onto square roots of the identity ===\n")
image = shift_by_identity(pair.sqrt_zero)
print("B + I =")
print(image.to_text())
print("squares to the identity:", image.multiply(image).is_identity())
