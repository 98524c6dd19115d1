"""Tour of the three root families at small sizes.

Builds each family two independent ways (brute-force scan and bordered
extension), confirms they agree, and prints the members at n = 3.
"""

from collections import Counter

from gf2roots import Gf2Matrix, RootFamily, brute_force_enumerate, structured_enumerate

N = 3

print(f"=== the three families at n = {N} ===\n")
for family in RootFamily:
    scanned = {e.matrix for e in brute_force_enumerate(N, family)}
    structured = {e.matrix for e in structured_enumerate(N, family)}
    assert scanned == structured, "the two enumeration routes disagree"
    print(f"{family.value}: {len(scanned)} members")
    for matrix in sorted(scanned, key=lambda m: m.rows):
        print("  " + "  ".join(matrix.to_strings()))
print()

print("=== rank strata grow with n ===\n")
for n in range(1, 7):
    strata = Counter(e.rank for e in structured_enumerate(n, RootFamily.SQRT_ZERO))
    pretty = "  ".join(f"r={r}:{c}" for r, c in sorted(strata.items()))
    print(f"n={n}: total {sum(strata.values()):>5}  ({pretty})")
print()

print("=== membership is cheap to check directly ===\n")
u = Gf2Matrix.from_strings(["011", "000", "000"])
print("U =")
print(u.to_text())
print("U*U is zero:", u.multiply(u).is_zero())
print("U^T*U is zero:", u.gram().is_zero())
assert u.multiply(u).is_zero() and not u.gram().is_zero()
print("so U is a square root of zero but not a Cholesky root of zero")
