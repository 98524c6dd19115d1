"""Cholesky factorization over GF(2) and the geometry of its failure.

Full-rank symmetric matrices factor exactly when all leading principal
minors are 1, and then uniquely.  Rank-deficient LPN matrices have a whole
family of roots, counted without enumeration.  Matrices outside LPN shape
can still surprise: diag(0, 1) has two roots, the exchange matrix none.
"""

from gf2roots import (
    Gf2Matrix,
    all_roots,
    canonical_root,
    has_root,
    root_count,
    unique_root_full_rank,
)

print("=== the unique root of a full-rank matrix ===\n")
m = Gf2Matrix.from_strings(["110", "101", "010"])
result = unique_root_full_rank(m)
print("M =")
print(m.to_text())
print("U =")
print(result.root.to_text())
assert result.root.gram() == m
print("U^T U reproduces M exactly\n")

print("=== a singular LPN matrix: roots form a family ===\n")
proj = Gf2Matrix.diagonal([1, 0, 0])
enumeration = all_roots(proj)
print(f"diag(1,0,0) has {len(enumeration.roots)} roots ({enumeration.method.value}):")
for root in enumeration.roots:
    print("  " + "  ".join(root.to_strings()))
print(f"canonical root picks the zero tail: rows {canonical_root(proj).root.to_strings()}")
print()

print("=== counting without enumerating ===\n")
zero = Gf2Matrix.zero(30)
print(f"the zero matrix at n=30 has {root_count(zero)} roots")
print("(that integer is exact; nothing was enumerated)\n")

print("=== outside LPN shape anything can happen ===\n")
d01 = Gf2Matrix.diagonal([0, 1])
print(f"diag(0,1): not LPN, yet {root_count(d01)} roots:")
for root in all_roots(d01).roots:
    print("  " + "  ".join(root.to_strings()))
exchange = Gf2Matrix.from_strings(["01", "10"])
print(f"exchange matrix: full rank, minor test fails, has_root = {has_root(exchange)}")
