"""The additive character sum f_k detects the rank.

For tails t_1..t_n of depth k+1, f_k equals 2^(2n+k-rank) where rank is
that of the matrix built from the tail coefficients.

    python demos/04_exponential_sum.py
"""

from collections import Counter

from persymrank.expsum import f_k_batch, r_from_expsum, tuple_masks, verify_rank_identity

n, k = 2, 4
f = f_k_batch(tuple_masks(n, k), k)
print(f"n={n} k={k}: values of f_k over all {len(f)} tuples")
for v, c in sorted(Counter(int(x) for x in f).items()):
    print(f"  f = 2^{v.bit_length() - 1:2d}  for {c} tuples")
print()

for n, k in [(1, 5), (2, 3), (3, 2)]:
    rep = verify_rank_identity(n, k)
    print(f"n={n} k={k}: {rep.checked} tuples, identity holds: {rep.passed}")
print()

print("average of f_k recovers R_1:", r_from_expsum(1, 2, 3), "=", 2**4 + 2**3 - 1)
