"""Rank census of n-times persymmetric matrices over F_2.

Each 2n x k matrix in the family is built from n blocks of k+1 bits.  Block
j contributes two rows: bits 0..k-1 and bits 1..k.  Run with

    python demos/01_census.py
"""

from persymrank import build_matrix, census, census_naive, rank
from persymrank.persym import CoeffTuple

# one block, k=4: the rows are a window sliding by one position
t = CoeffTuple.from_blocks([[1, 0, 1, 1, 0]], 4)
m = build_matrix(t)
print("block bits :", [t.alpha(i, 1) for i in range(1, 6)])
for r in range(m.rows):
    print("row", r, ":", [m.entry(r, c) for c in range(m.cols)])
print("rank       :", rank(m))
print()

# the census counts every tuple by rank
for n, k in [(1, 10), (2, 10), (3, 4)]:
    d = census(n, k)
    print(f"n={n} k={k:2d}  Gamma = {d.counts}   total = {d.total} = 2^{(k + 1) * n}")
print()

# the depth-first census and a per-tuple elimination agree
for n, k in [(2, 5), (4, 3)]:
    a, b = census(n, k), census_naive(n, k)
    print(f"n={n} k={k}  walk == per-tuple elimination: {a == b}")
