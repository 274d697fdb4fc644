"""Closed-form rank counts as polynomials in X = 2^k and Y = 2^n.

    python demos/02_closed_forms.py
"""

from persymrank import closedform as cf
from persymrank.census import census

for i in range(4):
    print(f"Gamma_{i}(X, Y) =", cf.gamma_formula(i))
print()

# the formulas only hold once k is large enough for the rank in question
print("validity (rank: smallest k) :", cf.VALIDITY_MIN_K)
try:
    cf.gamma_general(5, 3, 4)
except cf.FormulaNotAsserted as err:
    print("refused:", err)
print()

n, k = 3, 7
d = census(n, k)
print(f"n={n} k={k}")
print("  census :", d.counts)
print("  formula:", tuple(cf.gamma_general(i, n, k) for i in range(d.max_rank + 1)))
print()

# the k=10 table covers ranks 8..10 as well
print("k=10, n=1..5:")
for n in range(1, 6):
    print(" ", n, [cf.gamma_k10(i, n) for i in range(min(2 * n, 10) + 1)])
