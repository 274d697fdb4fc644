"""Weighted sums of the rank counts, and what they count.

R_{q,n}^(k) is the number of solutions over F_2[T] of a q-fold bilinear
system.  It can be read off the rank counts, or counted directly.

    python demos/03_moments_and_solution_counts.py
"""

from persymrank import census, r_qnk, verify_moments
from persymrank import closedform as cf
from persymrank.polysys import count_solutions_bruteforce, count_solutions_marginalized

rep = verify_moments(2, 10)
for c in rep.checks:
    print(f"{c.name:22s} {'ok' if c.passed else 'FAIL'}  {c.lhs}")
print()

for n in (1, 2, 3):
    gammas = [cf.gamma_k10(i, n) for i in range(11)]
    v = r_qnk(4, n, 10, gammas)
    tz = (v & -v).bit_length() - 1
    print(f"R_4,{n}^(10) = {v >> tz} * 2^{tz}")
print()

# the direct counts need no formula at all
print("direct (4,1,10):", count_solutions_marginalized(4, 1, 10) == r_qnk(4, 1, 10, census(1, 10)))
print("direct (4,2,10):", count_solutions_marginalized(4, 2, 10) == r_qnk(4, 2, 10, census(2, 10)))
print("brute (2,1,3) vs marginal:", count_solutions_bruteforce(2, 1, 3), count_solutions_marginalized(2, 1, 3))
