"""Recovering polynomial coefficients from a handful of exact values.

    python demos/05_fitting.py
"""

from persymrank import closedform as cf
from persymrank.fitting import RationalLinearSystem, fit_gamma7, fit_k10_high_ranks, solve_exact

# a(X) is linear in X; two values pin it down
sol = solve_exact(RationalLinearSystem([[256, 1], [512, 1]], [-381, 42291], col_labels=["slope", "const"]))
slope, const = sol.x
print("a(X) =", slope, "* X", "-" if const < 0 else "+", abs(const))

g7 = fit_gamma7()
print("alpha =", g7.alpha)
print("beta  =", g7.beta)
print("gamma =", g7.gamma)
print("matches printed Gamma_7:", g7.gamma7 == cf.gamma_formula(7))
print()

k10 = fit_k10_high_ranks()
print(f"k=10 high ranks: {len(k10.system.A)} equations, {k10.system.ncols} unknowns,",
      "consistent" if k10.consistent else "INCONSISTENT")
for j in (8, 9, 10):
    print(f"  Gamma_{j} =", k10.rows[j])
