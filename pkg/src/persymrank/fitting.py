"""Recover the Gamma_7 coefficient functions and the k = 10 high-rank rows
by exact linear algebra over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import closedform
from .poly import X, Y, ExactPoly, frac_str


class FitInconsistent(ArithmeticError):
    """Fitting inputs contradict each other (usually a transcription error)."""


@dataclass
class RationalLinearSystem:
    A: list[list[Fraction]]
    b: list[Fraction]
    row_labels: list[str] = field(default_factory=list)
    col_labels: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.A = [[Fraction(v) for v in row] for row in self.A]
        self.b = [Fraction(v) for v in self.b]
        if len(self.A) != len(self.b):
            raise ValueError("A and b have different row counts")
        ncols = {len(r) for r in self.A}
        if len(ncols) > 1:
            raise ValueError("ragged coefficient matrix")
        if not self.row_labels:
            self.row_labels = [f"eq{i}" for i in range(len(self.A))]
        if not self.col_labels:
            self.col_labels = [f"x{j}" for j in range(self.ncols)]

    @property
    def ncols(self) -> int:
        return len(self.A[0]) if self.A else len(self.col_labels)


@dataclass
class Solution:
    status: str  # "unique", "underdetermined" or "inconsistent"
    rank: int
    x: list[Fraction] | None
    failing_rows: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.status != "inconsistent"


def solve_exact(sys: RationalLinearSystem) -> Solution:
    """Gauss-Jordan elimination on the augmented matrix, in exact arithmetic.

    Inconsistent systems are reported (with the labels of the equations that
    reduce to ``0 = c``, ``c != 0``), not raised.
    """
    ncols = sys.ncols
    M = [row[:] + [rhs] for row, rhs in zip(sys.A, sys.b)]
    origin = list(range(len(M)))
    r = 0
    pivcols = []
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        origin[r], origin[p] = origin[p], origin[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivcols.append(c)
        r += 1
    bad = [sys.row_labels[origin[i]] for i in range(r, len(M)) if M[i][ncols] != 0]
    if bad:
        return Solution("inconsistent", r, None, bad)
    if r < ncols:
        return Solution("underdetermined", r, None)
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivcols):
        x[c] = M[i][ncols]
    return Solution("unique", r, x)


def _solve_unique(sys: RationalLinearSystem) -> list[Fraction]:
    sol = solve_exact(sys)
    if sol.status != "unique":
        raise FitInconsistent(f"{sol.status} system; failing equations: {sol.failing_rows}")
    return sol.x


# ---------------------------------------------------------------------------
# Gamma_7 for general k
# ---------------------------------------------------------------------------

VANISHING = (Y - 1) * (Y - 2) * (Y - 4) * (Y - 8)  # Gamma_7 = 0 for n = 0..3
LEAD7 = 255


@dataclass
class Gamma7Fit:
    a_slope: Fraction
    a_intercept: Fraction
    alpha: ExactPoly
    beta: ExactPoly
    gamma: ExactPoly
    coeffs: dict[str, ExactPoly]  # a(k) .. g(k)
    gamma7: ExactPoly

    def to_json(self) -> dict:
        def xp(p: ExactPoly) -> list[str]:
            return [frac_str(c) for c in p.x_coeffs()]
        return {
            "a_of_k": {"slope": frac_str(self.a_slope), "intercept": frac_str(self.a_intercept)},
            "alpha": xp(self.alpha), "beta": xp(self.beta), "gamma": xp(self.gamma),
            "coeffs": {name: xp(p) for name, p in self.coeffs.items()},
            "x_coeffs_lowest_first": True,
        }


def _x_poly_columns(polys: Sequence[ExactPoly]) -> int:
    return max(p.x_degree() for p in polys) + 1


def fit_gamma7(
    by_n: dict[int, ExactPoly] | None = None,
    by_k: dict[int, ExactPoly] | None = None,
) -> Gamma7Fit:
    """Fit Gamma_7 = V(Y) (255 Y^3 + alpha Y^2 + beta Y + gamma), V vanishing at n=0..3.

    ``a(k)`` (the Y^6 coefficient) is taken linear in X and fitted to the
    k = 8, 9 polynomials; beta and gamma come from the n = 4, 5 values, one
    2x2 system per power of X.
    """
    by_n = closedform.GAMMA7_BY_N if by_n is None else by_n
    by_k = closedform.GAMMA7_BY_K if by_k is None else by_k
    v = VANISHING.y_coeffs()  # lowest first, monic degree 4

    for kk, poly in by_k.items():
        if poly.coeff(0, 7) != LEAD7:
            raise FitInconsistent(f"leading coefficient at k={kk} is {poly.coeff(0, 7)}, not {LEAD7}")

    ks = sorted(by_k)[:2]
    slope, intercept = _solve_unique(RationalLinearSystem(
        [[2**kk, 1] for kk in ks],
        [by_k[kk].coeff(0, 6) for kk in ks],
        [f"a({kk})" for kk in ks], ["slope", "intercept"],
    ))
    a_k = slope * X + intercept
    # Y^6 coefficient of V * (255 Y^3 + alpha Y^2 + ...) is alpha + v[3]*255
    alpha = a_k - v[3] * LEAD7

    # n = 4, 5: V(2^n) * (255 Y^3 + alpha Y^2 + beta Y + gamma) = Gamma_7(n)
    rows, rhs = [], []
    for nn in (4, 5):
        yv = 2**nn
        scaled = by_n[nn] / VANISHING(y=yv) - LEAD7 * yv**3 - alpha * yv**2
        rows.append((yv, scaled))
    ncol = _x_poly_columns([r[1] for r in rows])
    beta_c, gamma_c = [], []
    for m in range(ncol):
        b_m, g_m = _solve_unique(RationalLinearSystem(
            [[yv, 1] for yv, _ in rows],
            [s.coeff(m, 0) for _, s in rows],
            [f"n={nn} X^{m}" for nn in (4, 5)], [f"beta_{m}", f"gamma_{m}"],
        ))
        beta_c.append(b_m)
        gamma_c.append(g_m)
    beta = ExactPoly.from_x_coeffs(beta_c)
    gamma = ExactPoly.from_x_coeffs(gamma_c)

    cubic = [gamma, beta, alpha, ExactPoly.const(LEAD7)]
    names = "gfedcba"
    coeffs = {}
    for deg, name in enumerate(names):
        coeffs[name] = sum((v[i] * cubic[deg - i] for i in range(len(v)) if 0 <= deg - i < 4),
                           ExactPoly())
    gamma7 = LEAD7 * Y**7 + sum((coeffs[name] * Y**deg for deg, name in enumerate(names)),
                                ExactPoly())
    fit = Gamma7Fit(slope, intercept, alpha, beta, gamma,
                    {nm: coeffs[nm] for nm in "abcdefg"}, gamma7)

    for kk, poly in by_k.items():
        if gamma7.subs_x(2**kk) != poly:
            raise FitInconsistent(f"fitted Gamma_7 disagrees with the k={kk} polynomial")
    return fit


# ---------------------------------------------------------------------------
# k = 10, ranks 8..10
# ---------------------------------------------------------------------------

K10_TARGETS = (
    Y**11,
    Y**11 + 1023 * Y**9,
    Y**11 + 3069 * Y**9 + 3066 * Y**8 + 1042440 * Y**7,
)


def _weight(line: int, i: int) -> int:
    return 2 ** (line * (10 - i))


# pinned coefficients: rank -> {Y power: value}; the top power of each row included
K10_PINNED = {8: {8: 511}, 9: {9: 1023}, 10: {11: 1, 10: 0, 9: -1023}}


@dataclass
class K10Fit:
    rows: dict[int, ExactPoly]
    system: RationalLinearSystem
    solution: Solution

    @property
    def consistent(self) -> bool:
        return self.solution.status == "unique"

    def coefficient(self, i: int, j: int) -> Fraction:
        """a_i^{(j)}: coefficient of Y^i in the rank-j row."""
        return self.rows[j].coeff(0, i)

    def to_json(self) -> dict:
        return {
            "consistent": self.consistent,
            "equations": len(self.system.A),
            "unknowns": self.system.ncols,
            "rank": self.solution.rank,
            "rows": {str(j): [frac_str(c) for c in p.y_coeffs()] for j, p in self.rows.items()},
            "y_coeffs_lowest_first": True,
        }


def fit_k10_high_ranks(known: dict[int, ExactPoly] | None = None) -> K10Fit:
    """Solve for the rank 8, 9, 10 rows at k = 10 by matching Y-coefficients.

    ``known`` maps ranks 0..7 to Y-polynomials; by default they come from the
    general-k formulas at X = 2^10.  The three weighted sums give 36 equations
    in 26 unknowns; an inconsistent system raises :class:`FitInconsistent`.
    """
    if known is None:
        known = {i: closedform.gamma_formula(i).subs_x(2**10) for i in range(8)}
    unknowns = [(j, m) for j in (8, 9, 10) for m in range(12)
                if m not in K10_PINNED[j] and m <= max(K10_PINNED[j])]
    col = {u: c for c, u in enumerate(unknowns)}
    A, b, labels = [], [], []
    for line, target in enumerate(K10_TARGETS):
        for m in range(12):
            row = [Fraction(0)] * len(unknowns)
            rhs = target.coeff(0, m) - sum(_weight(line, i) * p.coeff(0, m) for i, p in known.items())
            for j in (8, 9, 10):
                if (j, m) in col:
                    row[col[(j, m)]] += _weight(line, j)
                else:
                    rhs -= _weight(line, j) * K10_PINNED[j].get(m, 0)
            A.append(row)
            b.append(rhs)
            labels.append(f"weighted sum {line + 1}, Y^{m}")
    sys = RationalLinearSystem(A, b, labels, [f"a_{m}^({j})" for j, m in unknowns])
    sol = solve_exact(sys)
    if sol.status != "unique":
        raise FitInconsistent(f"k=10 system is {sol.status}; failing: {sol.failing_rows}")
    rows = {}
    for j in (8, 9, 10):
        coeffs = dict(K10_PINNED[j])
        for (jj, m), c in col.items():
            if jj == j:
                coeffs[m] = sol.x[c]
        rows[j] = ExactPoly({(0, m): v for m, v in coeffs.items()})
    return K10Fit(rows, sys, sol)
