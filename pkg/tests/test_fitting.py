from fractions import Fraction as F

import pytest

from persymrank import closedform as cf
from persymrank.census import census
from persymrank.fitting import (
    FitInconsistent,
    RationalLinearSystem,
    fit_gamma7,
    fit_k10_high_ranks,
    solve_exact,
)
from persymrank.poly import X, Y


def test_identity_system():
    sol = solve_exact(RationalLinearSystem([[1, 0], [0, 1]], [F(3, 4), -2]))
    assert sol.status == "unique" and sol.x == [F(3, 4), -2]


def test_a_of_k_system():
    sol = solve_exact(RationalLinearSystem([[256, 1], [512, 1]], [-381, 42291]))
    assert sol.x == [F(2667, 16), -43053]


def test_contradiction_is_reported():
    sol = solve_exact(RationalLinearSystem([[1, 1], [0, 0]], [1, 1], ["ok", "zero=one"]))
    assert sol.status == "inconsistent"
    assert sol.failing_rows == ["zero=one"]


def test_underdetermined():
    sol = solve_exact(RationalLinearSystem([[1, 1]], [2]))
    assert sol.status == "underdetermined" and sol.rank == 1


def test_overdetermined_consistent():
    sol = solve_exact(RationalLinearSystem([[1, 0], [0, 1], [1, 1]], [1, 2, 3]))
    assert sol.status == "unique" and sol.x == [1, 2]


@pytest.fixture(scope="module")
def g7():
    return fit_gamma7()


def test_fitted_alpha_beta_gamma(g7):
    assert g7.alpha == F(2667, 16) * X - 39228
    assert g7.gamma == F(31, 168) * X**3 - F(1519, 6) * X**2 + F(324976, 3) * X - F(300301312, 21)
    assert g7.beta == cf.BETA7


def test_fitted_coefficient_functions(g7):
    for name in "abcdefg":
        assert g7.coeffs[name] == cf.GAMMA7_COEFFS[name], name
    assert g7.gamma7 == cf.gamma_formula(7)


def test_fitted_gamma7_three_way(g7):
    fitted = cf.eval_cleared(g7.gamma7, 4, 8)
    assert fitted == cf.gamma7_special(n=4, k=8) == cf.eval_cleared(cf.GAMMA7_BY_K[8], 4)


def test_fitted_gamma7_matches_census(g7):
    for n, k in [(1, 8), (2, 8), (1, 9), (2, 9), (1, 10), (2, 10)]:
        assert cf.eval_cleared(g7.gamma7, n, k) == census(n, k)[7]


def test_gamma7_fit_flags_bad_input():
    bad = dict(cf.GAMMA7_BY_K)
    bad[9] = bad[9] + 1
    with pytest.raises(FitInconsistent):
        fit_gamma7(by_k=bad)


@pytest.fixture(scope="module")
def k10():
    return fit_k10_high_ranks()


def test_k10_rows(k10):
    assert k10.consistent
    assert len(k10.system.A) == 36 and k10.system.ncols == 26
    for j in (8, 9, 10):
        assert k10.rows[j] == cf.K10_TABLE[j]
    assert k10.coefficient(7, 8) == 171955
    assert k10.coefficient(0, 10) == -256 * 2**25


def test_k10_rank9_vanishes_for_small_n(k10):
    for n in range(1, 5):
        assert k10.rows[9](y=2**n) == 0


def test_k10_identities_hold_symbolically(k10):
    known = {i: cf.gamma_formula(i).subs_x(1024) for i in range(8)}
    rows = {**known, **k10.rows}
    zero = 0 * Y
    assert sum((rows[i] for i in range(11)), zero) == Y**11
    assert sum((rows[i] * 2 ** (10 - i) for i in range(11)), zero) == Y**11 + 1023 * Y**9
    assert sum((rows[i] * 2 ** (20 - 2 * i) for i in range(11)), zero) == (
        Y**11 + 3069 * Y**9 + 3066 * Y**8 + 1042440 * Y**7
    )


def test_k10_fit_reports_failing_equation():
    known = {i: cf.gamma_formula(i).subs_x(1024) for i in range(8)}
    known[7] = known[7] + Y**9
    with pytest.raises(FitInconsistent, match="Y\\^9"):
        fit_k10_high_ranks(known)
