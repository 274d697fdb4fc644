from fractions import Fraction

import pytest

from persymrank import closedform as cf
from persymrank import identities as ids
from persymrank.census import RankDistribution, census
from persymrank.polysys import count_solutions_marginalized


def test_moment_weight_zero_counts_tuples():
    for n, k in [(1, 10), (2, 3), (3, 2)]:
        assert ids.moment(census(n, k), 0) == 2 ** ((k + 1) * n)


def test_first_moment_n1_k10():
    d = census(1, 10)
    assert ids.moment(d, -1) == Fraction(1) + Fraction(3, 2) + Fraction(2044, 4) == Fraction(1027, 2)
    assert ids.rhs_first_moment(1, 10) == Fraction(1027, 2)


def test_second_moment_n2_k3():
    assert ids.moment(census(2, 3), -2) == ids.rhs_second_moment(2, 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_closedform_k10_reports_pass(n):
    rep = ids.verify_moments(n, 10, "closedform")
    assert rep.passed, rep.failures()
    assert len(rep.checks) == 7


def test_census_report_n2_k5():
    assert ids.verify_moments(2, 5, "census").passed


def test_degenerate_n0():
    rep = ids.verify_moments(0, 6, "census")
    assert rep.passed
    assert rep.checks[0].lhs == 1


def test_unsupported_closedform_source():
    with pytest.raises(ids.UnsupportedSource):
        ids.verify_moments(4, 8, "closedform")
    with pytest.raises(ids.UnsupportedSource):
        ids.verify_moments(1, 3, "oracle")


def test_r_qnk_examples():
    assert ids.r_qnk(1, 3, 7, cf.closedform_counts(3, 7)) == 2**6 + 2**7 - 1 == 191
    assert ids.r_qnk(4, 1, 10, census(1, 10)) == 587 * 2**31
    assert ids.r_qnk(4, 2, 10, census(2, 10)) == 6361 * 2**28
    assert ids.r_qnk(4, 3, 10, cf.closedform_counts(3, 10)) == 1552553 * 2**21


def test_r_qnk_rejects_inconsistent_gammas():
    with pytest.raises(ids.InconsistentGammas):
        ids.r_qnk(1, 3, 2, (2, 21, 490))
    with pytest.raises(ValueError):
        ids.r_qnk(1, 2, 10, census(1, 10))


def test_r1_closed_form_grid():
    for n in range(1, 7):
        for k in range(1, 13):
            if n * (k + 1) <= 24:
                assert ids.r_qnk(1, n, k, census(n, k)) == ids.rhs_r1(n, k), (n, k)


def test_r_qnk_census_vs_closedform():
    for n, k in [(1, 10), (2, 10), (2, 9), (3, 7), (1, 4), (2, 6)]:
        for q in range(1, 5):
            assert ids.r_qnk(q, n, k, census(n, k)) == ids.r_qnk(q, n, k, cf.closedform_counts(n, k))


@pytest.mark.parametrize("q,n,k", [(q, n, k) for q in range(1, 5) for n in range(1, 4)
                                   for k in range(1, 8) if 2 * n * q <= 16 and n * (k + 1) <= 20])
def test_r_qnk_equals_direct_solution_count(q, n, k):
    assert ids.r_qnk(q, n, k, census(n, k)) == count_solutions_marginalized(q, n, k)


def test_r4_polynomial_and_typo_report():
    poly = ids.r4_k10_poly()
    assert poly.coeff(0, 2) == 67088385 * 2**8
    for n, target in ids.R4_TARGETS.items():
        assert poly(y=2**n) == target
    coef, g7 = ids.adjudicate_r4_typos()
    assert coef.consistent == [67088385]
    assert g7.consistent == [5117310]


def test_report_json_is_exact_strings():
    rep = ids.verify_moments(1, 10, "census").to_json()
    first = next(c for c in rep["checks"] if c["name"] == "first_moment")
    assert first["lhs"] == first["rhs"] == "1027/2"


def test_moment_accepts_plain_sequence():
    d = RankDistribution(1, 2, (1, 3, 4))
    assert ids.moment(d, -1) == ids.moment([1, 3, 4], -1)
