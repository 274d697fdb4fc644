from itertools import product

import pytest

from persymrank.census import BudgetExceeded
from persymrank.polysys import (
    F2Poly,
    coefficient_matrix,
    count_solutions_bruteforce,
    count_solutions_marginalized,
    poly_mul,
)


def P(*coeffs):
    return F2Poly.from_coeffs(coeffs)


def test_square_in_char_two():
    assert poly_mul(P(1, 1), P(1, 1)).bits == P(1, 0, 1).bits


def test_times_zero():
    assert poly_mul(P(1, 0, 1, 1), F2Poly(0, 3)).bits == 0


def test_hand_expansion():
    # (1+T)(1+T+T^3) = 1 + T^2 + T^3 + T^4
    assert poly_mul(P(1, 1), P(1, 1, 0, 1)).bits == P(1, 0, 1, 1, 1).bits


def test_degree_bound_enforced():
    with pytest.raises(ValueError):
        F2Poly(0b100, 1)


def _pure_python_count(q, n, k):
    """Literal enumeration with poly_mul, for tiny systems."""
    total = 0
    for ys in product(range(1 << k), repeat=q):
        for us in product(range(4), repeat=q * n):
            ok = True
            for j in range(n):
                acc = 0
                for i in range(q):
                    acc ^= poly_mul(F2Poly(ys[i], k - 1), F2Poly(us[i * n + j], 1)).bits
                if acc:
                    ok = False
                    break
            total += ok
    return total


def test_q1_n1_k1():
    assert count_solutions_bruteforce(1, 1, 1) == 5 == 2**2 + 2**1 - 1


@pytest.mark.parametrize("q,n,k", [(1, 1, 2), (2, 1, 1), (1, 2, 2), (2, 1, 2), (1, 3, 1)])
def test_bruteforce_matches_pure_python(q, n, k):
    assert count_solutions_bruteforce(q, n, k) == _pure_python_count(q, n, k)


def test_q2_n1_k2_cross_method():
    assert count_solutions_bruteforce(2, 1, 2) == count_solutions_marginalized(2, 1, 2)


def test_q1_n2_k3():
    assert count_solutions_marginalized(1, 2, 3) == 2**4 + 2**3 - 1


def test_r4_values_k10():
    assert count_solutions_marginalized(4, 1, 10) == 587 * 2**31
    assert count_solutions_marginalized(4, 2, 10) == 6361 * 2**28


def test_zero_assignment_always_counted():
    for q, n, k in [(1, 1, 1), (2, 2, 1), (3, 1, 2)]:
        assert count_solutions_bruteforce(q, n, k) >= 1


def test_monotone_in_parameters():
    base = count_solutions_marginalized(2, 2, 3)
    assert count_solutions_marginalized(2, 2, 4) >= base
    assert count_solutions_marginalized(3, 2, 3) >= base
    assert count_solutions_marginalized(2, 3, 3) >= base


def test_coefficient_matrix_layout():
    # q=1, n=1, k=2, U = 1 + T: Y0 + Y1 T -> Y0 + (Y0+Y1) T + Y1 T^2
    rows = coefficient_matrix([0b11], 1, 1, 2)[0]
    assert [int(r) for r in rows] == [0b01, 0b11, 0b10]


def test_workers_do_not_change_count():
    assert count_solutions_marginalized(3, 2, 4, workers=3) == count_solutions_marginalized(3, 2, 4)


def test_budgets():
    with pytest.raises(BudgetExceeded):
        count_solutions_bruteforce(3, 2, 6)
    with pytest.raises(BudgetExceeded):
        count_solutions_marginalized(4, 4, 10)
