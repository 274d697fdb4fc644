import numpy as np
import pytest

from persymrank import identities as ids
from persymrank.census import census
from persymrank.expsum import (
    E_char,
    LaurentTail,
    f_k_batch,
    f_k_bruteforce,
    f_k_reference,
    psi_char,
    r_from_expsum,
    residue_coeff,
    tails_of,
    tuple_masks,
    verify_rank_identity,
)
from persymrank.gf2 import rank
from persymrank.persym import CoeffTuple, build_matrix
from persymrank.polysys import F2Poly

T = LaurentTail


def test_E_char():
    assert E_char(T.from_mask(0, 3)) == 1
    assert E_char(T.monomial(1, 3)) == -1
    assert E_char(T.monomial(2, 3)) == 1


def test_psi_char():
    assert psi_char([]) == 1
    assert psi_char([T.monomial(1, 2), T.monomial(1, 2)]) == 1
    assert psi_char([T.monomial(1, 3), T.from_mask(0, 3), T.monomial(2, 3)]) == -1


def test_residue_coeff():
    t = T((1, 1, 0, 1))
    assert residue_coeff(t, F2Poly(1, 0)) == 1
    for j in range(4):
        assert residue_coeff(t, F2Poly(1 << j, j)) == t.coeffs[j]
    assert residue_coeff(T((1, 1)), F2Poly(0b11, 1)) == 0
    with pytest.raises(ValueError):
        residue_coeff(T((1, 1)), F2Poly(0b100, 2))


def test_zero_tails_give_full_count():
    for n, k in [(1, 3), (2, 2), (3, 4)]:
        assert f_k_bruteforce([T.from_mask(0, k + 1)] * n, k) == 2 ** (2 * n + k)


def test_single_tail_example():
    r = rank(build_matrix(CoeffTuple.from_blocks([[1, 0, 0, 0]], 3)))
    assert f_k_bruteforce([T.monomial(1, 4)], 3) == 2 ** (2 + 3 - r)


def test_vectorised_matches_reference():
    rng = np.random.default_rng(3)
    for n, k in [(1, 2), (2, 2), (1, 4), (2, 3)]:
        for _ in range(6):
            masks = [int(m) for m in rng.integers(0, 1 << (k + 1), size=n)]
            ts = [T.from_mask(m, k + 1) for m in masks]
            assert f_k_bruteforce(ts, k) == f_k_reference(ts, k)


def test_batch_matches_single():
    n, k = 2, 3
    f = f_k_batch(tuple_masks(n, k), k)
    for idx in (0, 5, 77, 200, 255):
        assert f[idx] == f_k_bruteforce(tails_of(idx, n, k), k)


def test_short_tail_rejected():
    with pytest.raises(ValueError):
        f_k_bruteforce([T.from_mask(1, 3)], 3)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 7) for k in range(1, 12) if n * (k + 1) <= 10])
def test_rank_identity_exhaustive(n, k):
    rep = verify_rank_identity(n, k)
    assert rep.passed, rep.mismatches[:5]
    assert rep.checked == 2 ** (n * (k + 1))


def test_power_of_two_range():
    n, k = 2, 4
    for v in f_k_batch(tuple_masks(n, k), k):
        v = int(v)
        assert v & (v - 1) == 0
        assert 2 ** (2 * n + k - min(2 * n, k)) <= v <= 2 ** (2 * n + k)


@pytest.mark.parametrize("n,k", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_average_reproduces_solution_counts(n, k):
    assert r_from_expsum(1, n, k) == ids.rhs_r1(n, k)
    for q in (2, 3):
        assert r_from_expsum(q, n, k) == ids.r_qnk(q, n, k, census(n, k))
