"""Additive characters on Laurent tails and the exponential sum f_k.

A tail ``t = sum_{i>=1} alpha_i T^{-i}`` is kept to depth ``m`` (``k+1`` is
all f_k ever reads).  As a bitmask, bit ``d`` holds ``alpha_{d+1}``, which
is the coefficient that pairs with ``T^d`` when reading off the ``T^{-1}``
term of a product ``t * p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np

from .census import BudgetExceeded
from .gf2 import popcount_parity, rank
from .persym import build_matrix, tuple_from_index
from .polysys import F2Poly, poly_mul

FK_MAX_BITS = 24
_CHUNK = 1 << 20


@dataclass(frozen=True)
class LaurentTail:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 1:
            raise ValueError("tail depth must be >= 1")
        if any(c not in (0, 1) for c in self.coeffs):
            raise ValueError("coefficients must be 0 or 1")

    @classmethod
    def from_mask(cls, mask: int, depth: int) -> "LaurentTail":
        return cls(tuple((mask >> d) & 1 for d in range(depth)))

    @classmethod
    def monomial(cls, i: int, depth: int) -> "LaurentTail":
        """The element ``T^{-i}``."""
        return cls.from_mask(1 << (i - 1), depth)

    @property
    def depth(self) -> int:
        return len(self.coeffs)

    @property
    def mask(self) -> int:
        return sum(c << d for d, c in enumerate(self.coeffs))


def E_char(t: LaurentTail) -> int:
    return -1 if t.coeffs[0] else 1


def psi_char(ts: Sequence[LaurentTail]) -> int:
    out = 1
    for t in ts:
        out *= E_char(t)
    return out


def residue_coeff(t: LaurentTail, p: F2Poly) -> int:
    """Coefficient of ``T^{-1}`` in ``t * p``."""
    if p.degree >= t.depth:
        raise ValueError(f"deg p = {p.degree} needs tail depth > {p.degree}, have {t.depth}")
    return bin(p.bits & t.mask).count("1") & 1


def _check_tails(ts: Sequence[LaurentTail], k: int) -> None:
    for t in ts:
        if t.depth < k + 1:
            raise ValueError(f"tails must have depth >= k+1 = {k + 1}")
    if k + 2 * len(ts) > FK_MAX_BITS:
        raise BudgetExceeded(f"f_k limited to k+2n <= {FK_MAX_BITS}")


def f_k_reference(ts: Sequence[LaurentTail], k: int) -> int:
    """f_k by literal nested summation in pure Python (tiny sizes only)."""
    _check_tails(ts, k)
    total = 0
    for ybits in range(1 << k):
        y = F2Poly(ybits, k - 1)
        for us in product(range(4), repeat=len(ts)):
            term = 1
            for t, u in zip(ts, us):
                bit = residue_coeff(t, poly_mul(y, F2Poly(u, 1)))
                term *= -1 if bit else 1
            total += term
    return total


def _term_products(n: int, k: int, lo: int, hi: int) -> list[np.ndarray]:
    """``Y * U_j`` for every term index in ``[lo, hi)``; Y low, then U_1..U_n."""
    x = np.arange(lo, hi, dtype=np.uint64)
    y = x & np.uint64((1 << k) - 1)
    out = []
    for j in range(n):
        u = (x >> np.uint64(k + 2 * j)) & np.uint64(3)
        p = y * (u & np.uint64(1))
        p ^= (y << np.uint64(1)) * (u >> np.uint64(1))
        out.append(p)
    return out


def f_k_batch(masks: np.ndarray, k: int) -> np.ndarray:
    """f_k for a stack of tuples; ``masks[r, j]`` is the tail mask of t_j.

    Each of the ``2^(k+2n)`` terms is evaluated separately and summed.
    """
    masks = np.atleast_2d(np.asarray(masks, dtype=np.uint64))
    ntup, n = masks.shape
    nterms = 1 << (k + 2 * n)
    if k + 2 * n > FK_MAX_BITS:
        raise BudgetExceeded(f"f_k limited to k+2n <= {FK_MAX_BITS}")
    odd = np.zeros(ntup, dtype=np.int64)
    tchunk = min(nterms, _CHUNK)
    rchunk = max(1, _CHUNK // tchunk)
    for lo in range(0, nterms, tchunk):
        hi = min(lo + tchunk, nterms)
        prods = _term_products(n, k, lo, hi)
        for r0 in range(0, ntup, rchunk):
            sub = masks[r0:r0 + rchunk]
            acc = np.zeros((sub.shape[0], hi - lo), dtype=np.uint64)
            for j in range(n):
                acc ^= prods[j][None, :] & sub[:, j, None]
            odd[r0:r0 + rchunk] += popcount_parity(acc).sum(axis=1)
    return nterms - 2 * odd


def f_k_bruteforce(ts: Sequence[LaurentTail], k: int) -> int:
    """sum over deg Y <= k-1, deg U_j <= 1 of prod_j E(t_j Y U_j)."""
    _check_tails(ts, k)
    masks = np.array([[t.mask & ((1 << (k + 1)) - 1) for t in ts]], dtype=np.uint64)
    if not ts:
        return 1 << k
    return int(f_k_batch(masks, k)[0])


def tuple_masks(n: int, k: int) -> np.ndarray:
    """Tail masks of every coefficient tuple, in index order, shape ``(2^(n(k+1)), n)``."""
    idx = np.arange(1 << (n * (k + 1)), dtype=np.uint64)
    bmask = np.uint64((1 << (k + 1)) - 1)
    return np.stack([(idx >> np.uint64(j * (k + 1))) & bmask for j in range(n)], axis=1)


def tails_of(idx: int, n: int, k: int) -> list[LaurentTail]:
    t = tuple_from_index(idx, n, k)
    return [LaurentTail.from_mask(w, k + 1) for w in t.block_words()]


@dataclass
class IdentityReport:
    n: int
    k: int
    checked: int
    mismatches: list[tuple[int, int, int]]  # (tuple index, f_k, 2^(2n+k-rank))

    @property
    def passed(self) -> bool:
        return not self.mismatches


def verify_rank_identity(n: int, k: int) -> IdentityReport:
    """Check f_k = 2^(2n+k-rank) for every coefficient tuple."""
    if n == 0:
        return IdentityReport(0, k, 1, [] if f_k_bruteforce([], k) == 1 << k else [(0, 0, 1 << k)])
    f = f_k_batch(tuple_masks(n, k), k)
    bad = []
    for idx, val in enumerate(f):
        expect = 1 << (2 * n + k - rank(build_matrix(tuple_from_index(idx, n, k))))
        if int(val) != expect:
            bad.append((idx, int(val), expect))
    return IdentityReport(n, k, len(f), bad)


def r_from_expsum(q: int, n: int, k: int) -> Fraction:
    """Average of f_k^q over all cosets, i.e. the q-th power integral as a finite sum."""
    f = [int(v) for v in f_k_batch(tuple_masks(n, k), k)] if n else [1 << k]
    return Fraction(sum(v**q for v in f), 1 << (n * (k + 1)))
