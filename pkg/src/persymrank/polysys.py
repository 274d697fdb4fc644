"""Solution counts for the bilinear system  sum_i Y_i U_j^{(i)} = 0  (j = 1..n) over F_2[T].

Unknowns: q polynomials Y_i with deg Y_i <= k-1 and qn polynomials
U_j^{(i)} with deg <= 1.  Two independent counters are provided:

* :func:`count_solutions_bruteforce` enumerates every assignment and
  multiplies the polynomials out.
* :func:`count_solutions_marginalized` fixes the U's, builds the matrix of
  the linear map Y -> (products), and adds ``2^(qk - rank)``.

Assignment index layout (both counters): ``Y_i`` occupies bits
``[i*k, (i+1)*k)`` and ``U_j^{(i)}`` the two bits starting at
``q*k + 2*(i*n + j)`` (0-based i, j).  The marginalized counter enumerates
only the U part, with ``U_j^{(i)}`` at bit ``2*(i*n + j)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _parallel
from .census import BudgetExceeded
from .gf2 import rank_batch

BRUTEFORCE_MAX_BITS = 26
MARGINALIZED_MAX_BITS = 26
_CHUNK = 1 << 16


@dataclass(frozen=True)
class F2Poly:
    """Polynomial over F_2; bit ``d`` of ``bits`` is the coefficient of T^d."""

    bits: int
    bound: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> (self.bound + 1):
            raise ValueError(f"coefficients above degree bound {self.bound}")

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    @classmethod
    def from_coeffs(cls, coeffs, bound: int | None = None) -> "F2Poly":
        bits = sum((c & 1) << d for d, c in enumerate(coeffs))
        return cls(bits, len(coeffs) - 1 if bound is None else bound)


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-packed polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mul(a: F2Poly, b: F2Poly) -> F2Poly:
    return F2Poly(clmul(a.bits, b.bits), a.bound + b.bound)


def _check(q: int, n: int, k: int) -> None:
    if q < 1 or n < 0 or k < 1:
        raise ValueError("need q >= 1, n >= 0, k >= 1")
    if q * k > 63:
        raise ValueError("q*k must fit in one 64-bit word")


def count_solutions_bruteforce(q: int, n: int, k: int) -> int:
    """Count all assignments satisfying the system, by direct multiplication."""
    _check(q, n, k)
    bits = q * (k + 2 * n)
    if bits > BRUTEFORCE_MAX_BITS:
        raise BudgetExceeded(f"brute force limited to q(k+2n) <= {BRUTEFORCE_MAX_BITS}, got {bits}")
    ymask = np.uint64((1 << k) - 1)
    umask = np.uint64(3)
    total = 1 << bits
    count = 0
    for start in range(0, total, _CHUNK):
        x = np.arange(start, min(start + _CHUNK, total), dtype=np.uint64)
        ys = [(x >> np.uint64(i * k)) & ymask for i in range(q)]
        ok = np.ones(x.size, dtype=bool)
        for j in range(n):
            acc = np.zeros(x.size, dtype=np.uint64)
            for i in range(q):
                u = (x >> np.uint64(q * k + 2 * (i * n + j))) & umask
                for d in range(2):
                    acc ^= (ys[i] << np.uint64(d)) * ((u >> np.uint64(d)) & np.uint64(1))
            ok &= acc == 0
        count += int(ok.sum())
    return count


def coefficient_matrix(u_bits: np.ndarray, q: int, n: int, k: int) -> np.ndarray:
    """Matrix of Y -> (U Y) for each U assignment, shape ``(N, n(k+1))``.

    Row ``j*(k+1) + d`` is output coefficient ``T^d`` of equation ``j``;
    column ``i*k + e`` is coefficient ``T^e`` of ``Y_i``.  The entry is the
    coefficient ``T^(d-e)`` of ``U_j^{(i)}``.
    """
    u_bits = np.asarray(u_bits, dtype=np.uint64)
    rows = np.zeros((u_bits.size, n * (k + 1)), dtype=np.uint64)
    for j in range(n):
        for i in range(q):
            u = (u_bits >> np.uint64(2 * (i * n + j))) & np.uint64(3)
            for c in range(2):
                coef = (u >> np.uint64(c)) & np.uint64(1)
                for e in range(k):
                    rows[:, j * (k + 1) + e + c] |= coef << np.uint64(i * k + e)
    return rows


def _marginal_range(q: int, n: int, k: int, lo: int, hi: int) -> list[int]:
    hist = np.zeros(q * k + 1, dtype=np.int64)
    for start in range(lo, hi, _CHUNK):
        u = np.arange(start, min(start + _CHUNK, hi), dtype=np.uint64)
        ranks = rank_batch(coefficient_matrix(u, q, n, k), q * k)
        hist += np.bincount(ranks, minlength=hist.size)
    return [int(h) for h in hist]


def count_solutions_marginalized(q: int, n: int, k: int, workers: int | None = None) -> int:
    """``sum over U of 2^(qk - rank(M_U))``: for fixed U the Y's form a kernel."""
    _check(q, n, k)
    bits = 2 * n * q
    if bits > MARGINALIZED_MAX_BITS:
        raise BudgetExceeded(f"marginalized count limited to 2nq <= {MARGINALIZED_MAX_BITS}, got {bits}")
    if n == 0:
        return 2 ** (q * k)
    workers = _parallel.default_workers() if workers is None else max(1, workers)
    parts = 1 if workers == 1 else 4 * workers
    chunks = [(q, n, k, lo, hi) for lo, hi in _parallel.split_range(0, 1 << bits, parts)]
    hists = _parallel.map_chunks(_marginal_range, chunks, workers)
    hist = [sum(col) for col in zip(*hists)]
    return sum(c << (q * k - r) for r, c in enumerate(hist))
