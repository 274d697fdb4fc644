"""Exhaustive rank census of the persymmetric family.

``census`` walks the block tree depth-first.  Each node carries the echelon
basis of the rows placed so far, so elimination work done for a prefix is
shared by the whole subtree below it.  Nodes are processed in numpy batches:
a batch is a stack of bases, expanded by every possible next block at once.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

import numpy as np

from . import _parallel
from .gf2 import lowest_bit, rank_batch

log = logging.getLogger(__name__)

MAX_BITS = 34
DEFAULT_MAX_BITS = 28
NAIVE_MAX_BITS = 24

# elements per expanded batch; bounds peak memory at a few tens of MB
_BATCH = 1 << 17
_NAIVE_CHUNK = 1 << 16
# rough single-core throughput of the tree walk, used only for the refusal message
_LEAVES_PER_SECOND = 1.0e7


class BudgetExceeded(ValueError):
    """The requested enumeration is larger than the configured ceiling."""


@dataclass(frozen=True)
class RankDistribution:
    """``counts[i]`` is the number of coefficient tuples whose matrix has rank ``i``."""

    n: int
    k: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != min(2 * self.n, self.k) + 1:
            raise ValueError(
                f"expected {min(2 * self.n, self.k) + 1} counts for n={self.n}, k={self.k}"
            )
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")

    @property
    def max_rank(self) -> int:
        return min(2 * self.n, self.k)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i: int) -> int:
        """Gamma_i, with 0 for ranks beyond the family's bound."""
        if i < 0:
            raise IndexError(i)
        return self.counts[i] if i <= self.max_rank else 0

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "gamma": [str(c) for c in self.counts]}


def _check_args(n: int, k: int) -> None:
    if n < 0:
        raise ValueError("n must be >= 0")
    if not 1 <= k <= 63:
        raise ValueError("k must be in 1..63")


def cost_estimate(n: int, k: int) -> str:
    leaves = 1 << (n * (k + 1))
    secs = leaves / _LEAVES_PER_SECOND
    return f"{leaves} leaves (2^{n * (k + 1)}), roughly {secs:.3g} s single-core"


def _guard(n: int, k: int, force: bool) -> None:
    bits = n * (k + 1)
    if bits > MAX_BITS:
        raise BudgetExceeded(f"n(k+1) = {bits} exceeds hard limit {MAX_BITS}: {cost_estimate(n, k)}")
    if bits > DEFAULT_MAX_BITS and not force:
        raise BudgetExceeded(
            f"n(k+1) = {bits} exceeds default ceiling {DEFAULT_MAX_BITS}; "
            f"use --force (force=True) to run {cost_estimate(n, k)}"
        )


def _reduce(v: np.ndarray, rows: np.ndarray, piv: np.ndarray) -> np.ndarray:
    for t in range(rows.shape[1]):
        hit = ((v & piv[:, t]) != 0).astype(np.uint64)
        v = v ^ (rows[:, t] * hit)
    return v


def _insert(rows: np.ndarray, piv: np.ndarray, rank: np.ndarray, v: np.ndarray):
    """Insert one row per basis; returns new (rows, piv, rank) with one more slot."""
    v = _reduce(v, rows, piv)
    low = lowest_bit(v)
    hit = (rows & low[:, None]) != 0
    rows = rows ^ (v[:, None] * hit.astype(np.uint64))
    rows = np.concatenate([rows, v[:, None]], axis=1)
    piv = np.concatenate([piv, low[:, None]], axis=1)
    return rows, piv, rank + (v != 0)


def _compact(rows: np.ndarray, k: int):
    """Keep at most ``k`` slots: a basis in k columns has at most k nonzero rows."""
    if rows.shape[1] <= k:
        return rows, lowest_bit(rows)
    rows = -np.sort(-rows.astype(np.int64), axis=1)[:, :k].astype(np.uint64)
    return rows, lowest_bit(rows)


def _walk(rows, piv, rank, k: int, levels: int, counts: np.ndarray, lo: int, hi: int) -> None:
    """Place ``levels`` more blocks below every basis in the batch.

    Only block values in ``[lo, hi)`` are used at this level; deeper levels
    always range over all ``2^(k+1)`` values.
    """
    full = 1 << (k + 1)
    kmask = np.uint64((1 << k) - 1)
    width = hi - lo
    sc = min(width, _BATCH)
    pc = max(1, _BATCH // sc)
    P = rows.shape[0]
    for s0 in range(lo, hi, sc):
        blocks = np.arange(s0, min(s0 + sc, hi), dtype=np.uint64)
        nb = blocks.size
        r1 = blocks & kmask
        r2 = blocks >> np.uint64(1)
        for p0 in range(0, P, pc):
            sub = slice(p0, p0 + pc)
            np_ = rows[sub].shape[0]
            R = np.repeat(rows[sub], nb, axis=0)
            Q = np.repeat(piv[sub], nb, axis=0)
            rk = np.repeat(rank[sub], nb)
            v1 = np.tile(r1, np_)
            v2 = np.tile(r2, np_)
            if levels == 1:
                v1 = _reduce(v1, R, Q)
                v2 = _reduce(v2, R, Q)
                hit = ((v2 & lowest_bit(v1)) != 0).astype(np.uint64)
                v2 = v2 ^ (v1 * hit)
                final = rk + (v1 != 0) + (v2 != 0)
                counts += np.bincount(final, minlength=counts.size)[: counts.size]
            else:
                R, Q, rk = _insert(R, Q, rk, v1)
                R, Q, rk = _insert(R, Q, rk, v2)
                R, Q = _compact(R, k)
                _walk(R, Q, rk, k, levels - 1, counts, 0, full)


def _census_range(n: int, k: int, lo: int, hi: int) -> list[int]:
    counts = np.zeros(min(2 * n, k) + 1, dtype=np.int64)
    empty = np.zeros((1, 0), dtype=np.uint64)
    _walk(empty, empty.copy(), np.zeros(1, dtype=np.int64), k, n, counts, lo, hi)
    return [int(c) for c in counts]


def census(n: int, k: int, workers: int | None = None, force: bool = False) -> RankDistribution:
    """Exact rank distribution over all ``2^(n(k+1))`` coefficient tuples.

    The first block's values are split into contiguous chunks, one task
    each; per-chunk histograms are summed, so the result does not depend on
    ``workers``.
    """
    _check_args(n, k)
    _guard(n, k, force)
    if n == 0:
        return RankDistribution(0, k, (1,))
    workers = _parallel.default_workers() if workers is None else max(1, workers)
    full = 1 << (k + 1)
    parts = 1 if workers == 1 else 4 * workers
    chunks = [(n, k, lo, hi) for lo, hi in _parallel.split_range(0, full, parts)]
    t0 = time.perf_counter()
    partial = _parallel.map_chunks(_census_range, chunks, workers)
    counts = [sum(col) for col in zip(*partial)]
    log.debug("census n=%d k=%d: %.3fs", n, k, time.perf_counter() - t0)
    return RankDistribution(n, k, tuple(counts))


def census_naive(n: int, k: int) -> RankDistribution:
    """Same contract as :func:`census`, by fresh elimination of every matrix.

    No state is shared between tuples: each chunk of tuple indices is turned
    into full ``2n x k`` matrices and ranked column-by-column.
    """
    _check_args(n, k)
    bits = n * (k + 1)
    if bits > NAIVE_MAX_BITS:
        raise BudgetExceeded(f"census_naive limited to n(k+1) <= {NAIVE_MAX_BITS}, got {bits}")
    if n == 0:
        return RankDistribution(0, k, (1,))
    size = min(2 * n, k) + 1
    counts = np.zeros(size, dtype=np.int64)
    total = 1 << bits
    bmask = np.uint64((1 << (k + 1)) - 1)
    kmask = np.uint64((1 << k) - 1)
    for start in range(0, total, _NAIVE_CHUNK):
        idx = np.arange(start, min(start + _NAIVE_CHUNK, total), dtype=np.uint64)
        mats = np.empty((idx.size, 2 * n), dtype=np.uint64)
        for j in range(n):
            blk = (idx >> np.uint64(j * (k + 1))) & bmask
            mats[:, 2 * j] = blk & kmask
            mats[:, 2 * j + 1] = blk >> np.uint64(1)
        counts += np.bincount(rank_batch(mats, k), minlength=size)
    return RankDistribution(n, k, tuple(int(c) for c in counts))
