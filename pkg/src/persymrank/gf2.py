"""Bit-packed GF(2) matrices, rank, and an incremental echelon basis.

Rows are Python ints (bit ``c`` is the entry in column ``c``); a row never
exceeds one 64-bit word.  The batched helpers operate on ``uint64`` numpy
arrays and are what the census and solution counters use in their hot loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

MAX_COLS = 64


@dataclass(frozen=True)
class GF2Matrix:
    """Immutable ``rows x cols`` matrix over GF(2), one int bitmask per row."""

    rows: int
    cols: int
    row_words: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.cols <= MAX_COLS:
            raise ValueError(f"cols must be in 1..{MAX_COLS}, got {self.cols}")
        if self.rows < 0 or len(self.row_words) != self.rows:
            raise ValueError("row count does not match row_words")
        limit = 1 << self.cols
        for w in self.row_words:
            if not 0 <= w < limit:
                raise ValueError(f"row word {w:#x} has bits beyond column {self.cols - 1}")

    @classmethod
    def from_rows(cls, rows: Iterable[int], cols: int) -> "GF2Matrix":
        words = tuple(int(r) for r in rows)
        return cls(len(words), cols, words)

    @classmethod
    def from_bits(cls, bits: Sequence[Sequence[int]]) -> "GF2Matrix":
        """Build from a nested 0/1 list; ``bits[r][c]`` is entry (r, c)."""
        if not bits:
            raise ValueError("from_bits needs at least one row to infer the width")
        cols = len(bits[0])
        words = []
        for row in bits:
            if len(row) != cols:
                raise ValueError("ragged rows")
            words.append(sum(1 << c for c, b in enumerate(row) if b & 1))
        return cls(len(words), cols, tuple(words))

    def entry(self, r: int, c: int) -> int:
        return (self.row_words[r] >> c) & 1

    def to_bits(self) -> list[list[int]]:
        return [[(w >> c) & 1 for c in range(self.cols)] for w in self.row_words]

    def transpose(self) -> "GF2Matrix":
        if self.rows == 0:
            raise ValueError("cannot transpose a matrix with no rows")
        words = []
        for c in range(self.cols):
            w = 0
            for r, row in enumerate(self.row_words):
                if (row >> c) & 1:
                    w |= 1 << r
            words.append(w)
        return GF2Matrix(self.cols, self.rows, tuple(words))


def rank_of_rows(rows: Iterable[int]) -> int:
    """Rank of a list of int rows (any width), by XOR elimination."""
    # pivots[p] holds the row whose lowest set bit is p
    pivots: dict[int, int] = {}
    for v in rows:
        while v:
            low = v & -v
            p = pivots.get(low)
            if p is None:
                pivots[low] = v
                break
            v ^= p
    return len(pivots)


def rank(m: GF2Matrix) -> int:
    """Dimension of the row space of ``m`` over GF(2)."""
    return rank_of_rows(m.row_words)


def span_size_rank(rows: Sequence[int]) -> int:
    """Brute-force rank: log2 of the number of distinct XOR-combinations.

    Exponential in ``len(rows)``; intended as a test oracle only.
    """
    span = {0}
    for r in rows:
        span |= {s ^ r for s in span}
    return len(span).bit_length() - 1


def largest_independent_subset(rows: Sequence[int]) -> int:
    """Size of the largest linearly independent row subset (oracle, exponential)."""
    for size in range(len(rows), 0, -1):
        for subset in combinations(rows, size):
            if span_size_rank(subset) == size:
                return size
    return 0


@dataclass(frozen=True)
class EchelonBasis:
    """Persistent echelon basis: rows with pairwise-distinct pivots.

    A row's pivot is its lowest set bit.  Rows are kept reduced at every
    other row's pivot column, so reducing a vector is order-independent.
    """

    pivot_rows: tuple[int, ...] = ()

    @property
    def pivot_cols(self) -> frozenset[int]:
        return frozenset((r & -r).bit_length() - 1 for r in self.pivot_rows)

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, row: int) -> int:
        for p in self.pivot_rows:
            if row & p & -p:
                row ^= p
        return row

    def insert_row(self, row: int) -> tuple["EchelonBasis", bool]:
        """Return ``(basis', grew)``; ``self`` is left untouched."""
        v = self.reduce(row)
        if not v:
            return self, False
        low = v & -v
        rows = tuple(p ^ v if p & low else p for p in self.pivot_rows)
        return EchelonBasis(rows + (v,)), True


def insert_row(b: EchelonBasis, row: int) -> tuple[EchelonBasis, bool]:
    return b.insert_row(row)


# ---------------------------------------------------------------------------
# batched (numpy) kernels
# ---------------------------------------------------------------------------

_ONE = np.uint64(1)


def lowest_bit(v: np.ndarray) -> np.ndarray:
    """Isolate the lowest set bit of each uint64 (0 stays 0)."""
    return v & (~v + _ONE)


def rank_batch(rows: np.ndarray, cols: int) -> np.ndarray:
    """Rank of each matrix in a ``(N, m)`` uint64 stack, column-by-column.

    Plain Gauss-Jordan per matrix, vectorised over the leading axis.  Each
    matrix is eliminated from scratch; nothing is shared between matrices.
    """
    work = np.array(rows, dtype=np.uint64, copy=True)
    if work.ndim != 2:
        raise ValueError("rows must have shape (N, m)")
    n, m = work.shape
    out = np.zeros(n, dtype=np.int64)
    if m == 0 or n == 0:
        return out
    used = np.zeros((n, m), dtype=bool)
    idx = np.arange(n)
    for c in range(cols):
        bit = np.uint64(1 << c)
        has = (work & bit) != 0
        cand = has & ~used
        found = cand.any(axis=1)
        if not found.any():
            continue
        piv = np.argmax(cand, axis=1)
        piv_row = np.where(found, work[idx, piv], np.uint64(0))
        clear = has.copy()
        clear[idx, piv] = False
        work ^= np.where(clear & found[:, None], piv_row[:, None], np.uint64(0))
        used[idx[found], piv[found]] = True
        out += found
    return out


def popcount_parity(v: np.ndarray) -> np.ndarray:
    """Parity (0/1) of the number of set bits of each uint64."""
    return (np.bitwise_count(v) & 1).astype(np.int64)
