"""The 2n x k n-times persymmetric family and its coefficient tuples.

Encoding: bit ``(j-1)*(k+1) + (i-1)`` of the tuple index holds the
coefficient alpha_i of block j (block-major, coefficient-minor, little
endian).  Block j contributes two rows,

    row 2j-1 = (alpha_1, ..., alpha_k)
    row 2j   = (alpha_2, ..., alpha_{k+1})

so with a block packed as the (k+1)-bit word ``b`` (alpha_1 at bit 0) the
rows are ``b & (2**k - 1)`` and ``b >> 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import MAX_COLS, GF2Matrix


@dataclass(frozen=True)
class CoeffTuple:
    n: int
    k: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if not 1 <= self.k <= MAX_COLS:
            raise ValueError(f"k must be in 1..{MAX_COLS}")
        if len(self.bits) != self.n * (self.k + 1):
            raise ValueError(f"expected {self.n * (self.k + 1)} bits, got {len(self.bits)}")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")

    @classmethod
    def from_blocks(cls, blocks: list[list[int]], k: int) -> "CoeffTuple":
        """``blocks[j-1] = [alpha_1, ..., alpha_{k+1}]`` for block j."""
        bits: list[int] = []
        for blk in blocks:
            if len(blk) != k + 1:
                raise ValueError(f"each block needs k+1 = {k + 1} coefficients")
            bits.extend(blk)
        return cls(len(blocks), k, tuple(bits))

    def alpha(self, i: int, j: int) -> int:
        """Coefficient alpha_i^{(j)}, both indices 1-based."""
        return self.bits[(j - 1) * (self.k + 1) + (i - 1)]

    def block_words(self) -> list[int]:
        w = self.k + 1
        return [sum(b << i for i, b in enumerate(self.bits[j * w:(j + 1) * w])) for j in range(self.n)]


def block_rows(block: int, k: int) -> tuple[int, int]:
    """The two row words of one persymmetric block."""
    return block & ((1 << k) - 1), block >> 1


def build_matrix(t: CoeffTuple) -> GF2Matrix:
    rows: list[int] = []
    for blk in t.block_words():
        rows.extend(block_rows(blk, t.k))
    return GF2Matrix(2 * t.n, t.k, tuple(rows))


def tuple_from_index(idx: int, n: int, k: int) -> CoeffTuple:
    nbits = n * (k + 1)
    if not 0 <= idx < (1 << nbits):
        raise ValueError(f"index {idx} out of range for n={n}, k={k}")
    return CoeffTuple(n, k, tuple((idx >> b) & 1 for b in range(nbits)))


def index_of(t: CoeffTuple) -> int:
    return sum(b << i for i, b in enumerate(t.bits))


def matrix_from_index(idx: int, n: int, k: int) -> GF2Matrix:
    return build_matrix(tuple_from_index(idx, n, k))
