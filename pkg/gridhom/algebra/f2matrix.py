"""Dense F_2 matrices stored as bit-packed rows.

Rows are packed little-endian into ``uint64`` words, so bit ``c`` of a row
lives in word ``c // 64`` at position ``c % 64``. Elimination works row by
row in input order: each row is reduced against the pivots found so far
and, if nonzero, becomes a pivot whose leading (lowest) set bit is its pivot
column. All later rows are cleared at that column in one vectorized step.
"""

from __future__ import annotations

import bisect
from collections.abc import Iterable, Sequence
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from ..config.constants import WORD_BITS

Words = npt.NDArray[np.uint64]

_ONE = np.uint64(1)


def word_count(ncols: int) -> int:
    return max(1, (ncols + WORD_BITS - 1) // WORD_BITS)


def pack_bits(dense: npt.ArrayLike, ncols: int | None = None) -> Words:
    """Pack a 0/1 array of shape (rows, cols) into uint64 words."""
    bits = np.asarray(dense, dtype=np.uint8) & 1
    if bits.ndim == 1:
        bits = bits.reshape(1, -1)
    rows, cols = bits.shape
    ncols = cols if ncols is None else ncols
    padded = np.zeros((rows, word_count(ncols) * WORD_BITS), dtype=np.uint8)
    padded[:, :cols] = bits
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64, copy=False)


def unpack_bits(words: Words, ncols: int) -> npt.NDArray[np.uint8]:
    """Inverse of :func:`pack_bits`."""
    if words.shape[0] == 0:
        return np.zeros((0, ncols), dtype=np.uint8)
    as_bytes = np.ascontiguousarray(words.astype("<u8", copy=False)).view(np.uint8)
    return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :ncols]


def _leading_bit(row: Words, word_limit: int) -> int:
    """Lowest set bit within the first ``word_limit`` words, or -1."""
    nz = np.flatnonzero(row[:word_limit])
    if nz.size == 0:
        return -1
    w = int(nz[0])
    value = int(row[w])
    return w * WORD_BITS + (value & -value).bit_length() - 1


def eliminate(words: Words, pivot_cols: int) -> tuple[Words, list[int], list[int]]:
    """Row-ordered Gaussian elimination.

    Only columns below ``pivot_cols`` may become pivots; bits beyond act as
    tag columns that record the row operations.

    Returns:
        The reduced rows, the pivot column of each pivot row, and the indices
        (into the input order) of the pivot rows.
    """
    work = words.copy()
    nrows = work.shape[0]
    word_limit = word_count(pivot_cols) if pivot_cols > 0 else 0
    pivots: list[int] = []
    pivot_rows: list[int] = []
    for i in range(nrows):
        col = _leading_bit(work[i], word_limit) if word_limit else -1
        if col < 0 or col >= pivot_cols:
            continue
        pivots.append(col)
        pivot_rows.append(i)
        if i + 1 < nrows:
            w, b = divmod(col, WORD_BITS)
            hits = np.flatnonzero((work[i + 1 :, w] >> np.uint64(b)) & _ONE)
            if hits.size:
                work[hits + i + 1] ^= work[i]
    return work, pivots, pivot_rows


class RankKernelImage(NamedTuple):
    """Result of :meth:`F2Matrix.rank_kernel_image`.

    ``kernel`` rows are a basis of {v : M v = 0} in F_2^cols; ``image`` rows
    are a basis of the column space in F_2^rows.
    """

    rank: int
    kernel: F2Matrix
    image: F2Matrix


class F2Matrix:
    """
    A rows x cols matrix over F_2 with bit-packed rows.

    The matrix acts on column vectors, so ``rank + dim ker = cols``.

    Example:
        >>> m = F2Matrix.from_dense([[1, 1], [1, 1]])
        >>> result = m.rank_kernel_image()
        >>> result.rank, result.kernel.rows
        (1, 1)
    """

    __slots__ = ("rows", "cols", "words")

    def __init__(self, rows: int, cols: int, words: Words | None = None) -> None:
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        if words is None:
            words = np.zeros((rows, word_count(cols)), dtype=np.uint64)
        if words.shape != (rows, word_count(cols)):
            raise ValueError(
                f"packed shape {words.shape} does not match {rows}x{cols} matrix"
            )
        self.words = words

    @classmethod
    def zeros(cls, rows: int, cols: int) -> F2Matrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, size: int) -> F2Matrix:
        return cls.from_dense(np.eye(size, dtype=np.uint8), cols=size)

    @classmethod
    def from_dense(cls, dense: npt.ArrayLike, cols: int | None = None) -> F2Matrix:
        arr = np.asarray(dense, dtype=np.uint8)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1) if arr.size else np.zeros((0, cols or 0), np.uint8)
        rows = arr.shape[0]
        ncols = arr.shape[1] if cols is None else cols
        if rows == 0:
            return cls(0, ncols)
        return cls(rows, ncols, pack_bits(arr, ncols))

    @classmethod
    def from_support(cls, cols: int, support: Sequence[Iterable[int]]) -> F2Matrix:
        """Build from per-row lists of set column indices (repeats cancel)."""
        dense = np.zeros((len(support), cols), dtype=np.uint8)
        for r, entries in enumerate(support):
            for c in entries:
                dense[r, c] ^= 1
        return cls.from_dense(dense, cols=cols)

    def to_dense(self) -> npt.NDArray[np.uint8]:
        return unpack_bits(self.words, self.cols)

    def row_support(self, r: int) -> list[int]:
        return [int(c) for c in np.flatnonzero(unpack_bits(self.words[r : r + 1], self.cols)[0])]

    def transpose(self) -> F2Matrix:
        return F2Matrix.from_dense(self.to_dense().T.copy(), cols=self.rows)

    def matmul(self, other: F2Matrix) -> F2Matrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        product = self.to_dense().astype(np.int64) @ other.to_dense().astype(np.int64)
        return F2Matrix.from_dense(product % 2, cols=other.cols)

    def __matmul__(self, other: F2Matrix) -> F2Matrix:
        return self.matmul(other)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not bool(np.any(self.words))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.words, other.words))

    def __repr__(self) -> str:
        return f"F2Matrix(rows={self.rows}, cols={self.cols})"

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        _, pivots, _ = eliminate(self.words, self.cols)
        return len(pivots)

    def rank_kernel_image(self) -> RankKernelImage:
        """Rank, kernel basis, and column-space basis by elimination over F_2."""
        if self.rows == 0 or self.cols == 0:
            return RankKernelImage(
                0, F2Matrix.identity(self.cols), F2Matrix.zeros(0, self.rows)
            )
        # Eliminate on [M^T | I]: zero left halves give kernel vectors in their tags
        left = self.to_dense().T
        augmented = np.hstack(
            [_pad_to_words(left), np.eye(self.cols, dtype=np.uint8)]
        )
        split = word_count(self.rows) * WORD_BITS
        reduced, pivots, pivot_rows = eliminate(pack_bits(augmented), self.rows)
        dense = unpack_bits(reduced, augmented.shape[1])
        pivot_set = set(pivot_rows)
        kernel_rows = [i for i in range(self.cols) if i not in pivot_set]
        kernel = F2Matrix.from_dense(
            dense[kernel_rows, split : split + self.cols], cols=self.cols
        )
        image = F2Matrix.from_dense(dense[pivot_rows, : self.rows], cols=self.rows)
        return RankKernelImage(len(pivots), kernel, image)


def _pad_to_words(dense: npt.NDArray[np.uint8]) -> npt.NDArray[np.uint8]:
    rows, cols = dense.shape
    padded = np.zeros((rows, word_count(cols) * WORD_BITS), dtype=np.uint8)
    padded[:, :cols] = dense
    return padded


class EchelonBasis:
    """
    Incrementally built echelon basis with optional tag columns.

    Vectors are ``left + tags`` packed separately: the left block holds the
    coordinates that take part in elimination and the tag block records which
    input vectors were combined. Reducing a vector against the basis returns
    its residual left part and the accumulated tags.
    """

    def __init__(self, ncols: int, ntags: int = 0) -> None:
        self.ncols = ncols
        self.ntags = ntags
        self._left_words = word_count(ncols)
        self._pivots: list[int] = []
        self._rows: list[Words] = []

    def __len__(self) -> int:
        return len(self._pivots)

    def _stack(self, left: Words, tags: Words | None) -> Words:
        if tags is None:
            tags = np.zeros((left.shape[0], word_count(self.ntags)), dtype=np.uint64)
        return np.hstack([left, tags])

    def extend(self, left: Words, tags: Words | None = None) -> list[int]:
        """Add vectors in order; returns the indices of those that were independent."""
        if left.shape[0] == 0:
            return []
        block = self.reduce_words(self._stack(left, tags))
        reduced, pivots, pivot_rows = eliminate(block, self.ncols)
        for col, r in zip(pivots, pivot_rows):
            self._insert(col, reduced[r])
        return pivot_rows

    def _insert(self, col: int, row: Words) -> None:
        # Keep pivots sorted so reduction can sweep them in ascending order
        pos = bisect.bisect_left(self._pivots, col)
        self._pivots.insert(pos, col)
        self._rows.insert(pos, row.copy())

    def reduce_words(self, block: Words) -> Words:
        """Reduce packed ``left + tags`` rows against the basis."""
        out = block.copy()
        for col, row in zip(self._pivots, self._rows):
            w, b = divmod(col, WORD_BITS)
            hits = np.flatnonzero((out[:, w] >> np.uint64(b)) & _ONE)
            if hits.size:
                out[hits] ^= row
        return out

    def reduce(self, left: Words) -> tuple[Words, Words]:
        """Residual left parts and tag parts of each reduced vector."""
        out = self.reduce_words(self._stack(left, None))
        return out[:, : self._left_words], out[:, self._left_words :]

    def contains(self, left: Words) -> npt.NDArray[np.bool_]:
        residual, _ = self.reduce(left)
        return ~np.any(residual, axis=1)
