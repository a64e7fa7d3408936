"""Bit-packed linear algebra over GF(2).

Vectors and matrices store 64 columns per uint64 word, little-endian bit
order (column 64*w + i lives in bit i of word w). Values are immutable after
construction so they can be shared freely between threads and processes.
"""

from __future__ import annotations

import numpy as np

WORD_BITS = 64


def _words_needed(length: int) -> int:
    return (length + WORD_BITS - 1) // WORD_BITS


def _pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a 0/1 uint8 array into a read-only little-endian uint64 array."""
    packed = np.packbits(bits, bitorder="little")
    buf = np.zeros(_words_needed(bits.size) * 8, dtype=np.uint8)
    buf[: packed.size] = packed
    words = buf.view(np.uint64)
    words.flags.writeable = False
    return words


def _as_bit_array(bits, what: str) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(bits))
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"{what} must be a non-empty 1-d sequence of bits")
    if arr.dtype != np.uint8:
        if not np.isin(arr, (0, 1)).all():
            raise ValueError(f"{what} entries must be 0 or 1")
        arr = arr.astype(np.uint8)
    elif arr.max(initial=0) > 1:
        raise ValueError(f"{what} entries must be 0 or 1")
    return arr


class BitVector:
    """Immutable GF(2) vector of length >= 1."""

    def __init__(self, length: int, words: np.ndarray):
        if length < 1:
            raise ValueError("BitVector length must be >= 1")
        self.length = int(length)
        self.words = words
        self.words.flags.writeable = False

    @classmethod
    def from_bits(cls, bits) -> "BitVector":
        arr = _as_bit_array(bits, "BitVector")
        return cls(arr.size, _pack_bits(arr))

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        if length < 1:
            raise ValueError("BitVector length must be >= 1")
        return cls(length, np.zeros(_words_needed(length), dtype=np.uint64))

    def to_bits(self) -> np.ndarray:
        """Unpack to a uint8 array of 0/1 values."""
        return np.unpackbits(
            self.words.view(np.uint8), bitorder="little", count=self.length
        )

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError("bit index out of range")
        w, b = divmod(i, WORD_BITS)
        return int((self.words[w] >> np.uint64(b)) & np.uint64(1))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("xor requires equal lengths")
        return BitVector(self.length, self.words ^ other.words)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVector)
            and self.length == other.length
            and np.array_equal(self.words, other.words)
        )

    def __hash__(self):
        return hash((self.length, self.words.tobytes()))

    def __repr__(self) -> str:
        if self.length <= 64:
            return f"BitVector('{''.join(map(str, self.to_bits()))}')"
        return f"BitVector(length={self.length}, weight={weight(self)})"


class BitMatrix:
    """Immutable GF(2) matrix with at least one row and one column."""

    def __init__(self, rows: int, cols: int, words: np.ndarray):
        if rows < 1 or cols < 1:
            raise ValueError("BitMatrix needs rows >= 1 and cols >= 1")
        self.rows = int(rows)
        self.cols = int(cols)
        self.words = words
        self.words.flags.writeable = False

    @classmethod
    def from_dense(cls, array) -> "BitMatrix":
        arr = np.atleast_2d(np.asarray(array))
        if arr.ndim != 2 or arr.size == 0:
            raise ValueError("BitMatrix needs a non-empty 2-d array")
        if not np.isin(arr, (0, 1)).all():
            raise ValueError("BitMatrix entries must be 0 or 1")
        arr = arr.astype(np.uint8)
        rows, cols = arr.shape
        packed = np.packbits(arr, axis=1, bitorder="little")
        buf = np.zeros((rows, _words_needed(cols) * 8), dtype=np.uint8)
        buf[:, : packed.shape[1]] = packed
        return cls(rows, cols, buf.view(np.uint64))

    @classmethod
    def from_rows(cls, rows) -> "BitMatrix":
        return cls.from_dense(list(rows))

    def row(self, i: int) -> BitVector:
        if not 0 <= i < self.rows:
            raise IndexError("row index out of range")
        return BitVector(self.cols, self.words[i])

    def to_dense(self) -> np.ndarray:
        return np.unpackbits(
            self.words.view(np.uint8), axis=1, bitorder="little"
        )[:, : self.cols]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self.words, other.words)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix(rows={self.rows}, cols={self.cols})"


def weight(v: BitVector) -> int:
    """Hamming weight of a vector."""
    return int(np.bitwise_count(v.words).sum())


def syndrome(h: BitMatrix, e: BitVector) -> BitVector:
    """Compute s = H e over GF(2).

    Bit i of the result is the parity of the overlap between row i of H and e.
    """
    if e.length != h.cols:
        raise ValueError(
            f"vector length {e.length} does not match matrix columns {h.cols}"
        )
    parities = (np.bitwise_count(h.words & e.words).sum(axis=1) & 1).astype(np.uint8)
    return BitVector(h.rows, _pack_bits(parities))


def gf2_rank(h: BitMatrix) -> int:
    """Rank of a matrix over GF(2).

    Forward Gaussian elimination on a scratch copy of the packed words. Rows
    below the pivot frontier are cleared column by column; the input is never
    mutated.
    """
    words = h.words.copy()
    rank = 0
    for col in range(h.cols):
        w, b = divmod(col, WORD_BITS)
        below = (words[rank:, w] >> np.uint64(b)) & np.uint64(1)
        hits = np.nonzero(below)[0]
        if hits.size == 0:
            continue
        pivot = rank + int(hits[0])
        if pivot != rank:
            words[[rank, pivot]] = words[[pivot, rank]]
        rest = rank + hits[1:]
        words[rest] ^= words[rank]
        rank += 1
        if rank == h.rows:
            break
    return rank


def is_self_orthogonal(h: BitMatrix) -> bool:
    """True iff H H^T = 0 over GF(2).

    Includes each row against itself, so every row must have even weight.
    """
    words = h.words
    for i in range(h.rows):
        overlaps = np.bitwise_count(words[i:] & words[i]).sum(axis=1)
        if (overlaps & 1).any():
            return False
    return True
