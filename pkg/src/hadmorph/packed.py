"""Bit-packed {+1,-1} matrices.

One bit per entry, row-major: bit 1 means -1, bit 0 means +1.  Row r is the
byte slice data[r], with column c at byte c//8, bit c%8 (numpy "little" bit
order, so tobytes() is already the on-disk packed format).  Pad bits beyond
the order are kept zero.

The all-pairs Gram scan is the one genuinely hot kernel (order 2^15 means
half a billion row pairs); it runs fused XOR+popcount loops compiled with
numba, with a numpy fallback for unaligned small orders.
"""
from __future__ import annotations

import numpy as np

from .errors import SizeCapError

DENSE_CAP = 4096

_KERNELS = None


def _kernels():
    """Compile the popcount pair-scan kernels on first use."""
    global _KERNELS
    if _KERNELS is not None:
        return _KERNELS
    from numba import njit, prange

    @njit(cache=True, nogil=True)
    def first_bad_serial(rows, n, lo, hi):
        # rows: (n, words) uint64; returns r*n+s of the first pair with
        # popcount(row_r ^ row_s)*2 != n, or -1.
        words = rows.shape[1]
        for r in range(lo, hi):
            for s in range(r + 1, n):
                acc = np.uint64(0)
                for i in range(words):
                    x = rows[r, i] ^ rows[s, i]
                    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
                    x = (x & np.uint64(0x3333333333333333)) + (
                        (x >> np.uint64(2)) & np.uint64(0x3333333333333333)
                    )
                    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
                    acc += (x * np.uint64(0x0101010101010101)) >> np.uint64(56)
                if 2 * int(acc) != n:
                    return r * n + s
        return -1

    @njit(cache=True, parallel=True)
    def first_bad_parallel(rows, n, out):
        # out[r] = first bad s for row r, else -1; rows shard over threads.
        words = rows.shape[1]
        for r in prange(n):
            found = -1
            for s in range(r + 1, n):
                acc = np.uint64(0)
                for i in range(words):
                    x = rows[r, i] ^ rows[s, i]
                    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
                    x = (x & np.uint64(0x3333333333333333)) + (
                        (x >> np.uint64(2)) & np.uint64(0x3333333333333333)
                    )
                    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
                    acc += (x * np.uint64(0x0101010101010101)) >> np.uint64(56)
                if 2 * int(acc) != n:
                    found = s
                    break
            out[r] = found

    _KERNELS = (first_bad_serial, first_bad_parallel)
    return _KERNELS


class PackedSignMatrix:
    """Square {+1,-1} matrix of the given order, one bit per entry."""

    __slots__ = ("order", "data")

    def __init__(self, order: int, data: np.ndarray):
        if order < 1:
            raise ValueError("order must be positive")
        row_bytes = (order + 7) // 8
        if data.dtype != np.uint8 or data.shape != (order, row_bytes):
            raise ValueError(f"expected uint8 array of shape ({order}, {row_bytes})")
        self.order = order
        self.data = data

    # -- construction ------------------------------------------------------

    @classmethod
    def zeros(cls, order: int) -> "PackedSignMatrix":
        """All +1 entries."""
        return cls(order, np.zeros((order, (order + 7) // 8), dtype=np.uint8))

    @classmethod
    def from_signs(cls, rows) -> "PackedSignMatrix":
        arr = np.asarray(rows)
        n = arr.shape[0]
        if arr.shape != (n, n):
            raise ValueError("matrix must be square")
        if not np.all(np.abs(arr) == 1):
            raise ValueError("entries must be +-1")
        bits = (arr < 0).astype(np.uint8)
        return cls(n, np.packbits(bits, axis=1, bitorder="little"))

    @classmethod
    def from_bit_array(cls, bits: np.ndarray) -> "PackedSignMatrix":
        n = bits.shape[0]
        return cls(n, np.packbits(bits.astype(np.uint8), axis=1, bitorder="little"))

    def copy(self) -> "PackedSignMatrix":
        return PackedSignMatrix(self.order, self.data.copy())

    # -- element access ----------------------------------------------------

    @property
    def row_bytes(self) -> int:
        return (self.order + 7) // 8

    def bit(self, r: int, c: int) -> int:
        return (int(self.data[r, c >> 3]) >> (c & 7)) & 1

    def entry(self, r: int, c: int) -> int:
        return -1 if self.bit(r, c) else 1

    def row_mask(self) -> np.ndarray:
        """Byte mask of the valid (non-pad) bits of one row."""
        mask = np.full(self.row_bytes, 0xFF, dtype=np.uint8)
        tail = self.order & 7
        if tail:
            mask[-1] = (1 << tail) - 1
        return mask

    def to_bit_array(self) -> np.ndarray:
        return np.unpackbits(self.data, axis=1, count=self.order, bitorder="little")

    def to_signs(self, cap: int = DENSE_CAP) -> np.ndarray:
        if self.order > cap:
            raise SizeCapError(f"order {self.order} exceeds dense cap {cap}")
        return (1 - 2 * self.to_bit_array().astype(np.int64))

    # -- whole-matrix operations --------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PackedSignMatrix)
            and self.order == other.order
            and np.array_equal(self.data, other.data)
        )

    def negate(self) -> "PackedSignMatrix":
        return PackedSignMatrix(self.order, self.data ^ self.row_mask())

    def transpose(self) -> "PackedSignMatrix":
        n = self.order
        out = np.zeros((n, self.row_bytes), dtype=np.uint8)
        block = 4096  # multiple of 8 keeps output byte-aligned
        for lo in range(0, n, block):
            hi = min(n, lo + block)
            bits = np.unpackbits(self.data[lo:hi], axis=1, count=n, bitorder="little")
            out[:, lo // 8 : (hi + 7) // 8] = np.packbits(
                bits.T, axis=1, bitorder="little"
            )
        return PackedSignMatrix(n, out)

    def scatter_rows(self, dest: np.ndarray, flip: np.ndarray) -> "PackedSignMatrix":
        """Row r of self lands at row dest[r], complemented where flip[r] is set."""
        out = np.empty_like(self.data)
        out[dest] = self.data
        flipped = dest[flip.astype(bool)]
        if flipped.size:
            out[flipped] ^= self.row_mask()
        return PackedSignMatrix(self.order, out)

    def gather_columns(self, src: np.ndarray, flip: np.ndarray) -> "PackedSignMatrix":
        """out[r, c] = self[r, src[c]] complemented where flip[c] is set."""
        n = self.order
        out = np.empty_like(self.data)
        flip_u8 = flip.astype(np.uint8)
        block = max(8, (1 << 25) // max(1, n)) & ~7
        for lo in range(0, n, block):
            hi = min(n, lo + block)
            bits = np.unpackbits(self.data[lo:hi], axis=1, count=n, bitorder="little")
            out[lo:hi] = np.packbits(bits[:, src] ^ flip_u8, axis=1, bitorder="little")
        return PackedSignMatrix(n, out)

    # -- Gram scanning -------------------------------------------------------

    def _u64_rows(self) -> np.ndarray | None:
        if self.row_bytes % 8:
            return None
        return self.data.view(np.uint64)

    def first_nonorthogonal_pair(
        self, threads: int = 1, row_range: tuple[int, int] | None = None
    ) -> tuple[int, int] | None:
        """Scan all row pairs; return the first (r, s) with nonzero dot, else None."""
        n = self.order
        lo, hi = row_range if row_range else (0, n)
        rows64 = self._u64_rows()
        if rows64 is None:
            return self._first_bad_numpy(lo, hi)
        serial, parallel = _kernels()
        if threads > 1 and row_range is None:
            import numba

            numba.set_num_threads(max(1, min(threads, numba.config.NUMBA_NUM_THREADS)))
            out = np.empty(n, dtype=np.int64)
            parallel(rows64, n, out)
            bad = np.nonzero(out >= 0)[0]
            if bad.size == 0:
                return None
            r = int(bad[0])
            return (r, int(out[r]))
        enc = serial(rows64, n, lo, hi)
        if enc < 0:
            return None
        return (enc // n, enc % n)

    def _first_bad_numpy(self, lo: int, hi: int) -> tuple[int, int] | None:
        n = self.order
        for r in range(lo, hi):
            if r + 1 >= n:
                break
            x = self.data[r] ^ self.data[r + 1 :]
            w = np.bitwise_count(x).sum(axis=1, dtype=np.int64)
            bad = np.nonzero(2 * w != n)[0]
            if bad.size:
                return (r, r + 1 + int(bad[0]))
        return None

    def pair_dot(self, r: int, s: int) -> int:
        """Exact inner product of rows r and s."""
        w = int(np.bitwise_count(self.data[r] ^ self.data[s]).sum())
        return self.order - 2 * w
