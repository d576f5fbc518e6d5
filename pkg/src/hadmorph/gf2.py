"""Dense linear algebra over GF(2) on bitmask-packed vectors and matrices.

A vector of dimension n lives in one machine word: coordinate i (1-based,
written leftmost) sits at bit n-i, so the first coordinate is the most
significant bit of an n-bit value.  Under this convention the integer value
of the word *is* the rank of the vector in the lexicographic enumeration of
GF(2)^n used to label Sylvester rows and columns.

Matrices are tuples of row bitmasks with the same bit layout.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union, overload

from .errors import SingularMatrixError

MAX_DIM = 63


def _check_dim(dim: int) -> None:
    if not 1 <= dim <= MAX_DIM:
        raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {dim}")


@dataclass(frozen=True)
class Vec2:
    """A vector in GF(2)^dim, packed into the low `dim` bits of an int."""

    dim: int
    bits: int

    def __post_init__(self):
        _check_dim(self.dim)
        if not 0 <= self.bits < (1 << self.dim):
            raise ValueError(f"bits 0x{self.bits:x} out of range for dim {self.dim}")

    @classmethod
    def zero(cls, dim: int) -> "Vec2":
        return cls(dim, 0)

    @classmethod
    def from_coords(cls, coords: Iterable[int]) -> "Vec2":
        bits = 0
        dim = 0
        for c in coords:
            bits = (bits << 1) | (int(c) & 1)
            dim += 1
        return cls(dim, bits)

    @classmethod
    def basis(cls, dim: int, i: int) -> "Vec2":
        """Standard basis vector e_i, 1-based."""
        if not 1 <= i <= dim:
            raise ValueError(f"basis index {i} out of range 1..{dim}")
        return cls(dim, 1 << (dim - i))

    @property
    def coords(self) -> tuple[int, ...]:
        return tuple((self.bits >> (self.dim - i)) & 1 for i in range(1, self.dim + 1))

    def __add__(self, other: "Vec2") -> "Vec2":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return Vec2(self.dim, self.bits ^ other.bits)

    def dot(self, other: "Vec2") -> int:
        """Inner product <a,b> = a^T b over GF(2)."""
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return (self.bits & other.bits).bit_count() & 1

    def __str__(self) -> str:
        return format(self.bits, f"0{self.dim}b")


def inner_bits(a: int, b: int) -> int:
    """Parity of the AND of two bitmask vectors (raw-int fast path)."""
    return (a & b).bit_count() & 1


@dataclass(frozen=True)
class Mat2:
    """A square matrix over GF(2); rows[i] is the bitmask of row i (0-based)."""

    dim: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_dim(self.dim)
        if len(self.rows) != self.dim:
            raise ValueError(f"expected {self.dim} rows, got {len(self.rows)}")
        for r in self.rows:
            if not 0 <= r < (1 << self.dim):
                raise ValueError("row bitmask out of range")

    @classmethod
    def identity(cls, dim: int) -> "Mat2":
        return cls(dim, tuple(1 << (dim - 1 - i) for i in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> "Mat2":
        return cls(dim, (0,) * dim)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "Mat2":
        dim = len(entries)
        rows = []
        for row in entries:
            if len(row) != dim:
                raise ValueError("matrix must be square")
            bits = 0
            for c in row:
                bits = (bits << 1) | (int(c) & 1)
            rows.append(bits)
        return cls(dim, tuple(rows))

    def entry(self, i: int, j: int) -> int:
        """Entry at 0-based (i, j)."""
        return (self.rows[i] >> (self.dim - 1 - j)) & 1

    def to_lists(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def apply_bits(self, x: int) -> int:
        """Matrix-vector product on a raw bitmask vector."""
        y = 0
        for row in self.rows:
            y = (y << 1) | ((row & x).bit_count() & 1)
        return y

    @overload
    def __matmul__(self, other: "Mat2") -> "Mat2": ...

    @overload
    def __matmul__(self, other: Vec2) -> Vec2: ...

    def __matmul__(self, other: Union["Mat2", Vec2]):
        if isinstance(other, Vec2):
            if other.dim != self.dim:
                raise ValueError("dimension mismatch")
            return Vec2(self.dim, self.apply_bits(other.bits))
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        bt = other.transpose()
        rows = []
        for r in self.rows:
            bits = 0
            for c in bt.rows:
                bits = (bits << 1) | ((r & c).bit_count() & 1)
            rows.append(bits)
        return Mat2(self.dim, tuple(rows))

    def __add__(self, other: "Mat2") -> "Mat2":
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return Mat2(self.dim, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def transpose(self) -> "Mat2":
        n = self.dim
        rows = [0] * n
        for i, r in enumerate(self.rows):
            for j in range(n):
                if (r >> (n - 1 - j)) & 1:
                    rows[j] |= 1 << (n - 1 - i)
        return Mat2(n, tuple(rows))

    def inverse(self) -> "Mat2":
        """Gauss-Jordan inverse; deterministic first-nonzero pivot choice."""
        n = self.dim
        work = list(self.rows)
        aug = list(Mat2.identity(n).rows)
        for col in range(n):
            colbit = 1 << (n - 1 - col)
            pivot = None
            for r in range(col, n):
                if work[r] & colbit:
                    pivot = r
                    break
            if pivot is None:
                raise SingularMatrixError(f"no pivot in column {col}")
            work[col], work[pivot] = work[pivot], work[col]
            aug[col], aug[pivot] = aug[pivot], aug[col]
            for r in range(n):
                if r != col and (work[r] & colbit):
                    work[r] ^= work[col]
                    aug[r] ^= aug[col]
        return Mat2(n, tuple(aug))

    def inverse_transpose(self) -> "Mat2":
        return self.inverse().transpose()

    def is_invertible(self) -> bool:
        try:
            self.inverse()
        except SingularMatrixError:
            return False
        return True

    def __pow__(self, j: int) -> "Mat2":
        base = self if j >= 0 else self.inverse()
        j = abs(j)
        result = Mat2.identity(self.dim)
        while j:
            if j & 1:
                result = result @ base
            base = base @ base
            j >>= 1
        return result

    def tensor(self, other: "Mat2") -> "Mat2":
        """Kronecker product; row/column blocks ordered (self index, other index)."""
        n, m = self.dim, other.dim
        if n * m > MAX_DIM:
            raise ValueError(f"tensor dimension {n * m} exceeds {MAX_DIM}")
        rows = []
        for ra in self.rows:
            for rb in other.rows:
                bits = 0
                for ja in range(n):
                    if (ra >> (n - 1 - ja)) & 1:
                        bits |= rb << ((n - 1 - ja) * m)
                rows.append(bits)
        return Mat2(n * m, tuple(rows))

    def __str__(self) -> str:
        return "\n".join(format(r, f"0{self.dim}b") for r in self.rows)


def jordan_block(n: int) -> Mat2:
    """The unipotent upper-triangular matrix I + C with 1s on the superdiagonal."""
    _check_dim(n)
    rows = []
    for i in range(n):
        bits = 1 << (n - 1 - i)
        if i + 1 < n:
            bits |= 1 << (n - 2 - i)
        rows.append(bits)
    return Mat2(n, tuple(rows))


def jordan_factor(t: int) -> Mat2:
    """The invertible witness A with A (A^-1)^T equal to the full Jordan block.

    A is the (t-1)-fold Kronecker power of [[1,1],[1,0]] with the first row
    and last column removed, of dimension 2^(t-1) - 1.
    """
    if not 2 <= t <= 7:
        raise ValueError(f"t must be in 2..7, got {t}")
    base = Mat2.from_lists([[1, 1], [1, 0]])
    full = base
    for _ in range(t - 2):
        full = full.tensor(base)
    # drop first row, drop last column (the lowest bit of each row)
    return Mat2(full.dim - 1, tuple(r >> 1 for r in full.rows[1:]))
