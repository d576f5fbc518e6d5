"""Monomial matrices: root-of-unity-scaled permutation matrices.

A monomial matrix of size N over the k-th roots of unity is stored as a
permutation plus a column-indexed exponent table: the unique nonzero of
column c sits at row dest[c] and equals zeta_k^scale[c].  Composition,
powers and cycle data are all exact integer operations on these arrays.

The characteristic polynomial of a monomial matrix splits into one binomial
x^len - prod per cycle, where prod is the product of the nonzero entries
along the cycle; for +-1 scalars this gives exact integer polynomials, and
the minimal polynomial is assembled from cyclotomic factor sets
(x^m - 1 = prod of Phi_d over d | m, and x^m + 1 takes the d | 2m, d not| m
complement).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .cyclo import IntPoly, cyclotomic_poly, divisors
from .errors import UnsupportedRootOrderError
from .packed import PackedSignMatrix


@dataclass(frozen=True)
class CycleSpectrum:
    """Disjoint cycles of a monomial matrix with their scalar exponents."""

    k: int
    cycles: tuple[tuple[tuple[int, ...], int], ...]  # (members, exponent mod k)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        """(length, scalar exponent) per cycle."""
        return [(len(members), e) for members, e in self.cycles]

    @property
    def lengths(self) -> list[int]:
        return [len(members) for members, _ in self.cycles]

    def common_length(self) -> int | None:
        lens = set(self.lengths)
        return lens.pop() if len(lens) == 1 else None

    def all_products_are(self, exponent: int) -> bool:
        return all(e == exponent % self.k for _, e in self.cycles)


class MonomialMatrix:
    __slots__ = ("size", "k", "dest", "scale")

    def __init__(self, size: int, k: int, dest, scale):
        dest = np.asarray(dest, dtype=np.int64)
        scale = np.asarray(scale, dtype=np.int64)
        if k < 1:
            raise ValueError("root order must be positive")
        if dest.shape != (size,) or scale.shape != (size,):
            raise ValueError("dest and scale must have length size")
        if not np.array_equal(np.sort(dest), np.arange(size)):
            raise ValueError("dest is not a permutation")
        self.size = size
        self.k = k
        self.dest = dest
        self.scale = np.mod(scale, k)

    @classmethod
    def identity(cls, size: int, k: int = 2) -> "MonomialMatrix":
        return cls(size, k, np.arange(size), np.zeros(size, dtype=np.int64))

    @classmethod
    def from_permutation(cls, dest, k: int = 2) -> "MonomialMatrix":
        dest = np.asarray(dest, dtype=np.int64)
        return cls(len(dest), k, dest, np.zeros(len(dest), dtype=np.int64))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialMatrix)
            and self.size == other.size
            and self.k == other.k
            and np.array_equal(self.dest, other.dest)
            and np.array_equal(self.scale, other.scale)
        )

    def rescale(self, k_new: int) -> "MonomialMatrix":
        """Re-express the scalars in the k_new-th roots; k must divide k_new."""
        if k_new % self.k:
            raise ValueError(f"{self.k} does not divide {k_new}")
        return MonomialMatrix(self.size, k_new, self.dest, self.scale * (k_new // self.k))

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        a, b = self, other
        if a.k != b.k:
            k = a.k * b.k // gcd(a.k, b.k)
            a, b = a.rescale(k), b.rescale(k)
        return MonomialMatrix(
            a.size, a.k, a.dest[b.dest], a.scale[b.dest] + b.scale
        )

    def inverse(self) -> "MonomialMatrix":
        inv = np.empty_like(self.dest)
        inv[self.dest] = np.arange(self.size)
        return MonomialMatrix(self.size, self.k, inv, -self.scale[inv])

    def __pow__(self, j: int) -> "MonomialMatrix":
        base = self if j >= 0 else self.inverse()
        j = abs(j)
        result = MonomialMatrix.identity(self.size, self.k)
        while j:
            if j & 1:
                result = result @ base
            base = base @ base
            j >>= 1
        return result

    def scalar_mul(self, exponent: int) -> "MonomialMatrix":
        """Multiply the whole matrix by zeta_k^exponent."""
        return MonomialMatrix(self.size, self.k, self.dest, self.scale + exponent)

    def is_identity(self) -> bool:
        return bool(
            np.array_equal(self.dest, np.arange(self.size)) and not self.scale.any()
        )

    # -- spectra -------------------------------------------------------------

    def cycles(self) -> CycleSpectrum:
        seen = np.zeros(self.size, dtype=bool)
        dest = self.dest
        scale = self.scale
        out = []
        for start in range(self.size):
            if seen[start]:
                continue
            members = []
            e = 0
            c = start
            while not seen[c]:
                seen[c] = True
                members.append(c)
                e += int(scale[c])
                c = int(dest[c])
            out.append((tuple(members), e % self.k))
        return CycleSpectrum(self.k, tuple(out))

    def _require_signed(self):
        if self.k > 2:
            raise UnsupportedRootOrderError(
                f"root order {self.k} > 2; use cycles() for the spectral data"
            )

    def charpoly(self) -> IntPoly:
        """prod over cycles of (x^len - c), c in {+1,-1}."""
        self._require_signed()
        poly = IntPoly.one()
        for members, e in self.cycles().cycles:
            poly = poly * IntPoly.binomial(len(members), -1 if e else 1)
        return poly

    def minpoly(self) -> IntPoly:
        """lcm of the cycle binomials, as a product of distinct cyclotomics."""
        self._require_signed()
        factors: set[int] = set()
        for members, e in self.cycles().cycles:
            m = len(members)
            if e:  # x^m + 1: cyclotomics at divisors of 2m that miss m
                factors.update(d for d in divisors(2 * m) if m % d)
            else:  # x^m - 1
                factors.update(divisors(m))
        poly = IntPoly.one()
        for d in sorted(factors):
            poly = poly * cyclotomic_poly(d)
        return poly

    # -- dense interop ---------------------------------------------------------

    def apply_to_rows(self, s: PackedSignMatrix) -> PackedSignMatrix:
        """Exact product self @ s for +-1 scalars: a signed row scatter."""
        self._require_signed()
        if s.order != self.size:
            raise ValueError("size mismatch")
        flip = (self.scale & 1) if self.k == 2 else np.zeros(self.size, dtype=np.int64)
        return s.scatter_rows(self.dest, flip)

    def to_signs(self) -> np.ndarray:
        """Dense +-1/0 integer matrix (k <= 2 only)."""
        self._require_signed()
        out = np.zeros((self.size, self.size), dtype=np.int64)
        vals = 1 - 2 * (self.scale & 1) if self.k == 2 else np.ones(self.size, int)
        out[self.dest, np.arange(self.size)] = vals
        return out

    def __repr__(self) -> str:
        return f"MonomialMatrix(size={self.size}, k={self.k})"
