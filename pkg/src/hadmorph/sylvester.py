"""The Sylvester matrix and the group of signed row/column pairs acting on it.

Rows and columns of the order-2^n Sylvester matrix are labeled by GF(2)^n in
lexicographic order (first coordinate = most significant bit), with entry
(-1)^<a,b>.  Triples (u, v, L) with L invertible multiply by

    (u1, v1, L1) * (u2, v2, L2) = (u1 + L1^-T u2, v1 + L1 v2, L1 L2)

and act on rows by a -> (-1)^<La,u> (La+v) and on columns by
b -> (-1)^<v, L^-T b> (L^-T b + u).  Realized as a pair (P, Q) of signed
permutation matrices, the two-sided product P S Q^T lands back on +-S; the
scalar is computed, never assumed.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotScalarActionError
from .gf2 import Mat2, Vec2
from .monomial import MonomialMatrix
from .packed import PackedSignMatrix

MAX_SYLVESTER_N = 15


def sylvester(n: int) -> PackedSignMatrix:
    """The symmetric order-2^n Sylvester matrix, packed.

    Built by the doubling [[S, S], [S, -S]]; the base case comes straight
    from the inner-product formula.
    """
    if not 1 <= n <= MAX_SYLVESTER_N:
        raise ValueError(f"n must be in 1..{MAX_SYLVESTER_N}, got {n}")
    m = min(n, 3)
    size = 1 << m
    lab = np.arange(size, dtype=np.uint32)
    bits = (np.bitwise_count(lab[:, None] & lab[None, :]) & 1).astype(np.uint8)
    s = np.packbits(bits, axis=1, bitorder="little")
    for _ in range(n - 3):
        top = np.hstack([s, s])
        bottom = np.hstack([s, s ^ np.uint8(0xFF)])
        s = np.vstack([top, bottom])
    return PackedSignMatrix(1 << n, s)


def sylvester_row(n: int, a: int) -> np.ndarray:
    """Row a of the order-2^n Sylvester matrix as packed bytes (any n)."""
    lab = np.arange(1 << n, dtype=np.uint64)
    bits = (np.bitwise_count(lab & np.uint64(a)) & 1).astype(np.uint8)
    return np.packbits(bits, bitorder="little")


@dataclass(frozen=True)
class GroupElt:
    """A triple (u, v, L) with L invertible over GF(2)."""

    u: Vec2
    v: Vec2
    L: Mat2

    def __post_init__(self):
        if not (self.u.dim == self.v.dim == self.L.dim):
            raise ValueError("dimension mismatch among u, v, L")

    @property
    def dim(self) -> int:
        return self.L.dim

    @classmethod
    def identity(cls, n: int) -> "GroupElt":
        return cls(Vec2.zero(n), Vec2.zero(n), Mat2.identity(n))

    def __mul__(self, other: "GroupElt") -> "GroupElt":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        li_t = self.L.inverse_transpose()
        return GroupElt(
            self.u + (li_t @ other.u),
            self.v + (self.L @ other.v),
            self.L @ other.L,
        )

    def inverse(self) -> "GroupElt":
        li = self.L.inverse()
        return GroupElt(self.L.transpose() @ self.u, li @ self.v, li)


def _perm_table(m: Mat2) -> np.ndarray:
    """dest[x] = index of m*x over all x in GF(2)^n, vectorized."""
    n = m.dim
    x = np.arange(1 << n, dtype=np.uint64)
    dest = np.zeros(1 << n, dtype=np.int64)
    for i, row in enumerate(m.rows):
        bit = (np.bitwise_count(x & np.uint64(row)) & np.uint64(1)).astype(np.int64)
        dest |= bit << (n - 1 - i)
    return dest


def _sign_table(bits: int, n: int) -> np.ndarray:
    """exponent[a] = <a, w> for the vector w with the given bitmask."""
    x = np.arange(1 << n, dtype=np.uint64)
    return (np.bitwise_count(x & np.uint64(bits)) & np.uint64(1)).astype(np.int64)


def diag_matrix(v: Vec2) -> MonomialMatrix:
    """D_v: diagonal with (-1)^<a,v> at position a."""
    size = 1 << v.dim
    return MonomialMatrix(size, 2, np.arange(size), _sign_table(v.bits, v.dim))


def translation_matrix(v: Vec2) -> MonomialMatrix:
    """T_v: permutation with 1 in row a and column a+v."""
    size = 1 << v.dim
    dest = np.arange(size) ^ v.bits
    return MonomialMatrix(size, 2, dest, np.zeros(size, dtype=np.int64))


def perm_matrix(L: Mat2) -> MonomialMatrix:
    """rho(L): permutation with 1 in row Lv, column v."""
    size = 1 << L.dim
    return MonomialMatrix(size, 2, _perm_table(L), np.zeros(size, dtype=np.int64))


def psi(g: GroupElt) -> tuple[MonomialMatrix, MonomialMatrix]:
    """The row/column monomial pair of (u, v, L), from the entry formulas.

    P: column a -> row La+v with sign (-1)^<La,u>.
    Q: column b -> row L^-T b + u with sign (-1)^<v, L^-T b>.
    """
    n = g.dim
    size = 1 << n
    la = _perm_table(g.L)
    p = MonomialMatrix(
        size, 2,
        la ^ g.v.bits,
        (np.bitwise_count(la.astype(np.uint64) & np.uint64(g.u.bits)) & np.uint64(1)).astype(np.int64),
    )
    lit = _perm_table(g.L.inverse_transpose())
    q = MonomialMatrix(
        size, 2,
        lit ^ g.u.bits,
        (np.bitwise_count(lit.astype(np.uint64) & np.uint64(g.v.bits)) & np.uint64(1)).astype(np.int64),
    )
    return p, q


def _scalar_relation(a: PackedSignMatrix, b: PackedSignMatrix) -> int | None:
    """+1 if a == b, -1 if a == -b, else None."""
    if np.array_equal(a.data, b.data):
        return 1
    if np.all((a.data ^ b.data) == b.row_mask()):
        return -1
    return None


def apply_pair(p: MonomialMatrix, q: MonomialMatrix, s: PackedSignMatrix) -> int:
    """Compute P S Q^T by row then column moves; return the scalar with
    P S Q^T = scalar * S, or raise NotScalarActionError."""
    if not (p.size == q.size == s.order):
        raise ValueError("size mismatch")
    left = p.apply_to_rows(s)
    # right factor Q^T: its column c comes from Q's row c, i.e. source column
    # invdest_q[c] with Q's sign at that column
    invdest = np.empty_like(q.dest)
    invdest[q.dest] = np.arange(q.size)
    q._require_signed()
    flip = q.scale[invdest] & 1
    product = left.gather_columns(invdest, flip)
    scalar = _scalar_relation(product, s)
    if scalar is None:
        raise NotScalarActionError("P S Q^T is not a scalar multiple of S")
    return scalar


def pq_product(g: GroupElt) -> MonomialMatrix:
    """The matrix product P Q of the pair psi(g)."""
    p, q = psi(g)
    return p @ q


def pq_closed_form(g: GroupElt) -> MonomialMatrix:
    """The factored product D_{u + L^-T v} T_{v + Lu} rho(L L^-T).

    Agrees with pq_product up to a recorded global sign; callers compare with
    global_scalar_ratio rather than assuming equality.
    """
    li_t = g.L.inverse_transpose()
    d = diag_matrix(g.u + (li_t @ g.v))
    t = translation_matrix(g.v + (g.L @ g.u))
    rho = perm_matrix(g.L @ li_t)
    return (d @ t) @ rho


def global_scalar_ratio(m1: MonomialMatrix, m2: MonomialMatrix) -> int | None:
    """Exponent e with m1 = zeta_k^e * m2, or None if not a scalar multiple."""
    if m1.size != m2.size or m1.k != m2.k:
        return None
    if not np.array_equal(m1.dest, m2.dest):
        return None
    diff = np.mod(m1.scale - m2.scale, m1.k)
    e = int(diff[0])
    return e if np.all(diff == e) else None
