"""Exact integer polynomials, cyclotomic polynomials, and cyclotomic integers.

IntPoly is a dense coefficient tuple (index = degree, no trailing zeros) over
arbitrary-precision integers.  CycElt represents an element of Z[x]/(x^k - 1),
i.e. an integer combination of the k-th roots of unity; it is exactly zero in
the complex numbers iff its coefficient polynomial is divisible by the k-th
cyclotomic polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NonExactDivisionError

MAX_CYCLOTOMIC_INDEX = 1 << 20


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; use IntPoly.of()")

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> "IntPoly":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(int(c) for c in cs))

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x_power(cls, n: int, coeff: int = 1) -> "IntPoly":
        return cls.of([0] * n + [coeff])

    @classmethod
    def binomial(cls, n: int, c: int) -> "IntPoly":
        """x^n - c."""
        return cls.of([-c] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPoly.of(x + y for x, y in zip(a, b))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPoly.of(x - y for x, y in zip(a, b))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly.of(out)

    def scale(self, c: int) -> "IntPoly":
        return IntPoly.of(a * c for a in self.coeffs)

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f" {sign} {term}")
        return "".join(parts)


def poly_divrem(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division f = q*g + r over the integers.

    Every quotient coefficient must be an exact integer (always true for
    monic g); otherwise NonExactDivisionError is raised.  Division by the
    zero polynomial raises ZeroDivisionError.
    """
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f.coeffs)
    gl = g.coeffs
    lead = gl[-1]
    dq = len(r) - len(gl)
    if dq < 0:
        return IntPoly.zero(), f
    q = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        top = r[k + len(gl) - 1]
        if top == 0:
            continue
        c, rem = divmod(top, lead)
        if rem:
            raise NonExactDivisionError(
                f"leading coefficient {lead} does not divide {top}"
            )
        q[k] = c
        for i, gc in enumerate(gl):
            r[k + i] -= c * gc
    return IntPoly.of(q), IntPoly.of(r)


def poly_divexact(f: IntPoly, g: IntPoly) -> IntPoly:
    q, r = poly_divrem(f, g)
    if not r.is_zero():
        raise NonExactDivisionError(f"nonzero remainder {r}")
    return q


def divisors(k: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= k:
        if k % d == 0:
            small.append(d)
            if d != k // d:
                large.append(k // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_poly(k: int) -> IntPoly:
    """The k-th cyclotomic polynomial, computed exactly.

    Divides x^k - 1 successively by the cyclotomic polynomials of the proper
    divisors of k; each division is exact.
    """
    if not 1 <= k <= MAX_CYCLOTOMIC_INDEX:
        raise ValueError(f"k must be in 1..{MAX_CYCLOTOMIC_INDEX}, got {k}")
    poly = IntPoly.binomial(k, 1)
    for d in divisors(k):
        if d < k:
            poly = poly_divexact(poly, cyclotomic_poly(d))
    return poly


def euler_phi(k: int) -> int:
    phi = k
    d = 2
    n = k
    while d * d <= n:
        if n % d == 0:
            phi -= phi // d
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        phi -= phi // n
    return phi


@dataclass(frozen=True)
class CycElt:
    """Sum of c_e * zeta_k^e for e in 0..k-1, stored as the full length-k vector."""

    k: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("root order must be positive")
        if len(self.coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, k: int) -> "CycElt":
        return cls(k, (0,) * k)

    @classmethod
    def root(cls, k: int, e: int, c: int = 1) -> "CycElt":
        coeffs = [0] * k
        coeffs[e % k] = c
        return cls(k, tuple(coeffs))

    @classmethod
    def from_counts(cls, k: int, counts: Sequence[int]) -> "CycElt":
        return cls(k, tuple(int(c) for c in counts))

    def __add__(self, other: "CycElt") -> "CycElt":
        if self.k != other.k:
            raise ValueError("root order mismatch")
        return CycElt(self.k, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))


def cyc_is_zero(c: CycElt) -> bool:
    """True iff the cyclotomic integer is zero in the complex numbers.

    Exact: the evaluation Z[x] -> C at a primitive k-th root of unity has
    kernel generated by the k-th cyclotomic polynomial, so it suffices to
    reduce the coefficient polynomial and test for a zero remainder.
    """
    f = IntPoly.of(c.coeffs)
    if f.is_zero():
        return True
    _, r = poly_divrem(f, cyclotomic_poly(c.k))
    return r.is_zero()
