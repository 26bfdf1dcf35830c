"""Ring and Z-module structure on rows and triangles.

Elements are stored by their index ``y``; ``y -> N(y, n)`` is a ring
isomorphism with Z (or Q for the fraction-field variant), so every operation
acts on the index alone. Entries are materialized on request.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numeric import RationalLike, rat
from .triangle import Row, Triangle, row


@dataclass(frozen=True)
class RingRow:
    y: Fraction
    n: int

    def __init__(self, y: RationalLike, n: int):
        if n < 0:
            raise ValueError("n must be nonnegative")
        object.__setattr__(self, "y", rat(y))
        object.__setattr__(self, "n", n)

    def _check(self, other: "RingRow"):
        if not isinstance(other, RingRow) or other.n != self.n:
            raise ValueError("incompatible rows")

    def __add__(self, other):
        self._check(other)
        return RingRow(self.y + other.y, self.n)

    def __neg__(self):
        return RingRow(-self.y, self.n)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        return RingRow(self.y * other.y, self.n)

    def __rmul__(self, alpha):
        return scalar_mul(alpha, self)

    def inverse(self) -> "RingRow":
        if self.y == 0:
            raise ZeroDivisionError("N(0, n) has no inverse")
        return RingRow(1 / self.y, self.n)

    @property
    def is_integral(self) -> bool:
        return self.y.denominator == 1

    def materialize(self) -> Row:
        return row(self.y, self.n)


@dataclass(frozen=True)
class RingTriangle:
    y: Fraction
    depth: int

    def __init__(self, y: RationalLike, depth: int):
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        object.__setattr__(self, "y", rat(y))
        object.__setattr__(self, "depth", depth)

    # depths may differ; the result keeps the deeper of the two
    def __add__(self, other):
        if not isinstance(other, RingTriangle):
            return NotImplemented
        return RingTriangle(self.y + other.y, max(self.depth, other.depth))

    def __mul__(self, other):
        if not isinstance(other, RingTriangle):
            return NotImplemented
        return RingTriangle(self.y * other.y, max(self.depth, other.depth))

    def __rmul__(self, alpha):
        return scalar_mul(alpha, self)

    def __neg__(self):
        return RingTriangle(-self.y, self.depth)

    def materialize(self) -> Triangle:
        return Triangle.build(self.y, self.depth)


def add(u, v):
    return u + v


def mul(u, v):
    return u * v


def scalar_mul(alpha: RationalLike, u):
    alpha = rat(alpha)
    if isinstance(u, RingRow):
        return RingRow(alpha * u.y, u.n)
    if isinstance(u, RingTriangle):
        return RingTriangle(alpha * u.y, u.depth)
    raise TypeError(f"cannot scale {type(u).__name__}")


def one(n: int) -> RingRow:
    """N(1, n), a row of the Pascal triangle: the multiplicative identity."""
    return RingRow(1, n)


def zero(n: int) -> RingRow:
    return RingRow(0, n)


def pascal(depth: int) -> RingTriangle:
    return RingTriangle(1, depth)
