"""Newtonian triangle rows and the digital correspondence map.

Row ``N(y, n)`` lists the coefficients of ``(x + y)**n`` in descending powers
of ``x``: ``(1, C(n,1) y, C(n,2) y**2, ..., y**n)``. Reading a row as the
digits of a base-``b`` numeral gives ``(b + y)**n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .numeric import RationalLike, format_rational, rat


@dataclass(frozen=True)
class Row:
    y: Fraction
    n: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.n + 1:
            raise ValueError("row length must be n + 1")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, r):
        return self.entries[r]

    def to_json(self) -> list:
        return [format_rational(e) for e in self.entries]


def row(y: RationalLike, n: int) -> Row:
    """Row n of T(y), computed from binomial coefficients."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    y = rat(y)
    return Row(y, n, tuple(comb(n, r) * y**r for r in range(n + 1)))


def next_row(prev: Row) -> Row:
    """Build row n+1 from row n: entry r is y*prev[r-1] + prev[r]."""
    y, n = prev.y, prev.n
    padded = (Fraction(0),) + prev.entries + (Fraction(0),)
    entries = tuple(y * padded[r] + padded[r + 1] for r in range(n + 2))
    return Row(y, n + 1, entries)


def row_by_recurrence(y: RationalLike, n: int) -> Row:
    if n < 0:
        raise ValueError("n must be nonnegative")
    current = Row(rat(y), 0, (Fraction(1),))
    for _ in range(n):
        current = next_row(current)
    return current


@dataclass(frozen=True)
class Triangle:
    """The first ``depth + 1`` rows of T(y)."""

    y: Fraction
    depth: int
    rows: tuple

    @classmethod
    def build(cls, y: RationalLike, depth: int) -> "Triangle":
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        current = Row(rat(y), 0, (Fraction(1),))
        rows = [current]
        for _ in range(depth):
            current = next_row(current)
            rows.append(current)
        return cls(rat(y), depth, tuple(rows))

    def __getitem__(self, n) -> Row:
        return self.rows[n]


def delta_positional(r: Row, base: RationalLike = 10) -> Fraction:
    """Sum of entries[k] * base**(n-k); equals (base + y)**n."""
    base = rat(base)
    total = Fraction(0)
    for e in r.entries:
        total = total * base + e
    return total


def delta_carry(r: Row, base: int = 10) -> tuple[str, int]:
    """Read the row as digits, carrying right to left.

    Only defined when every entry is a nonnegative integer. Returns the digit
    string (most significant first) and its integer value.
    """
    if isinstance(base, Fraction):
        if base.denominator != 1:
            raise ValueError("base must be an integer >= 2")
        base = base.numerator
    if base < 2:
        raise ValueError("base must be an integer >= 2")
    cells = []
    for e in r.entries:
        e = rat(e)
        if e.denominator != 1 or e < 0:
            raise ValueError("carry undefined for entry " + format_rational(e))
        cells.append(e.numerator)

    digits = []
    carry = 0
    for cell in reversed(cells):
        carry, d = divmod(cell + carry, base)
        digits.append(d)
    while carry:
        carry, d = divmod(carry, base)
        digits.append(d)
    while len(digits) > 1 and digits[-1] == 0:
        digits.pop()
    digits.reverse()

    value = 0
    for d in digits:
        value = value * base + d
    text = "".join(_digit_char(d) for d in digits) if base <= 36 else ",".join(map(str, digits))
    return text, value


def _digit_char(d: int) -> str:
    return "0123456789abcdefghijklmnopqrstuvwxyz"[d]


def f(n: int, y: RationalLike) -> Fraction:
    """f_n(y) = (10 + y)**n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (10 + rat(y)) ** n
