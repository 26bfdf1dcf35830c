"""Exact integer/rational helpers.

Rationals are plain :class:`fractions.Fraction` values; this module adds the
pieces the standard library lacks: strict parsing, canonical text form, and
exact n-th root detection.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_LITERAL = re.compile(r"^[+-]?\d+(/\d+)?$")


@dataclass(frozen=True)
class ExactWitness:
    root: Fraction
    power: int

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("power must be positive")


def normalize(num: int, den: int) -> Fraction:
    """Return num/den in lowest terms with a positive denominator."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``num/den`` literal to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``[sign]num[/den]`` with no whitespace. Floats are rejected."""
    if not _LITERAL.match(text):
        raise ValueError(f"malformed rational literal {text!r}")
    if "/" in text:
        num, den = text.split("/")
        return normalize(int(num), int(den))
    return Fraction(int(text))


def format_rational(r: Fraction) -> str:
    """Canonical text form: ``num/den``, or just ``num`` when den is 1."""
    r = rat(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def integer_nth_root(m: int, n: int) -> int:
    """Floor of the real n-th root of a nonnegative integer (Newton iteration)."""
    if m < 0:
        raise ValueError("negative radicand")
    if n < 1:
        raise ValueError("n must be positive")
    if m < 2 or n == 1:
        return m
    if n == 2:
        return math.isqrt(m)
    # initial guess from the bit length is always >= the true root
    x = 1 << -(-m.bit_length() // n)
    while True:
        y = ((n - 1) * x + m // x ** (n - 1)) // n
        if y >= x:
            return x
        x = y


def _exact_int_root(m: int, n: int) -> Optional[int]:
    r = integer_nth_root(m, n)
    return r if r**n == m else None


def nth_root_exact(r: RationalLike, n: int) -> Optional[ExactWitness]:
    """Return a witness ``root**n == r`` when r is an exact n-th power in Q.

    For even n only nonnegative r qualify and the nonnegative root is
    returned; for odd n the root carries the sign of r. Zero is exact of
    every power.
    """
    if n < 1:
        raise ValueError("n must be positive")
    r = rat(r)
    if r == 0:
        return ExactWitness(Fraction(0), n)
    negative = r < 0
    if negative and n % 2 == 0:
        return None
    # lowest terms, so numerator and denominator must be powers separately
    num = _exact_int_root(abs(r.numerator), n)
    if num is None:
        return None
    den = _exact_int_root(r.denominator, n)
    if den is None:
        return None
    root = Fraction(-num if negative else num, den)
    return ExactWitness(root, n)


def is_exact(r: RationalLike, n: int) -> bool:
    return nth_root_exact(r, n) is not None


def gcd3(a: int, b: int, c: int) -> int:
    if a == 0 and b == 0 and c == 0:
        raise ValueError("gcd undefined")
    return math.gcd(a, b, c)


def as_integer(r: RationalLike) -> int:
    """Return r as an int, raising ValueError if it is not integral."""
    r = rat(r)
    if r.denominator != 1:
        raise ValueError(f"{format_rational(r)} is not an integer")
    return r.numerator
