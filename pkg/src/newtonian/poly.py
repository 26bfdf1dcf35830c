"""Dense univariate polynomials over Q.

Coefficients are stored in descending degree order, matching the way the
Fermat polynomials are usually written out. The zero polynomial has no
coefficients.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable

from .numeric import RationalLike, format_rational, rat


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [rat(c) for c in coeffs]
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        self.coeffs = tuple(cs[i:])

    @classmethod
    def constant(cls, c: RationalLike) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([1, 0])

    @classmethod
    def linear(cls, slope: RationalLike, intercept: RationalLike) -> "Poly":
        return cls([slope, intercept])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        """Coefficient of y**k."""
        if k < 0 or k > self.degree:
            return Fraction(0)
        return self.coeffs[self.degree - k]

    def ascending(self) -> list:
        return list(reversed(self.coeffs))

    def __call__(self, y: RationalLike) -> Fraction:
        y = rat(y)
        acc = Fraction(0)
        for c in self.coeffs:
            acc = acc * y + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k, c in zip(range(self.degree, -1, -1), self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and k > 0) else format_rational(mag)
            if k > 0:
                body += ("*" if body else "") + ("y" if k == 1 else f"y^{k}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.ascending(), other.ascending()
        summed = [x + y for x, y in zip_longest(a, b, fillvalue=Fraction(0))]
        return Poly(reversed(summed))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = rat(scalar)
        if scalar == 0:
            raise ZeroDivisionError("division by zero")
        return Poly(c / scalar for c in self.coeffs)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Poly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for c in self.coeffs:
            acc = acc * inner + c
        return acc

    def shift(self, a: RationalLike) -> "Poly":
        """p(y + a)."""
        return self.compose(Poly.linear(1, a))

    def divmod(self, divisor: "Poly") -> tuple:
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dd = divisor.degree
        if self.degree < dd:
            return Poly(), self
        quot = []
        for i in range(len(rem) - dd):
            q = rem[i] / divisor.lead
            quot.append(q)
            if q:
                for j, c in enumerate(divisor.coeffs):
                    rem[i + j] -= q * c
        return Poly(quot), Poly(rem[len(rem) - dd:] if dd > 0 else [])

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ValueError("zero polynomial has no monic form")
        return self / self.lead

    def integer_coefficients(self) -> list:
        """Primitive integer coefficient list proportional to self."""
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints) if ints else 1
        return [v // g for v in ints] if g else ints

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list) -> "Poly":
        return cls(rat(s) for s in data)
