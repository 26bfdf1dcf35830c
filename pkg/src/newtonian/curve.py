"""Parametrized rational points on y**2 = Q(2, a)(x) and related curves.

Points of G(P_a) are stored by their parameters (p, q, z, a); the product
multiplies p and q componentwise on a shared fibre (z, a).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fermat import f_poly, q_poly
from .numeric import RationalLike, format_rational, nth_root_exact, rat


def p_curve_rhs(x: RationalLike, a: RationalLike) -> Fraction:
    a = rat(a)
    return 2 * a * rat(x) + a * (20 + a)


def on_p_curve(x: RationalLike, y: RationalLike, a: RationalLike) -> bool:
    a = rat(a)
    if a == 0:
        raise ValueError("a must be nonzero")
    return rat(y) ** 2 == p_curve_rhs(x, a)


@dataclass(frozen=True)
class GroupPoint:
    p: Fraction
    q: Fraction
    z: Fraction
    a: Fraction

    def __init__(self, p: RationalLike, q: RationalLike, z: RationalLike, a: RationalLike):
        p, q, z, a = rat(p), rat(q), rat(z), rat(a)
        if p == 0 or q == 0:
            raise ValueError("p and q must be nonzero")
        if a == 0:
            raise ValueError("a must be nonzero")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "a", a)

    @property
    def x(self) -> Fraction:
        p, q, z, a = self.p, self.q, self.z, self.a
        return p * p * z * z / (2 * a) + p * q * z / a + (q * q - a * (20 + a)) / (2 * a)

    @property
    def y(self) -> Fraction:
        return self.p * self.z + self.q

    @property
    def xy(self) -> tuple:
        return (self.x, self.y)

    def on_curve(self) -> bool:
        return on_p_curve(self.x, self.y, self.a)

    def __mul__(self, other: "GroupPoint") -> "GroupPoint":
        return group_mul(self, other)

    def __pow__(self, m: int) -> "GroupPoint":
        if m < 0:
            return group_inverse(self) ** (-m)
        return GroupPoint(self.p**m, self.q**m, self.z, self.a)

    def to_json(self) -> dict:
        return {
            "p": format_rational(self.p),
            "q": format_rational(self.q),
            "z": format_rational(self.z),
            "a": format_rational(self.a),
            "x": format_rational(self.x),
            "y": format_rational(self.y),
        }


def group_mul(u: GroupPoint, v: GroupPoint) -> GroupPoint:
    if u.z != v.z or u.a != v.a:
        raise ValueError("points on different fibers")
    return GroupPoint(u.p * v.p, u.q * v.q, u.z, u.a)


def group_identity(z: RationalLike, a: RationalLike) -> GroupPoint:
    return GroupPoint(1, 1, z, a)


def group_inverse(u: GroupPoint) -> GroupPoint:
    return GroupPoint(1 / u.p, 1 / u.q, u.z, u.a)


def identity_coordinates(z: RationalLike, a: RationalLike) -> tuple:
    """(z**2/2a + z/a + (1 - a(20+a))/2a, z + 1), written out directly."""
    z, a = rat(z), rat(a)
    return (z * z / (2 * a) + z / a + (1 - a * (20 + a)) / (2 * a), z + 1)


def inverse_coordinates(u: GroupPoint) -> tuple:
    p, q, z, a = u.p, u.q, u.z, u.a
    x = (1 / p) ** 2 * z * z / (2 * a) + 1 / (p * q) * z / a + ((1 / q) ** 2 - a * (20 + a)) / (2 * a)
    return (x, z / p + 1 / q)


@dataclass(frozen=True)
class ECurveCandidate:
    """A candidate point on y**2 = Q(3, a)(x) with a = k**2/3."""

    p: Fraction
    q: Fraction
    z: Fraction
    k: int
    a: Fraction
    x: Fraction
    y: Fraction
    residual: Fraction

    @property
    def on_curve(self) -> bool:
        return self.residual == 0

    def to_json(self) -> dict:
        return {
            "p": format_rational(self.p),
            "q": format_rational(self.q),
            "z": format_rational(self.z),
            "a": format_rational(self.a),
            "x": format_rational(self.x),
            "y": format_rational(self.y),
            "residual": format_rational(self.residual),
        }


def e_curve_rhs(x: RationalLike, a: RationalLike) -> Fraction:
    return q_poly(3, a)(x)


def ea_candidate(p: RationalLike, q: RationalLike, z: RationalLike, k: int) -> ECurveCandidate:
    """Evaluate the linear parametrization with sqrt(3a) = |k| and report
    how far the point is from the curve (Q(3, a)(x) - y**2)."""
    p, q, z = rat(p), rat(q), rat(z)
    if isinstance(k, Fraction):
        if k.denominator != 1:
            raise ValueError("k must be an integer")
        k = k.numerator
    if k == 0:
        raise ValueError("k must be a nonzero integer")
    if p == 0 or q == 0:
        raise ValueError("p and q must be nonzero")
    a = Fraction(k * k, 3)
    root = Fraction(abs(k))
    x = p / root * z + (2 * p * q * root - (3 * a * a + 60 * a) * p) / (6 * a * p)
    y = p * z + q
    residual = e_curve_rhs(x, a) - y * y
    return ECurveCandidate(p, q, z, k, a, x, y, residual)


def _bounded_rationals(bound: int):
    seen = set()
    for den in range(1, bound + 1):
        for num in range(-bound, bound + 1):
            r = Fraction(num, den)
            if r not in seen:
                seen.add(r)
                yield r


def fermat_curve_points(n: int, a: RationalLike, bound: int) -> list:
    """Rational (x, y) with y**n == Q(n, a)(x), |num|, den <= bound.

    Only non-trivial points count: y, f_n(x) and f_n(x + a) all nonzero.
    Returned in order of increasing x.
    """
    if n <= 2:
        raise ValueError("n must be > 2")
    a = rat(a)
    q = q_poly(n, a)
    base = f_poly(n)
    hits = []
    if bound < 1:
        return hits
    for x in _bounded_rationals(bound):
        value = q(x)
        if value == 0 or base(x) == 0 or base(x + a) == 0:
            continue
        w = nth_root_exact(value, n)
        if w is not None:
            hits.append((x, w.root))
    return sorted(hits)
