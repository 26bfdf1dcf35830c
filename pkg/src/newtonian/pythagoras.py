"""Rational Pythagorean triples from the parameters (p, q, x, a).

With ``t = p*x + q`` and ``a != 0`` the triple is
``(t, (t**2 - a**2) / 2a, (t**2 + a**2) / 2a)``; its middle entry is
``10 + y`` where ``y`` makes ``Q(2, a)(y)`` the perfect square ``t**2``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .fermat import q_poly, rational_roots
from .numeric import RationalLike, format_rational, gcd3, rat
from .poly import Poly

ALPHA_MIN = "alpha-min"
BETA_MIN = "beta-min"


@dataclass(frozen=True)
class TripleParams:
    p: Fraction
    q: Fraction
    x: Fraction
    a: Fraction
    ordering: str = ALPHA_MIN

    def __init__(self, p: RationalLike, q: RationalLike, x: RationalLike,
                 a: RationalLike, ordering: str = ALPHA_MIN):
        a = rat(a)
        if a == 0:
            raise ValueError("a must be nonzero")
        if ordering not in (ALPHA_MIN, BETA_MIN):
            raise ValueError(f"unknown ordering {ordering!r}")
        for name, value in (("p", p), ("q", q), ("x", x), ("a", a)):
            object.__setattr__(self, name, rat(value))
        object.__setattr__(self, "ordering", ordering)

    @property
    def t(self) -> Fraction:
        return self.p * self.x + self.q


@dataclass(frozen=True)
class Triple:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    params: Optional[TripleParams] = field(default=None, compare=False)

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if self.alpha**2 + self.beta**2 != self.gamma**2:
            raise ValueError(f"not a Pythagorean triple: {self.as_tuple()}")

    def as_tuple(self) -> tuple:
        return (self.alpha, self.beta, self.gamma)

    @property
    def degenerate(self) -> bool:
        return 0 in self.as_tuple()

    @property
    def integral(self) -> bool:
        return all(c.denominator == 1 for c in self.as_tuple())

    def to_json(self) -> dict:
        out = {
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
            "gamma": format_rational(self.gamma),
        }
        if self.integral and not all(c == 0 for c in self.as_tuple()):
            out["gcd"] = gcd_class(self)
        if self.degenerate:
            out["degenerate"] = True
        return out


def y_solution(params: TripleParams) -> Fraction:
    """The y for which Q(2, a)(y) == (p*x + q)**2."""
    p, q, x, a = params.p, params.q, params.x, params.a
    return p * p / (2 * a) * x * x + p * q / a * x + (q * q - a * (20 + a)) / (2 * a)


def triple_from_params(params: TripleParams) -> Triple:
    t, a = params.t, params.a
    leg = (t * t - a * a) / (2 * a)
    hyp = (t * t + a * a) / (2 * a)
    if params.ordering == ALPHA_MIN:
        return Triple(t, leg, hyp, params)
    return Triple(leg, t, hyp, params)


def invert_x(alpha: RationalLike, p: RationalLike, q: RationalLike) -> tuple:
    """Both roots of p**2 x**2 + 2 p q x + (q**2 - alpha**2) = 0."""
    alpha, p, q = rat(alpha), rat(p), rat(q)
    if p == 0:
        raise ValueError("p must be nonzero")
    return ((-q + alpha) / p, (-q - alpha) / p)


def diophantine_form(alpha: RationalLike, a: RationalLike) -> Triple:
    alpha, a = rat(alpha), rat(a)
    if a == 0:
        raise ValueError("a must be nonzero")
    return Triple(alpha, (alpha * alpha - a * a) / (2 * a), (alpha * alpha + a * a) / (2 * a))


def triple_for_first_element(alpha: RationalLike) -> Triple:
    """A triple whose first entry is alpha, using p = 1, x = 0, q = alpha, a = 1."""
    return triple_from_params(TripleParams(1, alpha, 0, 1))


def gcd_class(t: Triple) -> int:
    if not t.integral:
        raise ValueError("h defined on integral triples only")
    return gcd3(*(c.numerator for c in t.as_tuple()))


def partition(triples: Iterable[Triple]) -> dict:
    """Group integral triples by gcd. Classes keep input order."""
    classes = defaultdict(list)
    for t in triples:
        classes[gcd_class(t)].append(t)
    return dict(sorted(classes.items()))


def vartheta(p: int, q: int, x: int, a: int) -> int:
    """gcd of the triple generated by integer parameters."""
    t = triple_from_params(TripleParams(p, q, x, a))
    if not t.integral:
        raise ValueError(f"parameters {(p, q, x, a)} give a non-integral triple")
    return gcd_class(t)


def b_discriminant(b: RationalLike) -> Fraction:
    """Discriminant in a of 2a**2 - 2ba + 10b, i.e. 4b(b - 20)."""
    b = rat(b)
    return (2 * b) ** 2 - 4 * 2 * (10 * b)


def b_constant() -> int:
    """The unique nonzero b for which 2a**2 - 2ba + 10b has a double root in a."""
    b = Poly.x()
    # discriminant of 2a**2 + (-2b)a + 10b, as a polynomial in b
    disc = (b * -2) ** 2 - 4 * 2 * (b * 10)
    nonzero = [r for r in rational_roots(disc) if r != 0]
    assert len(nonzero) == 1 and b_discriminant(nonzero[0]) == 0
    return int(nonzero[0])


def check_y_solution(params: TripleParams) -> bool:
    """Q(2, a)(y_solution) == t**2 exactly."""
    return q_poly(2, params.a)(y_solution(params)) == params.t**2
