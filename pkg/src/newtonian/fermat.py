"""Fermat polynomials and their arithmetic.

``Q(n, a)(y) = f_n(y + a) - f_n(y)`` has degree n - 1; its exact n-th power
values correspond to solutions of u**n + v**n = w**n. Companion families:
``P(n, a) = f_n(y + a) + f_n(y)``, ``R1(lam) = f_2(lam*y) - lam**2 f_2(y)`` and
``R3(a, b) = f_3(y + a) - f_3(y + b) - f_3(y)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .numeric import RationalLike, is_exact, rat
from .poly import Poly


def f_poly(n: int) -> Poly:
    """(10 + y)**n as a polynomial in y."""
    return Poly.linear(1, 10) ** n


def q_poly(n: int, a: RationalLike) -> Poly:
    """Fermat polynomial of degree n - 1.

    Coefficient of y**(n-j) is C(n, j) * ((10 + a)**j - 10**j), j = 1..n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a = rat(a)
    if a == 0:
        raise ValueError("a must be nonzero")
    return Poly(comb(n, j) * ((10 + a) ** j - 10**j) for j in range(1, n + 1))


def q_poly_literal(n: int, a: RationalLike) -> Poly:
    """Q built by subtracting the two expanded powers."""
    a = rat(a)
    if a == 0:
        raise ValueError("a must be nonzero")
    base = f_poly(n)
    return base.shift(a) - base


def p_poly(n: int, a: RationalLike) -> Poly:
    a = rat(a)
    base = f_poly(n)
    return base.shift(a) + base


def r1_lambda(lam: RationalLike) -> Poly:
    """Residual f_2(lam*y) - lam**2 * f_2(y); linear in y."""
    lam = rat(lam)
    if lam in (0, 1):
        raise ValueError("excluded parameter")
    f2 = f_poly(2)
    return f2.compose(Poly.linear(lam, 0)) - f2 * lam**2


def r1_lambda_printed(lam: RationalLike) -> Fraction:
    """Closed form 20*lam*(1-lam) + 100*(1-lam**2) with the y factor missing.

    Only used by the verification ledger, to compare against :func:`r1_lambda`.
    """
    lam = rat(lam)
    return 20 * lam * (1 - lam) + 100 * (1 - lam**2)


def r3_poly(a: RationalLike, b: RationalLike) -> Poly:
    a, b = rat(a), rat(b)
    if a == 0 or b == 0:
        raise ValueError("a and b must be nonzero")
    f3 = f_poly(3)
    return f3.shift(a) - f3.shift(b) - f3


@dataclass(frozen=True)
class SymmetricCoefficients:
    s1: Fraction
    s2: Optional[Fraction]
    s_last: Fraction


def symmetric_coefficients(n: int, a: RationalLike) -> SymmetricCoefficients:
    """Elementary symmetric functions of the roots of Q(n, a) / (n a).

    The monic polynomial is ``y**(n-1) - s1 y**(n-2) + s2 y**(n-3) - ...
    + (-1)**(n-1) s_last``. s2 exists only when the degree is at least 2.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    a = rat(a)
    if a == 0:
        raise ValueError("a must be nonzero")
    s1 = -Fraction((n - 1), 2) * (a + 20)
    s2 = Fraction((n - 1) * (n - 2), 6) * (a**2 + 30 * a + 300) if n >= 3 else None
    # constant term of the monic form: ((10+a)**n - 10**n) / (n a)
    const = sum(comb(n, k) * a ** (k - 1) * 10 ** (n - k) for k in range(1, n + 1)) / Fraction(n)
    s_last = (-1) ** (n - 1) * const
    return SymmetricCoefficients(s1, s2, s_last)


def _divisors(m: int) -> list:
    m = abs(m)
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> list:
    """All rational roots of p with multiplicity, in ascending order.

    Candidates ``r/s`` come from the rational root criterion on the primitive
    integer form (r | constant, s | leading); each hit is divided out exactly
    so repeated roots are counted.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every rational as a root")
    roots = []
    current = p
    # strip roots at zero first so the constant term is nonzero
    while current.degree >= 1 and current.coeffs[-1] == 0:
        roots.append(Fraction(0))
        current = Poly(current.coeffs[:-1])
    while current.degree >= 1:
        ints = current.integer_coefficients()
        found = None
        for s in _divisors(ints[0]):
            for r in _divisors(ints[-1]):
                for cand in (Fraction(r, s), Fraction(-r, s)):
                    if current(cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        current, rem = current.divmod(Poly.linear(1, -found))
        assert rem.is_zero()
    return sorted(roots)


def completely_reducible(p: Poly) -> bool:
    """True iff p splits into linear factors over Q."""
    if p.degree < 1:
        raise ValueError("degree must be >= 1")
    return len(rational_roots(p)) == p.degree


def discriminant(p: Poly) -> Fraction:
    """Discriminant of a polynomial of degree 1, 2 or 3."""
    if p.degree == 1:
        return Fraction(1)
    if p.degree == 2:
        a, b, c = p.coeffs
        return b * b - 4 * a * c
    if p.degree == 3:
        a, b, c, d = p.coeffs
        return (b * b * c * c - 4 * a * c**3 - 4 * b**3 * d
                - 27 * a * a * d * d + 18 * a * b * c * d)
    raise NotImplementedError("discriminant implemented for degree <= 3 only")


def quadratic_field(p: Poly) -> int:
    """Squarefree d with the roots of the quadratic p lying in Q(sqrt d).

    d == 1 means the roots are rational.
    """
    if p.degree != 2:
        raise ValueError("quadratic required")
    disc = discriminant(p)
    if disc == 0:
        return 1
    # d is the squarefree part of num*den of the discriminant
    m = disc.numerator * disc.denominator
    sign = -1 if m < 0 else 1
    m = abs(m)
    core = 1
    k = 2
    while k * k <= m:
        while m % (k * k) == 0:
            m //= k * k
        if m % k == 0:
            core *= k
            m //= k
        k += 1
    return sign * core * m


@dataclass(frozen=True)
class GaloisReport:
    degree: int
    computed_order: Optional[int]
    claimed_order: int
    status: str  # "exact" | "claim-only"

    @property
    def consistent(self) -> Optional[bool]:
        if self.computed_order is None:
            return None
        return self.computed_order == self.claimed_order

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "computed_order": self.computed_order,
            "claimed_order": self.claimed_order,
            "status": self.status,
        }


def galois_group_order(p: Poly) -> int:
    """Order of the Galois group of p over Q, for degree <= 3."""
    if p.degree <= 1:
        return 1
    if p.degree == 2:
        return 1 if is_exact(discriminant(p), 2) else 2
    if p.degree == 3:
        roots = rational_roots(p)
        if not roots:
            return 3 if is_exact(discriminant(p), 2) else 6
        quotient, _ = p.divmod(Poly.linear(1, -roots[0]))
        return galois_group_order(quotient)
    raise NotImplementedError("Galois order computed for degree <= 3 only")


def galois_order(n: int, a: RationalLike) -> GaloisReport:
    """Galois group order of Q(n, a), computed exactly when n <= 4.

    The claimed order (n-1)! is carried along for every n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    q = q_poly(n, a)
    degree = n - 1
    claimed = factorial(degree)
    if degree <= 3:
        return GaloisReport(degree, galois_group_order(q), claimed, "exact")
    return GaloisReport(degree, None, claimed, "claim-only")

