"""Bounded brute-force searches used as independent oracles.

Every search walks its whole box and returns a :class:`SearchReport` whose
witnesses are sorted, so results do not depend on iteration order or on how
the outer loop is split into shards.
"""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .fermat import f_poly, q_poly, r3_poly
from .numeric import format_rational, integer_nth_root, nth_root_exact, rat
from .pythagoras import Triple, diophantine_form

MAX_BOUND_ENV = "NEWTONIAN_MAX_BOUND"


@dataclass
class SearchReport:
    query: str
    bounds: dict
    witnesses: list
    exhaustive: bool = True
    elapsed_ms: int = 0
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "query": self.query,
            "bounds": self.bounds,
            "exhaustive": self.exhaustive,
            "witnesses": [_jsonable(w) for w in self.witnesses],
            "elapsed_ms": self.elapsed_ms,
        }
        if self.extra:
            out.update({k: _jsonable(v) for k, v in self.extra.items()})
        return out


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {value!r}")


def cap_bound(bound: int) -> int:
    """Clamp a search bound to $NEWTONIAN_MAX_BOUND when it is set."""
    cap = os.environ.get(MAX_BOUND_ENV)
    if cap:
        return min(bound, int(cap))
    return bound


def _shards(lo: int, hi: int, count: int) -> list:
    """Split the inclusive range [lo, hi] into at most `count` contiguous pieces."""
    if hi < lo:
        return []
    count = max(1, min(count, hi - lo + 1))
    size = -(-(hi - lo + 1) // count)
    return [(s, min(s + size - 1, hi)) for s in range(lo, hi + 1, size)]


def _run_sharded(work: Callable, lo: int, hi: int, shards: int, mapper=map) -> list:
    pieces = _shards(lo, hi, shards)
    out = []
    for part in mapper(work, pieces):
        out.extend(part)
    return sorted(out)


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = int((time.perf_counter() - self.start) * 1000)


def _pyth_slice(bound: int, piece: tuple) -> list:
    lo, hi = piece
    found = []
    for alpha in range(lo, hi + 1):
        a2 = alpha * alpha
        for beta in range(alpha, bound + 1):
            c2 = a2 + beta * beta
            gamma = math.isqrt(c2)
            if gamma > bound:
                break
            if gamma * gamma == c2:
                found.append((alpha, beta, gamma))
    return found


def enumerate_pythagorean(bound: int, shards: int = 1, mapper=map) -> list:
    """All integral (a, b, c), 0 < a <= b < c <= bound, a**2 + b**2 == c**2."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    raw = _run_sharded(lambda piece: _pyth_slice(bound, piece), 1, bound, shards, mapper)
    return [Triple(*t) for t in raw]


def primitive(t: Triple) -> bool:
    return math.gcd(t.alpha.numerator, t.beta.numerator, t.gamma.numerator) == 1


def coverage_check(bound: int) -> SearchReport:
    """Rebuild every enumerated triple from (alpha, gamma - beta)."""
    with _Timer() as tm:
        triples = enumerate_pythagorean(bound)
        failures = []
        for t in triples:
            rebuilt = diophantine_form(t.alpha, t.gamma - t.beta)
            if rebuilt.as_tuple() != t.as_tuple():
                failures.append(t)
    return SearchReport(
        "coverage", {"bound": bound}, failures, True, tm.ms,
        {"checked": len(triples), "primitive": sum(primitive(t) for t in triples)},
    )


def _fermat_slice(n: int, bound: int, piece: tuple) -> list:
    lo, hi = piece
    found = []
    top = bound**n
    for u in range(lo, hi + 1):
        un = u**n
        for v in range(u, bound):
            s = un + v**n
            if s > top:
                break
            w = integer_nth_root(s, n)
            if w**n == s and w <= bound:
                found.append((u, v, w))
    return found


def fermat_search(n: int, bound: int, shards: int = 1, mapper=map) -> SearchReport:
    """u**n + v**n == w**n over 1 <= u <= v < w <= bound."""
    if n < 3:
        raise ValueError("n must be >= 3")
    with _Timer() as tm:
        found = _run_sharded(lambda piece: _fermat_slice(n, bound, piece), 1, bound, shards, mapper)
    return SearchReport("fermat", {"n": n, "bound": bound}, found, True, tm.ms)


def q_power_scan(n: int, a, y_lo: int, y_hi: int) -> SearchReport:
    """Integers y in [y_lo, y_hi] where Q(n, a)(y) is an exact n-th power.

    Points where Q, f_n(y) or f_n(y + a) vanish are trivial and skipped.
    Witnesses are (y, Q(y), root).
    """
    a = rat(a)
    q = q_poly(n, a)
    base = f_poly(n)
    found = []
    with _Timer() as tm:
        for y in range(y_lo, y_hi + 1):
            value = q(y)
            if value == 0 or base(y) == 0 or base(y + a) == 0:
                continue
            w = nth_root_exact(value, n)
            if w is not None:
                found.append((Fraction(y), value, w.root))
    return SearchReport("qpower", {"n": n, "a": format_rational(a), "y": [y_lo, y_hi]},
                        found, True, tm.ms)


@dataclass(frozen=True)
class CubicSquareWitness:
    u: int
    v: int
    w: int

    @property
    def a(self) -> int:
        return self.u - self.v

    @property
    def a_in_family(self) -> bool:
        """Whether u - v equals k**2/3 for some integer k."""
        m = 3 * self.a
        return math.isqrt(m) ** 2 == m

    def __lt__(self, other):
        return (self.u, self.v) < (other.u, other.v)

    def to_json(self) -> dict:
        return {"u": self.u, "v": self.v, "w": self.w, "a": self.a,
                "a_is_k2_over_3": self.a_in_family}


def cubic_square_search(bound: int) -> SearchReport:
    """u**3 - v**3 == w**2 with 1 <= v < u <= bound, w >= 1."""
    found = []
    with _Timer() as tm:
        for u in range(2, bound + 1):
            u3 = u**3
            for v in range(1, u):
                d = u3 - v**3
                w = math.isqrt(d)
                if w * w == d:
                    found.append(CubicSquareWitness(u, v, w))
    return SearchReport("cubsq", {"bound": bound}, sorted(found), True, tm.ms)


def verify_sum_identity(terms: Iterable[int], power: int, rhs: int) -> bool:
    return sum(t**power for t in terms) == rhs**power


SUM_IDENTITIES = [
    ((3, 4), 2, 5),
    ((3, 4, 12), 2, 13),
    ((3, 4, 12, 84), 2, 85),
    ((3, 4, 5), 3, 6),
    ((4, 6, 8, 9, 14), 4, 15),
    ((4, 5, 6, 7, 9, 11), 5, 12),
]


def r3_exactness_search(y_range: tuple, a_range: tuple, b_range: tuple) -> SearchReport:
    """Integer (y, a, b) with R3(a, b)(y) a nonzero cube t**3.

    Ranges are inclusive; zero values of a and b are skipped. Witnesses are
    (y, a, b, c) with c = t - 10 - y.
    """
    found = []
    with _Timer() as tm:
        for a in range(a_range[0], a_range[1] + 1):
            if a == 0:
                continue
            for b in range(b_range[0], b_range[1] + 1):
                if b == 0:
                    continue
                r = r3_poly(a, b)
                for y in range(y_range[0], y_range[1] + 1):
                    value = r(y)
                    if value == 0:
                        continue
                    w = nth_root_exact(value, 3)
                    if w is not None:
                        t = w.root
                        found.append((y, a, b, int(t - 10 - y)))
    bounds = {"y": list(y_range), "a": list(a_range), "b": list(b_range)}
    return SearchReport("r3", bounds, sorted(found), True, tm.ms)
