import itertools
from fractions import Fraction

import pytest

from newtonian import search
from newtonian.pythagoras import TripleParams, y_solution

from oracles import int_root_bisect, pythagorean_triples, triple_gcd


def _tuples(triples):
    return [tuple(int(c) for c in t.as_tuple()) for t in triples]


def test_enumerate_small_bounds():
    assert _tuples(search.enumerate_pythagorean(5)) == [(3, 4, 5)]
    assert search.enumerate_pythagorean(4) == []
    prim = [t for t in _tuples(search.enumerate_pythagorean(25)) if triple_gcd(t) == 1]
    assert sorted(prim) == [(3, 4, 5), (5, 12, 13), (7, 24, 25), (8, 15, 17)]


@pytest.mark.parametrize("bound", [1, 13, 60, 100])
def test_enumerate_matches_triple_loop(bound):
    assert _tuples(search.enumerate_pythagorean(bound)) == pythagorean_triples(bound)


def test_sharding_does_not_change_results():
    base = search.enumerate_pythagorean(90)
    for shards in (2, 3, 7, 90, 200):
        assert search.enumerate_pythagorean(90, shards=shards) == base
    f = search.fermat_search(3, 60).witnesses
    assert search.fermat_search(3, 60, shards=5, mapper=lambda fn, xs: map(fn, reversed(xs))).witnesses == f


def test_monotone_in_bound():
    small = set(_tuples(search.enumerate_pythagorean(40)))
    large = set(_tuples(search.enumerate_pythagorean(80)))
    assert small <= large
    assert set(search.cubic_square_search(20).witnesses) <= set(search.cubic_square_search(40).witnesses)


def test_coverage():
    r = search.coverage_check(100)
    assert r.witnesses == [] and r.exhaustive
    assert r.extra["checked"] == len(pythagorean_triples(100))
    assert r.extra["primitive"] == sum(triple_gcd(t) == 1 for t in pythagorean_triples(100))
    assert search.coverage_check(4).extra["checked"] == 0


def test_fermat_search():
    for n, bound in [(3, 200), (4, 100), (3, 1)]:
        r = search.fermat_search(n, bound)
        assert r.witnesses == [] and r.exhaustive


def test_fermat_search_loop_would_find_planted_squares():
    # the same slice code with n = 2 recovers the Pythagorean triples
    found = search._fermat_slice(2, 30, (1, 30))
    assert sorted(found) == pythagorean_triples(30)


def test_q_power_scan_squares():
    r = search.q_power_scan(2, 1, -100, 100)
    ys = [w[0] for w in r.witnesses]
    assert -6 in ys
    assert dict((w[0], w[1]) for w in r.witnesses)[-6] == 9
    # each witness comes from the parametrization with p = 1, x = 0, q = root
    for y, value, root in r.witnesses:
        assert y_solution(TripleParams(1, root, 0, 1)) == y


def test_q_power_scan_no_cubes():
    for a in range(1, 11):
        assert search.q_power_scan(3, a, -100, 100).witnesses == []
    assert search.q_power_scan(3, 1, 0, 0).witnesses == []


def test_q_power_scan_skips_trivial_points():
    # y = -11 gives Q = 0**3 - (-1)**3 = 1, one side of the equation vanishes
    assert search.q_power_scan(3, 1, -11, -11).witnesses == []


def test_cubic_square_search():
    r = search.cubic_square_search(10)
    triples = [(w.u, w.v, w.w) for w in r.witnesses]
    assert (8, 7, 13) in triples
    oracle = [(u, v, int_root_bisect(u**3 - v**3, 2)) for u in range(2, 11) for v in range(1, u)
              if int_root_bisect(u**3 - v**3, 2) is not None]
    assert sorted(triples) == sorted(oracle)
    w = r.witnesses[triples.index((8, 7, 13))]
    assert w.a == 1 and not w.a_in_family
    assert all((u, v) != (2, 1) for u, v, _ in triples)
    assert search.cubic_square_search(1).witnesses == []


def test_sum_identities():
    assert search.verify_sum_identity([3, 4, 12], 2, 13)
    assert search.verify_sum_identity([4, 6, 8, 9, 14], 4, 15)
    assert search.verify_sum_identity([1], 7, 1)
    assert not search.verify_sum_identity([1, 2], 3, 2)
    assert all(search.verify_sum_identity(*t) for t in search.SUM_IDENTITIES)


def test_r3_search():
    r = search.r3_exactness_search((-10, 0), (1, 5), (1, 5))
    assert (-6, 2, 1, -1) in r.witnesses
    assert search.r3_exactness_search((1, 1), (1, 1), (2, 2)).witnesses == []
    for y, a, b, c in r.witnesses:
        t = 10 + y + c
        assert (10 + y + a) ** 3 - (10 + y + b) ** 3 - (10 + y) ** 3 == t**3


def test_iteration_order_independence():
    box = list(itertools.product(range(-10, 1), range(1, 6), range(1, 6)))
    brute = []
    for y, a, b in reversed(box):
        v = (10 + y + a) ** 3 - (10 + y + b) ** 3 - (10 + y) ** 3
        root = int_root_bisect(abs(v), 3) if v else None
        if root is not None:
            t = root if v > 0 else -root
            brute.append((y, a, b, t - 10 - y))
    assert sorted(brute) == search.r3_exactness_search((-10, 0), (1, 5), (1, 5)).witnesses


def test_report_json():
    r = search.fermat_search(3, 10)
    out = r.to_json()
    assert out["witnesses"] == [] and out["exhaustive"] is True
    assert set(out) == {"query", "bounds", "exhaustive", "witnesses", "elapsed_ms"}
    q = search.q_power_scan(2, 1, -6, -6).to_json()
    assert q["witnesses"] == [["-6", "9", "3"]]


def test_bound_cap(monkeypatch):
    monkeypatch.setenv(search.MAX_BOUND_ENV, "30")
    assert search.cap_bound(100) == 30
    assert search.cap_bound(10) == 10
    monkeypatch.delenv(search.MAX_BOUND_ENV)
    assert search.cap_bound(100) == 100


def test_fraction_witness_values():
    r = search.q_power_scan(2, Fraction(1, 2), -30, 30)
    for y, value, root in r.witnesses:
        assert root * root == value
