import random
from fractions import Fraction

import pytest

from newtonian.numeric import nth_root_exact
from newtonian.triangle import (
    Triangle, delta_carry, delta_positional, f, row, row_by_recurrence,
)

from oracles import binomial_row


def test_row_examples():
    assert list(row(2, 3)) == [1, 6, 12, 8]
    assert list(row(2, 4)) == [1, 8, 24, 32, 16]
    assert list(row(0, 5)) == [1, 0, 0, 0, 0, 0]


def test_row_invariants():
    y = Fraction(-3, 7)
    r = row(y, 9)
    assert r[0] == 1 and r[9] == y**9 and len(r) == 10
    for k in range(1, 10):
        assert r[k] / r[k - 1] == y * (9 - k + 1) / k


def test_recurrence_matches_binomials():
    rng = random.Random(5)
    ys = [Fraction(rng.randint(-40, 40), rng.randint(1, 40)) for _ in range(50)]
    for y in ys:
        for n in range(21):
            assert list(row_by_recurrence(y, n)) == binomial_row(y, n)


def test_triangle_rows_follow_recurrence():
    t = Triangle.build(Fraction(2, 3), 6)
    assert [r.n for r in t.rows] == list(range(7))
    assert all(list(t[n]) == list(row(Fraction(2, 3), n)) for n in range(7))


@pytest.mark.parametrize("y, n, expected", [(2, 3, 1728), (1, 5, 161051), (0, 4, 10**4)])
def test_delta_positional(y, n, expected):
    assert delta_positional(row(y, n)) == expected


@pytest.mark.parametrize("y, n, digits", [(1, 4, "14641"), (2, 2, "144"), (1, 6, "1771561")])
def test_delta_carry(y, n, digits):
    text, value = delta_carry(row(y, n))
    assert text == digits
    assert value == int(digits)


def test_delta_carry_other_bases():
    # (2 + 1)**3 = 27 = 0b11011
    assert delta_carry(row(1, 3), 2) == ("11011", 27)
    assert delta_carry(row(5, 2), 16)[1] == 21**2


def test_delta_carry_rejects_fractional_and_negative():
    with pytest.raises(ValueError, match="carry undefined"):
        delta_carry(row(Fraction(1, 2), 2))
    with pytest.raises(ValueError, match="carry undefined"):
        delta_carry(row(-1, 3))


def test_delta_identity_grid():
    for y in range(21):
        for n in range(13):
            r = row(y, n)
            assert delta_carry(r, 10)[1] == delta_positional(r, 10) == (10 + y) ** n


def test_delta_positional_general_base():
    y, base = Fraction(-5, 3), Fraction(7, 2)
    assert delta_positional(row(y, 6), base) == (base + y) ** 6


def test_f_examples():
    assert f(5, 1) == 161051
    assert f(3, -7) == 27
    assert f(4, 0) == 10**4


def test_f_is_exact_of_its_power():
    rng = random.Random(11)
    for _ in range(200):
        y = Fraction(rng.randint(-300, 300), rng.randint(1, 30))
        n = rng.randint(1, 9)
        assert f(n, y) == delta_positional(row(y, n))
        w = nth_root_exact(f(n, y), n)
        assert w.root == (abs(10 + y) if n % 2 == 0 else 10 + y)
