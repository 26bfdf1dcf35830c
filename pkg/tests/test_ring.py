from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from newtonian.ring import RingRow, RingTriangle, one, pascal, scalar_mul, zero
from newtonian.triangle import row

ints = st.integers(-10**4, 10**4)
degrees = st.integers(0, 8)


def test_definitional_examples():
    assert RingRow(2, 3) + RingRow(3, 3) == RingRow(5, 3)
    assert RingRow(4, 2) + RingRow(-4, 2) == zero(2)
    assert RingRow(2, 3) * one(3) == RingRow(2, 3)
    assert RingRow(2, 4) * RingRow(3, 4) == RingRow(6, 4)
    assert RingRow(9, 5) * zero(5) == zero(5)
    assert scalar_mul(3, RingTriangle(2, 4)) == RingTriangle(6, 4)
    assert scalar_mul(1, RingTriangle(7, 4)) == RingTriangle(7, 4)
    assert scalar_mul(0, RingRow(7, 5)) == RingRow(0, 5)


def test_mismatched_rows_rejected():
    with pytest.raises(ValueError, match="incompatible rows"):
        RingRow(1, 2) + RingRow(1, 3)
    with pytest.raises(ValueError, match="incompatible rows"):
        RingRow(1, 2) * RingRow(1, 3)


def test_materialized_entries():
    assert list(RingRow(2, 3).materialize()) == list(row(2, 3))
    assert list(pascal(4).materialize()[4]) == [1, 4, 6, 4, 1]


@settings(max_examples=200)
@given(ints, ints, ints, degrees)
def test_ring_axioms(a, b, c, n):
    u, v, w = RingRow(a, n), RingRow(b, n), RingRow(c, n)
    assert (u + v) + w == u + (v + w)
    assert (u * v) * w == u * (v * w)
    assert u + v == v + u
    assert u * v == v * u
    assert u * (v + w) == u * v + u * w
    assert u + zero(n) == u
    assert u * one(n) == u
    assert u + (-u) == zero(n)


@settings(max_examples=100)
@given(ints, ints, ints, degrees)
def test_module_axioms(alpha, beta, y, n):
    u = RingRow(y, n)
    assert scalar_mul(alpha + beta, u) == scalar_mul(alpha, u) + scalar_mul(beta, u)
    assert scalar_mul(alpha, scalar_mul(beta, u)) == scalar_mul(alpha * beta, u)


@given(st.builds(Fraction, ints, st.integers(1, 1000)).filter(bool), degrees)
def test_fraction_field_inverses(y, n):
    u = RingRow(y, n)
    assert u * u.inverse() == one(n)


def test_index_map_is_a_bijection_on_a_range():
    rows = {tuple(row(y, 5)) for y in range(-200, 201)}
    assert len(rows) == 401


def test_pascal_triangle_is_identity_for_triangles():
    for y in range(-20, 21):
        t = RingTriangle(y, 6)
        assert t * pascal(6) == t


def test_triangle_depths_take_the_max():
    assert (RingTriangle(2, 3) + RingTriangle(5, 7)) == RingTriangle(7, 7)
