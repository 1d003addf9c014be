from fractions import Fraction

import pytest
from hypothesis import given, settings

from eisgeom.exactnum import (
    E_PI3,
    E_PI6,
    OMEGA,
    ONE,
    SQRT3,
    THETA,
    UNITS_E,
    ZERO,
    CycElem,
    EisInt,
    RealQuad,
    parse,
    quad_sign,
    real_sign,
    render,
)

from conftest import cyc, eis, nonzero_cyc, small_fraction


@settings(max_examples=300)
@given(cyc, cyc, cyc)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@settings(max_examples=300)
@given(nonzero_cyc)
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert a / a == ONE


@settings(max_examples=300)
@given(cyc, cyc)
def test_conjugation_is_a_ring_map(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert (a * a.conj()).is_real()
    assert a.abs2() == (a * a.conj()).re


@settings(max_examples=300)
@given(cyc)
def test_render_parse_round_trip(a):
    assert parse(render(a)) == a


@settings(max_examples=500)
@given(small_fraction, small_fraction)
def test_quad_sign_matches_float(a, b):
    x = float(a) + float(b) * 3 ** 0.5
    if abs(x) > 1e-9:
        assert quad_sign(a, b) == (1 if x > 0 else -1)
    assert real_sign(RealQuad(a, b)) == quad_sign(a, b)


def test_quad_sign_zero_only_at_zero():
    assert quad_sign(0, 0) == 0
    assert quad_sign(Fraction(7), Fraction(-4)) == 1  # 49 > 48
    assert quad_sign(Fraction(-7), Fraction(4)) == -1


@settings(max_examples=300)
@given(eis, eis)
def test_eisenstein_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    assert EisInt.from_cyc(x.to_cyc()) == x


@given(eis)
def test_theta_divisibility_matches_norm(x):
    # theta | x iff 3 | N(x)
    assert x.divisible_by_theta() == (x.norm() % 3 == 0)


def test_units_form_cyclic_group_of_order_6():
    units = set(UNITS_E)
    assert len(units) == 6
    assert all(u * v in units for u in units for v in units)
    assert all(u.norm() == 1 for u in units)


def test_constants():
    assert OMEGA ** 3 == ONE
    assert THETA * THETA == CycElem(-3)
    assert SQRT3 * SQRT3 == CycElem(3)
    assert E_PI6 ** 2 == E_PI3
    assert E_PI6 ** 12 == ONE and E_PI6 ** 6 == -ONE


def test_non_eisenstein_rejected():
    with pytest.raises(ValueError):
        EisInt.from_cyc(CycElem(Fraction(1, 2)))
