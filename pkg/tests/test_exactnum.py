import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from penkite.exactnum import (
    INV_PHI,
    PHI,
    S,
    SIGMA,
    GoldenNum,
    QuadExt,
    golden_sign,
    parse_golden,
    parse_quad,
    quad_sign,
    to_float,
)

from conftest import goldens, oracle_value, quads


def test_phi_squared():
    assert PHI * PHI == GoldenNum(1, 1)


def test_one_over_phi():
    assert GoldenNum(1) / PHI == GoldenNum(-1, 1)
    assert GoldenNum(-1, 1) * PHI == GoldenNum(1)


def test_s_squared():
    assert S * S == QuadExt(GoldenNum(2, 1))


def test_y1_unit_norm():
    x = QuadExt(INV_PHI / 2)
    y = S / 2
    assert x * x + y * y == QuadExt(1)


def test_quad_sign_examples():
    assert quad_sign(QuadExt(0)) == 0
    assert quad_sign(QuadExt(GoldenNum(2, -1))) == 1
    assert quad_sign(QuadExt(PHI) - S) == -1


def test_to_float_examples():
    assert to_float(PHI) == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-15)
    assert to_float(QuadExt(0)) == 0.0
    # sigma = sin(pi/5)
    assert to_float(SIGMA) == pytest.approx(math.sin(math.pi / 5), abs=1e-15)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GoldenNum(1) / GoldenNum(0)
    with pytest.raises(ZeroDivisionError):
        QuadExt(1) / QuadExt(0)


def test_canonical_representation():
    assert GoldenNum(Fraction(2, 4), 0) == GoldenNum(Fraction(1, 2), 0)
    assert hash(GoldenNum(Fraction(2, 4))) == hash(GoldenNum(Fraction(1, 2)))


@given(goldens, goldens, goldens)
@settings(max_examples=300, deadline=None)
def test_golden_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == GoldenNum(0)
    if x:
        assert x * x.inverse() == GoldenNum(1)


@given(quads, quads, quads)
@settings(max_examples=300, deadline=None)
def test_quad_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if x:
        assert x * x.inverse() == QuadExt(1)
        assert (y / x) * x == y


@given(goldens)
@settings(max_examples=300, deadline=None)
def test_golden_sign_matches_oracle(x):
    v = oracle_value(x)
    assert golden_sign(x) == (v > 0) - (v < 0)


@given(quads)
@settings(max_examples=300, deadline=None)
def test_quad_sign_matches_oracle(x):
    v = oracle_value(x)
    assert quad_sign(x) == (v > 0) - (v < 0)


@given(quads)
@settings(max_examples=200, deadline=None)
def test_to_float_close_to_oracle(x):
    v = float(oracle_value(x))
    assert to_float(x) == pytest.approx(v, rel=1e-14, abs=1e-14)


@given(st.integers(1, 60))
def test_sign_of_near_cancellation(n):
    # F_{n+1} - F_n phi alternates in sign and shrinks like phi^-n
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    x = GoldenNum(b, -a)
    expected = mpmath.sign(oracle_value(x))
    assert golden_sign(x) == int(expected)
    assert quad_sign(QuadExt(x)) == int(expected)


def test_cancellation_in_s_part():
    # u + v s with u^2 = v^2 (2 + phi) to many digits but not exactly
    v = GoldenNum(Fraction(10**12 + 1, 10**12))
    u = GoldenNum(Fraction(to_float(S)).limit_denominator(10**15))
    x = QuadExt(u, -v)
    assert quad_sign(x) == int(mpmath.sign(oracle_value(x)))


@given(quads)
def test_text_round_trip(x):
    assert parse_quad(x.text()) == x
    assert parse_golden(x.u.text()) == x.u


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_golden("1 + phi")
