import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from penkite.exactnum import INV_PHI, PHI, S, GoldenNum, QuadExt, quad_sign
from penkite.quasilattice import (
    NOT_AN_EDGE,
    PlanarPoint,
    QVector,
    RVector,
    canonicalize,
    classify_edge,
    cross_sign,
    edge_vectors,
    embed,
    embed_float,
    phi_scale,
    star_vector,
)

PHI_F = (1 + math.sqrt(5)) / 2
tuples = st.lists(st.integers(-20, 20), min_size=5, max_size=5)


def test_star_vector_examples():
    assert star_vector(0, dual=True) == PlanarPoint(0, 1)
    assert star_vector(1, dual=False) == PlanarPoint(INV_PHI / 2, S / 2)


@pytest.mark.parametrize("dual", [False, True])
def test_star_sums_to_zero_and_unit(dual):
    total = PlanarPoint(0, 0)
    for k in range(5):
        total = total + star_vector(k, dual)
        assert star_vector(k, dual).norm2() == QuadExt(1)
    assert total.is_zero()


@pytest.mark.parametrize("k", range(5))
def test_star_matches_trigonometry(k):
    x, y = star_vector(k).to_float()
    assert x == pytest.approx(math.cos(2 * math.pi * k / 5), abs=1e-15)
    assert y == pytest.approx(math.sin(2 * math.pi * k / 5), abs=1e-15)


def test_canonicalize_examples():
    assert canonicalize((1, 1, 1, 1, 1)) == (0, 0, 0, 0, 0)
    assert canonicalize((2, 0, 0, 0, 1)) == (1, -1, -1, -1, 0)
    a, b = embed_float(RVector((1, -1, -1, -1, 0))), embed_float(RVector._raw((2, 0, 0, 0, 1)))
    assert a == pytest.approx(b, abs=1e-12)


def test_embed_examples():
    assert embed(RVector.unit(0)) == PlanarPoint(0, 1)
    assert embed(RVector()).is_zero()
    assert embed(RVector((0, 1, 0, 1, 0))).norm2() == QuadExt(GoldenNum(2, -1))


@given(tuples)
def test_canonicalize_idempotent_and_embedding_invariant(raw):
    c = canonicalize(raw)
    assert canonicalize(c) == c
    assert embed(RVector._raw(tuple(raw))) == embed(RVector(c))


def test_bases_do_not_mix():
    with pytest.raises(TypeError):
        RVector.unit(0) + QVector.unit(0)


def test_phi_scale_examples():
    e0 = RVector.unit(0)
    assert phi_scale(e0, 1) == RVector((1, 1, 0, 0, 1))
    fx, fy = embed_float(phi_scale(e0, 1))
    assert (fx, fy) == pytest.approx((0.0, PHI_F), abs=1e-12)
    v = RVector((1, 0, 1, 0, 0))
    assert phi_scale(v, 0) == v
    assert phi_scale(phi_scale(v, 1), 1) == phi_scale(v, 2)


@given(tuples, st.integers(-4, 4))
def test_phi_scale_is_multiplication(raw, power):
    v = RVector(raw)
    assert embed(phi_scale(v, power)) == embed(v).scale(PHI ** power)


@given(tuples, tuples)
def test_phi_scale_additive(a, b):
    u, v = RVector(a), RVector(b)
    assert phi_scale(u + v, 1) == phi_scale(u, 1) + phi_scale(v, 1)


def test_phi_scale_rejects_non_integer_power():
    with pytest.raises(ValueError):
        phi_scale(RVector.unit(0), 0.5)


def test_classify_edge_examples():
    c = classify_edge(RVector.unit(2))
    assert (c.kind, c.k, c.sign) == ("long", 2, 1)
    assert classify_edge(RVector()) == NOT_AN_EDGE
    c = classify_edge(-(RVector.unit(1) + RVector.unit(3)))
    assert (c.kind, c.k, c.sign) == ("short", 1, -1)
    assert str(c) == "Short(1,-)"


def test_edge_vectors_lengths_and_directions():
    table = edge_vectors()
    assert len(table) == 20
    for v, c in table.items():
        n2 = embed(v).norm2()
        assert n2 == (QuadExt(1) if c.kind == "long" else QuadExt(INV_PHI * INV_PHI))
        x, y = embed_float(v)
        angle = math.pi / 10 + c.direction * math.pi / 5
        r = math.hypot(x, y)
        assert (x / r, y / r) == pytest.approx((math.cos(angle), math.sin(angle)), abs=1e-12)


@given(tuples, tuples)
def test_cross_sign_matches_float(a, b):
    u, v = RVector(a), RVector(b)
    ux, uy = embed_float(u)
    vx, vy = embed_float(v)
    c = ux * vy - uy * vx
    exact = embed(u).cross(embed(v))
    if abs(c) > 1e-9:
        assert cross_sign(u, v) == (1 if c > 0 else -1)
    assert cross_sign(u, v) == quad_sign(exact)
