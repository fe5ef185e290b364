import json

import pytest

from penkite.exactnum import INV_PHI, PHI, QuadExt
from penkite.quasilattice import RVector, cross_sign, edge_vectors, embed, embed_float
from penkite.tiling import (
    HalfTile,
    Patch,
    half_tile_counts,
    inflate,
    make_half,
    read_patch,
    recurrence_counts,
    seed_patch,
    verify_patch,
    write_patch,
)


def fib(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def test_delta_plus_zero_vertices():
    p = seed_patch("delta-plus-0")
    kite = next(t for t in p.tiles if t.shape == "kite")
    e, a = kite.apex, kite.axis_end
    assert e == RVector() and a - e == RVector.unit(0)
    verts = {v for t in p.tiles for v in t.vertices}
    b, g = -RVector.unit(2), -RVector.unit(3)
    assert verts == {e, a, b, g}
    assert embed(b - e).norm2() == QuadExt(1)
    assert embed(b - a).norm2() == QuadExt(INV_PHI * INV_PHI)
    # angle at E between EB and EA is pi/5: cos = phi / 2
    assert embed(b).dot(embed(a)) == QuadExt(PHI / 2)
    # B lies to the right of the axis EA, G to the left
    assert cross_sign(a - e, b - e) < 0 < cross_sign(a - e, g - e)


@pytest.mark.parametrize("k", range(5))
def test_delta_minus_is_negated(k):
    plus = seed_patch(f"delta-plus-{k}")
    minus = seed_patch(f"delta-minus-{k}")
    assert {-v for v in plus.vertices()} == set(minus.vertices())


def test_seed_names():
    assert len(seed_patch("sun")) == 10
    assert len(seed_patch("star")) == 10
    assert len(seed_patch("single-dart")) == 2
    assert len(seed_patch("delta_plus_3")) == 2
    with pytest.raises(ValueError):
        seed_patch("moon")
    with pytest.raises(ValueError):
        seed_patch("delta-plus-7")


@pytest.mark.parametrize("n", range(1, 11))
def test_half_kite_counts_follow_recurrence(n):
    p = inflate(seed_patch("half-kite"), n)
    c = half_tile_counts(p)
    # (1, 0) under [[2, 1], [1, 1]]^n is (F(2n+1), F(2n))
    assert (c["kite"], c["dart"]) == (fib(2 * n + 1), fib(2 * n))
    assert (c["kite"], c["dart"]) == recurrence_counts((1, 0), n)


def test_inflate_composes():
    p = seed_patch("sun")
    twice = inflate(inflate(p, 1), 1)
    assert [t.key() for t in twice.tiles] == [t.key() for t in inflate(p, 2).tiles]
    with pytest.raises(ValueError):
        inflate(p, 0)


def test_ratio_tends_to_phi():
    c = half_tile_counts(inflate(seed_patch("half-kite"), 10))
    assert abs(c["kite"] / c["dart"] / ((1 + 5 ** 0.5) / 2) - 1) < 0.02


@pytest.mark.parametrize("seed", ["delta-plus-0", "delta-minus-3", "sun", "star", "single-dart", "half-dart"])
@pytest.mark.parametrize("steps", [0, 1, 3, 5])
def test_generated_patches_verify(seed, steps):
    p = seed_patch(seed)
    if steps:
        p = inflate(p, steps)
    rep = verify_patch(p)
    assert rep.ok, rep.violations[:3]


def test_delta_plus_edge_classes():
    rep = verify_patch(seed_patch("delta-plus-0"))
    assert rep.ok
    # EA = Y*0, EB = -Y*2, EG = -Y*3, AB = -(Y*0 + Y*2), AG = -(Y*3 + Y*0); signs follow traversal order
    unsigned = {name[:-3] + ")" for name in rep.edge_classes}
    assert unsigned == {"Long(0)", "Long(2)", "Long(3)", "Short(0)", "Short(3)"}


def test_empty_patch_is_valid():
    rep = verify_patch(Patch([]))
    assert rep.ok and rep.tiles == 0


def test_perturbed_vertex_is_not_an_edge():
    p = seed_patch("delta-plus-0")
    b = -RVector.unit(2)
    shift = RVector.unit(0) - RVector.unit(1)
    tiles = [HalfTile(t.kind, tuple(v + shift if v == b else v for v in t.vertices), t.level) for t in p.tiles]
    rep = verify_patch(Patch(tiles))
    assert not rep.ok
    assert any(v["check"] == "edge_class" and "NotAnEdge" in v["detail"] for v in rep.violations)


def test_thick_rhombus_is_flagged():
    p = seed_patch("delta-plus-0")
    kite = next(t for t in p.tiles if t.shape == "kite" and t.side == -RVector.unit(2))
    a, b = kite.axis_end, kite.side
    # a half-dart with its apex on the kite's axis end, across the short edge AB
    darts = []
    for step in edge_vectors():
        f = a + step
        try:
            d = make_half("dart", a, f, b)
        except ValueError:
            continue
        if verify_patch(Patch([d])).ok and cross_sign(b - a, f - a) != cross_sign(b - a, kite.apex - a):
            darts.append(d)
    assert darts
    rep = verify_patch(Patch(list(p.tiles) + darts[:1]))
    assert any(v["check"] == "thick_rhombus" for v in rep.violations)


def test_side_lengths_match_kind():
    short2 = QuadExt(INV_PHI * INV_PHI)
    for t in inflate(seed_patch("sun"), 2).tiles:
        v = t.vertices
        lengths = sorted((embed(v[j] - v[i]).norm2() for i, j in ((0, 1), (0, 2), (1, 2))), key=float)
        want = [short2, QuadExt(1), QuadExt(1)] if t.shape == "kite" else [short2, short2, QuadExt(1)]
        assert lengths == want


def test_chirality_matches_float_area():
    for t in inflate(seed_patch("star"), 2).tiles:
        (x0, y0), (x1, y1), (x2, y2) = (embed_float(v) for v in t.vertices)
        area = (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0)
        assert (area > 0) == (t.chirality == "L")


def test_vertices_are_integer_tuples():
    for v in inflate(seed_patch("sun"), 4).vertices():
        assert all(type(c) is int for c in v.n) and v.n[4] == 0


def test_patch_file_round_trip(tmp_path):
    p = inflate(seed_patch("delta-plus-0"), 3)
    path = tmp_path / "p.jsonl"
    write_patch(p, path)
    lines = path.read_text().splitlines()
    assert len(lines) == len(p)
    first = json.loads(lines[0])
    assert set(first) == {"kind", "vertices", "level"}
    assert len(first["vertices"]) == 3 and all(len(v) == 5 for v in first["vertices"])
    back = read_patch(path)
    assert [t.key() for t in back.tiles] == [t.key() for t in p.tiles]


def test_level_recorded():
    p = inflate(seed_patch("sun"), 3)
    assert {t.level for t in p.tiles} == {3}
    # each half-kite yields F(2n+1) + F(2n) = F(2n+2) half-tiles
    assert len(p) == 10 * fib(8)
