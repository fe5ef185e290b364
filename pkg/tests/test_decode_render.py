import xml.etree.ElementTree as ET

from penkite.decode import FloatDecoder, NoMatch, decode_float_vertex, float_patch
from penkite.quasilattice import RVector, embed_float
from penkite.render import RenderOptions, render_svg
from penkite.tiling import inflate, seed_patch

SVG = "{http://www.w3.org/2000/svg}"


def _decoder(seed="sun", steps=0, offset=0j, **kw):
    return FloatDecoder(float_patch(seed_patch(seed), steps, offset), **kw)


def test_decode_examples():
    dec = _decoder("delta-plus-0")
    assert decode_float_vertex((0.0, 1.0), dec) == RVector((1, 0, 0, 0, 0))
    zero = decode_float_vertex((0.0, 0.0), dec)
    assert isinstance(zero, RVector) and zero == RVector()


def test_decode_with_translation():
    offset = 0.25 - 1.5j
    dec = _decoder("delta-plus-0", offset=offset)
    assert decode_float_vertex(offset + 1j, dec) == RVector.unit(0)


def test_decode_non_vertex_is_nomatch():
    dec = _decoder("delta-plus-0")
    res = decode_float_vertex((0.3, 0.3), dec)
    assert isinstance(res, NoMatch) and not res


def test_ambiguous_edge_is_nomatch():
    # a tolerance wider than the gap between admissible edge vectors
    dec = _decoder("delta-plus-0", tol=0.75)
    res = dec.classify(complex(*embed_float(RVector.unit(0))))
    assert isinstance(res, NoMatch) and "ambiguous" in res.reason
    assert len(res.candidates) >= 2


def test_max_norm_bound():
    p = inflate(seed_patch("sun"), 2)
    dec = FloatDecoder(float_patch(p, 0))
    far = max(p.vertices(), key=lambda v: max(abs(c) for c in v.n))
    q = complex(*embed_float(far))
    assert decode_float_vertex(q, dec) == far
    assert isinstance(decode_float_vertex(q, dec, max_norm=0), NoMatch)


def test_large_float_patch_decodes():
    seed = seed_patch("sun")
    offset = 0.3 + 0.7j
    fp = float_patch(seed, 4, offset)
    assert len(fp.tiles) >= 500
    dec = FloatDecoder(fp)
    exact = {v for t in inflate(seed, 4).tiles for v in t.vertices}
    decoded = set()
    for t in fp.tiles:
        for q in t.vertices:
            v = decode_float_vertex(q, dec)
            assert not isinstance(v, NoMatch), v
            assert dec.residual(v, q) <= 1e-9
            decoded.add(v)
    assert decoded == exact
    assert not dec.failures


def test_render_delta_plus():
    svg = render_svg(seed_patch("delta-plus-0"))
    root = ET.fromstring(svg)
    polys = root.findall(f".//{SVG}polygon")
    assert len(polys) == 2
    assert polys[0].get("fill") == polys[1].get("fill")
    assert {p.get("data-kind") for p in polys} == {"HalfKiteL", "HalfKiteR"}


def test_render_sun_and_star():
    sun = ET.fromstring(render_svg(seed_patch("sun"))).findall(f".//{SVG}polygon")
    assert len(sun) == 10 and all(p.get("class") == "kite" for p in sun)
    star = ET.fromstring(render_svg(seed_patch("star"))).findall(f".//{SVG}polygon")
    assert {p.get("fill") for p in star}.isdisjoint({p.get("fill") for p in sun})


def test_render_deterministic_and_overlay():
    p = inflate(seed_patch("sun"), 3)
    a = render_svg(p, RenderOptions(star_overlay=True))
    assert a == render_svg(p, RenderOptions(star_overlay=True))
    root = ET.fromstring(a)
    assert root.get("version") == "1.1"
    assert len(root.findall(f".//{SVG}line")) == 5
    assert len(ET.fromstring(render_svg(p)).findall(f".//{SVG}line")) == 0
