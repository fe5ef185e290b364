"""Deterministic SVG 1.1 rendering of patches, one polygon per half-tile."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import quoteattr

from .quasilattice import RVector, embed_float
from .tiling import Patch

__all__ = ["RenderOptions", "render_svg"]


@dataclass(frozen=True)
class RenderOptions:
    scale: float = 60.0
    margin: float = 10.0
    kite_fill: str = "#e8b04a"
    dart_fill: str = "#3d6e9c"
    stroke: str = "#222222"
    stroke_width: float = 0.8
    star_overlay: bool = False
    star_stroke: str = "#c0392b"
    digits: int = 3


def _fmt(x: float, digits: int) -> str:
    s = f"{x:.{digits}f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(p: Patch, options: RenderOptions | None = None) -> str:
    """SVG document for ``p``; identical input gives byte-identical output."""
    o = options or RenderOptions()
    pts = {v: embed_float(v) for t in p.tiles for v in t.vertices}
    if o.star_overlay:
        pts.setdefault(RVector(), (0.0, 0.0))
    xs = [x for x, _ in pts.values()] or [0.0]
    ys = [y for _, y in pts.values()] or [0.0]
    if o.star_overlay:
        xs += [-1.0, 1.0]
        ys += [-1.0, 1.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    width = (x1 - x0) * o.scale + 2 * o.margin
    height = (y1 - y0) * o.scale + 2 * o.margin

    def sx(x):
        return _fmt((x - x0) * o.scale + o.margin, o.digits)

    def sy(y):
        # SVG y grows downwards
        return _fmt((y1 - y) * o.scale + o.margin, o.digits)

    d = o.digits
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width, d)}" '
        f'height="{_fmt(height, d)}" viewBox="0 0 {_fmt(width, d)} {_fmt(height, d)}">',
        f'<g stroke={quoteattr(o.stroke)} stroke-width="{_fmt(o.stroke_width, d)}" stroke-linejoin="round">',
    ]
    for t in p.tiles:
        fill = o.kite_fill if t.shape == "kite" else o.dart_fill
        coords = " ".join(f"{sx(pts[v][0])},{sy(pts[v][1])}" for v in t.vertices)
        out.append(f'<polygon class="{t.shape}" data-kind="{t.kind}" fill="{fill}" points="{coords}"/>')
    out.append("</g>")
    if o.star_overlay:
        out.append(f'<g class="star" stroke={quoteattr(o.star_stroke)} stroke-width="{_fmt(o.stroke_width, d)}">')
        for k in range(5):
            x, y = embed_float(RVector.unit(k))
            out.append(f'<line x1="{sx(0.0)}" y1="{sy(0.0)}" x2="{sx(x)}" y2="{sy(y)}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
