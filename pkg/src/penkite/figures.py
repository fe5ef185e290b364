"""PNG figures written next to the JSON and SVG outputs of the CLI."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.collections import PolyCollection  # noqa: E402

from .delzant.charts import chart_slice, kite_charts, sample_domain  # noqa: E402
from .delzant.moment import moment_image  # noqa: E402
from .delzant.polytope import DelzantData, Polytope2D  # noqa: E402
from .quasilattice import embed_float  # noqa: E402
from .tiling import Patch, half_tile_counts, inflate  # noqa: E402

__all__ = ["plot_patch", "plot_kite_moment", "plot_counts"]

_STYLE = {
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}
_KITE, _DART = "#e8b04a", "#3d6e9c"
# keep PNG bytes independent of the installed matplotlib version
_META = {"Software": None}


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, metadata=_META)
    plt.close(fig)
    return path


def plot_patch(p: Patch, path, title: str | None = None) -> Path:
    """Filled half-tiles, kites and darts in two colours."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(5, 5))
        polys = [[embed_float(v) for v in t.vertices] for t in p.tiles]
        colours = [_KITE if t.shape == "kite" else _DART for t in p.tiles]
        ax.add_collection(PolyCollection(polys, facecolors=colours, edgecolors="#222222", linewidths=0.3))
        ax.autoscale_view()
        ax.set_aspect("equal")
        ax.set_axis_off()
        ax.set_title(title or f"{p.provenance.get('seed', 'patch')}: {len(p)} half-tiles")
        return _save(fig, path)


def plot_kite_moment(poly: Polytope2D, data: DelzantData, path, samples: int = 2000,
                     rng: np.random.Generator | None = None) -> Path:
    """The kite polytope with moment images of chart-slice samples, one colour per chart."""
    rng = rng or np.random.default_rng(0)
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(5, 5))
        verts = np.array([v.to_float() for v in poly.vertices] + [poly.vertices[0].to_float()])
        for name, chart in kite_charts(data).items():
            ui, uj = sample_domain(chart, samples, rng, strict_free=False)
            th = rng.uniform(0, 1, size=(samples, 2))
            w = np.column_stack([np.sqrt(ui) * np.exp(2j * np.pi * th[:, 0]),
                                 np.sqrt(uj) * np.exp(2j * np.pi * th[:, 1])])
            mu = moment_image(chart_slice(chart, w), data)
            ax.scatter(mu[:, 0], mu[:, 1], s=1.5, alpha=0.5, label=f"chart {name}", rasterized=True)
        ax.plot(verts[:, 0], verts[:, 1], color="#222222", lw=1.2)
        for name, v in zip(poly.vertex_names, poly.vertices):
            x, y = v.to_float()
            ax.annotate(name, (x, y), textcoords="offset points", xytext=(4, 4))
        ax.set_aspect("equal")
        ax.legend(loc="lower left", markerscale=6, frameon=False)
        ax.set_title("moment image over the kite")
        return _save(fig, path)


def plot_counts(start: Patch, steps: int, path) -> Path:
    """Kite:dart ratio of full tiles per inflation step against phi."""
    ratios = []
    p = start
    for _ in range(steps):
        p = inflate(p, 1)
        c = half_tile_counts(p)
        ratios.append(c["kite"] / c["dart"] if c["dart"] else np.nan)
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(5, 3))
        ax.plot(range(1, steps + 1), ratios, marker="o", color=_DART)
        ax.axhline((1 + 5 ** 0.5) / 2, color=_KITE, ls="--", label="phi")
        ax.set_xlabel("inflation step")
        ax.set_ylabel("kites / darts")
        ax.legend(frameon=False)
        return _save(fig, path)
