"""Command-line entry point: ``penkite <command> ...``.

Reports go to stdout as JSON; patches, SVG and PNG figures go to files.  Exit status
is 0 when every check in scope passes, 1 otherwise and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .reports import Check, Report

__all__ = ["RunConfig", "run", "main", "build_parser"]

_PAIRS = ("12", "23", "34", "41")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    action: str | None = None
    seed: str = "delta-plus-0"
    steps: int = 5
    samples: int = 1000
    tol: float = 1e-9
    rng_seed: int = 0
    out: Path | None = None
    patch: Path | None = None
    pair: tuple[str, str] = ("12", "34")
    kite: int = 0
    sign: int = 1
    star: bool = False
    figure: bool = True
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.tol > 0:
            raise UsageError("--tol must be positive")
        if self.steps < 0:
            raise UsageError("--steps must be >= 0")
        if self.samples < 1:
            raise UsageError("--samples must be >= 1")
        if not 0 <= self.kite <= 4:
            raise UsageError("--kite must be in 0..4")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.rng_seed)


def _parse_sign(text: str) -> int:
    table = {"+": 1, "plus": 1, "1": 1, "+1": 1, "-": -1, "minus": -1, "-1": -1}
    if text not in table:
        raise argparse.ArgumentTypeError(f"invalid sign {text!r}; use + or -")
    return table[text]


def _parse_pair(text: str) -> tuple[str, str]:
    parts = text.replace(",", "-").split("-")
    if len(parts) != 2 or any(p not in _PAIRS for p in parts):
        raise argparse.ArgumentTypeError(f"invalid pair {text!r}; expected e.g. 12-34 with charts {', '.join(_PAIRS)}")
    return parts[0], parts[1]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="penkite", description="Penrose kites: tilings and their quasifold reduction.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--samples", type=int, default=1000, help="random sample points per check")
    common.add_argument("--tol", type=float, default=1e-9, help="numeric tolerance")
    common.add_argument("--rng-seed", type=int, default=0, help="seed for sample generation")
    common.add_argument("--out", type=Path, help="output file (PNG figure is written next to it)")
    common.add_argument("--no-figure", dest="figure", action="store_false", help="skip the PNG figure")
    kite = argparse.ArgumentParser(add_help=False)
    kite.add_argument("--kite", type=int, default=0, metavar="K", help="kite index k in 0..4")
    kite.add_argument("--sign", type=_parse_sign, default=1, help="kite sign, + or -")

    sub = parser.add_subparsers(dest="command", required=True)
    tile = sub.add_parser("tile", help="kite-and-dart patches").add_subparsers(dest="action", required=True)
    gen = tile.add_parser("generate", parents=[common], help="seed -> inflate -> patch file")
    gen.add_argument("--seed", default="delta-plus-0", help="seed name, e.g. delta-plus-0, sun, star, half-kite")
    gen.add_argument("--steps", type=int, default=5, help="inflation steps")
    ver = tile.add_parser("verify", parents=[common], help="patch file -> verification report")
    ver.add_argument("patch", type=Path)
    ren = tile.add_parser("render", parents=[common], help="patch file -> SVG")
    ren.add_argument("patch", type=Path)
    ren.add_argument("--star", action="store_true", help="overlay the dual star vectors")

    dz = sub.add_parser("delzant", help="reduction of the kite").add_subparsers(dest="action", required=True)
    dz.add_parser("report", parents=[common, kite], help="Delzant data and chart data as JSON")
    dv = dz.add_parser("verify", parents=[common, kite], help="transition, symplectic and obstruction checks")
    dv.add_argument("--pair", type=_parse_pair, default=("12", "34"), help="chart pair, e.g. 12-34")

    at = sub.add_parser("atlas", help="quasifold atlas").add_subparsers(dest="action", required=True)
    at.add_parser("verify", parents=[common, kite], help="compatibility of all chart pairs")

    sub.add_parser("symmetry", parents=[common], help="equivalence of all ten kites")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    keys = RunConfig.__dataclass_fields__
    return RunConfig(**{k: v for k, v in vars(ns).items() if k in keys and v is not None})


# ---------------------------------------------------------------------------
# commands


def _figure_path(cfg: RunConfig) -> Path | None:
    if cfg.out is None or not cfg.figure:
        return None
    return cfg.out.with_suffix(".png")


def _emit(payload: dict, ok: bool) -> int:
    payload = {"status": "pass" if ok else "fail", **payload}
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return 0 if ok else 1


def _write_json(cfg: RunConfig, payload: dict) -> None:
    if cfg.out is not None:
        cfg.out.parent.mkdir(parents=True, exist_ok=True)
        cfg.out.write_text(json.dumps(payload, indent=2) + "\n")


def _load_patch(path: Path):
    from .tiling import read_patch

    if not path.exists():
        raise UsageError(f"no such patch file: {path}")
    try:
        return read_patch(path)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read patch {path}: {exc}") from exc


def _tile_generate(cfg: RunConfig) -> int:
    from .tiling import half_tile_counts, inflate, recurrence_counts, seed_patch, write_patch

    try:
        seed = seed_patch(cfg.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    patch = inflate(seed, cfg.steps) if cfg.steps else seed
    start = half_tile_counts(seed)
    counts = half_tile_counts(patch)
    expected = dict(zip(("kite", "dart"), recurrence_counts((start["kite"], start["dart"]), cfg.steps)))
    ok = counts == expected
    payload = {
        "seed": cfg.seed,
        "steps": cfg.steps,
        "half_tiles": len(patch),
        "counts": counts,
        "checks": [Check("recurrence_counts", ok, 0.0, witness={"expected": expected}).to_json()],
    }
    if cfg.out is not None:
        write_patch(patch, cfg.out)
        payload["patch"] = str(cfg.out)
        fig = _figure_path(cfg)
        if fig is not None:
            from .figures import plot_patch

            payload["figure"] = str(plot_patch(patch, fig))
    return _emit(payload, ok)


def _tile_verify(cfg: RunConfig) -> int:
    from .tiling import verify_patch

    patch = _load_patch(cfg.patch)
    rep = verify_patch(patch)
    payload = {"patch": str(cfg.patch), "report": rep.to_json()}
    _write_json(cfg, payload)
    return _emit(payload, rep.ok)


def _tile_render(cfg: RunConfig) -> int:
    from .render import RenderOptions, render_svg

    patch = _load_patch(cfg.patch)
    svg = render_svg(patch, RenderOptions(star_overlay=cfg.star))
    payload = {"patch": str(cfg.patch), "polygons": len(patch)}
    if cfg.out is None:
        sys.stdout.write(svg)
        return 0
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(svg)
    payload["svg"] = str(cfg.out)
    fig = _figure_path(cfg)
    if fig is not None:
        from .figures import plot_patch

        payload["figure"] = str(plot_patch(patch, fig))
    return _emit(payload, True)


def _delzant_report(cfg: RunConfig) -> int:
    from .delzant import dimension_count, generation_witness, kernel_basis, kite_charts, kite_polytope

    poly, data = kite_polytope(cfg.kite, cfg.sign)
    kb = kernel_basis(data)
    dims = dimension_count(data)
    rep = Report("delzant data")
    rep.add(Check("polytope_simple", poly.is_simple()))
    rep.add(Check("rank_pi", dims["rank_pi"] == 2, witness=dims))
    rep.add(Check("rank_kernel", dims["rank_kernel"] == 2))
    try:
        gen = generation_witness(data.X)
        rep.add(Check("normals_generate_Q", True, witness={f"Y{m}": c for m, c in gen.items()}))
    except ArithmeticError as exc:
        rep.add(Check("normals_generate_Q", False, witness=str(exc)))
    payload = {
        "kite": {"k": cfg.kite, "sign": "+" if cfg.sign > 0 else "-"},
        "vertices": {n: v.to_json() for n, v in zip(poly.vertex_names, poly.vertices)},
        "data": data.to_json(),
        "kernel": {name: [[g.text() for g in row] for row in kb[name]] for name in ("B12", "B34")},
        "change_of_basis": [[g.text() for g in row] for row in kb["change"]],
        "charts": {name: c.to_json() for name, c in kite_charts(data).items()},
        "report": rep.to_json(),
    }
    _write_json(cfg, payload)
    fig = _figure_path(cfg)
    if fig is not None:
        from .figures import plot_kite_moment

        payload["figure"] = str(plot_kite_moment(poly, data, fig, samples=min(cfg.samples, 4000), rng=cfg.rng()))
    return _emit(payload, rep.ok)


def _level_set_check(chart, data, samples: int, rng) -> Check:
    from .delzant import chart_slice, reduced_moment_map, sample_domain

    ui, uj = sample_domain(chart, samples, rng, strict_free=False)
    th = rng.uniform(0, 1, size=(samples, 2))
    w = np.column_stack([np.sqrt(ui) * np.exp(2j * np.pi * th[:, 0]), np.sqrt(uj) * np.exp(2j * np.pi * th[:, 1])])
    z = chart_slice(chart, w)
    r = max(float(np.max(np.abs(reduced_moment_map(z, data, b)))) for b in ("B12", "B34"))
    return Check(f"level_set_{chart.name}", r <= 1e-12, r)


def _delzant_verify(cfg: RunConfig) -> int:
    from .delzant import kite_charts, kite_polytope, obstruction_witness, transition_lift, verify_transition

    _, data = kite_polytope(cfg.kite, cfg.sign)
    charts = kite_charts(data)
    rng = cfg.rng()
    a, b = (charts[x] for x in cfg.pair)
    rep = Report(f"delzant verify {a.name}-{b.name}")
    for chart in (a, b) if a is not b else (a,):
        rep.add(_level_set_check(chart, data, cfg.samples, rng))
    t = transition_lift(a, b)
    rep.extend(verify_transition(t, samples=cfg.samples, rng=rng, tol_equiv=cfg.tol, tol_symp=cfg.tol,
                                 tol_commute=cfg.tol))
    obstruction = obstruction_witness(rng=rng)
    rep.extend(obstruction, prefix="obstruction.")
    payload = {"pair": f"{a.name}-{b.name}", "lift": t.to_json(), "report": rep.to_json()}
    _write_json(cfg, payload)
    return _emit(payload, rep.ok)


def _atlas_verify(cfg: RunConfig) -> int:
    from .atlasver import ModelSpec, check_compatibility
    from .delzant import kite_charts, kite_polytope

    _, data = kite_polytope(cfg.kite, cfg.sign)
    charts = kite_charts(data)
    rng = cfg.rng()
    reports = []
    for a in _PAIRS:
        for b in _PAIRS:
            if a != b:
                reports.append(check_compatibility(ModelSpec.covering(charts[a]), ModelSpec.covering(charts[b]),
                                                   samples=cfg.samples, rng=rng, tol=cfg.tol))
    ok = all(r.ok for r in reports)
    payload = {"pairs": len(reports), "reports": [r.to_json() for r in reports]}
    _write_json(cfg, payload)
    return _emit(payload, ok)


def _symmetry(cfg: RunConfig) -> int:
    from .delzant import symmetry_equivalence

    rng = cfg.rng()
    reports = [symmetry_equivalence(k, s, rng=rng) for k in range(5) for s in (1, -1)]
    ok = all(r.ok for r in reports)
    payload = {"kites": len(reports), "reports": [r.to_json() for r in reports]}
    _write_json(cfg, payload)
    return _emit(payload, ok)


_COMMANDS = {
    ("tile", "generate"): _tile_generate,
    ("tile", "verify"): _tile_verify,
    ("tile", "render"): _tile_render,
    ("delzant", "report"): _delzant_report,
    ("delzant", "verify"): _delzant_verify,
    ("atlas", "verify"): _atlas_verify,
    ("symmetry", None): _symmetry,
}


def run(cfg: RunConfig) -> int:
    return _COMMANDS[(cfg.command, cfg.action)](cfg)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return run(config_from_args(ns))
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"penkite: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
