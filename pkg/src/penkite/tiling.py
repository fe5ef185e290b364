"""Kite-and-dart patches built from Robinson half-tiles with vertices in R.

A half-kite is the isosceles triangle ``(E, A, B)`` cut from the kite along its axis
``EA``: apex ``E`` (angle pi/5), axis end ``A``, side vertex ``B``; sides
``|EA| = |EB| = 1``, ``|AB| = 1/phi``.  A half-dart is ``(A, F, B)`` cut from the dart
along ``AF``: apex ``A`` (angle 3pi/5), tip ``F``, side ``B``; sides
``|AF| = |AB| = 1/phi``, ``|FB| = 1``.  Vertices are stored in that order
(apex, axis end, side).

Orientation of the kite ``Delta_0^+``: ``E = 0``, ``A = Y*_0``, ``B = -Y*_2`` (right of
the axis), ``G = -Y*_3`` (left of the axis).

Matching rules are carried by a two-colouring of vertices: in the kite ``E`` and ``A``
are white and ``B``, ``G`` black; in the dart ``A`` and ``F`` are black and ``B``, ``G``
white.  Adjacent tiles must agree on every shared vertex.  The substitution swaps the
two colours, so the colour of a role depends on the parity of the tile level.
"""

from __future__ import annotations

import json
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .quasilattice import (
    RVector,
    classify_edge,
    cross_sign,
    embed_float,
    phi_scale,
)

__all__ = [
    "HalfTile",
    "Patch",
    "VerificationReport",
    "seed_patch",
    "inflate",
    "verify_patch",
    "half_tile_counts",
    "recurrence_counts",
    "read_patch",
    "write_patch",
    "SEED_NAMES",
]

KINDS = ("HalfKiteL", "HalfKiteR", "HalfDartL", "HalfDartR")

# angle at (apex, axis end, side) in units of pi/5
_ANGLES = {"kite": (1, 2, 2), "dart": (3, 1, 1)}
# (apex->axis, apex->side, axis->side) edge kinds
_SIDES = {"kite": ("long", "long", "short"), "dart": ("short", "short", "long")}
# vertex colour at level 0: 0 = white, 1 = black
_COLOURS = {"kite": (0, 0, 1), "dart": (1, 1, 0)}


@dataclass(frozen=True, order=True)
class HalfTile:
    kind: str
    vertices: tuple[RVector, RVector, RVector]
    level: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown half-tile kind {self.kind!r}")
        if len(self.vertices) != 3:
            raise ValueError("a half-tile has three vertices")

    @property
    def shape(self) -> str:
        return "kite" if self.kind.startswith("HalfKite") else "dart"

    @property
    def chirality(self) -> str:
        return self.kind[-1]

    @property
    def apex(self) -> RVector:
        return self.vertices[0]

    @property
    def axis_end(self) -> RVector:
        return self.vertices[1]

    @property
    def side(self) -> RVector:
        return self.vertices[2]

    def key(self) -> tuple:
        return (self.kind, tuple(v.n for v in self.vertices), self.level)

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": [list(v.n) for v in self.vertices], "level": self.level}

    @classmethod
    def from_json(cls, obj: dict) -> HalfTile:
        return cls(obj["kind"], tuple(RVector(v) for v in obj["vertices"]), int(obj.get("level", 0)))


def make_half(shape: str, apex: RVector, axis_end: RVector, side: RVector, level: int = 0) -> HalfTile:
    """Half-tile whose chirality is read off the signed area of its vertices."""
    s = cross_sign(axis_end - apex, side - apex)
    if s == 0:
        raise ValueError("degenerate half-tile")
    prefix = "HalfKite" if shape == "kite" else "HalfDart"
    return HalfTile(prefix + ("L" if s > 0 else "R"), (apex, axis_end, side), level)


@dataclass
class Patch:
    tiles: list[HalfTile]
    provenance: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.tiles)

    def vertices(self) -> list[RVector]:
        return sorted({v for t in self.tiles for v in t.vertices})

    def sorted(self) -> Patch:
        return Patch(sorted(self.tiles, key=HalfTile.key), dict(self.provenance))


def _e(k: int) -> RVector:
    return RVector.unit(k)


def _kite_halves(e: RVector, a: RVector, b: RVector, g: RVector) -> list[HalfTile]:
    return [make_half("kite", e, a, b), make_half("kite", e, a, g)]


def _dart_halves(f: RVector, a: RVector, b: RVector, g: RVector) -> list[HalfTile]:
    return [make_half("dart", a, f, b), make_half("dart", a, f, g)]


def kite_vertices(k: int, sign: int = 1) -> dict[str, RVector]:
    """``E, A, B, G`` of ``Delta_k^sign``; the minus kites are the plus kites negated."""
    verts = {"E": RVector(), "A": _e(k), "B": -_e(k + 2), "G": -_e(k + 3)}
    if sign < 0:
        verts = {name: -v for name, v in verts.items()}
    return verts


def dart_vertices(k: int) -> dict[str, RVector]:
    """Dart with its tip ``F`` at the origin and axis along ``Y*_k``."""
    return {"F": RVector(), "A": _e(k - 1) + _e(k + 1), "B": -_e(k + 2), "G": -_e(k + 3)}


def _parse_seed(name: str, k: int | None) -> tuple[str, int | None]:
    base = name.replace("_", "-").lower()
    if k is None:
        head, _, tail = base.rpartition("-")
        if tail.isdigit() and head:
            base, k = head, int(tail)
    return base, k


SEED_NAMES = ("delta-plus-K", "delta-minus-K", "sun", "star", "single-dart", "half-kite", "half-dart")


def seed_patch(name: str, k: int | None = None) -> Patch:
    """Named starting configuration, e.g. ``seed_patch("delta-plus-0")`` or ``seed_patch("sun")``."""
    base, k = _parse_seed(name, k)
    if base in ("delta-plus", "delta-minus"):
        if k is None or not 0 <= k <= 4:
            raise ValueError(f"{base} needs k in 0..4")
        v = kite_vertices(k, 1 if base == "delta-plus" else -1)
        tiles = _kite_halves(v["E"], v["A"], v["B"], v["G"])
    elif base == "sun":
        tiles = []
        for j in range(5):
            v = kite_vertices(j)
            tiles += _kite_halves(v["E"], v["A"], v["B"], v["G"])
    elif base == "star":
        tiles = []
        for j in range(5):
            v = dart_vertices(j)
            tiles += _dart_halves(v["F"], v["A"], v["B"], v["G"])
    elif base == "single-dart":
        v = dart_vertices(0)
        tiles = _dart_halves(v["F"], v["A"], v["B"], v["G"])
    elif base == "half-kite":
        v = kite_vertices(0)
        tiles = [make_half("kite", v["E"], v["A"], v["B"])]
    elif base == "half-dart":
        v = dart_vertices(0)
        tiles = [make_half("dart", v["A"], v["F"], v["B"])]
    else:
        raise ValueError(f"unknown seed {name!r}; known: {', '.join(SEED_NAMES)}")
    label = base if k is None else f"{base}-{k}"
    return Patch(sorted(tiles, key=HalfTile.key), {"seed": label, "inflations": 0})


def _subdivide(t: HalfTile) -> list[HalfTile]:
    lvl = t.level + 1
    apex, axis, side = (phi_scale(v, 1) for v in t.vertices)
    if t.shape == "kite":
        e, a, b = apex, axis, side
        d = e + phi_scale(a - e, -1)   # on the axis, |ED| = 1
        p = e + phi_scale(b - e, -2)   # on the long edge, |EP| = 1/phi
        return [
            make_half("kite", b, d, a, lvl),
            make_half("kite", b, d, p, lvl),
            make_half("dart", p, e, d, lvl),
        ]
    a, f, b = apex, axis, side
    p = f + phi_scale(b - f, -1)       # on the long edge, |FP| = 1
    return [
        make_half("kite", f, a, p, lvl),
        make_half("dart", p, b, a, lvl),
    ]


def inflate(p: Patch, steps: int = 1) -> Patch:
    """Substitute every half-tile ``steps`` times, rescaling by phi each time.

    Unit long edges are kept, so coordinates stay integral at every level.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    tiles = list(p.tiles)
    for _ in range(steps):
        # children of adjacent parents never coincide; the set guards the invariant
        tiles = sorted({c for t in tiles for c in _subdivide(t)}, key=HalfTile.key)
    prov = dict(p.provenance)
    prov["inflations"] = prov.get("inflations", 0) + steps
    return Patch(tiles, prov)


def half_tile_counts(p: Patch) -> dict[str, int]:
    c = Counter(t.shape for t in p.tiles)
    return {"kite": c.get("kite", 0), "dart": c.get("dart", 0)}


def recurrence_counts(start: tuple[int, int], steps: int) -> tuple[int, int]:
    """Apply the substitution matrix [[2, 1], [1, 1]] to (kites, darts)."""
    k, d = start
    for _ in range(steps):
        k, d = 2 * k + d, k + d
    return k, d


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerificationReport:
    tiles: int
    vertices: list[list[int]]
    edges_checked: int
    interior_vertices: int
    boundary_halves: list[int]
    violations: list[dict]
    edge_classes: dict[str, int]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "check": "verify_patch",
            "status": "pass" if self.ok else "fail",
            "max_residual": 0.0,
            "tiles": self.tiles,
            "vertex_count": len(self.vertices),
            "edges_checked": self.edges_checked,
            "interior_vertices": self.interior_vertices,
            "boundary_halves": len(self.boundary_halves),
            "edge_classes": self.edge_classes,
            "violations": self.violations,
        }


def _angle_units(d1: int, d2: int) -> int:
    diff = (d2 - d1) % 10
    return min(diff, 10 - diff)


def verify_patch(p: Patch) -> VerificationReport:
    """Check edges, R-membership, vertex angle sums, edge sharing and matching rules.

    Failures are collected in ``violations`` with the offending tile indices.
    """
    tiles = p.tiles
    violations: list[dict] = []
    edge_classes: Counter = Counter()
    # undirected edge -> list of (tile index, role index of the side, third vertex)
    edge_users: dict[tuple, list[tuple[int, int, RVector]]] = defaultdict(list)
    angle_sum: dict[RVector, int] = defaultdict(int)
    colour: dict[RVector, tuple[int, int]] = {}
    edges_checked = 0

    for idx, t in enumerate(tiles):
        v = t.vertices
        sides = ((0, 1), (0, 2), (1, 2))
        dirs = {}
        expected_kinds = _SIDES[t.shape]
        for role, (i, j) in enumerate(sides):
            edges_checked += 1
            cls = classify_edge(v[j] - v[i])
            edge_classes[str(cls)] += 1
            if not cls.is_edge:
                violations.append({"check": "edge_class", "tiles": [idx],
                                   "detail": f"side {i}-{j} is NotAnEdge"})
                continue
            if cls.kind != expected_kinds[role]:
                violations.append({"check": "edge_class", "tiles": [idx],
                                   "detail": f"side {i}-{j} is {cls.kind}, expected {expected_kinds[role]}"})
            dirs[(i, j)] = cls.direction
            dirs[(j, i)] = (cls.direction + 5) % 10
            key = (v[i], v[j]) if v[i].n <= v[j].n else (v[j], v[i])
            edge_users[key].append((idx, role, v[3 - i - j]))
        if len(dirs) == 6:
            want = _ANGLES[t.shape]
            for i in range(3):
                j, k = [x for x in range(3) if x != i]
                ang = _angle_units(dirs[(i, j)], dirs[(i, k)])
                if ang != want[i]:
                    violations.append({"check": "angle", "tiles": [idx],
                                       "detail": f"angle {ang}pi/5 at vertex {i}, expected {want[i]}pi/5"})
                angle_sum[v[i]] += want[i]
        # matching-rule colours, normalised by level parity
        base = _COLOURS[t.shape]
        for i in range(3):
            c = base[i] ^ (t.level & 1)
            prev = colour.get(v[i])
            if prev is None:
                colour[v[i]] = (c, idx)
            elif prev[0] != c:
                violations.append({"check": "matching_rule", "tiles": [prev[1], idx],
                                   "detail": f"vertex {list(v[i].n)} coloured inconsistently"})

    # edge sharing
    incident: dict[RVector, Counter] = defaultdict(Counter)
    boundary_halves: list[int] = []
    for (a, b), users in edge_users.items():
        incident[a][b] += len(users)
        incident[b][a] += len(users)
        idxs = [u[0] for u in users]
        if len(users) > 2:
            violations.append({"check": "edge_sharing", "tiles": idxs, "detail": "edge used by more than two tiles"})
            continue
        if len(users) == 1:
            (i, role, _), = users
            if role == 0:
                boundary_halves.append(i)
            continue
        (i, ri, wi), (j, rj, wj) = users
        ti, tj = tiles[i], tiles[j]
        si = cross_sign(b - a, wi - a)
        sj = cross_sign(b - a, wj - a)
        if si == sj:
            violations.append({"check": "edge_sharing", "tiles": [i, j], "detail": "tiles overlap across a shared edge"})
        axis_i, axis_j = ri == 0, rj == 0
        if axis_i or axis_j:
            mirror = (axis_i and axis_j and ti.shape == tj.shape and ti.chirality != tj.chirality
                      and ti.apex == tj.apex and ti.axis_end == tj.axis_end)
            if not mirror:
                violations.append({"check": "pairing", "tiles": [i, j],
                                   "detail": "bisecting edge not shared with the mirror half"})
        elif {ti.shape, tj.shape} == {"kite", "dart"} and _SIDES[ti.shape][ri] == "short":
            kite, dart = (ti, tj) if ti.shape == "kite" else (tj, ti)
            if kite.axis_end == dart.apex:
                violations.append({"check": "thick_rhombus", "tiles": [i, j],
                                   "detail": "kite and dart joined head to head along a short edge"})

    # vertex angle sums; interior = every incident edge used exactly twice
    interior = 0
    for vert, total in angle_sum.items():
        closed = all(c == 2 for c in incident[vert].values())
        if total > 10:
            violations.append({"check": "angle_sum", "tiles": [],
                               "detail": f"vertex {list(vert.n)} has angle sum {total}pi/5 > 2pi"})
        elif closed:
            interior += 1
            if total != 10:
                violations.append({"check": "angle_sum", "tiles": [],
                                   "detail": f"interior vertex {list(vert.n)} has angle sum {total}pi/5"})

    violations += _overlap_violations(tiles)
    verts = sorted({v for t in tiles for v in t.vertices})
    return VerificationReport(
        tiles=len(tiles),
        vertices=[list(v.n) for v in verts],
        edges_checked=edges_checked,
        interior_vertices=interior,
        boundary_halves=sorted(boundary_halves),
        violations=violations,
        edge_classes=dict(sorted(edge_classes.items())),
    )


def _overlap_violations(tiles: list[HalfTile], eps: float = 1e-9) -> list[dict]:
    """Vertices strictly inside another tile or inside one of its edges (T-junctions)."""
    pts: dict[RVector, tuple[float, float]] = {}
    for t in tiles:
        for v in t.vertices:
            if v not in pts:
                pts[v] = embed_float(v)
    grid: dict[tuple[int, int], list[RVector]] = defaultdict(list)
    for v, (x, y) in pts.items():
        grid[(math.floor(x), math.floor(y))].append(v)
    out = []
    for idx, t in enumerate(tiles):
        (x0, y0), (x1, y1), (x2, y2) = (pts[v] for v in t.vertices)
        area = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)
        lo_x, hi_x = math.floor(min(x0, x1, x2)), math.floor(max(x0, x1, x2))
        lo_y, hi_y = math.floor(min(y0, y1, y2)), math.floor(max(y0, y1, y2))
        own = set(t.vertices)
        for gx in range(lo_x, hi_x + 1):
            for gy in range(lo_y, hi_y + 1):
                for v in grid.get((gx, gy), ()):
                    if v in own:
                        continue
                    px, py = pts[v]
                    l1 = ((x1 - px) * (y2 - py) - (x2 - px) * (y1 - py)) / area
                    l2 = ((x2 - px) * (y0 - py) - (x0 - px) * (y2 - py)) / area
                    l3 = 1.0 - l1 - l2
                    if min(l1, l2, l3) > -eps:
                        out.append({"check": "overlap", "tiles": [idx],
                                    "detail": f"vertex {list(v.n)} lies inside or on the boundary of the tile"})
    return out


# ---------------------------------------------------------------------------
# patch files: JSON lines, one half-tile per line


def write_patch(p: Patch, path: str | Path) -> None:
    with open(path, "w") as fh:
        for t in p.tiles:
            fh.write(json.dumps(t.to_json(), separators=(",", ":")) + "\n")


def read_patch(path: str | Path) -> Patch:
    tiles = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                tiles.append(HalfTile.from_json(json.loads(line)))
    return Patch(tiles, {"source": str(path)})


def iter_edges(tiles: Iterable[HalfTile]):
    for t in tiles:
        v = t.vertices
        yield from ((v[0], v[1]), (v[0], v[2]), (v[1], v[2]))
