"""Float reconstruction of patches and recovery of their integer R-coordinates.

``float_patch`` rebuilds a patch with complex arithmetic only (no R-tuples), applying
the same Robinson substitution and an optional translation.  ``FloatDecoder`` then
walks the edge graph from a base vertex with known coordinates, classifies every float
edge vector against the twenty admissible edge vectors and accumulates integer tuples.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .quasilattice import RVector, edge_vectors, embed, embed_float
from .tiling import Patch

__all__ = ["FloatTile", "FloatPatch", "FloatDecoder", "NoMatch", "float_patch", "decode_float_vertex"]

_PHI = (1.0 + math.sqrt(5.0)) / 2.0
_DECODE_TOL = 1e-9


@dataclass(frozen=True)
class FloatTile:
    shape: str
    vertices: tuple[complex, complex, complex]


@dataclass
class FloatPatch:
    tiles: list[FloatTile]
    base_point: complex
    base_vector: RVector


def _subdivide_float(t: FloatTile) -> list[FloatTile]:
    apex, axis, side = (z * _PHI for z in t.vertices)
    if t.shape == "kite":
        e, a, b = apex, axis, side
        d = e + (a - e) / _PHI
        p = e + (b - e) / (_PHI * _PHI)
        return [FloatTile("kite", (b, d, a)), FloatTile("kite", (b, d, p)), FloatTile("dart", (p, e, d))]
    a, f, b = apex, axis, side
    p = f + (b - f) / _PHI
    return [FloatTile("kite", (f, a, p)), FloatTile("dart", (p, b, a))]


def float_patch(seed: Patch, steps: int, offset: complex = 0j) -> FloatPatch:
    """Inflate ``seed`` in floating point and translate the result by ``offset``.

    Only the seed's vertices are converted from R; all later geometry is float.
    The base vertex is the origin of the exact frame, carried along by the offset.
    """
    tiles = [FloatTile(t.shape, tuple(complex(*embed_float(v)) for v in t.vertices)) for t in seed.tiles]
    for _ in range(steps):
        tiles = [c for t in tiles for c in _subdivide_float(t)]
    tiles = [FloatTile(t.shape, tuple(z + offset for z in t.vertices)) for t in tiles]
    return FloatPatch(tiles, offset, RVector())


@dataclass
class NoMatch:
    reason: str
    candidates: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return False


class FloatDecoder:
    """Decodes the vertices of a ``FloatPatch`` to R by accumulating classified edges."""

    def __init__(self, patch: FloatPatch, tol: float = _DECODE_TOL, snap: float = 1e-7):
        self.patch = patch
        self.tol = tol
        self.snap = snap
        self._table = [(complex(*embed_float(v)), v) for v in edge_vectors()]
        self._index: dict[tuple[int, int], int] = {}
        self.points: list[complex] = []
        adjacency: dict[int, set[int]] = {}
        for t in patch.tiles:
            ids = [self._vertex_id(z) for z in t.vertices]
            for i in range(3):
                for j in range(3):
                    if i != j:
                        adjacency.setdefault(ids[i], set()).add(ids[j])
        self.adjacency = adjacency
        self.coords: dict[int, RVector] = {}
        self._exact_cache: dict[RVector, complex] = {}
        self.failures: list[NoMatch] = []
        self._walk()

    def _vertex_id(self, z: complex, create: bool = True) -> int | None:
        key = (round(z.real / self.snap), round(z.imag / self.snap))
        for dx in (0, -1, 1):
            for dy in (0, -1, 1):
                found = self._index.get((key[0] + dx, key[1] + dy))
                if found is not None and abs(self.points[found] - z) <= self.snap:
                    return found
        if not create:
            return None
        self._index[key] = len(self.points)
        self.points.append(z)
        return len(self.points) - 1

    def classify(self, delta: complex) -> RVector | NoMatch:
        hits = [(abs(delta - z), v) for z, v in self._table if abs(delta - z) <= self.tol]
        if len(hits) == 1:
            return hits[0][1]
        if not hits:
            return NoMatch("edge vector matches no admissible edge", [delta])
        return NoMatch("ambiguous edge vector", [list(v.n) for _, v in hits])

    def _walk(self) -> None:
        base = self._vertex_id(self.patch.base_point, create=False)
        if base is None:
            self.failures.append(NoMatch("base point is not a patch vertex"))
            return
        self.coords[base] = self.patch.base_vector
        queue = deque([base])
        while queue:
            i = queue.popleft()
            for j in sorted(self.adjacency.get(i, ())):
                if j in self.coords:
                    continue
                step = self.classify(self.points[j] - self.points[i])
                if isinstance(step, NoMatch):
                    self.failures.append(step)
                    continue
                self.coords[j] = self.coords[i] + step
                queue.append(j)

    def decode(self, q: complex, max_norm: int = 10**6) -> RVector | NoMatch:
        idx = self._vertex_id(q, create=False)
        if idx is None:
            return NoMatch("point is not a vertex of the float patch", [q])
        v = self.coords.get(idx)
        if v is None:
            return NoMatch("vertex not reached from the base vertex", [q])
        if max(abs(c) for c in v.n) > max_norm:
            return NoMatch("decoded coordinates exceed max_norm", [list(v.n)])
        r = self.residual(v, q)
        if r > self.tol:
            return NoMatch(f"residual {r:.3e} above tolerance", [list(v.n)])
        return v

    def residual(self, v: RVector, q: complex) -> float:
        z = self._exact_cache.get(v)
        if z is None:
            z = self._exact_cache[v] = complex(*embed(v).to_float())
        return abs(z + self.patch.base_point - q)


def decode_float_vertex(q: complex | tuple[float, float], decoder: FloatDecoder,
                        max_norm: int = 10**6) -> RVector | NoMatch:
    """The R-coordinates of float vertex ``q`` relative to the decoder's base, or ``NoMatch``."""
    if not isinstance(q, complex):
        q = complex(*q)
    return decoder.decode(q, max_norm)
