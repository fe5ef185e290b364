"""Kite polytopes and the data of the generalized Delzant construction.

Facets of ``Delta_0^+`` are labelled 1..4 as ``BA, EB, EG, GA`` with inward normals
``X = (-Y_1, Y_2, -Y_3, Y_4)``.  The vertex where facets ``i`` and ``j`` meet is
``B`` for (1, 2), ``E`` for (2, 3), ``G`` for (3, 4) and ``A`` for (4, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .. import _linalg as la
from ..exactnum import SIGMA, GoldenNum, QuadExt, as_golden, quad_sign
from ..quasilattice import PlanarPoint, QVector, RVector, embed
from ..tiling import kite_vertices

__all__ = [
    "Facet",
    "Polytope2D",
    "DelzantData",
    "kite_polytope",
    "kite_normals",
    "kernel_basis",
    "adapted_basis",
    "pi_image",
    "translate_polytope",
    "generation_witness",
    "dimension_count",
    "VERTEX_OF_PAIR",
]

# facet pair -> kite vertex name
VERTEX_OF_PAIR = {(1, 2): "B", (2, 3): "E", (3, 4): "G", (4, 1): "A"}
_VERTEX_ORDER = ("B", "E", "G", "A")

@dataclass(frozen=True)
class Facet:
    normal: QVector
    offset: QuadExt

@dataclass(frozen=True)
class Polytope2D:
    facets: tuple[Facet, ...]
    vertices: tuple[PlanarPoint, ...]
    vertex_names: tuple[str, ...] = ()

    def facet_value(self, j: int, mu: PlanarPoint) -> QuadExt:
        """``<mu, X_j> - lambda_j`` for 1-based facet ``j``."""
        f = self.facets[j - 1]
        return mu.dot(embed(f.normal)) - f.offset

    def contains(self, mu: PlanarPoint) -> bool:
        return all(quad_sign(self.facet_value(j, mu)) >= 0 for j in range(1, len(self.facets) + 1))

    def active_facets(self, mu: PlanarPoint) -> list[int]:
        return [j for j in range(1, len(self.facets) + 1) if not self.facet_value(j, mu)]

    def is_simple(self) -> bool:
        """Every vertex lies in the polytope with equality on exactly two facets."""
        return all(self.contains(v) and len(self.active_facets(v)) == 2 for v in self.vertices)

@dataclass(frozen=True)
class DelzantData:
    X: tuple[QVector, ...]
    lam: tuple[QuadExt, ...]
    kernel_basis: tuple[tuple[GoldenNum, ...], ...]
    sigma: QuadExt = SIGMA

    @property
    def d(self) -> int:
        return len(self.X)

    def normals(self) -> list[PlanarPoint]:
        return [embed(x) for x in self.X]

    def lam_float(self) -> list[float]:
        return [float(x) for x in self.lam]

    def to_json(self) -> dict:
        return {
            "X": [list(x.n) for x in self.X],
            "lambda": [x.text() for x in self.lam],
            "lambda_float": self.lam_float(),
            "kernel_basis": [[g.text() for g in row] for row in self.kernel_basis],
            "sigma": self.sigma.text(),
        }

def kite_normals(k: int, sign: int = 1) -> tuple[QVector, ...]:
    """Inward normals ``-Y_{k+1}, Y_{k+2}, -Y_{k+3}, Y_{k+4}`` (negated for ``sign < 0``)."""
    signs = (-1, 1, -1, 1)
    return tuple(QVector.unit(k + j) * (s * sign) for j, s in zip(range(1, 5), signs))

def _offsets(normals, vertices) -> tuple[QuadExt, ...]:
    lam = []
    for x in normals:
        xv = embed(x)
        vals = [v.dot(xv) for v in vertices]
        lo = vals[0]
        for val in vals[1:]:
            if quad_sign(val - lo) < 0:
                lo = val
        lam.append(lo)
    return tuple(lam)

def _polytope(normals, vertices, names) -> Polytope2D:
    lam = _offsets(normals, vertices)
    return Polytope2D(tuple(Facet(x, l) for x, l in zip(normals, lam)), tuple(vertices), tuple(names))

def pi_image(X, b) -> PlanarPoint:
    """``pi(b) = sum_j b_j X_j``, exact."""
    total = PlanarPoint(0, 0)
    for x, c in zip(X, b):
        if c:
            total = total + embed(x).scale(c)
    return total

def adapted_basis(X, cols: tuple[int, int]) -> tuple[tuple[GoldenNum, ...], ...]:
    """Basis of ``ker pi`` whose restriction to the 1-based columns ``cols`` is the identity.

    Row ``r`` has 1 in column ``cols[r]``, 0 in the other; the remaining two entries
    solve ``pi(row) = 0`` exactly and must lie in Q(phi).
    """
    d = len(X)
    p, q = (c - 1 for c in cols)
    rest = [c for c in range(d) if c not in (p, q)]
    nx = [embed(x) for x in X]
    m = [[nx[rest[0]].x, nx[rest[1]].x], [nx[rest[0]].y, nx[rest[1]].y]]
    rows = []
    for c in (p, q):
        sol = la.solve(m, [-nx[c].x, -nx[c].y])
        row = [GoldenNum(0)] * d
        row[c] = GoldenNum(1)
        for idx, val in zip(rest, sol):
            row[idx] = as_golden(val)
        rows.append(tuple(row))
    return tuple(rows)

def kite_polytope(k: int = 0, sign: int = 1) -> tuple[Polytope2D, DelzantData]:
    """Polytope and reduction data of ``Delta_k^+`` (``sign=1``) or ``Delta_k^-``."""
    verts = kite_vertices(k, sign)
    planar = [embed(verts[n]) for n in _VERTEX_ORDER]
    normals = kite_normals(k, sign)
    poly = _polytope(normals, planar, _VERTEX_ORDER)
    data = DelzantData(normals, tuple(f.offset for f in poly.facets), adapted_basis(normals, (3, 4)))
    return poly, data

def translate_polytope(poly: Polytope2D, t: RVector) -> tuple[Polytope2D, DelzantData]:
    """Translate by ``t`` and recompute offsets and kernel from scratch."""
    shift = embed(t)
    verts = [v + shift for v in poly.vertices]
    normals = tuple(f.normal for f in poly.facets)
    moved = _polytope(normals, verts, poly.vertex_names)
    data = DelzantData(normals, tuple(f.offset for f in moved.facets), adapted_basis(normals, (3, 4)))
    return moved, data

def kernel_basis(data: DelzantData) -> dict:
    """The bases B12 (adapted to columns 3, 4) and B34 (adapted to columns 1, 2).

    Both are checked to lie in ``ker pi`` and to span the same plane; the returned
    ``change`` matrix ``C`` satisfies ``B12 = C @ B34``.
    """
    b12 = adapted_basis(data.X, (3, 4))
    b34 = adapted_basis(data.X, (1, 2))
    for row in b12 + b34:
        if not pi_image(data.X, row).is_zero():
            raise ArithmeticError("kernel row does not map to zero")
    # B12 = C B34; B34 is the identity on columns 1, 2 so C is read off there
    change = tuple(tuple(row[c] for c in (0, 1)) for row in b12)
    for r in range(2):
        recon = [change[r][0] * b34[0][c] + change[r][1] * b34[1][c] for c in range(data.d)]
        if tuple(recon) != b12[r]:
            raise ArithmeticError("B12 and B34 span different planes")
    det = change[0][0] * change[1][1] - change[0][1] * change[1][0]
    if not det:
        raise ArithmeticError("change of basis is singular")
    return {"B12": b12, "B34": b34, "change": change, "det": det}

def generation_witness(X) -> dict[int, tuple[int, ...]]:
    """Integer coefficients expressing every ``Y_m`` in terms of the ``X_j``.

    Works on canonical Q-tuples: the 4x4 matrix of the first four coordinates of
    the ``X_j`` must be unimodular.
    """
    cols = [[Fraction(c) for c in x.n[:4]] for x in X]
    mat = [list(r) for r in zip(*cols)]
    out = {}
    for m in range(5):
        target = [Fraction(c) for c in QVector.unit(m).n[:4]]
        sol = la.solve(mat, target)
        if any(s.denominator != 1 for s in sol):
            raise ArithmeticError(f"Y_{m} is not an integer combination of the normals")
        out[m] = tuple(int(s) for s in sol)
    return out

def dimension_count(data: DelzantData) -> dict:
    """Exact ranks of ``pi`` and of the kernel and the resulting dimension ``2d - 2 dim N``."""
    nx = data.normals()
    pi_mat = [[p.x for p in nx], [p.y for p in nx]]
    r_pi = la.rank(pi_mat)
    r_ker = la.rank([list(row) for row in data.kernel_basis])
    return {"d": data.d, "rank_pi": r_pi, "rank_kernel": r_ker, "dim_M": 2 * data.d - 2 * r_ker}
