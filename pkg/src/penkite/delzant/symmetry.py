"""Equivalence of the ten kites under the rotations and reflection of the pentagonal star."""

from __future__ import annotations

import numpy as np

from ..quasilattice import PlanarPoint, RVector, cos_sin, embed, star_vector
from ..reports import Check, Report
from .charts import kite_charts
from .polytope import kernel_basis, kite_polytope, translate_polytope

__all__ = ["symmetry_equivalence", "star_map", "signed_permutation"]


def star_map(k: int, sign: int):
    """The linear map ``sign * R_k`` (rotation by ``2 pi k / 5``) on exact planar points."""
    c, s = cos_sin(k)

    def apply(p: PlanarPoint) -> PlanarPoint:
        q = PlanarPoint(c * p.x - s * p.y, s * p.x + c * p.y)
        return q if sign > 0 else -q

    return apply


def signed_permutation(k: int, sign: int, dual: bool = False) -> list[tuple[int, int]] | None:
    """``[(m, eps), ...]`` with ``P Y_j = eps Y_m``, or ``None`` if ``P`` does not permute the star."""
    P = star_map(k, sign)
    out = []
    for j in range(5):
        img = P(star_vector(j, dual))
        hit = [(m, e) for m in range(5) for e in (1, -1) if img == star_vector(m, dual).scale(e)]
        if len(hit) != 1:
            return None
        out.append(hit[0])
    return out


def _charts_json(data) -> dict:
    return {name: c.to_json() for name, c in kite_charts(data).items()}


def symmetry_equivalence(k: int, sign: int, translations: int = 3,
                         rng: np.random.Generator | None = None) -> Report:
    """Compare ``Delta_k^sign`` with ``Delta_0^+`` exactly, then check translation behaviour."""
    rng = rng or np.random.default_rng(0)
    rep = Report(f"symmetry k={k} sign={'+' if sign > 0 else '-'}")
    P = star_map(k, sign)
    base_poly, base = kite_polytope(0, 1)
    poly, data = kite_polytope(k, sign)

    perm = signed_permutation(k, sign)
    perm_dual = signed_permutation(k, sign, dual=True)
    rep.add(Check("star_signed_permutation", perm is not None and perm_dual is not None, 0.0,
                  witness={"primal": perm, "dual": perm_dual}))

    relabel = []
    for xb in base.X:
        img = P(embed(xb))
        hits = [j + 1 for j, x in enumerate(data.X) if embed(x) == img]
        relabel.append(hits[0] if len(hits) == 1 else None)
    rep.add(Check("normals_map_to_normals", None not in relabel, 0.0, witness={"relabeling": relabel}))

    verts_ok = all(P(v) == w for v, w in zip(base_poly.vertices, poly.vertices))
    rep.add(Check("vertices_map_to_vertices", verts_ok, 0.0))

    same = (
        data.lam == base.lam
        and kernel_basis(data)["B12"] == kernel_basis(base)["B12"]
        and kernel_basis(data)["B34"] == kernel_basis(base)["B34"]
        and _charts_json(data) == _charts_json(base)
    )
    rep.add(Check("delzant_data_equal", same, 0.0,
                  witness=None if same else {"lambda": [x.text() for x in data.lam]}))

    bad = []
    for _ in range(translations):
        t = RVector([int(x) for x in rng.integers(-3, 4, size=5)])
        _, moved = translate_polytope(poly, t)
        shift = embed(t)
        lam_ok = all(lm - l0 == shift.dot(x) for lm, l0, x in zip(moved.lam, data.lam, data.normals()))
        kb_ok = kernel_basis(moved)["B12"] == kernel_basis(data)["B12"]
        c_new, c_old = kite_charts(moved), kite_charts(data)
        groups_ok = all(c_new[n].g_h == c_old[n].g_h and c_new[n].g_k == c_old[n].g_k for n in c_new)
        if not (lam_ok and kb_ok and groups_ok):
            bad.append({"t": t.to_json(), "lambda": lam_ok, "kernel": kb_ok, "groups": groups_ok})
    rep.add(Check("translation_shifts_offsets_only", not bad, float(len(bad)),
                  witness=bad or None, details={"translations": translations}))
    return rep
