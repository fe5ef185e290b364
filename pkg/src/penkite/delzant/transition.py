"""Lifted transition maps between chart coverings and their verification.

The lift from chart ``A = (i, j)`` to chart ``B = (p, q)`` keeps the radii of shared
coordinates, solves the others from the level set, and moves the phases linearly
with the kernel basis adapted to the complement of ``B``::

    theta'_c = theta_c - sum_{a in comp(B)} theta_a * b^(a)_c

where phases of coordinates that are real in chart ``A`` are zero.  The group
isomorphism ``F`` solves ``M_B F = L M_A`` over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import _linalg as la
from ..exactnum import GoldenNum
from ..reports import Check, Report
from .charts import Chart, chart_slice, covering_action, in_domain, integer_split, sample_covering
from .polytope import adapted_basis

__all__ = ["TransitionLift", "transition_lift", "verify_transition", "chart_change", "symplectic_matrix"]

TWO_PI = 2.0 * np.pi


@dataclass
class TransitionLift:
    source: Chart
    target: Chart
    L: list[list[GoldenNum]]
    radial: list  # per target coordinate: ("copy", source slot) or ("solve", Radicand)
    F: list[list[int]]

    @property
    def name(self) -> str:
        return f"{self.source.name}->{self.target.name}"

    def L_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.L])

    def apply(self, p) -> np.ndarray:
        """Map covering points ``(..., 4)`` of the source chart to the target chart."""
        p = np.asarray(p, dtype=float)
        rho = p[..., (0, 2)]
        theta = p[..., (1, 3)]
        out = np.empty_like(p)
        new_theta = theta @ self.L_float().T
        for slot, spec in enumerate(self.radial):
            if spec[0] == "copy":
                out[..., 2 * slot] = rho[..., spec[1]]
            else:
                out[..., 2 * slot] = np.sqrt(spec[1].evaluate(rho[..., 0] ** 2, rho[..., 1] ** 2))
            out[..., 2 * slot + 1] = new_theta[..., slot]
        return out

    __call__ = apply

    def jacobian(self, p) -> np.ndarray:
        """Closed-form Jacobian, shape ``(..., 4, 4)``."""
        p = np.asarray(p, dtype=float)
        image = self.apply(p)
        jac = np.zeros(p.shape[:-1] + (4, 4))
        lf = self.L_float()
        for slot, spec in enumerate(self.radial):
            if spec[0] == "copy":
                jac[..., 2 * slot, 2 * spec[1]] = 1.0
            else:
                a, b, _ = spec[1].floats()
                rr = image[..., 2 * slot]
                jac[..., 2 * slot, 0] = a * p[..., 0] / rr
                jac[..., 2 * slot, 2] = b * p[..., 2] / rr
            jac[..., 2 * slot + 1, 1] = lf[slot, 0]
            jac[..., 2 * slot + 1, 3] = lf[slot, 1]
        return jac

    def deck_image(self, m, n) -> tuple[GoldenNum, GoldenNum]:
        """Exact phase shift in the target produced by the integer shift ``(m, n)`` of the source."""
        return tuple(row[0] * m + row[1] * n for row in self.L)

    def map_group(self, g) -> list[int]:
        return [sum(f * x for f, x in zip(row, g)) for row in self.F]

    def with_F(self, F) -> TransitionLift:
        return TransitionLift(self.source, self.target, self.L, self.radial, [list(r) for r in F])

    def to_json(self) -> dict:
        return {
            "source": self.source.name,
            "target": self.target.name,
            "L": [[x.text() for x in row] for row in self.L],
            "F": self.F,
        }


def _theta_index(chart: Chart, coord: int):
    return chart.pair.index(coord) if coord in chart.pair else None


def transition_lift(source: Chart, target: Chart) -> TransitionLift:
    if source.data is not target.data and source.data != target.data:
        raise ValueError("charts belong to different reductions")
    comp_t = target.complement
    rows = dict(zip(comp_t, adapted_basis(source.data.X, comp_t)))
    zero, one = GoldenNum(0), GoldenNum(1)
    L = []
    for c in target.pair:
        row = []
        for x in source.pair:
            entry = one if c == x else zero
            if x in rows:
                entry = entry - rows[x][c - 1]
            row.append(entry)
        L.append(row)
    radial = []
    for c in target.pair:
        slot = _theta_index(source, c)
        radial.append(("copy", slot) if slot is not None else ("solve", source.radicand(c)))
    F = _solve_F(source, target, L)
    return TransitionLift(source, target, L, radial, F)


def _solve_F(source: Chart, target: Chart, L) -> list[list[int]]:
    rhs = la.matmul(L, source.action_matrix())
    c_t = integer_split(target.action_matrix())
    sol = la.matmul(la.inverse(c_t), integer_split(rhs))
    if any(x.denominator != 1 for row in sol for x in row):
        raise ArithmeticError(f"no integral group isomorphism for {source.name}->{target.name}")
    F = [[int(x) for x in row] for row in sol]
    if abs(la.int_det(F)) != 1:
        raise ArithmeticError("group map is not unimodular")
    return F


def equivariance_exact(t: TransitionLift) -> bool:
    """``L M_A == M_B F`` entry by entry in Q(phi)."""
    lhs = la.matmul(t.L, t.source.action_matrix())
    rhs = la.matmul(t.target.action_matrix(), [[GoldenNum(x) for x in row] for row in t.F])
    return lhs == rhs


def symplectic_matrix(p) -> np.ndarray:
    """``Omega = sum 2 pi rho d rho ^ d theta`` in coordinates ``(rho_i, theta_i, rho_j, theta_j)``."""
    p = np.asarray(p, dtype=float)
    om = np.zeros(p.shape[:-1] + (4, 4))
    for k in (0, 2):
        om[..., k, k + 1] = TWO_PI * p[..., k]
        om[..., k + 1, k] = -TWO_PI * p[..., k]
    return om


def chart_change(source: Chart, target: Chart, w) -> np.ndarray:
    """The map between chart models downstairs: slice, rotate by N into the target slice."""
    z = chart_slice(source, w)
    comp_t = target.complement
    rows = adapted_basis(source.data.X, comp_t)
    shift = np.zeros(z.shape)
    for a, row in zip(comp_t, rows):
        phase = np.angle(z[..., a - 1]) / TWO_PI
        shift -= phase[..., None] * np.array([float(x) for x in row])
    z2 = z * np.exp(1j * TWO_PI * shift)
    return np.stack([z2[..., c - 1] for c in target.pair], axis=-1)


def _group_samples(rng: np.random.Generator, count: int) -> list[list[int]]:
    gens = [[int(i == j) for j in range(4)] for i in range(4)]
    return gens + [list(map(int, g)) for g in rng.integers(-3, 4, size=(count, 4))]


def verify_transition(t: TransitionLift, samples: int = 1000, rng: np.random.Generator | None = None,
                      tol_equiv: float = 1e-10, tol_symp: float = 1e-9, tol_commute: float = 1e-9,
                      check_commute: bool = True) -> Report:
    """Equivariance, symplectic pullback, domain preservation and commutation on random samples."""
    rng = rng or np.random.default_rng(0)
    rep = Report(f"transition {t.name}")
    p = sample_covering(t.source, samples, rng)
    image = t.apply(p)

    rep.add(Check("equivariance_exact", equivariance_exact(t), 0.0, witness={"F": t.F}))

    worst = 0.0
    bad = None
    for g in _group_samples(rng, 20):
        lhs = t.apply(covering_action(t.source, g, p))
        rhs = covering_action(t.target, t.map_group(g), image)
        r = float(np.max(np.abs(lhs - rhs)))
        if r > worst:
            worst = r
        if r > tol_equiv and bad is None:
            bad = {"g": g, "F(g)": t.map_group(g), "residual": r}
    rep.add(Check("equivariance", worst <= tol_equiv, worst, witness=bad))

    jac = t.jacobian(p)
    pulled = np.swapaxes(jac, -1, -2) @ symplectic_matrix(image) @ jac
    r = float(np.max(np.abs(pulled - symplectic_matrix(p))))
    rep.add(Check("symplectic", r <= tol_symp, r))
    # finite-difference cross-check of the closed-form Jacobian, away from the domain boundary
    conditioning = np.min(np.concatenate([p[:, (0, 2)], image[:, (0, 2)]], axis=1), axis=1)
    h = 1e-7
    fd_err = 0.0
    for q in p[np.argsort(-conditioning)[:5]]:
        fd = np.column_stack([(t.apply(q + h * e) - t.apply(q - h * e)) / (2 * h) for e in np.eye(4)])
        fd_err = max(fd_err, float(np.max(np.abs(fd - t.jacobian(q)))))
    rep.add(Check("jacobian_finite_difference", fd_err <= 1e-6, fd_err))

    inside = in_domain(t.target, image[:, 0] ** 2, image[:, 2] ** 2, strict_free=True)
    n_out = int((~inside).sum())
    wit = None
    if n_out:
        k = int(np.flatnonzero(~inside)[0])
        wit = {"source_point": p[k].tolist(), "image": image[k].tolist()}
    rep.add(Check("domain_preserved", n_out == 0, float(n_out), witness=wit))

    if check_commute:
        from ..atlasver import LiftSpec, ModelSpec, check_lift_commutes

        spec = LiftSpec.from_transition(t, ModelSpec.covering(t.source), ModelSpec.covering(t.target))
        rep.extend(check_lift_commutes(spec, samples=p, tol=tol_commute))
    return rep
