"""Local charts of the reduced space, their domains, groups and covering actions.

A chart is labelled by the pair ``(i, j)`` of facets meeting at a polytope vertex.
Its free coordinates are ``z_i, z_j``; the other two are solved from the level set as
``z_c = sqrt(alpha_c |z_i|^2 + beta_c |z_j|^2 + gamma_c)``, real and positive.

Points of the covering space are arrays ``(rho_i, theta_i, rho_j, theta_j)`` with
``z = rho * exp(2 pi i theta)``; the covering group Z^4 acts by
``theta += M @ (m, n, h, k)`` with ``M = [[1, 0, gh_0, gk_0], [0, 1, gh_1, gk_1]]``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .. import _linalg as la
from ..exactnum import GoldenNum, QuadExt, as_golden, as_quad, quad_sign
from .polytope import DelzantData, adapted_basis

__all__ = [
    "Radicand",
    "Chart",
    "make_chart",
    "kite_charts",
    "CHART_PAIRS",
    "chart_slice",
    "in_domain",
    "sample_domain",
    "sample_covering",
    "chart_group",
    "covering_action",
    "integer_split",
    "mod_one",
    "DomainError",
]

CHART_PAIRS = ((1, 2), (2, 3), (3, 4), (4, 1))

# which kernel row generates h and k in each chart (1-based facet of the adapted row)
_GENERATOR_ROWS = {(1, 2): (4, 3), (3, 4): (1, 2), (2, 3): (1, 4), (4, 1): (3, 2)}

_GUARD = 1e-9


class DomainError(ValueError):
    pass


def mod_one(x: GoldenNum) -> GoldenNum:
    """Canonical representative of ``x`` modulo Z: ``p + q/phi`` with ``0 <= p < 1``."""
    p, q = as_golden(x).one_over_phi_parts()
    return GoldenNum.from_one_over_phi(p - (p.numerator // p.denominator), q)


def _strip_integer(x: GoldenNum) -> GoldenNum:
    _, q = x.one_over_phi_parts()
    return GoldenNum.from_one_over_phi(0, q)


@dataclass(frozen=True)
class Radicand:
    """``u_c = alpha u_i + beta u_j + gamma`` for the solved coordinate ``c``."""

    coord: int
    alpha: GoldenNum
    beta: GoldenNum
    gamma: QuadExt

    def floats(self) -> tuple[float, float, float]:
        return float(self.alpha), float(self.beta), float(self.gamma)

    def evaluate(self, ui, uj) -> np.ndarray:
        a, b, g = self.floats()
        return a * np.asarray(ui, dtype=float) + b * np.asarray(uj, dtype=float) + g

    def exact(self, ui, uj) -> QuadExt:
        return self.alpha * as_quad(Fraction(ui)) + self.beta * as_quad(Fraction(uj)) + self.gamma


@dataclass(frozen=True)
class Chart:
    pair: tuple[int, int]
    data: DelzantData
    radicands: tuple[Radicand, Radicand]
    g_h: tuple[GoldenNum, GoldenNum]
    g_k: tuple[GoldenNum, GoldenNum]

    @property
    def name(self) -> str:
        return f"{self.pair[0]}{self.pair[1]}"

    @property
    def complement(self) -> tuple[int, int]:
        return tuple(r.coord for r in self.radicands)

    def action_matrix(self) -> list[list[GoldenNum]]:
        one, zero = GoldenNum(1), GoldenNum(0)
        return [[one, zero, self.g_h[0], self.g_k[0]], [zero, one, self.g_h[1], self.g_k[1]]]

    def radicand(self, coord: int) -> Radicand:
        for r in self.radicands:
            if r.coord == coord:
                return r
        raise KeyError(coord)

    def with_gamma_scaled(self, factor) -> Chart:
        """Copy whose domain constants are multiplied by ``factor`` (used for corrupted controls)."""
        f = as_quad(factor)
        return replace(self, radicands=tuple(replace(r, gamma=r.gamma * f) for r in self.radicands))

    def to_json(self) -> dict:
        return {
            "pair": list(self.pair),
            "radicands": {
                str(r.coord): {"alpha": r.alpha.text(), "beta": r.beta.text(), "gamma": r.gamma.text()}
                for r in self.radicands
            },
            "g_h": [g.text() for g in self.g_h],
            "g_k": [g.text() for g in self.g_k],
        }


def make_chart(data: DelzantData, pair: tuple[int, int]) -> Chart:
    i, j = pair
    comp = tuple(c for c in range(1, data.d + 1) if c not in pair)
    nx = data.normals()
    # rows of m are X_i, X_j; coefficients of u_c are X_c m^{-1}, i.e. solve m^T c = X_c
    mt = [[nx[i - 1].x, nx[j - 1].x], [nx[i - 1].y, nx[j - 1].y]]
    rads = []
    for c in comp:
        a, b = (as_golden(v) for v in la.solve(mt, [nx[c - 1].x, nx[c - 1].y]))
        g = a * data.lam[i - 1] + b * data.lam[j - 1] - data.lam[c - 1]
        rads.append(Radicand(c, a, b, g))
    rows = dict(zip(comp, adapted_basis(data.X, comp)))
    h_row, k_row = (rows[c] for c in _GENERATOR_ROWS[(i, j)])
    g_h = tuple(_strip_integer(h_row[x - 1]) for x in pair)
    g_k = tuple(_strip_integer(k_row[x - 1]) for x in pair)
    return Chart((i, j), data, tuple(rads), g_h, g_k)


def kite_charts(data: DelzantData) -> dict[str, Chart]:
    return {f"{a}{b}": make_chart(data, (a, b)) for a, b in CHART_PAIRS}


def in_domain(chart: Chart, ui, uj, strict_free: bool = False) -> np.ndarray:
    """Membership of ``(u_i, u_j)`` in the chart domain (all radicands positive).

    Decided in floating point, with an exact fallback for values within the guard
    band around zero.  ``strict_free`` additionally requires ``u_i, u_j > 0``.
    """
    ui = np.atleast_1d(np.asarray(ui, dtype=float))
    uj = np.atleast_1d(np.asarray(uj, dtype=float))
    ok = np.ones(ui.shape, dtype=bool)
    for r in chart.radicands:
        vals = r.evaluate(ui, uj)
        scale = 1.0 + np.abs(ui) + np.abs(uj)
        near = np.abs(vals) <= _GUARD * scale
        ok &= vals > 0
        for idx in np.flatnonzero(near):
            ok[idx] = quad_sign(r.exact(ui[idx], uj[idx])) > 0
    if strict_free:
        ok &= (ui > 0) & (uj > 0)
    return ok


def chart_slice(chart: Chart, w) -> np.ndarray:
    """``w`` of shape ``(..., 2)`` complex to points ``z`` of shape ``(..., 4)`` on the level set."""
    w = np.asarray(w, dtype=complex)
    ui, uj = np.abs(w[..., 0]) ** 2, np.abs(w[..., 1]) ** 2
    ok = in_domain(chart, ui.ravel(), uj.ravel()).reshape(ui.shape)
    if not np.all(ok):
        raise DomainError(f"{int(np.size(ok) - np.count_nonzero(ok))} point(s) outside chart {chart.name}")
    z = np.zeros(w.shape[:-1] + (chart.data.d,), dtype=complex)
    z[..., chart.pair[0] - 1] = w[..., 0]
    z[..., chart.pair[1] - 1] = w[..., 1]
    for r in chart.radicands:
        z[..., r.coord - 1] = np.sqrt(r.evaluate(ui, uj))
    return z


def _u_bounds(chart: Chart) -> tuple[float, float]:
    """Largest values of ``u_i, u_j`` over the polytope (from facet values at its vertices)."""
    data = chart.data
    nx = [p.to_float() for p in data.normals()]
    lam = data.lam_float()
    # vertices of the polytope are pairwise facet intersections inside it
    pts = []
    for a in range(data.d):
        for b in range(a + 1, data.d):
            m = np.array([nx[a], nx[b]])
            if abs(np.linalg.det(m)) < 1e-12:
                continue
            mu = np.linalg.solve(m, [lam[a], lam[b]])
            if all(np.dot(mu, nx[c]) - lam[c] >= -1e-12 for c in range(data.d)):
                pts.append(mu)
    i, j = chart.pair
    ui = max(np.dot(p, nx[i - 1]) - lam[i - 1] for p in pts)
    uj = max(np.dot(p, nx[j - 1]) - lam[j - 1] for p in pts)
    return ui, uj


def sample_domain(chart: Chart, n: int, rng: np.random.Generator, margin: float = 1e-6,
                  strict_free: bool = True) -> tuple[np.ndarray, np.ndarray]:
    """``n`` pairs ``(u_i, u_j)`` uniform in the chart domain, at least ``margin`` inside it."""
    umax_i, umax_j = _u_bounds(chart)
    out_i, out_j = [], []
    have = 0
    while have < n:
        ui = rng.uniform(0.0, umax_i, size=2 * n)
        uj = rng.uniform(0.0, umax_j, size=2 * n)
        ok = in_domain(chart, ui, uj)
        for r in chart.radicands:
            ok &= r.evaluate(ui, uj) > margin
        if strict_free:
            ok &= (ui > margin) & (uj > margin)
        out_i.append(ui[ok])
        out_j.append(uj[ok])
        have += int(ok.sum())
    return np.concatenate(out_i)[:n], np.concatenate(out_j)[:n]


def sample_covering(chart: Chart, n: int, rng: np.random.Generator, theta_range: float = 2.0,
                    margin: float = 1e-6) -> np.ndarray:
    """``n`` covering-space points ``(rho_i, theta_i, rho_j, theta_j)`` over the chart domain."""
    ui, uj = sample_domain(chart, n, rng, margin)
    th = rng.uniform(-theta_range, theta_range, size=(n, 2))
    return np.column_stack([np.sqrt(ui), th[:, 0], np.sqrt(uj), th[:, 1]])


def chart_group(chart: Chart, h: int, k: int) -> tuple[GoldenNum, GoldenNum]:
    """Exponents of the chart-group element ``(h, k)``, reduced modulo Z^2."""
    return tuple(mod_one(h * gh + k * gk) for gh, gk in zip(chart.g_h, chart.g_k))


def covering_action(chart: Chart, g, p) -> np.ndarray:
    """Act by ``g = (m, n, h, k)`` on covering points ``p`` of shape ``(..., 4)``."""
    m = np.array([[float(x) for x in row] for row in chart.action_matrix()])
    shift = m @ np.asarray(g, dtype=float)
    out = np.array(p, dtype=float, copy=True)
    out[..., 1] += shift[0]
    out[..., 3] += shift[1]
    return out


def integer_split(mat) -> list[list[Fraction]]:
    """Split a 2-row matrix over Q(phi) into its integer and ``1/phi`` parts (4 rows)."""
    parts = [[as_golden(x).one_over_phi_parts() for x in row] for row in mat]
    return [[pq[0] for pq in row] for row in parts] + [[pq[1] for pq in row] for row in parts]
