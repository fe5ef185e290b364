"""Quasifold atlas verification: models, extensions, lifts and chart compatibility.

Two kinds of model are handled:

* ``covering``: points ``(rho_i, theta_i, rho_j, theta_j)`` with ``rho > 0``, acted on by
  Z^4 through ``theta += M g``;
* ``chart``: points ``w`` in C^2 of the chart domain, acted on by Z^2 ``(h, k)`` through
  ``w_c -> w_c exp(2 pi i (h gh_c + k gk_c))``.

Freeness and kernels are decided exactly by splitting every entry ``p + q/phi`` of
the action matrix into rational parts: an element acts trivially on a coordinate
iff the ``1/phi`` part of its exponent vanishes and the rational part is an integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Callable

import numpy as np

from . import _linalg as la
from .delzant.charts import (
    Chart,
    chart_group,
    in_domain,
    integer_split,
    mod_one,
    sample_covering,
    sample_domain,
)
from .exactnum import GoldenNum, as_golden
from .reports import Check, Report

__all__ = [
    "ModelSpec",
    "ExtensionSpec",
    "LiftSpec",
    "check_model",
    "check_extension",
    "check_lift_commutes",
    "check_compatibility",
]

TWO_PI = 2.0 * np.pi


@dataclass
class ModelSpec:
    name: str
    chart: Chart
    kind: str
    action: list[list] | None = None

    @classmethod
    def covering(cls, chart: Chart, action=None) -> ModelSpec:
        return cls(f"covering {chart.name}", chart, "covering", action)

    @classmethod
    def chart_model(cls, chart: Chart, action=None) -> ModelSpec:
        return cls(f"chart {chart.name}", chart, "chart", action)

    def matrix(self) -> list[list[GoldenNum]]:
        """2 x 4 (covering) or 2 x 2 (chart) action matrix over Q(phi)."""
        if self.action is not None:
            return [[as_golden(x) for x in row] for row in self.action]
        full = self.chart.action_matrix()
        return full if self.kind == "covering" else [row[2:] for row in full]

    def rank(self) -> int:
        return 4 if self.kind == "covering" else 2

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        if self.kind == "covering":
            return sample_covering(self.chart, n, rng)
        ui, uj = sample_domain(self.chart, n, rng, strict_free=False)
        th = rng.uniform(0, 1, size=(n, 2))
        return np.column_stack([np.sqrt(ui) * np.exp(1j * TWO_PI * th[:, 0]),
                                np.sqrt(uj) * np.exp(1j * TWO_PI * th[:, 1])])

    def contains(self, pts) -> np.ndarray:
        pts = np.asarray(pts)
        if self.kind == "covering":
            return in_domain(self.chart, pts[:, 0] ** 2, pts[:, 2] ** 2, strict_free=True)
        return in_domain(self.chart, np.abs(pts[:, 0]) ** 2, np.abs(pts[:, 1]) ** 2)

    def act(self, g, pts) -> np.ndarray:
        m = np.array([[float(x) for x in row] for row in self.matrix()])
        shift = m @ np.asarray(g, dtype=float)
        pts = np.asarray(pts)
        if self.kind == "covering":
            out = np.array(pts, dtype=float, copy=True)
            out[:, 1] += shift[0]
            out[:, 3] += shift[1]
            return out
        return pts * np.exp(1j * TWO_PI * shift)[None, :]

    def project(self, pts) -> np.ndarray:
        """Covering points to chart points ``w = rho exp(2 pi i theta)``; identity on chart points."""
        pts = np.asarray(pts)
        if self.kind == "chart":
            return pts
        return np.column_stack([pts[:, 0] * np.exp(1j * TWO_PI * pts[:, 1]),
                                pts[:, 2] * np.exp(1j * TWO_PI * pts[:, 3])])

    def distance(self, a, b) -> np.ndarray:
        a, b = np.asarray(a), np.asarray(b)
        return np.max(np.abs(a - b), axis=-1)


def _group_samples(rank: int, rng: np.random.Generator, count: int) -> list[list[int]]:
    gens = [[int(i == j) for j in range(rank)] for i in range(rank)]
    return gens + [list(map(int, g)) for g in rng.integers(-4, 5, size=(count, rank))]


def _integral_vector(v: list[Fraction]) -> list[int]:
    den = lcm(*(x.denominator for x in v))
    return [int(x * den) for x in v]


def _free_exact(spec: ModelSpec) -> Check:
    split = integer_split(spec.matrix())
    if spec.kind == "covering":
        null = la.nullspace(split)
        fixed = [_integral_vector(v) for v in null]
        return Check("free_exact", not fixed, 0.0,
                     witness={"fixed_elements": fixed} if fixed else None,
                     details={"nonfree_locus": "everything" if fixed else "empty"})
    # chart model: stratify by which of the two coordinates vanish
    p_rows, q_rows = split[:2], split[2:]
    strata = []
    for nz_count in (2, 1, 0):
        for nz in combinations(range(2), nz_count):
            if nz:
                null = la.nullspace([q_rows[c] for c in nz])
            else:
                null = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
            if not null:
                continue
            v = _integral_vector(null[0])
            # scale so that the rational parts are integers too
            dens = [sum(p * x for p, x in zip(p_rows[c], v)).denominator for c in nz] or [1]
            v = [x * lcm(*dens) for x in v]
            strata.append({"nonzero_coords": [spec.chart.pair[c] for c in nz],
                           "codim": 2 * (2 - nz_count), "fixed_element": v})
    min_codim = min((s["codim"] for s in strata), default=None)
    ok = min_codim is None or min_codim >= 2
    return Check("free_exact", ok, 0.0, witness={"nonfree_strata": strata} if strata else None,
                 details={"nonfree_min_codim": min_codim})


def check_model(spec: ModelSpec, samples: int = 200, rng: np.random.Generator | None = None,
                tol: float = 1e-12) -> Report:
    """Domain preservation, invertibility and exact freeness of a model's group action."""
    rng = rng or np.random.default_rng(0)
    rep = Report(f"model {spec.name}")
    pts = spec.sample(samples, rng)
    n_out, inv_err = 0, 0.0
    for g in _group_samples(spec.rank(), rng, 20):
        moved = spec.act(g, pts)
        n_out += int((~spec.contains(moved)).sum())
        back = spec.act([-x for x in g], moved)
        inv_err = max(inv_err, float(np.max(np.abs(back - pts))))
    rep.add(Check("domain_preserved", n_out == 0, float(n_out)))
    rep.add(Check("invertible", inv_err <= tol, inv_err))
    rep.add(_free_exact(spec))
    return rep


@dataclass
class ExtensionSpec:
    covering: ModelSpec
    chart: ModelSpec


def _mod_pair(pair) -> tuple[GoldenNum, GoldenNum]:
    return tuple(mod_one(x) for x in pair)


def _quotient(mat, g) -> tuple[GoldenNum, GoldenNum]:
    return _mod_pair(sum((row[c] * g[c] for c in range(len(g))), GoldenNum(0)) for row in mat)


def check_extension(spec: ExtensionSpec, samples: int = 100, rng: np.random.Generator | None = None,
                    tol: float = 1e-12) -> Report:
    """The covering group maps onto the chart group with kernel the deck group Z^2."""
    rng = rng or np.random.default_rng(0)
    rep = Report(f"extension {spec.covering.name}")
    mat = spec.covering.matrix()
    split = integer_split(mat)
    p_rows, q_rows = split[:2], split[2:]
    null = la.nullspace(q_rows)
    expected = [[Fraction(int(i == j)) for j in range(4)] for i in range(2)]
    same_span = len(null) == 2 and la.rank(null + expected) == 2
    deck_integral = all(sum(p * x for p, x in zip(row, e)).denominator == 1 for row in p_rows for e in expected)
    rep.add(Check("kernel_is_deck_group", same_span and deck_integral, 0.0,
                  witness={"kernel_basis": [[str(x) for x in v] for v in null]}))

    chart = spec.chart.chart
    bad_q = bad_h = None
    for g in _group_samples(4, rng, samples):
        if _quotient(mat, g) != chart_group(chart, g[2], g[3]):
            bad_q = bad_q or g
        g2 = list(map(int, rng.integers(-4, 5, size=4)))
        total = [a + b for a, b in zip(g, g2)]
        summed = _mod_pair(x + y for x, y in zip(_quotient(mat, g), _quotient(mat, g2)))
        if _quotient(mat, total) != summed:
            bad_h = bad_h or [g, g2]
    rep.add(Check("quotient_is_chart_group", bad_q is None, 0.0, witness=bad_q))
    rep.add(Check("homomorphism", bad_h is None, 0.0, witness=bad_h))
    gens_hit = all(_quotient(mat, g) == chart_group(chart, g[2], g[3]) for g in ([0, 0, 1, 0], [0, 0, 0, 1]))
    rep.add(Check("surjective", gens_hit, 0.0))

    pts = spec.covering.sample(samples, rng)
    base = spec.covering.project(pts)
    worst = 0.0
    for g in ([1, 0, 0, 0], [0, 1, 0, 0], [3, -2, 0, 0]):
        worst = max(worst, float(np.max(np.abs(spec.covering.project(spec.covering.act(g, pts)) - base))))
    rep.add(Check("deck_acts_trivially_downstairs", worst <= tol, worst))
    return rep


@dataclass
class LiftSpec:
    source: ModelSpec
    target: ModelSpec
    upstairs: Callable[[np.ndarray], np.ndarray]
    downstairs: Callable[[np.ndarray], np.ndarray]
    deck_image: Callable[[int, int], tuple]
    F: list[list[int]] | None = None

    @classmethod
    def from_transition(cls, t, source: ModelSpec, target: ModelSpec) -> LiftSpec:
        from .delzant.transition import chart_change

        return cls(source, target, t.apply, lambda w: chart_change(t.source, t.target, w), t.deck_image, t.F)

    @classmethod
    def identity(cls, model: ModelSpec) -> LiftSpec:
        return cls(model, model, lambda p: np.array(p, dtype=float), lambda w: np.asarray(w),
                   lambda m, n: (GoldenNum(m), GoldenNum(n)), [[int(i == j) for j in range(4)] for i in range(4)])


def check_lift_commutes(spec: LiftSpec, samples=1000, rng: np.random.Generator | None = None,
                        tol: float = 1e-9) -> Report:
    """Projecting the upstairs image equals the downstairs image up to the target group.

    The group element is found exactly: the integer winding ``m = theta - arg(w)/2 pi``
    of the source point is pushed through ``deck_image`` and must be reachable by an
    integral element of the target group.
    """
    rng = rng or np.random.default_rng(0)
    rep = Report("lift commutation")
    pts = spec.source.sample(samples, rng) if isinstance(samples, int) else np.asarray(samples, dtype=float)
    w = spec.source.project(pts)
    winding = np.rint(pts[:, (1, 3)] - np.angle(w) / TWO_PI).astype(int)
    up = spec.target.project(spec.upstairs(pts))
    down = spec.downstairs(w)

    c_inv = la.inverse(integer_split(spec.target.matrix()))
    cache: dict[tuple[int, int], tuple] = {}
    non_integral = None
    factors = np.empty((len(pts), 2), dtype=complex)
    for idx, (m, n) in enumerate(map(tuple, winding)):
        key = (int(m), int(n))
        if key not in cache:
            delta = spec.deck_image(*key)
            rhs = [r[0] for r in integer_split([[as_golden(delta[0])], [as_golden(delta[1])]])]
            gamma = la.matvec(c_inv, rhs)
            integral = all(x.denominator == 1 for x in gamma)
            cache[key] = (np.exp(1j * TWO_PI * np.array([float(d) for d in delta])), integral,
                          [str(x) for x in gamma])
        factor, integral, gamma = cache[key]
        if not integral and non_integral is None:
            non_integral = {"winding": list(key), "group_element": gamma}
        factors[idx] = factor
    resid = np.max(np.abs(up - down * factors), axis=1)
    worst = float(resid.max()) if len(resid) else 0.0
    wit = non_integral
    if worst > tol and wit is None:
        k = int(np.argmax(resid))
        wit = {"point": pts[k].tolist(), "residual": float(resid[k])}
    rep.add(Check("commutation", worst <= tol and non_integral is None, worst, witness=wit,
                  details={"distinct_windings": len(cache)}))
    return rep


def check_compatibility(a: ModelSpec, b: ModelSpec, samples: int = 1000, rng: np.random.Generator | None = None,
                        tol: float = 1e-9) -> Report:
    """Both models are valid, extend to their charts, and the lifted transition a -> b is compatible."""
    from .delzant.transition import transition_lift, verify_transition

    rng = rng or np.random.default_rng(0)
    rep = Report(f"compatibility {a.chart.name}->{b.chart.name}")
    for label, m in (("source", a), ("target", b)):
        rep.extend(check_model(m, samples=min(samples, 200), rng=rng), prefix=f"{label}.")
        rep.extend(check_extension(ExtensionSpec(m, ModelSpec.chart_model(m.chart)), rng=rng), prefix=f"{label}.")
    t = transition_lift(a.chart, b.chart)
    rep.extend(verify_transition(t, samples=samples, rng=rng, tol_commute=tol), prefix="lift.")
    return rep
