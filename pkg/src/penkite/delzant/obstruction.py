"""The deck-group obstruction: the group isomorphism of the lift 12 -> 34 does not
carry the deck group ``{(m, n, 0, 0)}`` of one covering onto that of the other."""

from __future__ import annotations

import numpy as np

from ..reports import Check, Report
from .charts import kite_charts
from .polytope import kite_polytope
from .transition import transition_lift

__all__ = ["obstruction_witness", "default_F", "EXPECTED_F", "maps_deck_into_deck"]

# (m, n, h, k) -> (-k, -n - h, k - m, -n)
EXPECTED_F = [[0, 0, 0, -1], [0, -1, -1, 0], [-1, 0, 0, 1], [0, -1, 0, 0]]


def default_F() -> list[list[int]]:
    _, data = kite_polytope(0, 1)
    charts = kite_charts(data)
    return transition_lift(charts["12"], charts["34"]).F


def _apply(F, g) -> list[int]:
    return [sum(f * x for f, x in zip(row, g)) for row in F]


def maps_deck_into_deck(F, m: int, n: int) -> bool:
    image = _apply(F, [m, n, 0, 0])
    return image[2] == 0 and image[3] == 0


def obstruction_witness(F=None, samples: int = 100, rng: np.random.Generator | None = None) -> Report:
    """Report whose ``ok`` means the obstruction is witnessed for ``F``.

    The generators and ``samples`` random nonzero deck elements are all checked to
    leave the target deck group.  Pass ``F`` to test an alternative (for instance the
    identity, which must not witness anything).
    """
    rng = rng or np.random.default_rng(0)
    rep = Report("deck obstruction")
    computed = F is None
    F = default_F() if computed else [list(r) for r in F]
    if computed:
        rep.add(Check("F_matches_closed_form", F == EXPECTED_F, 0.0, witness={"F": F}))
    gens = [(1, 0), (0, 1)]
    gen_images = {f"{g}": _apply(F, [g[0], g[1], 0, 0]) for g in gens}
    gens_out = all(not maps_deck_into_deck(F, *g) for g in gens)
    rep.add(Check("generators_leave_deck_group", gens_out, 0.0, witness=gen_images))
    preserved = []
    for _ in range(samples):
        m, n = 0, 0
        while m == 0 and n == 0:
            m, n = (int(x) for x in rng.integers(-50, 51, size=2))
        if maps_deck_into_deck(F, m, n):
            preserved.append([m, n])
    rep.add(Check("random_elements_leave_deck_group", not preserved, float(len(preserved)),
                  witness={"preserved": preserved[:5]} if preserved else None,
                  details={"samples": samples}))
    # exact statement: F(deck) lies in the deck group iff the lower-left 2x2 block vanishes
    block = [row[:2] for row in F[2:]]
    rep.add(Check("lower_left_block_nonzero", any(any(r) for r in block), 0.0, witness={"block": block}))
    return rep
