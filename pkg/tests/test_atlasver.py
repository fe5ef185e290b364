from fractions import Fraction

import numpy as np
import pytest

from penkite.atlasver import (
    ExtensionSpec,
    LiftSpec,
    ModelSpec,
    check_compatibility,
    check_extension,
    check_lift_commutes,
    check_model,
)
from penkite.delzant import kite_charts, kite_polytope, transition_lift
from penkite.delzant.charts import mod_one
from penkite.exactnum import INV_PHI, GoldenNum

HALF = GoldenNum(Fraction(1, 2))
# the chart 12 action with 1/phi replaced by 1/2
CORRUPTED_12 = [[1, 0, -HALF, 0], [0, 1, HALF, HALF]]


@pytest.fixture(scope="module")
def charts():
    return kite_charts(kite_polytope(0, 1)[1])


@pytest.mark.parametrize("name", ["12", "23", "34", "41"])
def test_models_are_free(charts, name, rng):
    for spec in (ModelSpec.covering(charts[name]), ModelSpec.chart_model(charts[name])):
        rep = check_model(spec, 100, rng)
        assert rep.ok, rep.to_json()


def test_chart_model_matrix(charts):
    assert ModelSpec.chart_model(charts["12"]).matrix() == [[-INV_PHI, GoldenNum(0)], [INV_PHI, INV_PHI]]


def test_rational_action_has_fixed_elements(charts, rng):
    rep = check_model(ModelSpec.covering(charts["12"], action=CORRUPTED_12), 50, rng)
    free = rep["free_exact"]
    assert not free.passed
    fixed = free.witness["fixed_elements"]
    m = np.array([[float(x) for x in row] for row in CORRUPTED_12])
    for g in fixed:
        assert any(g) and np.allclose(m @ np.array(g, dtype=float), 0)

    chart_rep = check_model(ModelSpec.chart_model(charts["12"], action=[row[2:] for row in CORRUPTED_12]), 50, rng)
    assert not chart_rep["free_exact"].passed
    assert chart_rep["free_exact"].details["nonfree_min_codim"] < 2


def test_chart_model_nonfree_only_in_codim_two(charts, rng):
    # on chart 12, (0, 1) fixes the w_1 axis and (1, -1) fixes the w_2 axis; both are codim 2
    free = check_model(ModelSpec.chart_model(charts["12"]), 50, rng)["free_exact"]
    assert free.passed
    assert free.details["nonfree_min_codim"] == 2
    assert {tuple(s["nonzero_coords"]) for s in free.witness["nonfree_strata"]} == {(), (1,), (2,)}


def test_extension(charts, rng):
    c12 = charts["12"]
    rep = check_extension(ExtensionSpec(ModelSpec.covering(c12), ModelSpec.chart_model(c12)), 50, rng)
    assert rep.ok, rep.to_json()
    kernel = [[Fraction(x) for x in row] for row in rep["kernel_is_deck_group"].witness["kernel_basis"]]
    assert kernel == [[1, 0, 0, 0], [0, 1, 0, 0]]


def test_extension_quotient_example(charts):
    m = ModelSpec.covering(charts["12"]).matrix()
    image = tuple(mod_one(sum((row[c] * g for c, g in enumerate((0, 0, 1, 0))), GoldenNum(0))) for row in m)
    assert image == (mod_one(-INV_PHI), mod_one(INV_PHI))


def test_identity_lift_commutes(charts, rng):
    rep = check_lift_commutes(LiftSpec.identity(ModelSpec.covering(charts["12"])), 300, rng)
    assert rep.ok and rep["commutation"].max_residual <= 1e-14


def test_transition_lift_commutes(charts, rng):
    t = transition_lift(charts["12"], charts["34"])
    spec = LiftSpec.from_transition(t, ModelSpec.covering(charts["12"]), ModelSpec.covering(charts["34"]))
    rep = check_lift_commutes(spec, 1000, rng)
    assert rep.ok and rep["commutation"].max_residual <= 1e-9


def test_wrong_F_still_commutes_but_breaks_equivariance(charts, rng):
    from penkite.delzant import verify_transition

    t = transition_lift(charts["12"], charts["34"])
    perm = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
    rep = verify_transition(t.with_F(perm), 200, rng)
    assert rep["commutation"].passed
    assert not rep["equivariance"].passed


def test_compatibility(charts, rng):
    rep = check_compatibility(ModelSpec.covering(charts["12"]), ModelSpec.covering(charts["34"]), 300, rng)
    assert rep.ok, rep.to_json()
    same = check_compatibility(ModelSpec.covering(charts["23"]), ModelSpec.covering(charts["23"]), 200, rng)
    assert same.ok


def test_corrupted_domain_is_detected(charts, rng):
    bad = charts["34"].with_gamma_scaled(HALF)
    rep = check_compatibility(ModelSpec.covering(charts["12"]), ModelSpec.covering(bad), 300, rng)
    assert not rep.ok
    assert not rep["lift.domain_preserved"].passed
