"""Reduction of C^4 by a quasitorus onto the kite polytopes, with charts and transitions."""

from .charts import (
    CHART_PAIRS,
    Chart,
    DomainError,
    chart_group,
    chart_slice,
    covering_action,
    in_domain,
    kite_charts,
    make_chart,
    sample_covering,
    sample_domain,
)
from .moment import ambient_moment_map, moment_image, reduced_moment_map
from .obstruction import EXPECTED_F, obstruction_witness
from .polytope import (
    DelzantData,
    Polytope2D,
    adapted_basis,
    dimension_count,
    generation_witness,
    kernel_basis,
    kite_polytope,
    translate_polytope,
)
from .symmetry import signed_permutation, symmetry_equivalence
from .transition import TransitionLift, chart_change, transition_lift, verify_transition

__all__ = [
    "CHART_PAIRS",
    "Chart",
    "DomainError",
    "chart_group",
    "chart_slice",
    "covering_action",
    "in_domain",
    "kite_charts",
    "make_chart",
    "sample_covering",
    "sample_domain",
    "ambient_moment_map",
    "moment_image",
    "reduced_moment_map",
    "EXPECTED_F",
    "obstruction_witness",
    "DelzantData",
    "Polytope2D",
    "adapted_basis",
    "dimension_count",
    "generation_witness",
    "kernel_basis",
    "kite_polytope",
    "translate_polytope",
    "signed_permutation",
    "symmetry_equivalence",
    "TransitionLift",
    "chart_change",
    "transition_lift",
    "verify_transition",
]
