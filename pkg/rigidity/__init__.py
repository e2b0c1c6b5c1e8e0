"""Bialgebras over an entwining, primitives and the rigidity pipeline."""

from rigidity.bimodule import check_bimodule, pentagon_sides, twist_bialgebra
from rigidity.comparison import comparison_K, comparison_K_prime
from rigidity.morphisms import (
    check_H2iso,
    check_t_triangular,
    phi_map,
    phi_report,
    t_at_trivial_algebra,
    t_morphism,
    t_on_free_algebra,
)
from rigidity.primitives import PrimitiveSubspace, primitives, primitives_report
from rigidity.verify import (
    HypothesisError,
    hypotheses,
    reconstruction_map,
    rigidity_verify,
    unit_direction,
)

__all__ = [
    "HypothesisError",
    "PrimitiveSubspace",
    "check_H2iso",
    "check_bimodule",
    "check_t_triangular",
    "comparison_K",
    "comparison_K_prime",
    "hypotheses",
    "pentagon_sides",
    "phi_map",
    "phi_report",
    "primitives",
    "primitives_report",
    "reconstruction_map",
    "rigidity_verify",
    "t_at_trivial_algebra",
    "t_morphism",
    "t_on_free_algebra",
    "twist_bialgebra",
    "unit_direction",
]
