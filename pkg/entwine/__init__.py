"""Entwinings, lifted structures, derived laws and antipodes."""

from entwine.antipode import AntipodeSolution, solve_antipode
from entwine.diagrams import (
    augmentation_holds,
    check_bimonad,
    check_compatible,
    check_delta_law,
    check_entwining,
    check_m_law,
    comultiplication_diagram,
    counit_diagram,
    fusion_invertible,
    fusion_operator,
    grouplike_unit_holds,
    multiplication_diagram,
    unit_diagram,
)
from entwine.implications import implication_suite
from entwine.lifts import entwining_at, lift_comonad, lift_grouplike, lift_monad, t_for_algebra
from entwine.structures import Bialgebra, EntwinedTriple, Entwining

__all__ = [
    "AntipodeSolution",
    "Bialgebra",
    "EntwinedTriple",
    "Entwining",
    "augmentation_holds",
    "check_bimonad",
    "check_compatible",
    "check_delta_law",
    "check_entwining",
    "check_m_law",
    "comultiplication_diagram",
    "counit_diagram",
    "entwining_at",
    "fusion_invertible",
    "fusion_operator",
    "grouplike_unit_holds",
    "implication_suite",
    "lift_comonad",
    "lift_grouplike",
    "lift_monad",
    "multiplication_diagram",
    "solve_antipode",
    "t_for_algebra",
    "unit_diagram",
]
