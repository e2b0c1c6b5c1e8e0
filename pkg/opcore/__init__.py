"""Operads, cooperads and their (co)algebras."""

from opcore.algebras import (
    AlgebraObject,
    CoalgebraObject,
    augmentation_at,
    check_algebra,
    check_coalgebra,
    coaugmentation_at,
    cofree_coalgebra,
    comonad_comultiplication,
    comonad_counit,
    compare_graded,
    free_algebra,
    monad_multiplication,
    monad_unit,
    trivial_algebra,
    trivial_coalgebra,
)
from opcore.checks import (
    augmentation_entries,
    check_augmentation,
    check_cooperad,
    check_grouplike,
    check_operad,
    grouplike_entries,
    split_unit_check,
    unit_is_mono,
)
from opcore.structures import (
    CooperadStructure,
    OperadStructure,
    canonical_counit,
    canonical_unit,
    cooperad_from_decompositions,
    operad_from_compositions,
)

__all__ = [
    "AlgebraObject",
    "CoalgebraObject",
    "CooperadStructure",
    "OperadStructure",
    "augmentation_at",
    "augmentation_entries",
    "canonical_counit",
    "canonical_unit",
    "check_algebra",
    "check_augmentation",
    "check_coalgebra",
    "check_cooperad",
    "check_grouplike",
    "check_operad",
    "coaugmentation_at",
    "cofree_coalgebra",
    "comonad_comultiplication",
    "comonad_counit",
    "compare_graded",
    "cooperad_from_decompositions",
    "free_algebra",
    "grouplike_entries",
    "monad_multiplication",
    "monad_unit",
    "operad_from_compositions",
    "split_unit_check",
    "trivial_algebra",
    "trivial_coalgebra",
    "unit_is_mono",
]
