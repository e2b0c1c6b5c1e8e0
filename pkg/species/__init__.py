"""Symmetric sequences, plethysm and Schur functors."""

from species.builtins import as_sequence, com_sequence, regular_sequence, sign_sequence, unit_sequence
from species.monoidal import (
    associator,
    associator_inverse,
    check_coherence,
    hcompose,
    inverse_morphism,
    left_unitor,
    left_unitor_inverse,
    right_unitor,
    right_unitor_inverse,
    unit_for,
    whisker_left,
    whisker_right,
)
from species.morphism import SeqMorphism, check_equivariant, compare, equivariance_entries
from species.plethysm import PlethysmIndex, PlethysmLabel, plethysm, plethysm_index
from species.schur import (
    GradedSpace,
    SchurSpace,
    apply_functor,
    apply_functor_with_overflow,
    as_space,
    compose_iso_inverse,
    eval_compose_iso,
    evaluate_map,
    require_unit_weights_fit,
    schur_evaluate,
)
from species.sequence import SequenceMode, SymmetricSequence, check_relations, make_sequence, require_same_mode

__all__ = [
    "GradedSpace",
    "PlethysmIndex",
    "PlethysmLabel",
    "SchurSpace",
    "SeqMorphism",
    "SequenceMode",
    "SymmetricSequence",
    "apply_functor",
    "apply_functor_with_overflow",
    "as_sequence",
    "as_space",
    "associator",
    "associator_inverse",
    "check_coherence",
    "check_equivariant",
    "check_relations",
    "com_sequence",
    "compare",
    "compose_iso_inverse",
    "equivariance_entries",
    "eval_compose_iso",
    "evaluate_map",
    "hcompose",
    "inverse_morphism",
    "left_unitor",
    "left_unitor_inverse",
    "make_sequence",
    "plethysm",
    "plethysm_index",
    "regular_sequence",
    "require_same_mode",
    "right_unitor",
    "right_unitor_inverse",
    "schur_evaluate",
    "sign_sequence",
    "unit_for",
    "unit_sequence",
    "whisker_left",
    "whisker_right",
]
