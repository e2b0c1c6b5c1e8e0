"""
Built-in examples: the identity triple, As with concatenation, the
deconcatenation cooperad, the infinitesimal triple and Com.

An (As o As)(n) label is a composition of n, written as its separator word
of length n-1: letter 1 between two blocks (an outer cut) and letter 2
inside a block (an inner gap).
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, List, Sequence, Tuple

from loguru import logger

from entwine.structures import EntwinedTriple
from exactla import Matrix
from opcore.structures import (
    CooperadStructure,
    OperadStructure,
    cooperad_from_decompositions,
    operad_from_compositions,
)
from rigidity.comparison import comparison_K
from shell.loader import LoadedSpec
from species.builtins import as_sequence, com_sequence, unit_sequence
from species.monoidal import left_unitor, left_unitor_inverse
from species.morphism import SeqMorphism
from species.permutations import consecutive_assignment
from species.plethysm import PlethysmLabel, plethysm
from species.sparse import SparseVector, add_term, columns_to_matrix

OUTER_CUT = 1
INNER_GAP = 2

# letter rules of the infinitesimal law: outer cut -> outer cut + inner gap, inner gap -> outer cut
INFINITESIMAL_RULES = {OUTER_CUT: (OUTER_CUT, INNER_GAP), INNER_GAP: (OUTER_CUT,)}


def separator_word(composition: Sequence[int]) -> Tuple[int, ...]:
    letters: List[int] = []
    for j, size in enumerate(composition):
        if j:
            letters.append(OUTER_CUT)
        letters.extend([INNER_GAP] * (size - 1))
    return tuple(letters)


def composition_of(word: Sequence[int]) -> Tuple[int, ...]:
    sizes = [1]
    for letter in word:
        if letter == OUTER_CUT:
            sizes.append(1)
        else:
            sizes[-1] += 1
    return tuple(sizes)


def _as_label(composition: Tuple[int, ...]) -> PlethysmLabel:
    k = len(composition)
    return PlethysmLabel(k, composition, 0, (0,) * k, consecutive_assignment(composition))


def build_identity_triple(max_arity: int) -> EntwinedTriple:
    """The unit sequence with unitors as (co)multiplication and lambda = id."""
    unit = unit_sequence(max_arity)
    ident = SeqMorphism.identity(unit)
    op = OperadStructure(unit, left_unitor(unit).renamed("m_I"), ident.renamed("e_I"), name="I")
    co = CooperadStructure(unit, left_unitor_inverse(unit).renamed("δ_I"), ident.renamed("ε_I"), name="I")
    composite, _ = plethysm(unit, unit)
    return EntwinedTriple(op, co, SeqMorphism.identity(composite).renamed("λ_I"), name="identity")


@lru_cache(maxsize=None)
def build_As_operad(max_arity: int) -> OperadStructure:
    """Nonsymmetric As: every composite of mu's is the mu of the total arity."""
    return operad_from_compositions(as_sequence(max_arity), lambda k, comp, mu, nus: {0: Fraction(1)}, name="As")


@lru_cache(maxsize=None)
def build_deconcat_cooperad(max_arity: int) -> CooperadStructure:
    """Deconcatenation: mu_n splits into every composition of n with coefficient 1."""
    carrier = as_sequence(max_arity)
    composite, _ = plethysm(carrier, carrier)
    return cooperad_from_decompositions(
        carrier,
        lambda n, c: {pos: Fraction(1) for pos in range(composite.dim(n))},
        name="As^c",
    )


def letter_substitution(max_arity: int, rules=INFINITESIMAL_RULES) -> SeqMorphism:
    """
    lambda on (As o As) obtained by substituting every separator letter
    independently and reading each resulting word back as a composition.
    """
    carrier = as_sequence(max_arity)
    composite, index = plethysm(carrier, carrier)
    blocks = []
    for n in range(1, max_arity + 1):
        columns: List[SparseVector] = []
        for label in index.labels_at(n):
            col: SparseVector = {}
            for image in product(*(rules[letter] for letter in separator_word(label.composition))):
                add_term(col, index.position(_as_label(composition_of(image))), Fraction(1))
            columns.append(col)
        blocks.append(columns_to_matrix(columns, composite.dim(n)))
    return SeqMorphism(composite, composite, tuple(blocks), name="λ_inf")


def build_infinitesimal(max_arity: int) -> EntwinedTriple:
    """As with concatenation and deconcatenation, entwined by the infinitesimal law."""
    if max_arity < 1:
        raise ValueError("max_arity must be at least 1")
    triple = EntwinedTriple(
        build_As_operad(max_arity),
        build_deconcat_cooperad(max_arity),
        letter_substitution(max_arity),
        name="infinitesimal",
    )
    logger.info(f"infinitesimal triple built up to arity {max_arity}")
    return triple


@lru_cache(maxsize=None)
def build_com_operad(max_arity: int) -> OperadStructure:
    """Symmetric Com: trivial representations, every composite is 1."""
    return operad_from_compositions(com_sequence(max_arity), lambda k, comp, mu, nus: {0: Fraction(1)}, name="Com")


@lru_cache(maxsize=None)
def build_com_cooperad(max_arity: int) -> CooperadStructure:
    """Com as a cooperad: c_n splits into every set partition with coefficient 1."""
    carrier = com_sequence(max_arity)
    composite, _ = plethysm(carrier, carrier)
    return cooperad_from_decompositions(
        carrier,
        lambda n, c: {pos: Fraction(1) for pos in range(composite.dim(n))},
        name="Com^c",
    )


def corrupt_lambda(t: EntwinedTriple) -> EntwinedTriple:
    """The triple with lambda replaced by the identity in arity 2; the unit diagram fails there."""
    if t.max_arity < 2:
        raise ValueError("corrupting lambda needs max_arity >= 2")
    lam = t.lam.with_block(2, Matrix.identity(t.lam.arity(2).rows), name="λ_corrupt")
    return t.with_lambda(lam, name=f"corrupted-{t.name}")


def _entwined_spec(t: EntwinedTriple, carrier_name: str, op_name: str, co_name: str,
                   max_arity: int, dim: int) -> LoadedSpec:
    loaded = LoadedSpec(max_arity)
    loaded.sequences[carrier_name] = t.carrier
    loaded.operads[op_name] = t.op
    loaded.cooperads[co_name] = t.co
    loaded.entwinings[t.name] = t
    if dim > 0:
        loaded.bialgebras["K"] = comparison_K(t, dim, max_arity, validate=False)
    return loaded


def _com_spec(max_arity: int, dim: int) -> LoadedSpec:
    loaded = LoadedSpec(max_arity)
    loaded.sequences["Com"] = com_sequence(max_arity)
    loaded.operads["Com"] = build_com_operad(max_arity)
    loaded.cooperads["Com^c"] = build_com_cooperad(max_arity)
    return loaded


BUILTIN_EXAMPLES: Dict[str, Callable[[int, int], LoadedSpec]] = {
    "infinitesimal": lambda n, d: _entwined_spec(build_infinitesimal(n), "As", "As", "As^c", n, d),
    "identity": lambda n, d: _entwined_spec(build_identity_triple(n), "I", "I", "I^c", n, d),
    "corrupted-lambda": lambda n, d: _entwined_spec(corrupt_lambda(build_infinitesimal(n)), "As", "As", "As^c", n, 0),
    "com": _com_spec,
}


def builtin_spec(name: str, max_arity: int, dim: int = 1) -> LoadedSpec:
    """
    A built-in example packaged like a loaded spec file.

    The entwined examples carry the bialgebra K(V) on V of dimension dim
    under the name "K"; the corrupted one carries none.

    Raises:
        KeyError: for an unknown example name
    """
    if name not in BUILTIN_EXAMPLES:
        raise KeyError(f"unknown built-in example {name!r}; choose from {', '.join(BUILTIN_EXAMPLES)}")
    return BUILTIN_EXAMPLES[name](max_arity, dim)
