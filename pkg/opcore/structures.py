"""Operads and cooperads as (co)monoids for plethysm."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from loguru import logger

from exactla import Matrix, ShapeError
from species.monoidal import unit_for
from species.morphism import SeqMorphism
from species.permutations import shuffle_for
from species.plethysm import plethysm
from species.sequence import SymmetricSequence
from species.sparse import SparseVector, add_term, columns_to_matrix

# gamma(k, composition, mu, nus) -> vector over A(n) on the consecutive layout
CompositionMap = Callable[[int, tuple, int, tuple], Dict[int, Fraction]]
# delta(n) -> {label position in (C o C)(n) true basis: coefficient} for each basis vector of C(n)
DecompositionMap = Callable[[int, int], Dict[int, Fraction]]


def canonical_unit(seq: SymmetricSequence) -> SeqMorphism:
    """e_M : I -> M, the inclusion of the arity-one summand."""
    unit = unit_for(seq)
    blocks = [Matrix.identity(1)]
    blocks.extend(Matrix.zeros(seq.dim(n), 0) for n in range(2, seq.max_arity + 1))
    return SeqMorphism(unit, seq, tuple(blocks), name=f"e_{seq.name}")


def canonical_counit(seq: SymmetricSequence) -> SeqMorphism:
    """eps_M : M -> I, the projection onto the arity-one summand."""
    unit = unit_for(seq)
    blocks = [Matrix.identity(1)]
    blocks.extend(Matrix.zeros(0, seq.dim(n)) for n in range(2, seq.max_arity + 1))
    return SeqMorphism(seq, unit, tuple(blocks), name=f"ε_{seq.name}")


@dataclass(frozen=True, eq=False)
class OperadStructure:
    """
    Monoid (A, m, e) for plethysm.

    augmentation is the map A -> I used wherever the operad's counit is
    needed (augmentation checks, the m-law, phi); it defaults to the
    canonical projection.
    """

    carrier: SymmetricSequence
    mult: SeqMorphism
    unit: SeqMorphism
    name: str = "A"
    augmentation: Optional[SeqMorphism] = field(default=None)

    def __post_init__(self):
        composite, _ = plethysm(self.carrier, self.carrier)
        if not self.mult.source.same_shape(composite) or not self.mult.target.same_shape(self.carrier):
            raise ShapeError(f"{self.name}: multiplication must map {composite.name} to {self.carrier.name}")
        if not self.unit.target.same_shape(self.carrier) or not self.unit.source.same_shape(unit_for(self.carrier)):
            raise ShapeError(f"{self.name}: unit must map I to {self.carrier.name}")
        if self.augmentation is None:
            object.__setattr__(self, "augmentation", canonical_counit(self.carrier))

    @property
    def max_arity(self) -> int:
        return self.carrier.max_arity

    def with_maps(self, mult: Optional[SeqMorphism] = None, unit: Optional[SeqMorphism] = None,
                  augmentation: Optional[SeqMorphism] = None, name: Optional[str] = None) -> "OperadStructure":
        return OperadStructure(
            self.carrier,
            mult or self.mult,
            unit or self.unit,
            name or self.name,
            augmentation or self.augmentation,
        )


@dataclass(frozen=True, eq=False)
class CooperadStructure:
    """
    Comonoid (C, delta, eps) for plethysm.

    coaugmentation is the grouplike I -> C; it defaults to the canonical
    inclusion e_C.
    """

    carrier: SymmetricSequence
    comult: SeqMorphism
    counit: SeqMorphism
    name: str = "C"
    coaugmentation: Optional[SeqMorphism] = field(default=None)

    def __post_init__(self):
        composite, _ = plethysm(self.carrier, self.carrier)
        if not self.comult.target.same_shape(composite) or not self.comult.source.same_shape(self.carrier):
            raise ShapeError(f"{self.name}: comultiplication must map {self.carrier.name} to {composite.name}")
        if not self.counit.source.same_shape(self.carrier) or not self.counit.target.same_shape(unit_for(self.carrier)):
            raise ShapeError(f"{self.name}: counit must map {self.carrier.name} to I")
        if self.coaugmentation is None:
            object.__setattr__(self, "coaugmentation", canonical_unit(self.carrier))

    @property
    def max_arity(self) -> int:
        return self.carrier.max_arity

    def with_maps(self, comult: Optional[SeqMorphism] = None, counit: Optional[SeqMorphism] = None,
                  coaugmentation: Optional[SeqMorphism] = None, name: Optional[str] = None) -> "CooperadStructure":
        return CooperadStructure(
            self.carrier,
            comult or self.comult,
            counit or self.counit,
            name or self.name,
            coaugmentation or self.coaugmentation,
        )


def operad_from_compositions(carrier: SymmetricSequence, gamma: CompositionMap,
                             name: Optional[str] = None) -> OperadStructure:
    """
    Assemble m : A o A -> A from full composition maps.

    gamma(k, composition, mu, nus) gives the composite on the consecutive
    layout. A representative label with another assignment is the shuffle of
    the consecutive one, so its value is rho_A(shuffle) applied to gamma.

    Args:
        carrier: the sequence A
        gamma: full composition maps on the consecutive layout
        name: operad name, defaults to the carrier's

    Returns:
        The operad with canonical unit
    """
    composite, index = plethysm(carrier, carrier)
    blocks = []
    for n in range(1, carrier.max_arity + 1):
        columns: List[SparseVector] = []
        for label in index.labels_at(n):
            value = gamma(label.k, label.composition, label.mu, label.nus)
            pi = shuffle_for(label.assignment, label.k)
            if pi == tuple(range(n)):
                columns.append(dict(value))
                continue
            rho = carrier.action(pi)
            col: SparseVector = {}
            for row, coeff in value.items():
                for target, entry in rho.column_items(row):
                    add_term(col, target, coeff * entry)
            columns.append(col)
        blocks.append(columns_to_matrix(columns, carrier.dim(n)))
    mult = SeqMorphism(composite, carrier, tuple(blocks), name=f"m_{name or carrier.name}")
    logger.debug(f"operad {name or carrier.name}: multiplication assembled up to arity {carrier.max_arity}")
    return OperadStructure(carrier, mult, canonical_unit(carrier), name or carrier.name)


def cooperad_from_decompositions(carrier: SymmetricSequence, delta: DecompositionMap,
                                 name: Optional[str] = None) -> CooperadStructure:
    """Assemble delta : C -> C o C column by column from delta(n, basis index)."""
    composite, _ = plethysm(carrier, carrier)
    blocks = []
    for n in range(1, carrier.max_arity + 1):
        columns = [dict(delta(n, c)) for c in range(carrier.dim(n))]
        blocks.append(columns_to_matrix(columns, composite.dim(n)))
    comult = SeqMorphism(carrier, composite, tuple(blocks), name=f"δ_{name or carrier.name}")
    return CooperadStructure(carrier, comult, canonical_counit(carrier), name or carrier.name)
