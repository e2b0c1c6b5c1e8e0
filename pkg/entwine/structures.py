"""Entwinings, single-carrier triples and lambda-bimodules."""

from dataclasses import dataclass
from typing import Optional

from exactla import ShapeError
from opcore.algebras import AlgebraObject, CoalgebraObject
from opcore.structures import CooperadStructure, OperadStructure
from species.morphism import SeqMorphism
from species.plethysm import plethysm
from species.schur import GradedSpace
from species.sequence import require_same_mode


@dataclass(frozen=True, eq=False)
class Entwining:
    """lambda : A o C -> C o A between an operad and a cooperad."""

    op: OperadStructure
    co: CooperadStructure
    lam: SeqMorphism
    name: str = "λ"

    def __post_init__(self):
        a, c = self.op.carrier, self.co.carrier
        require_same_mode(a, c)
        source, _ = plethysm(a, c)
        target, _ = plethysm(c, a)
        if not self.lam.source.same_shape(source) or not self.lam.target.same_shape(target):
            raise ShapeError(f"{self.name}: must map {source.name} to {target.name}, "
                             f"got {self.lam.source.describe()} -> {self.lam.target.describe()}")

    @property
    def max_arity(self) -> int:
        return self.op.max_arity

    def with_lambda(self, lam: SeqMorphism, name: Optional[str] = None) -> "Entwining":
        return type(self)(self.op, self.co, lam, name or self.name)


@dataclass(frozen=True, eq=False)
class EntwinedTriple(Entwining):
    """Operad and cooperad on one carrier H with an entwining H o H -> H o H."""

    def __post_init__(self):
        if not self.op.carrier.same_shape(self.co.carrier):
            raise ShapeError(f"{self.name}: operad and cooperad live on different carriers")
        super().__post_init__()

    @property
    def carrier(self):
        return self.op.carrier

    @property
    def m(self) -> SeqMorphism:
        return self.op.mult

    @property
    def e(self) -> SeqMorphism:
        return self.op.unit

    @property
    def delta(self) -> SeqMorphism:
        return self.co.comult

    @property
    def eps(self) -> SeqMorphism:
        return self.co.counit

    def replace(self, op: Optional[OperadStructure] = None, co: Optional[CooperadStructure] = None,
                lam: Optional[SeqMorphism] = None, name: Optional[str] = None) -> "EntwinedTriple":
        return EntwinedTriple(op or self.op, co or self.co, lam or self.lam, name or self.name)


@dataclass(frozen=True, eq=False)
class Bialgebra:
    """
    (X, h, theta): an A-algebra and a C-coalgebra on one graded space.

    It is a (C, A)-bialgebra when the lambda-bimodule pentagon
    theta.h = G(h).lambda_X.T(theta) holds; check_bimodule decides that.
    """

    entwining: Entwining
    algebra: AlgebraObject
    coalgebra: CoalgebraObject
    name: str = "B"

    def __post_init__(self):
        if self.algebra.space != self.coalgebra.space or self.algebra.trunc != self.coalgebra.trunc:
            raise ShapeError(f"{self.name}: action and coaction live on different spaces")
        if self.algebra.operad is not self.entwining.op or self.coalgebra.cooperad is not self.entwining.co:
            raise ShapeError(f"{self.name}: structures do not belong to entwining {self.entwining.name}")

    @property
    def space(self) -> GradedSpace:
        return self.algebra.space

    @property
    def trunc(self) -> int:
        return self.algebra.trunc

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def action(self):
        return self.algebra.action

    @property
    def coaction(self):
        return self.coalgebra.coaction

    def label(self, i: int) -> str:
        return self.algebra.label(i)
