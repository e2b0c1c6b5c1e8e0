"""Primitive part of a bialgebra: the equalizer of theta and the grouplike coaction."""

from dataclasses import dataclass
from typing import List

from loguru import logger

from data.schemas import PrimitivesReport
from entwine.structures import Bialgebra
from exactla import LinearMap, Matrix, PreconditionError, equalizer, inclusion_from_vectors
from opcore.algebras import coaugmentation_at
from rigidity.bimodule import check_bimodule
from species.schur import GradedSpace


@dataclass(frozen=True)
class PrimitiveSubspace:
    """Inclusion P -> X of {x : theta(x) = 1 (x) x}, with a weight per basis vector of P."""

    inclusion: LinearMap
    space: GradedSpace

    @property
    def dim(self) -> int:
        return self.space.dim


def primitives(b: Bialgebra, validate: bool = True) -> PrimitiveSubspace:
    """
    Equalizer of theta and (e_C)_X.

    A basis of homogeneous vectors (one weight each) is preferred; it exists
    whenever both maps preserve weight. Otherwise the plain equalizer basis is
    used and each vector is given the largest weight in its support.

    Raises:
        PreconditionError: if validate is set and b is not a lambda-bimodule
    """
    if validate and not check_bimodule(b):
        raise PreconditionError(f"{b.name}: primitives need a λ-bimodule")
    x, n = b.space, b.trunc
    grouplike = coaugmentation_at(b.entwining.co, x, n)
    full = equalizer(b.coaction, grouplike)
    vectors: List[tuple] = []
    weights: List[int] = []
    for w in sorted(set(x.weights)):
        idx = x.indices_of_weight(w)
        part = equalizer(b.coaction.restrict(idx), grouplike.restrict(idx))
        for j in range(part.domain_dim):
            vec = [0] * x.dim
            for local, value in part.matrix.column_items(j):
                vec[idx[local]] = value
            vectors.append(tuple(vec))
            weights.append(w)
    if len(vectors) != full.domain_dim:
        logger.warning(f"{b.name}: primitives are not spanned by homogeneous vectors; using the plain equalizer")
        vectors = [full.column(j) for j in range(full.domain_dim)]
        weights = [max(x.weights[i] for i, value in enumerate(v) if value) for v in vectors]
    inclusion = inclusion_from_vectors(vectors, x.dim) if vectors else LinearMap(0, x.dim, Matrix.zeros(x.dim, 0))
    logger.info(f"{b.name}: primitive part of dimension {len(vectors)} in a space of dimension {x.dim}")
    return PrimitiveSubspace(inclusion, GradedSpace(len(vectors), tuple(weights)))


def primitives_report(b: Bialgebra, prim: PrimitiveSubspace) -> PrimitivesReport:
    return PrimitivesReport(
        subject=f"primitives {b.name}",
        checked_arity=b.trunc,
        space_dim=b.dim,
        prim_dim=prim.dim,
        weights=list(prim.space.weights),
        inclusion=prim.inclusion.matrix.to_strings(),
    )
