"""
Algebras over operads and coalgebras over cooperads on graded spaces.

An operad A gives the monad T_A = (F_A, m, e) on truncated graded spaces and
a cooperad C the comonad G_C = (F_C, delta, eps). Everything is truncated at
total weight N; axioms are compared weight by weight.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from loguru import logger

from data.schemas import CheckEntry, CheckReport, CheckStatus
from exactla import LinearMap, ShapeError
from opcore.structures import CooperadStructure, OperadStructure
from species.schur import (
    Carrier,
    GradedSpace,
    apply_functor,
    as_space,
    compose_iso_inverse,
    eval_compose_iso,
    evaluate_map,
    require_unit_weights_fit,
    schur_evaluate,
)

LabelFn = Callable[[int], str]


# ----------------------------------------------------------------------
# Monad and comonad at a space
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def monad_multiplication(op: OperadStructure, carrier: Carrier, trunc: int) -> LinearMap:
    """m_X : F_A(F_A(X)) -> F_A(X)."""
    a = op.carrier
    return evaluate_map(op.mult, carrier, trunc) @ compose_iso_inverse(a, a, carrier, trunc)


@lru_cache(maxsize=None)
def monad_unit(op: OperadStructure, carrier: Carrier, trunc: int) -> LinearMap:
    """e_X : X -> F_A(X)."""
    require_unit_weights_fit(carrier, trunc)
    return evaluate_map(op.unit, carrier, trunc)


@lru_cache(maxsize=None)
def augmentation_at(op: OperadStructure, carrier: Carrier, trunc: int) -> LinearMap:
    """(eps_A)_X : F_A(X) -> X."""
    require_unit_weights_fit(carrier, trunc)
    return evaluate_map(op.augmentation, carrier, trunc)


@lru_cache(maxsize=None)
def comonad_comultiplication(co: CooperadStructure, carrier: Carrier, trunc: int) -> LinearMap:
    """delta_X : F_C(X) -> F_C(F_C(X))."""
    c = co.carrier
    return eval_compose_iso(c, c, carrier, trunc) @ evaluate_map(co.comult, carrier, trunc)


@lru_cache(maxsize=None)
def comonad_counit(co: CooperadStructure, carrier: Carrier, trunc: int) -> LinearMap:
    """eps_X : F_C(X) -> X."""
    require_unit_weights_fit(carrier, trunc)
    return evaluate_map(co.counit, carrier, trunc)


@lru_cache(maxsize=None)
def coaugmentation_at(co: CooperadStructure, carrier: Carrier, trunc: int) -> LinearMap:
    """(e_C)_X : X -> F_C(X), the grouplike evaluated at X."""
    require_unit_weights_fit(carrier, trunc)
    return evaluate_map(co.coaugmentation, carrier, trunc)


# ----------------------------------------------------------------------
# Objects
# ----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AlgebraObject:
    """(X, h) with h : F_A(X) -> X."""

    operad: OperadStructure
    space: GradedSpace
    trunc: int
    action: LinearMap
    name: str = "X"
    basis_labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        source = schur_evaluate(self.operad.carrier, self.space, self.trunc)
        if self.action.domain_dim != source.dim or self.action.codomain_dim != self.space.dim:
            raise ShapeError(f"{self.name}: action is {self.action.domain_dim}->{self.action.codomain_dim}, "
                             f"expected {source.dim}->{self.space.dim}")

    @property
    def dim(self) -> int:
        return self.space.dim

    def label(self, i: int) -> str:
        return self.basis_labels[i] if self.basis_labels else f"v{i}"

    def arity_block(self, n: int) -> LinearMap:
        """h restricted to the arity-n part of F_A(X)."""
        source = schur_evaluate(self.operad.carrier, self.space, self.trunc)
        return self.action.restrict(source.indices_of_arity(n))


@dataclass(frozen=True, eq=False)
class CoalgebraObject:
    """(X, theta) with theta : X -> F_C(X); finite support is automatic under truncation."""

    cooperad: CooperadStructure
    space: GradedSpace
    trunc: int
    coaction: LinearMap
    name: str = "X"
    basis_labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        target = schur_evaluate(self.cooperad.carrier, self.space, self.trunc)
        if self.coaction.domain_dim != self.space.dim or self.coaction.codomain_dim != target.dim:
            raise ShapeError(f"{self.name}: coaction is {self.coaction.domain_dim}->{self.coaction.codomain_dim}, "
                             f"expected {self.space.dim}->{target.dim}")

    @property
    def dim(self) -> int:
        return self.space.dim

    def label(self, i: int) -> str:
        return self.basis_labels[i] if self.basis_labels else f"v{i}"

    def arity_block(self, n: int) -> LinearMap:
        """theta followed by the projection onto the arity-n part of F_C(X)."""
        target = schur_evaluate(self.cooperad.carrier, self.space, self.trunc)
        rows = target.indices_of_arity(n)
        return LinearMap.from_matrix(self.coaction.matrix.submatrix(rows, range(self.space.dim)))


def free_algebra(op: OperadStructure, carrier: Carrier, trunc: int) -> AlgebraObject:
    """(F_A(V), m_V), truncated at total weight trunc."""
    space = schur_evaluate(op.carrier, carrier, trunc)
    labels = tuple(space.label_text(i) for i in range(space.dim))
    logger.debug(f"free {op.name}-algebra on dim {as_space(carrier).dim}: dim {space.dim}")
    return AlgebraObject(op, space.space, trunc, monad_multiplication(op, carrier, trunc),
                         name=f"T_{op.name}(V)", basis_labels=labels)


def cofree_coalgebra(co: CooperadStructure, carrier: Carrier, trunc: int) -> CoalgebraObject:
    """(F_C(V), delta_V), truncated at total weight trunc."""
    space = schur_evaluate(co.carrier, carrier, trunc)
    labels = tuple(space.label_text(i) for i in range(space.dim))
    return CoalgebraObject(co, space.space, trunc, comonad_comultiplication(co, carrier, trunc),
                           name=f"G_{co.name}(V)", basis_labels=labels)


def trivial_algebra(op: OperadStructure, carrier: Carrier, trunc: int) -> AlgebraObject:
    """(V, (eps_A)_V): everything above arity one acts by zero."""
    space = require_unit_weights_fit(carrier, trunc)
    return AlgebraObject(op, space, trunc, augmentation_at(op, space, trunc), name="V")


def trivial_coalgebra(co: CooperadStructure, carrier: Carrier, trunc: int) -> CoalgebraObject:
    """(V, (e_C)_V), the comodule induced by the grouplike."""
    space = require_unit_weights_fit(carrier, trunc)
    return CoalgebraObject(co, space, trunc, coaugmentation_at(co, space, trunc), name="V")


# ----------------------------------------------------------------------
# Checks
# ----------------------------------------------------------------------

def compare_graded(lhs: LinearMap, rhs: LinearMap, axiom: str, weights: Sequence[int],
                   label: LabelFn) -> List[CheckEntry]:
    """
    One entry per source weight stating whether the two maps agree there.

    The witness is the label of the first source basis vector whose columns differ.
    """
    if lhs.matrix.shape != rhs.matrix.shape:
        raise ShapeError(f"{axiom}: sides are {lhs.matrix.shape} and {rhs.matrix.shape}")
    first_bad = {}
    for j in range(lhs.domain_dim):
        w = weights[j]
        if w not in first_bad and lhs.matrix.column_items(j) != rhs.matrix.column_items(j):
            first_bad[w] = j
    entries = []
    for w in sorted(set(weights)):
        if w in first_bad:
            j = first_bad[w]
            entries.append(CheckEntry(axiom=axiom, arity=w, status=CheckStatus.FAIL, witness_label=label(j),
                                      detail=f"source basis vector {j} maps differently"))
        else:
            entries.append(CheckEntry(axiom=axiom, arity=w, status=CheckStatus.PASS))
    return entries


def check_algebra(alg: AlgebraObject) -> CheckReport:
    """Unit law h.e_X = id and associativity h.m_X = h.F_A(h), weight by weight up to trunc."""
    op, x, n = alg.operad, alg.space, alg.trunc
    report = CheckReport(subject=f"{op.name}-algebra {alg.name}", checked_arity=n)
    unit = alg.action @ monad_unit(op, x, n)
    report.entries.extend(compare_graded(unit, LinearMap.identity(x.dim), "unit", x.weights, alg.label))
    free = schur_evaluate(op.carrier, x, n)
    lhs = alg.action @ monad_multiplication(op, x, n)
    rhs = alg.action @ apply_functor(op.carrier, alg.action, free.space, x, n)
    double = schur_evaluate(op.carrier, free.space, n)
    report.entries.extend(compare_graded(lhs, rhs, "associativity", double.space.weights, double.label_text))
    return report


def check_coalgebra(coalg: CoalgebraObject) -> CheckReport:
    """Counit law eps_X.theta = id and coassociativity F_C(theta).theta = delta_X.theta."""
    co, x, n = coalg.cooperad, coalg.space, coalg.trunc
    report = CheckReport(subject=f"{co.name}-coalgebra {coalg.name}", checked_arity=n)
    counit = comonad_counit(co, x, n) @ coalg.coaction
    report.entries.extend(compare_graded(counit, LinearMap.identity(x.dim), "counit", x.weights, coalg.label))
    cofree = schur_evaluate(co.carrier, x, n)
    lhs = apply_functor(co.carrier, coalg.coaction, x, cofree.space, n) @ coalg.coaction
    rhs = comonad_comultiplication(co, x, n) @ coalg.coaction
    report.entries.extend(compare_graded(lhs, rhs, "coassociativity", x.weights, coalg.label))
    return report
