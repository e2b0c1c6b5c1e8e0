"""Lambda-bimodule checks and twisted bialgebras."""

from loguru import logger

from data.schemas import CheckReport
from entwine.lifts import entwining_at
from entwine.structures import Bialgebra
from exactla import LinearMap, ShapeError, inverse
from opcore.algebras import AlgebraObject, CoalgebraObject, check_algebra, check_coalgebra, compare_graded
from species.schur import apply_functor, schur_evaluate


def pentagon_sides(b: Bialgebra):
    """(theta.h, G(h).lambda_X.T(theta)) : F_A(X) -> F_C(X)."""
    ent, x, n = b.entwining, b.space, b.trunc
    a, c = ent.op.carrier, ent.co.carrier
    free = schur_evaluate(a, x, n)
    cofree = schur_evaluate(c, x, n)
    lhs = b.coaction @ b.action
    rhs = (apply_functor(c, b.action, free.space, x, n) @ entwining_at(ent, x, n)
           @ apply_functor(a, b.coaction, x, cofree.space, n))
    return lhs, rhs


def check_bimodule(b: Bialgebra) -> CheckReport:
    """Algebra axioms, coalgebra axioms and the lambda-bimodule pentagon, weight by weight."""
    report = CheckReport(subject=f"bialgebra {b.name}", checked_arity=b.trunc)
    report.extend(check_algebra(b.algebra), prefix="algebra_")
    report.extend(check_coalgebra(b.coalgebra), prefix="coalgebra_")
    lhs, rhs = pentagon_sides(b)
    free = schur_evaluate(b.entwining.op.carrier, b.space, b.trunc)
    report.entries.extend(compare_graded(lhs, rhs, "pentagon", free.space.weights, free.label_text))
    if report.passed:
        logger.info(f"{b.name}: λ-bimodule up to weight {b.trunc}")
    else:
        logger.warning(f"{b.name}: bimodule checks failed, first witness {report.first_witness()}")
    return report


def twist_bialgebra(b: Bialgebra, change: LinearMap, name: str = None) -> Bialgebra:
    """
    Transport (X, h, theta) along an invertible weight-preserving g : X -> X.

    h' = g.h.F_A(g^-1) and theta' = F_C(g).theta.g^-1.

    Raises:
        ShapeError: if g is not square on X or mixes weights
    """
    x, n = b.space, b.trunc
    if change.domain_dim != x.dim or change.codomain_dim != x.dim:
        raise ShapeError(f"change of basis must be {x.dim}x{x.dim}")
    for i, j, _ in change.matrix.nonzero_items():
        if x.weights[i] != x.weights[j]:
            raise ShapeError(f"change of basis mixes weights {x.weights[j]} and {x.weights[i]}")
    back = inverse(change)
    ent = b.entwining
    action = change @ b.action @ apply_functor(ent.op.carrier, back, x, x, n)
    coaction = apply_functor(ent.co.carrier, change, x, x, n) @ b.coaction @ back
    label = name or f"{b.name}^g"
    return Bialgebra(
        ent,
        AlgebraObject(ent.op, x, n, action, name=label),
        CoalgebraObject(ent.co, x, n, coaction, name=label),
        name=label,
    )
