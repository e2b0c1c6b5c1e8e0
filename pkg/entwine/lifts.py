"""Lambda at a space and the lifted monad and comonad."""

from functools import lru_cache

from loguru import logger

from entwine.structures import Bialgebra, Entwining
from exactla import LinearMap, PreconditionError
from opcore.algebras import (
    AlgebraObject,
    CoalgebraObject,
    check_algebra,
    check_coalgebra,
    coaugmentation_at,
    comonad_comultiplication,
    monad_multiplication,
    trivial_coalgebra,
)
from species.schur import Carrier, apply_functor, compose_iso_inverse, eval_compose_iso, evaluate_map, schur_evaluate


@lru_cache(maxsize=None)
def entwining_at(ent: Entwining, carrier: Carrier, trunc: int) -> LinearMap:
    """lambda_X : F_A(F_C(X)) -> F_C(F_A(X))."""
    a, c = ent.op.carrier, ent.co.carrier
    return (eval_compose_iso(c, a, carrier, trunc) @ evaluate_map(ent.lam, carrier, trunc)
            @ compose_iso_inverse(a, c, carrier, trunc))


def t_for_algebra(ent: Entwining, alg: AlgebraObject) -> LinearMap:
    """
    t_(X,h) = G(h) . lambda_X . T((e_C)_X) : F_A(X) -> F_C(X).

    On the free algebra this is the composite T T(V) -> G T(V) whose
    invertibility is the free-algebra isomorphism criterion.
    """
    x, n = alg.space, alg.trunc
    a, c = ent.op.carrier, ent.co.carrier
    cofree = schur_evaluate(c, x, n)
    free = schur_evaluate(a, x, n)
    t_g = apply_functor(a, coaugmentation_at(ent.co, x, n), x, cofree.space, n)
    g_h = apply_functor(c, alg.action, free.space, x, n)
    return g_h @ entwining_at(ent, x, n) @ t_g


def lift_comonad(ent: Entwining, alg: AlgebraObject, validate: bool = True) -> Bialgebra:
    """
    (G(X), G(h).lambda_X, delta_X) for an A-algebra (X, h).

    Raises:
        PreconditionError: if validate is set and (X, h) fails its axioms
    """
    if validate and not check_algebra(alg):
        raise PreconditionError(f"{alg.name} is not an {ent.op.name}-algebra up to arity {alg.trunc}")
    x, n = alg.space, alg.trunc
    a, c = ent.op.carrier, ent.co.carrier
    cofree = schur_evaluate(c, x, n)
    free = schur_evaluate(a, x, n)
    action = apply_functor(c, alg.action, free.space, x, n) @ entwining_at(ent, x, n)
    labels = tuple(cofree.label_text(i) for i in range(cofree.dim))
    lifted_alg = AlgebraObject(ent.op, cofree.space, n, action, name=f"Ĝ({alg.name})", basis_labels=labels)
    lifted_coalg = CoalgebraObject(ent.co, cofree.space, n, comonad_comultiplication(ent.co, x, n),
                                   name=f"Ĝ({alg.name})", basis_labels=labels)
    logger.debug(f"lifted comonad at {alg.name}: dim {cofree.dim}")
    return Bialgebra(ent, lifted_alg, lifted_coalg, name=f"Ĝ({alg.name})")


def lift_monad(ent: Entwining, coalg: CoalgebraObject, validate: bool = True) -> Bialgebra:
    """
    (T(X), m_X, lambda_X.T(theta)) for a C-coalgebra (X, theta).

    Raises:
        PreconditionError: if validate is set and (X, theta) fails its axioms
    """
    if validate and not check_coalgebra(coalg):
        raise PreconditionError(f"{coalg.name} is not a {ent.co.name}-coalgebra up to arity {coalg.trunc}")
    x, n = coalg.space, coalg.trunc
    a, c = ent.op.carrier, ent.co.carrier
    cofree = schur_evaluate(c, x, n)
    free = schur_evaluate(a, x, n)
    coaction = entwining_at(ent, x, n) @ apply_functor(a, coalg.coaction, x, cofree.space, n)
    labels = tuple(free.label_text(i) for i in range(free.dim))
    lifted_alg = AlgebraObject(ent.op, free.space, n, monad_multiplication(ent.op, x, n),
                               name=f"T̂({coalg.name})", basis_labels=labels)
    lifted_coalg = CoalgebraObject(ent.co, free.space, n, coaction, name=f"T̂({coalg.name})", basis_labels=labels)
    logger.debug(f"lifted monad at {coalg.name}: dim {free.dim}")
    return Bialgebra(ent, lifted_alg, lifted_coalg, name=f"T̂({coalg.name})")


def lift_grouplike(ent: Entwining, carrier: Carrier, trunc: int) -> Bialgebra:
    """The monad lifted at the trivial comodule (V, (e_C)_V)."""
    return lift_monad(ent, trivial_coalgebra(ent.co, carrier, trunc), validate=False)
