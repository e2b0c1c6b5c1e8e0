"""The comparison functors K and K' on objects."""

from typing import Optional

from loguru import logger

from entwine.lifts import lift_comonad, lift_monad
from entwine.structures import Bialgebra, EntwinedTriple, Entwining
from exactla import PreconditionError
from opcore.algebras import CoalgebraObject, coaugmentation_at, trivial_algebra
from opcore.checks import check_grouplike
from species.morphism import SeqMorphism
from species.schur import Carrier, require_unit_weights_fit


def comparison_K(ent: Entwining, carrier: Carrier, trunc: int, grouplike: Optional[SeqMorphism] = None,
                 validate: bool = True) -> Bialgebra:
    """
    K_g(V) = ((T(V), m_V), lambda_V.T(g_V)).

    g defaults to the cooperad's coaugmentation e_C.

    Raises:
        PreconditionError: if validate is set and g is not grouplike
    """
    co = ent.co if grouplike is None else ent.co.with_maps(coaugmentation=grouplike)
    if validate and not check_grouplike(co, co.coaugmentation):
        raise PreconditionError(f"{co.coaugmentation.name} is not grouplike for {co.name}")
    space = require_unit_weights_fit(carrier, trunc)
    ent_g = ent if grouplike is None else type(ent)(ent.op, co, ent.lam, ent.name)
    comodule = CoalgebraObject(co, space, trunc, coaugmentation_at(co, space, trunc), name="V")
    b = lift_monad(ent_g, comodule, validate=False)
    logger.debug(f"K(V) for {ent.name}: dim {b.dim}")
    return Bialgebra(ent_g, b.algebra, b.coalgebra, name=f"K({ent.name})")


def comparison_K_prime(t: EntwinedTriple, carrier: Carrier, trunc: int) -> Bialgebra:
    """
    K'(V): the cofree coalgebra on V with the action lifted from the trivial
    algebra (V, (eps_A)_V).
    """
    space = require_unit_weights_fit(carrier, trunc)
    b = lift_comonad(t, trivial_algebra(t.op, space, trunc), validate=False)
    return Bialgebra(t, b.algebra, b.coalgebra, name=f"K'({t.name})")
