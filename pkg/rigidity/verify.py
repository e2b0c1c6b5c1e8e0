"""Rigidity verification: hypotheses, primitives and the free-and-cofree reconstruction."""

from typing import Dict, Optional

from loguru import logger

from data.schemas import ReconstructionReport, RigidityReport, RigidityVerdict
from entwine.diagrams import check_entwining
from entwine.structures import Bialgebra, Entwining
from exactla import LinearMap, PreconditionError, is_isomorphism, same_column_space
from opcore.algebras import monad_multiplication, monad_unit
from opcore.checks import check_grouplike, split_unit_check
from rigidity.bimodule import check_bimodule
from rigidity.comparison import comparison_K
from rigidity.morphisms import check_H2iso
from rigidity.primitives import PrimitiveSubspace, primitives
from species.schur import apply_functor, schur_evaluate


class HypothesisError(PreconditionError):
    """A hypothesis of the rigidity pipeline fails."""

    def __init__(self, hypothesis: str, report: Optional[RigidityReport] = None):
        super().__init__(f"hypothesis {hypothesis} fails")
        self.hypothesis = hypothesis
        self.report = report


def hypotheses(ent: Entwining) -> Dict[str, bool]:
    """(H0) entwining, (H1) split unit and grouplike e_C, (H2iso) phi invertible."""
    results = {"H0": check_entwining(ent).passed}
    results["split_unit"] = split_unit_check(ent.op)
    results["H1"] = check_grouplike(ent.co, ent.co.coaugmentation)
    results["H2iso"] = results["H0"] and results["H1"] and check_H2iso(ent)
    return results


def reconstruction_map(b: Bialgebra, prim: PrimitiveSubspace) -> LinearMap:
    """h_hat = h.F_A(incl) : F_A(P) -> X."""
    a = b.entwining.op.carrier
    return b.action @ apply_functor(a, prim.inclusion, prim.space, b.space, b.trunc)


def _reconstruction(b: Bialgebra, prim: PrimitiveSubspace) -> ReconstructionReport:
    ent, x, n = b.entwining, b.space, b.trunc
    a, c = ent.op.carrier, ent.co.carrier
    h_hat = reconstruction_map(b, prim)
    free_p = schur_evaluate(a, prim.space, n)
    invertible = h_hat.domain_dim == h_hat.codomain_dim and is_isomorphism(h_hat)
    algebra_ok = (h_hat @ monad_multiplication(ent.op, prim.space, n)
                  == b.action @ apply_functor(a, h_hat, free_p.space, x, n))
    alpha = comparison_K(ent, prim.space, n, validate=False).coaction
    coalgebra_ok = b.coaction @ h_hat == apply_functor(c, h_hat, free_p.space, x, n) @ alpha
    return ReconstructionReport(
        invertible=invertible,
        checked_arity=n,
        source_dim=h_hat.domain_dim,
        target_dim=h_hat.codomain_dim,
        algebra_morphism=algebra_ok,
        coalgebra_morphism=coalgebra_ok,
    )


def unit_direction(ent: Entwining, prim: PrimitiveSubspace, trunc: int) -> bool:
    """primitives(K(P)) is exactly e_A(P)."""
    k_p = comparison_K(ent, prim.space, trunc, validate=False)
    return same_column_space(primitives(k_p, validate=False).inclusion, monad_unit(ent.op, prim.space, trunc))


def rigidity_verify(b: Bialgebra, refuse_quietly: bool = False) -> RigidityReport:
    """
    Check that b is freely and cofreely generated by its primitive part.

    Hypotheses come first; a failing one refuses the verdict. Then the
    primitives P are computed, h_hat : T(P) -> X is tested for being an
    invertible algebra and coalgebra morphism, and primitives(K(P)) is
    compared with e(P).

    Raises:
        HypothesisError: when a hypothesis fails and refuse_quietly is not set
    """
    ent = b.entwining
    report = RigidityReport(subject=f"rigidity {b.name}", checked_arity=b.trunc, space_dim=b.dim)
    report.hypotheses = hypotheses(ent)
    report.hypotheses["bimodule"] = check_bimodule(b).passed
    failed = [name for name, ok in report.hypotheses.items() if not ok]
    if failed:
        report.failed_hypothesis = failed[0]
        report.verdict = RigidityVerdict.REFUSED
        logger.warning(f"{b.name}: rigidity refused, hypothesis {failed[0]} fails")
        if refuse_quietly:
            return report
        raise HypothesisError(failed[0], report)
    prim = primitives(b, validate=False)
    report.prim_dim = prim.dim
    report.reconstruction = _reconstruction(b, prim)
    report.unit_direction = unit_direction(ent, prim, b.trunc)
    rec = report.reconstruction
    ok = rec.invertible and rec.algebra_morphism and rec.coalgebra_morphism and report.unit_direction
    report.verdict = RigidityVerdict.PASS if ok else RigidityVerdict.FAIL
    if ok:
        logger.info(f"{b.name}: rigidity verified, dim P = {prim.dim}, T(P) ≅ X up to weight {b.trunc}")
    else:
        logger.warning(f"{b.name}: rigidity fails ({rec.source_dim} -> {rec.target_dim}, "
                       f"invertible {rec.invertible}, unit direction {report.unit_direction})")
    return report
