"""
Implications between the triple checks.

Every entry is an implication that holds for every monad-comonad triple; a
violated entry means the checks disagree with each other, which can only be
an implementation defect.
"""

from typing import Dict

from loguru import logger

from data.schemas import ImplicationEntry, ImplicationReport
from entwine.antipode import solve_antipode
from entwine.diagrams import (
    augmentation_holds,
    check_bimonad,
    check_compatible,
    check_delta_law,
    check_entwining,
    check_m_law,
    counit_unit_entries,
    fusion_invertible,
    grouplike_unit_holds,
)
from entwine.lifts import t_for_algebra
from entwine.structures import EntwinedTriple
from exactla import is_isomorphism
from opcore.algebras import free_algebra
from opcore.checks import check_cooperad, check_operad, unit_is_mono


def _evaluate(t: EntwinedTriple) -> Dict[str, bool]:
    facts = {
        "operad": check_operad(t.op).passed,
        "cooperad": check_cooperad(t.co).passed,
        "entwining": check_entwining(t).passed,
        "delta_law": check_delta_law(t).passed,
        "m_law": check_m_law(t).passed,
        "compatible": check_compatible(t).passed,
        "grouplike_unit": grouplike_unit_holds(t),
        "augmentation": augmentation_holds(t),
        "counit_unit": all(entry.passed for entry in counit_unit_entries(t)),
        "unit_mono": unit_is_mono(t.op),
        "bimonad": check_bimonad(t).passed,
    }
    facts["base"] = facts["operad"] and facts["cooperad"] and facts["entwining"]
    return facts


def implication_suite(t: EntwinedTriple, free_dim: int = 1) -> ImplicationReport:
    """
    Evaluate premises and conclusions of the derived-law implications.

    The free-algebra criterion is computed on the free algebra over a space
    of dimension free_dim, truncated at the triple's max arity.
    """
    f = _evaluate(t)
    base = f["base"]
    report = ImplicationReport(subject=f"implications {t.name}", checked_arity=t.max_arity)

    def add(name: str, premise: bool, conclusion_fn, detail: str):
        # conclusions are only computed when needed; an unmet premise is vacuous
        conclusion = conclusion_fn() if premise else True
        report.entries.append(ImplicationEntry(name=name, premise=premise, conclusion=conclusion, detail=detail))

    add("delta_law_implies_grouplike_unit", base and f["delta_law"], lambda: f["grouplike_unit"],
        "δ = λ·He ⇒ δ·e = He·e")
    add("m_law_implies_augmentation", base and f["m_law"], lambda: f["augmentation"],
        "m = Hε·λ ⇒ ε·m = ε·Hε")
    add("law_and_mono_imply_counit_unit", base and (f["delta_law"] or f["m_law"]) and f["unit_mono"],
        lambda: f["counit_unit"], "a law and e mono ⇒ ε·e = 1")
    add("delta_law_implies_compatible", base and f["delta_law"], lambda: f["compatible"],
        "δ = λ·He ⇒ compatible")
    add("m_law_implies_compatible", base and f["m_law"], lambda: f["compatible"],
        "m = Hε·λ ⇒ compatible")
    add("compatible_and_grouplike_imply_delta_law", base and f["compatible"] and f["grouplike_unit"],
        lambda: f["delta_law"], "compatible and δ·e = He·e ⇒ δ = λ·He")
    add("compatible_and_augmentation_imply_m_law", base and f["compatible"] and f["augmentation"],
        lambda: f["m_law"], "compatible and ε·m = ε·Hε ⇒ m = Hε·λ")
    add("laws_and_mono_imply_bimonad", base and f["delta_law"] and f["m_law"] and f["unit_mono"],
        lambda: f["bimonad"], "both laws and e mono ⇒ bimonad")

    # isomorphism criteria, under delta = lambda.He and e mono
    criteria_premise = base and f["delta_law"] and f["unit_mono"]
    fusion_iso = fusion_invertible(t) if criteria_premise else False
    free_iso = False
    if criteria_premise:
        free = free_algebra(t.op, free_dim, t.max_arity)
        free_iso = is_isomorphism(t_for_algebra(t, free))
    add("fusion_iso_implies_free_t_iso", criteria_premise and fusion_iso, lambda: free_iso,
        "Hm·δH invertible ⇒ t invertible on free algebras")
    if not t.carrier.symmetric:
        add("free_t_iso_implies_fusion_iso", criteria_premise and free_iso, lambda: fusion_iso,
            "t invertible on the free algebra ⇒ Hm·δH invertible")
    add("fusion_iso_and_augmentation_imply_antipode",
        criteria_premise and fusion_iso and f["augmentation"],
        lambda: solve_antipode(t, check_preconditions=False).report.found,
        "Hm·δH invertible and ε an augmentation ⇒ antipode exists")

    if report.consistent:
        logger.info(f"{t.name}: {report.premises_met()} of {len(report.entries)} premises met, no violations")
    else:
        logger.error(f"{t.name}: implication violations {[entry.name for entry in report.violations()]}")
    return report
