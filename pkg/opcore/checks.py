"""Axiom checks for operads and cooperads, all as exact species identities."""

from typing import List

from loguru import logger

from data.schemas import CheckEntry, CheckReport
from exactla import LinearMap, rank
from opcore.structures import CooperadStructure, OperadStructure
from species.monoidal import (
    associator,
    hcompose,
    left_unitor,
    left_unitor_inverse,
    right_unitor,
    unit_for,
    whisker_left,
    whisker_right,
)
from species.morphism import SeqMorphism, compare, equivariance_entries


def _finish(report: CheckReport) -> CheckReport:
    if report.passed:
        logger.info(f"{report.subject}: {len(report.entries)} checks passed up to arity {report.checked_arity}")
    else:
        failed = sorted({entry.axiom for entry in report.failures()})
        logger.warning(f"{report.subject}: failed {failed}, first witness {report.first_witness()}")
    return report


def check_operad(op: OperadStructure) -> CheckReport:
    """
    Associativity, both unit laws and equivariance of (A, m, e).

    Every axiom is compared arity by arity; a failure carries the basis label
    of the first column where the two sides differ.
    """
    a = op.carrier
    ident = SeqMorphism.identity(a)
    report = CheckReport(subject=f"operad {op.name}", checked_arity=op.max_arity)
    lhs = op.mult @ hcompose(op.mult, ident)
    rhs = op.mult @ whisker_left(a, op.mult) @ associator(a, a, a)
    report.entries.extend(compare(lhs, rhs, "associativity"))
    report.entries.extend(compare(op.mult @ whisker_right(op.unit, a), left_unitor(a), "left_unit"))
    report.entries.extend(compare(op.mult @ whisker_left(a, op.unit), right_unitor(a), "right_unit"))
    report.entries.extend(equivariance_entries(op.mult, "equivariance_mult"))
    report.entries.extend(equivariance_entries(op.unit, "equivariance_unit"))
    return _finish(report)


def check_cooperad(co: CooperadStructure) -> CheckReport:
    """Coassociativity, both counit laws and equivariance of (C, delta, eps)."""
    c = co.carrier
    ident = SeqMorphism.identity(c)
    report = CheckReport(subject=f"cooperad {co.name}", checked_arity=co.max_arity)
    lhs = associator(c, c, c) @ hcompose(co.comult, ident) @ co.comult
    rhs = whisker_left(c, co.comult) @ co.comult
    report.entries.extend(compare(lhs, rhs, "coassociativity"))
    report.entries.extend(compare(left_unitor(c) @ whisker_right(co.counit, c) @ co.comult, ident, "left_counit"))
    report.entries.extend(compare(right_unitor(c) @ whisker_left(c, co.counit) @ co.comult, ident, "right_counit"))
    report.entries.extend(equivariance_entries(co.comult, "equivariance_comult"))
    report.entries.extend(equivariance_entries(co.counit, "equivariance_counit"))
    return _finish(report)


def augmentation_entries(op: OperadStructure) -> List[CheckEntry]:
    """eps.m = eps.r.(A o eps) and eps.e = id, with eps the operad's augmentation."""
    a = op.carrier
    eps = op.augmentation
    entries = compare(eps @ op.mult, eps @ right_unitor(a) @ whisker_left(a, eps), "augmentation_mult")
    entries.extend(compare(eps @ op.unit, SeqMorphism.identity(unit_for(a)), "augmentation_unit"))
    return entries


def check_augmentation(op: OperadStructure) -> bool:
    return all(entry.passed for entry in augmentation_entries(op))


def grouplike_entries(co: CooperadStructure, g: SeqMorphism) -> List[CheckEntry]:
    """eps.g = id and delta.g = (g o g).l_I^-1."""
    unit = unit_for(co.carrier)
    entries = compare(co.counit @ g, SeqMorphism.identity(unit), "grouplike_counit")
    entries.extend(compare(co.comult @ g, hcompose(g, g) @ left_unitor_inverse(unit), "grouplike_comult"))
    entries.extend(equivariance_entries(g, "grouplike_equivariance"))
    return entries


def check_grouplike(co: CooperadStructure, g: SeqMorphism) -> bool:
    return all(entry.passed for entry in grouplike_entries(co, g))


def split_unit_check(op: OperadStructure) -> bool:
    """eps_A . e_A = id in arity 1."""
    return (op.augmentation @ op.unit).arity(1) == SeqMorphism.identity(unit_for(op.carrier)).arity(1)


def unit_is_mono(op: OperadStructure) -> bool:
    """e_A injective in every arity (only arity 1 has a nonzero source)."""
    return rank(LinearMap.from_matrix(op.unit.arity(1))) == 1
