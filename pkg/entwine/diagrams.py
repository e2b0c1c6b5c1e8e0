"""
Entwining, compatibility, derived-law and bimonad diagrams as species identities.

Conventions: T phi is hcompose(id, phi) and phi T is hcompose(phi, id);
assoc_{X,Y,Z} : (X o Y) o Z -> X o (Y o Z). Each diagram below is written
with the associators it needs so both sides share source and target.
"""

from typing import List

from loguru import logger

from data.schemas import CheckEntry, CheckReport
from entwine.structures import EntwinedTriple, Entwining
from exactla import LinearMap, is_isomorphism
from opcore.checks import augmentation_entries, grouplike_entries
from species.monoidal import (
    associator,
    associator_inverse,
    hcompose,
    left_unitor,
    left_unitor_inverse,
    right_unitor,
    right_unitor_inverse,
    unit_for,
    whisker_left,
    whisker_right,
)
from species.morphism import SeqMorphism, compare, equivariance_entries


def _report(subject: str, max_arity: int, entries: List[CheckEntry]) -> CheckReport:
    report = CheckReport(subject=subject, checked_arity=max_arity, entries=entries)
    if not report.passed:
        failed = sorted({entry.axiom for entry in report.failures()})
        logger.warning(f"{subject}: failed {failed}, first witness {report.first_witness()}")
    return report


def multiplication_diagram(ent: Entwining) -> List[CheckEntry]:
    """lambda.(m o C) = (C o m).assoc.(lambda o A).assoc^-1.(A o lambda).assoc, on (A o A) o C."""
    a, c = ent.op.carrier, ent.co.carrier
    m, lam = ent.op.mult, ent.lam
    lhs = lam @ whisker_right(m, c)
    rhs = (whisker_left(c, m) @ associator(c, a, a) @ whisker_right(lam, a)
           @ associator_inverse(a, c, a) @ whisker_left(a, lam) @ associator(a, a, c))
    return compare(lhs, rhs, "entwining_mult")


def comultiplication_diagram(ent: Entwining) -> List[CheckEntry]:
    """(delta o A).lambda = assoc^-1.(C o lambda).assoc.(lambda o C).assoc^-1.(A o delta), on A o C."""
    a, c = ent.op.carrier, ent.co.carrier
    delta, lam = ent.co.comult, ent.lam
    lhs = whisker_right(delta, a) @ lam
    rhs = (associator_inverse(c, c, a) @ whisker_left(c, lam) @ associator(c, a, c)
           @ whisker_right(lam, c) @ associator_inverse(a, c, c) @ whisker_left(a, delta))
    return compare(lhs, rhs, "entwining_comult")


def unit_diagram(ent: Entwining) -> List[CheckEntry]:
    """lambda.(e o C).l_C^-1 = (C o e).r_C^-1 : C -> C o A."""
    c = ent.co.carrier
    e, lam = ent.op.unit, ent.lam
    lhs = lam @ whisker_right(e, c) @ left_unitor_inverse(c)
    rhs = whisker_left(c, e) @ right_unitor_inverse(c)
    return compare(lhs, rhs, "entwining_unit")


def counit_diagram(ent: Entwining) -> List[CheckEntry]:
    """r_A.(A o eps) = l_A.(eps o A).lambda : A o C -> A."""
    a = ent.op.carrier
    eps, lam = ent.co.counit, ent.lam
    lhs = right_unitor(a) @ whisker_left(a, eps)
    rhs = left_unitor(a) @ whisker_right(eps, a) @ lam
    return compare(lhs, rhs, "entwining_counit")


def check_entwining(ent: Entwining) -> CheckReport:
    """The four mixed distributive law diagrams plus equivariance of lambda, each reported separately."""
    entries = multiplication_diagram(ent)
    entries.extend(comultiplication_diagram(ent))
    entries.extend(unit_diagram(ent))
    entries.extend(counit_diagram(ent))
    entries.extend(equivariance_entries(ent.lam, "equivariance_lambda"))
    report = _report(f"entwining {ent.name}", ent.max_arity, entries)
    if report.passed:
        logger.info(f"entwining {ent.name}: all four diagrams hold up to arity {ent.max_arity}")
    return report


# ----------------------------------------------------------------------
# Single-carrier triples
# ----------------------------------------------------------------------

def compatible_entries(t: EntwinedTriple) -> List[CheckEntry]:
    """delta.m = (H o m).assoc.(lambda o H).assoc^-1.(H o delta) on H o H."""
    h = t.carrier
    lhs = t.delta @ t.m
    rhs = (whisker_left(h, t.m) @ associator(h, h, h) @ whisker_right(t.lam, h)
           @ associator_inverse(h, h, h) @ whisker_left(h, t.delta))
    return compare(lhs, rhs, "compatible")


def check_compatible(t: EntwinedTriple) -> CheckReport:
    """Whether (H, m, delta) is a lambda-bimodule."""
    return _report(f"compatibility {t.name}", t.max_arity, compatible_entries(t))


def check_delta_law(t: EntwinedTriple) -> CheckReport:
    """delta = lambda.(H o e).r_H^-1."""
    h = t.carrier
    rhs = t.lam @ whisker_left(h, t.e) @ right_unitor_inverse(h)
    return _report(f"δ-law {t.name}", t.max_arity, compare(t.delta, rhs, "delta_law"))


def check_m_law(t: EntwinedTriple) -> CheckReport:
    """m = r_H.(H o eps).lambda."""
    h = t.carrier
    rhs = right_unitor(h) @ whisker_left(h, t.eps) @ t.lam
    return _report(f"m-law {t.name}", t.max_arity, compare(t.m, rhs, "m_law"))


def counit_unit_entries(t: EntwinedTriple) -> List[CheckEntry]:
    return compare(t.eps @ t.e, SeqMorphism.identity(unit_for(t.carrier)), "counit_unit")


def check_bimonad(t: EntwinedTriple) -> CheckReport:
    """
    Bimonad diagrams: eps an augmentation of (H, m, e), e grouplike for
    (H, delta, eps), eps.e = id, and compatibility.
    """
    augmented = t.op.with_maps(augmentation=t.eps)
    grouplike_source = t.co.with_maps(coaugmentation=t.e)
    entries = [entry.model_copy(update={"axiom": entry.axiom.replace("augmentation", "bimonad_augmentation")})
               for entry in augmentation_entries(augmented)]
    entries.extend(entry.model_copy(update={"axiom": entry.axiom.replace("grouplike", "bimonad_grouplike")})
                   for entry in grouplike_entries(grouplike_source, t.e))
    entries.extend(counit_unit_entries(t))
    entries.extend(compatible_entries(t))
    report = _report(f"bimonad {t.name}", t.max_arity, entries)
    if report.passed:
        logger.info(f"{t.name}: bimonad diagrams hold up to arity {t.max_arity}")
    return report


def fusion_operator(t: EntwinedTriple) -> SeqMorphism:
    """(H o m).assoc.(delta o H) : H o H -> H o H."""
    h = t.carrier
    return whisker_left(h, t.m) @ associator(h, h, h) @ whisker_right(t.delta, h)


def fusion_invertible(t: EntwinedTriple) -> bool:
    fusion = fusion_operator(t)
    return all(is_isomorphism(LinearMap.from_matrix(fusion.arity(n))) for n in range(1, t.max_arity + 1))


def grouplike_unit_holds(t: EntwinedTriple) -> bool:
    """delta.e = (e o e).l_I^-1."""
    unit = unit_for(t.carrier)
    return all(entry.passed for entry in compare(t.delta @ t.e, hcompose(t.e, t.e) @ left_unitor_inverse(unit),
                                                 "grouplike"))


def augmentation_holds(t: EntwinedTriple) -> bool:
    """eps.m = eps.r_H.(H o eps)."""
    h = t.carrier
    return all(entry.passed for entry in compare(t.eps @ t.m, t.eps @ right_unitor(h) @ whisker_left(h, t.eps),
                                                 "augmentation"))
