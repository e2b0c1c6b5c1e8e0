"""Antipode of a bimonad, solved arity by arity as exact linear systems."""

from fractions import Fraction
from typing import List, NamedTuple, Optional

from loguru import logger

from data.schemas import AntipodeCertificate, AntipodeReport
from entwine.diagrams import check_bimonad
from entwine.structures import EntwinedTriple
from exactla import LinearMap, Matrix, PreconditionError, solve_with_certificate
from species.monoidal import hcompose
from species.morphism import SeqMorphism


class AntipodeSolution(NamedTuple):
    antipode: Optional[SeqMorphism]
    report: AntipodeReport


def _hopf_sides(t: EntwinedTriple, s: SeqMorphism):
    """(m.(H o S).delta, m.(S o H).delta)."""
    ident = SeqMorphism.identity(t.carrier)
    left = t.m @ hcompose(ident, s) @ t.delta
    right = t.m @ hcompose(s, ident) @ t.delta
    return left, right


def _trial(t: EntwinedTriple, solved: List[Matrix], n: int, block: Matrix) -> SeqMorphism:
    h = t.carrier
    blocks = list(solved) + [block]
    blocks.extend(Matrix.zeros(h.dim(k), h.dim(k)) for k in range(n + 1, h.max_arity + 1))
    return SeqMorphism(h, h, tuple(blocks), name="S")


def _residual(t: EntwinedTriple, s: SeqMorphism, target: Matrix, n: int) -> List[Fraction]:
    left, right = _hopf_sides(t, s)
    return list((left.arity(n) - target).entries) + list((right.arity(n) - target).entries)


def _equivariance_rows(t: EntwinedTriple, n: int, d: int) -> List[List[Fraction]]:
    """Rows of S.rho(s_i) - rho(s_i).S = 0 in the unknowns vec(S), row-major."""
    rows = []
    for i in range(1, n):
        rho = t.carrier.generator(n, i)
        for r in range(d):
            for c in range(d):
                row = [Fraction(0)] * (d * d)
                for q in range(d):
                    row[r * d + q] += rho[q, c]
                for p in range(d):
                    row[p * d + c] -= rho[r, p]
                rows.append(row)
    return rows


def solve_antipode(t: EntwinedTriple, check_preconditions: bool = True) -> AntipodeSolution:
    """
    Find S with m.(H o S).delta = e.eps = m.(S o H).delta, arity by arity.

    In arity n both sides are affine in S_n once S_1..S_{n-1} are fixed, so
    each arity is one linear system; the RREF particular solution is taken.
    An inconsistent arity stops the solve and is returned as a certificate.

    Raises:
        PreconditionError: if check_preconditions is set and t is not a bimonad
    """
    if check_preconditions and not check_bimonad(t):
        raise PreconditionError(f"{t.name}: antipode needs a bimonad")
    h = t.carrier
    unit_counit = t.e @ t.eps
    solved: List[Matrix] = []
    report = AntipodeReport(subject=f"antipode {t.name}", found=False, checked_arity=h.max_arity)
    for n in range(1, h.max_arity + 1):
        d = h.dim(n)
        if d == 0:
            solved.append(Matrix.zeros(0, 0))
            continue
        target = unit_counit.arity(n)
        base = _residual(t, _trial(t, solved, n, Matrix.zeros(d, d)), target, n)
        columns = []
        for p in range(d):
            for q in range(d):
                unit = Matrix.from_sparse(d, d, [(p, q, Fraction(1))])
                moved = _residual(t, _trial(t, solved, n, unit), target, n)
                columns.append([x - y for x, y in zip(moved, base)])
        rows = [list(col) for col in zip(*columns)]
        rhs = [-x for x in base]
        if h.symmetric:
            extra = _equivariance_rows(t, n, d)
            rows.extend(extra)
            rhs.extend([Fraction(0)] * len(extra))
        system = LinearMap.from_matrix(Matrix.from_rows(rows, cols=d * d))
        result = solve_with_certificate(system, rhs)
        if result.solution is None:
            report.certificate = AntipodeCertificate(
                arity=n,
                equations=len(rows),
                unknowns=d * d,
                coefficient_rank=result.coefficient_rank,
                augmented_rank=result.augmented_rank,
            )
            logger.warning(f"{t.name}: antipode system inconsistent in arity {n} "
                           f"(ranks {result.coefficient_rank} vs {result.augmented_rank})")
            return AntipodeSolution(None, report)
        solved.append(Matrix(d, d, tuple(result.solution)))
        report.matrices[f"S_{n}"] = solved[-1].to_strings()
    antipode = SeqMorphism(h, h, tuple(solved), name=f"S_{t.name}")
    left, right = _hopf_sides(t, antipode)
    report.found = True
    report.residual_zero = left.same_matrices(unit_counit) and right.same_matrices(unit_counit)
    logger.info(f"{t.name}: antipode found up to arity {h.max_arity}, residual zero: {report.residual_zero}")
    return AntipodeSolution(antipode, report)
