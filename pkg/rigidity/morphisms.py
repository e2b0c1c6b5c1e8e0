"""The comparison morphisms t and phi, and the triangular shape of t."""

from typing import Optional

from loguru import logger

from data.schemas import CheckStatus, PhiReport, TriangularityBlock, TriangularityReport
from entwine.lifts import t_for_algebra
from entwine.structures import Bialgebra, Entwining
from exactla import LinearMap, Matrix, is_isomorphism
from opcore.algebras import free_algebra, trivial_algebra
from species.monoidal import right_unitor, right_unitor_inverse, whisker_left
from species.morphism import SeqMorphism
from species.schur import Carrier, evaluate_map, schur_evaluate


def phi_map(ent: Entwining) -> SeqMorphism:
    """phi = r_C.(C o eps_A).lambda.(A o e_C).r_A^-1 : A -> C."""
    a, c = ent.op.carrier, ent.co.carrier
    phi = (right_unitor(c) @ whisker_left(c, ent.op.augmentation) @ ent.lam
           @ whisker_left(a, ent.co.coaugmentation) @ right_unitor_inverse(a))
    return phi.renamed(f"φ_{ent.name}")


def phi_report(ent: Entwining) -> PhiReport:
    phi = phi_map(ent)
    h2iso = all(is_isomorphism(LinearMap.from_matrix(phi.arity(n))) for n in range(1, ent.max_arity + 1))
    is_identity = ent.op.carrier.same_shape(ent.co.carrier) and all(
        phi.arity(n) == Matrix.identity(ent.op.carrier.dim(n)) for n in range(1, ent.max_arity + 1)
    )
    return PhiReport(
        subject=f"φ {ent.name}",
        checked_arity=ent.max_arity,
        matrices={f"φ_{n}": phi.arity(n).to_strings() for n in range(1, ent.max_arity + 1)},
        h2iso=h2iso,
        is_identity=is_identity,
    )


def check_H2iso(ent: Entwining) -> bool:
    """Every phi_n is invertible up to the truncation."""
    return phi_report(ent).h2iso


def t_morphism(b: Bialgebra) -> LinearMap:
    """t_(X,h) = G(h).lambda_X.T((e_C)_X) : F_A(X) -> F_C(X)."""
    return t_for_algebra(b.entwining, b.algebra)


def t_on_free_algebra(ent: Entwining, carrier: Carrier, trunc: int) -> LinearMap:
    """t on the free algebra (T(V), m_V): G(m_V).lambda_{T V}.T(e_C at T V)."""
    return t_for_algebra(ent, free_algebra(ent.op, carrier, trunc))


def t_at_trivial_algebra(ent: Entwining, carrier: Carrier, trunc: int) -> LinearMap:
    """t on (V, (eps_A)_V); agrees with phi evaluated at V."""
    return t_for_algebra(ent, trivial_algebra(ent.op, carrier, trunc))


def check_t_triangular(b: Bialgebra, t: Optional[LinearMap] = None) -> TriangularityReport:
    """
    Block shape of t in the arity grading.

    The block from A-arity n to C-arity n must be phi_n (x) id and every block
    into a C-arity above n must vanish.
    """
    ent, x, n_max = b.entwining, b.space, b.trunc
    t = t if t is not None else t_morphism(b)
    phi_x = evaluate_map(phi_map(ent), x, n_max)
    free = schur_evaluate(ent.op.carrier, x, n_max)
    cofree = schur_evaluate(ent.co.carrier, x, n_max)
    report = TriangularityReport(subject=f"t {b.name}", checked_arity=n_max)
    for n in range(1, n_max + 1):
        cols = free.indices_of_arity(n)
        if not cols:
            continue
        for m in range(n, n_max + 1):
            rows = cofree.indices_of_arity(m)
            if not rows:
                continue
            block = t.matrix.submatrix(rows, cols)
            expected = phi_x.matrix.submatrix(rows, cols) if m == n else Matrix.zeros(len(rows), len(cols))
            ok = block == expected
            witness = None
            if not ok:
                _, col = block.first_difference(expected)
                witness = free.label_text(cols[col])
            report.blocks.append(TriangularityBlock(
                source_arity=n,
                target_arity=m,
                expected="phi" if m == n else "zero",
                status=CheckStatus.PASS if ok else CheckStatus.FAIL,
                witness_label=witness,
            ))
    if not report.passed:
        logger.warning(f"t on {b.name} is not triangular")
    return report
