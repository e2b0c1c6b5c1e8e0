"""Tests for entwinings, the derived laws, bimonads and antipodes."""

import pytest


# ============================================================================
# The infinitesimal triple
# ============================================================================

def test_infinitesimal_lambda_matrices():
    from shell.library import build_infinitesimal

    t = build_infinitesimal(3)
    assert t.lam.arity(1).to_strings() == [["1"]]
    assert t.lam.arity(2).to_strings() == [["0", "1"], ["1", "1"]]
    assert t.lam.arity(3).to_strings() == [
        ["0", "0", "0", "1"],
        ["0", "0", "1", "1"],
        ["0", "1", "0", "1"],
        ["1", "1", "1", "1"],
    ]


def test_infinitesimal_diagrams_hold():
    from entwine.diagrams import check_bimonad, check_compatible, check_delta_law, check_entwining, check_m_law
    from shell.library import build_infinitesimal

    t = build_infinitesimal(4)
    report = check_entwining(t)
    assert report.passed
    assert {entry.axiom for entry in report.entries} == {
        "entwining_mult", "entwining_comult", "entwining_unit", "entwining_counit",
    }
    for check in (check_compatible, check_delta_law, check_m_law, check_bimonad):
        assert check(t).passed


def test_identity_triple():
    from entwine.diagrams import check_bimonad, check_entwining
    from rigidity.morphisms import phi_report
    from shell.library import build_identity_triple

    t = build_identity_triple(3)
    assert check_entwining(t).passed
    assert check_bimonad(t).passed
    assert phi_report(t).is_identity


def test_corrupted_lambda_fails_unit_diagram_with_witness():
    from entwine.diagrams import check_entwining
    from shell.library import build_infinitesimal, corrupt_lambda

    report = check_entwining(corrupt_lambda(build_infinitesimal(3)))
    assert not report.passed
    assert not report.axiom_passed("entwining_unit")
    failing = [entry for entry in report.failures() if entry.axiom == "entwining_unit"]
    assert failing[0].arity == 2
    assert report.first_witness() is not None


def test_corrupt_lambda_needs_arity_two():
    from shell.library import build_infinitesimal, corrupt_lambda

    with pytest.raises(ValueError):
        corrupt_lambda(build_infinitesimal(1))


# ============================================================================
# Antipode
# ============================================================================

def test_infinitesimal_antipode_alternates_sign():
    from entwine.antipode import solve_antipode
    from shell.library import build_infinitesimal

    solution = solve_antipode(build_infinitesimal(4))
    assert solution.report.found
    assert solution.report.residual_zero
    for n in range(1, 5):
        assert solution.antipode.arity(n).entries == ((-1) ** (n - 1),)
    assert solution.report.matrices["S_2"] == [["-1"]]


def test_antipode_refuses_non_bimonad():
    from entwine.antipode import solve_antipode
    from exactla import PreconditionError
    from shell.library import build_infinitesimal
    from species.morphism import SeqMorphism

    t = build_infinitesimal(3)
    zero = SeqMorphism.zero(t.lam.source, t.lam.target)
    with pytest.raises(PreconditionError):
        solve_antipode(t.with_lambda(zero, name="zero-λ"))


def test_inconsistent_antipode_system_has_certificate():
    """Without the (1;(2)) term of delta_2 the arity-2 equations contradict each other."""
    from entwine.antipode import solve_antipode
    from exactla import Matrix
    from shell.library import build_infinitesimal

    t = build_infinitesimal(3)
    delta = t.delta.with_block(2, Matrix.from_rows([[0], [1]]))
    broken = t.replace(co=t.co.with_maps(comult=delta), name="no-primitive-split")
    solution = solve_antipode(broken, check_preconditions=False)
    assert solution.antipode is None
    assert not solution.report.found
    certificate = solution.report.certificate
    assert certificate.arity == 2
    assert certificate.unknowns == 1
    assert certificate.rank_defect == 1


# ============================================================================
# Implications and lifts
# ============================================================================

def test_implications_consistent_on_builtins():
    from entwine.implications import implication_suite
    from shell.library import build_identity_triple, build_infinitesimal

    for t in (build_infinitesimal(3), build_identity_triple(3)):
        report = implication_suite(t)
        assert report.consistent
        assert report.premises_met() > 0


def test_implications_consistent_on_perturbations():
    from entwine.implications import implication_suite
    from evaluation.corpus import lambda_perturbations
    from shell.library import build_infinitesimal

    for t in lambda_perturbations(build_infinitesimal(3), count=3, seed=7):
        assert implication_suite(t).consistent


def test_lifted_structures_are_bimodules():
    from entwine.lifts import lift_comonad, lift_grouplike
    from opcore.algebras import free_algebra
    from rigidity.bimodule import check_bimodule
    from shell.library import build_infinitesimal

    t = build_infinitesimal(3)
    lifted = lift_comonad(t, free_algebra(t.op, 1, 3))
    assert lifted.dim == 7
    assert check_bimodule(lifted).passed
    assert check_bimodule(lift_grouplike(t, 1, 3)).passed


def test_lift_comonad_validates_algebra():
    from entwine.lifts import lift_comonad
    from exactla import PreconditionError
    from opcore.algebras import AlgebraObject, free_algebra
    from shell.library import build_infinitesimal

    t = build_infinitesimal(3)
    alg = free_algebra(t.op, 1, 3)
    broken = AlgebraObject(alg.operad, alg.space, alg.trunc, alg.action.scale(2), name="broken")
    with pytest.raises(PreconditionError):
        lift_comonad(t, broken)


def test_lifted_monad_on_a_cofree_coalgebra():
    from entwine.lifts import lift_monad
    from opcore.algebras import check_coalgebra, cofree_coalgebra
    from rigidity.bimodule import check_bimodule
    from shell.library import build_infinitesimal

    t = build_infinitesimal(3)
    lifted = lift_monad(t, cofree_coalgebra(t.co, 1, 3))
    assert lifted.dim == 7
    assert check_coalgebra(lifted.coalgebra).passed
    assert check_bimodule(lifted).passed


def test_lift_monad_validates_coalgebra():
    from entwine.lifts import lift_monad
    from exactla import PreconditionError
    from opcore.algebras import CoalgebraObject, cofree_coalgebra
    from shell.library import build_infinitesimal

    t = build_infinitesimal(3)
    coalg = cofree_coalgebra(t.co, 1, 3)
    broken = CoalgebraObject(coalg.cooperad, coalg.space, coalg.trunc, coalg.coaction.scale(2), name="broken")
    with pytest.raises(PreconditionError):
        lift_monad(t, broken)


def test_lift_along_corrupted_lambda_breaks_the_counit():
    """lambda_2 = id sends a_1(c_2) to c_1(a_2), which the counit of the lift keeps."""
    from entwine.lifts import lift_monad
    from opcore.algebras import check_coalgebra, cofree_coalgebra
    from shell.library import build_infinitesimal, corrupt_lambda

    t = build_infinitesimal(3)
    lifted = lift_monad(corrupt_lambda(t), cofree_coalgebra(t.co, 1, 3))
    report = check_coalgebra(lifted.coalgebra)
    assert not report.axiom_passed("counit")
    assert report.first_witness() is not None
