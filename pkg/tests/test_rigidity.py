"""Tests for comparison functors, primitives and the rigidity verdict."""

import pytest


# ============================================================================
# Comparison functors and phi
# ============================================================================

def test_K_of_infinitesimal_triple():
    from rigidity.bimodule import check_bimodule
    from rigidity.comparison import comparison_K
    from shell.library import build_infinitesimal

    b = comparison_K(build_infinitesimal(3), 1, 3)
    assert b.dim == 3
    assert b.space.weights == (1, 2, 3)
    assert check_bimodule(b).passed


def test_K_prime_is_a_bimodule():
    from rigidity.bimodule import check_bimodule
    from rigidity.comparison import comparison_K_prime
    from shell.library import build_infinitesimal

    b = comparison_K_prime(build_infinitesimal(3), 1, 3)
    assert b.dim == 3
    assert check_bimodule(b).passed


def test_K_refuses_non_grouplike():
    from exactla import PreconditionError
    from opcore.structures import canonical_unit
    from rigidity.comparison import comparison_K
    from shell.library import build_infinitesimal

    t = build_infinitesimal(3)
    with pytest.raises(PreconditionError):
        comparison_K(t, 1, 3, grouplike=canonical_unit(t.carrier).scale(2))


def test_phi_of_infinitesimal_is_identity():
    from rigidity.morphisms import check_H2iso, phi_report
    from shell.library import build_infinitesimal

    report = phi_report(build_infinitesimal(4))
    assert report.is_identity
    assert report.h2iso
    assert report.matrices["φ_3"] == [["1"]]
    assert check_H2iso(build_infinitesimal(3))


def test_t_is_triangular_and_invertible():
    from exactla import is_isomorphism
    from rigidity.comparison import comparison_K
    from rigidity.morphisms import check_t_triangular, t_morphism, t_on_free_algebra
    from shell.library import build_infinitesimal

    t = build_infinitesimal(3)
    b = comparison_K(t, 2, 3)
    report = check_t_triangular(b)
    assert report.passed
    assert {block.expected for block in report.blocks} == {"phi", "zero"}
    assert is_isomorphism(t_morphism(b))
    assert is_isomorphism(t_on_free_algebra(t, 1, 3))


def test_t_at_trivial_algebra_is_phi():
    from exactla import is_isomorphism
    from rigidity.morphisms import phi_map, t_at_trivial_algebra
    from shell.library import build_infinitesimal
    from species.schur import evaluate_map

    t = build_infinitesimal(3)
    at_trivial = t_at_trivial_algebra(t, 2, 3)
    assert at_trivial == evaluate_map(phi_map(t), 2, 3)
    assert is_isomorphism(at_trivial)


def test_singular_phi_shows_up_at_the_trivial_algebra():
    """With phi_2 = 0, t on (V, eps_V) equals phi_V and is not invertible."""
    from evaluation.corpus import degenerate_lambda
    from exactla import is_isomorphism
    from rigidity.morphisms import check_H2iso, phi_map, t_at_trivial_algebra
    from shell.library import build_infinitesimal
    from species.schur import evaluate_map

    t = degenerate_lambda(build_infinitesimal(3))
    at_trivial = t_at_trivial_algebra(t, 2, 3)
    assert at_trivial == evaluate_map(phi_map(t), 2, 3)
    assert not check_H2iso(t)
    assert not is_isomorphism(at_trivial)


def test_phi_flags_lambda_scaled_in_one_arity():
    from rigidity.comparison import comparison_K
    from rigidity.morphisms import phi_report
    from rigidity.verify import rigidity_verify
    from shell.library import build_infinitesimal

    t = build_infinitesimal(3)
    doubled = t.with_lambda(t.lam.with_block(2, t.lam.arity(2).scale(2)), name="2λ_2")
    report = phi_report(doubled)
    assert not report.is_identity
    assert report.matrices["φ_2"] == [["2"]]
    # 2 is still invertible; the entwining diagrams are what refuse it
    assert report.h2iso
    verdict = rigidity_verify(comparison_K(doubled, 1, 3, validate=False), refuse_quietly=True)
    assert verdict.failed_hypothesis == "H0"
    assert not verdict.hypotheses["H2iso"]


def test_vanishing_phi_fails_H2iso():
    from evaluation.corpus import degenerate_lambda
    from rigidity.comparison import comparison_K
    from rigidity.verify import hypotheses, rigidity_verify
    from shell.library import build_infinitesimal

    t = degenerate_lambda(build_infinitesimal(3))
    assert not hypotheses(t)["H2iso"]
    report = rigidity_verify(comparison_K(t, 1, 3, validate=False), refuse_quietly=True)
    assert not report.hypotheses["H2iso"]


def test_triangularity_reports_the_offending_block():
    from data.schemas import CheckStatus
    from exactla import ONE, LinearMap, Matrix
    from rigidity.comparison import comparison_K
    from rigidity.morphisms import check_t_triangular, t_morphism
    from shell.library import build_infinitesimal
    from species.schur import schur_evaluate

    b = comparison_K(build_infinitesimal(3), 1, 3)
    t = t_morphism(b)
    free = schur_evaluate(b.entwining.op.carrier, b.space, 3)
    cofree = schur_evaluate(b.entwining.co.carrier, b.space, 3)
    row, col = cofree.indices_of_arity(2)[0], free.indices_of_arity(1)[0]
    bump = LinearMap.from_matrix(Matrix.from_sparse(t.codomain_dim, t.domain_dim, [(row, col, ONE)]))

    report = check_t_triangular(b, t + bump)
    assert not report.passed
    failing = [block for block in report.blocks if block.status == CheckStatus.FAIL]
    assert [(blk.source_arity, blk.target_arity, blk.expected) for blk in failing] == [(1, 2, "zero")]
    assert failing[0].witness_label is not None


# ============================================================================
# Primitives
# ============================================================================

def test_primitives_of_K_are_the_generators():
    from rigidity.comparison import comparison_K
    from rigidity.primitives import primitives, primitives_report
    from shell.library import build_infinitesimal

    t = build_infinitesimal(3)
    for dim in (1, 2):
        b = comparison_K(t, dim, 3)
        prim = primitives(b)
        assert prim.dim == dim
        assert set(prim.space.weights) == {1}
        report = primitives_report(b, prim)
        assert report.prim_dim == dim
        assert report.space_dim == b.dim


def test_primitives_of_identity_triple():
    from rigidity.comparison import comparison_K
    from rigidity.primitives import primitives
    from shell.library import build_identity_triple

    b = comparison_K(build_identity_triple(2), 2, 2)
    assert b.dim == 2
    assert primitives(b).dim == 2


def test_primitives_need_a_bimodule():
    from evaluation.corpus import corrupt_coaction
    from exactla import PreconditionError
    from rigidity.comparison import comparison_K
    from rigidity.primitives import primitives
    from shell.library import build_infinitesimal

    b = corrupt_coaction(comparison_K(build_infinitesimal(3), 1, 3))
    with pytest.raises(PreconditionError):
        primitives(b)


# ============================================================================
# Rigidity
# ============================================================================

def test_rigidity_passes_on_K():
    from data.schemas import RigidityVerdict
    from rigidity.comparison import comparison_K
    from rigidity.verify import rigidity_verify
    from shell.library import build_infinitesimal

    report = rigidity_verify(comparison_K(build_infinitesimal(3), 2, 3))
    assert report.verdict == RigidityVerdict.PASS
    assert report.prim_dim == 2
    assert report.reconstruction.invertible
    assert report.reconstruction.algebra_morphism
    assert report.reconstruction.coalgebra_morphism
    assert report.unit_direction
    assert all(report.hypotheses.values())


def test_rigidity_survives_change_of_basis():
    import numpy as np

    from data.schemas import RigidityVerdict
    from evaluation.corpus import random_change_of_basis
    from rigidity.bimodule import check_bimodule, twist_bialgebra
    from rigidity.comparison import comparison_K
    from rigidity.verify import rigidity_verify
    from shell.library import build_infinitesimal

    b = comparison_K(build_infinitesimal(3), 1, 3)
    change = random_change_of_basis(b.space, np.random.default_rng(3))
    twisted = twist_bialgebra(b, change)
    assert check_bimodule(twisted).passed
    assert rigidity_verify(twisted).verdict == RigidityVerdict.PASS


def test_twist_refuses_weight_mixing():
    from exactla import LinearMap, ShapeError
    from rigidity.bimodule import twist_bialgebra
    from rigidity.comparison import comparison_K
    from shell.library import build_infinitesimal

    b = comparison_K(build_infinitesimal(3), 1, 3)
    mixing = LinearMap.from_rows([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(ShapeError):
        twist_bialgebra(b, mixing)


def test_rigidity_refuses_broken_coaction():
    from data.schemas import RigidityVerdict
    from evaluation.corpus import corrupt_coaction
    from rigidity.comparison import comparison_K
    from rigidity.verify import HypothesisError, rigidity_verify
    from shell.library import build_infinitesimal

    b = corrupt_coaction(comparison_K(build_infinitesimal(3), 1, 3))
    with pytest.raises(HypothesisError) as excinfo:
        rigidity_verify(b)
    assert excinfo.value.hypothesis == "bimodule"
    assert excinfo.value.report.verdict == RigidityVerdict.REFUSED

    quiet = rigidity_verify(b, refuse_quietly=True)
    assert quiet.failed_hypothesis == "bimodule"


def test_rigidity_refuses_when_entwining_fails():
    from data.schemas import RigidityVerdict
    from rigidity.comparison import comparison_K
    from rigidity.verify import HypothesisError, hypotheses, rigidity_verify
    from shell.library import build_infinitesimal, corrupt_lambda

    broken = corrupt_lambda(build_infinitesimal(3))
    report = rigidity_verify(comparison_K(broken, 1, 3, validate=False), refuse_quietly=True)
    assert report.verdict == RigidityVerdict.REFUSED
    assert report.failed_hypothesis == "H0"
    assert not hypotheses(broken)["H0"]
    with pytest.raises(HypothesisError) as excinfo:
        rigidity_verify(comparison_K(broken, 1, 3, validate=False))
    assert excinfo.value.hypothesis == "H0"
