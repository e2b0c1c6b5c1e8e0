"""Tests for the corpus, the oracles and the acceptance suite."""

import pytest


# ============================================================================
# Corpus
# ============================================================================

def test_perturbations_are_seeded():
    from evaluation.corpus import lambda_perturbations
    from shell.library import build_infinitesimal

    t = build_infinitesimal(3)
    first = [p.name for p in lambda_perturbations(t, 5, seed=11)]
    second = [p.name for p in lambda_perturbations(t, 5, seed=11)]
    assert first == second
    assert len(set(first)) == 5


def test_corpus_never_shrinks_below_ten_perturbations():
    from evaluation.corpus import build_corpus

    corpus = build_corpus(3, count=2, seed=5)
    # identity, infinitesimal, the perturbations and the vanishing lambda block
    assert len(corpus.triples) == 13
    assert len(corpus.bialgebras) == 3
    assert len(corpus.corrupted) == 5


def test_corrupted_fixtures_are_caught_and_refused():
    from data.schemas import RigidityVerdict
    from evaluation.corpus import corrupted_fixtures
    from rigidity.verify import rigidity_verify

    fixtures = corrupted_fixtures(3)
    assert [f.part for f in fixtures] == ["λ", "m", "δ", "e", "θ"]
    for fixture in fixtures:
        report = fixture.check()
        assert not report.passed, fixture.part
        assert report.first_witness() is not None, fixture.part
        verdict = rigidity_verify(fixture.bialgebra, refuse_quietly=True)
        assert verdict.verdict == RigidityVerdict.REFUSED, fixture.part


def test_corrupted_fixtures_need_arity_three():
    from evaluation.corpus import corrupted_fixtures

    with pytest.raises(ValueError):
        corrupted_fixtures(2)


def test_degenerate_lambda_makes_phi_singular():
    from evaluation.corpus import degenerate_lambda
    from rigidity.morphisms import phi_report
    from shell.library import build_infinitesimal

    t = degenerate_lambda(build_infinitesimal(3))
    report = phi_report(t)
    assert not report.h2iso
    assert report.matrices["φ_2"] == [["0"]]
    assert report.matrices["φ_3"] == [["1"]]
    with pytest.raises(ValueError):
        degenerate_lambda(t, arity=4)


def test_corrupted_coaction_with_two_generators():
    from evaluation.corpus import corrupt_coaction
    from rigidity.bimodule import check_bimodule
    from rigidity.comparison import comparison_K
    from shell.library import build_infinitesimal

    b = corrupt_coaction(comparison_K(build_infinitesimal(3), 2, 3))
    report = check_bimodule(b)
    assert not report.axiom_passed("pentagon")


# ============================================================================
# Oracles
# ============================================================================

def test_sympy_rank_oracle():
    from evaluation.oracles import sympy_rank

    assert sympy_rank([[1, 2], [2, 4]]) == 1
    assert sympy_rank([]) == 0


def test_plethysm_oracle_known_values():
    from evaluation.oracles import plethysm_dim
    from species.builtins import as_sequence, com_sequence

    assert [plethysm_dim(as_sequence(4), as_sequence(4), n) for n in range(1, 5)] == [1, 2, 4, 8]
    assert [plethysm_dim(com_sequence(4), com_sequence(4), n) for n in range(1, 5)] == [1, 2, 5, 15]


# ============================================================================
# Acceptance suite
# ============================================================================

def test_acceptance_suite_subset():
    from evaluation.acceptance import AcceptanceSuite

    suite = AcceptanceSuite(max_arity=3, end_to_end_cases=((1, 3), (2, 3)), seed=2)
    summary = suite.run(only=["infinitesimal_end_to_end", "antipode", "plethysm_oracle",
                              "equalizer_oracle", "coherence"])
    assert summary.total == 5
    assert summary.failed == 0, summary.details
    assert summary.pass_rate == 1.0


def test_acceptance_suite_corpus_criteria():
    from evaluation.acceptance import AcceptanceSuite

    suite = AcceptanceSuite(max_arity=3, seed=4)
    for criterion in (suite.implications, suite.isomorphism_criteria, suite.negative_controls):
        passed, detail = criterion()
        assert passed, detail


def test_isomorphism_criteria_need_a_singular_phi():
    from evaluation.acceptance import AcceptanceSuite
    from evaluation.corpus import Corpus
    from shell.library import build_infinitesimal

    suite = AcceptanceSuite(max_arity=3, seed=4)
    passed, detail = suite.isomorphism_criteria()
    assert passed, detail
    assert "singular φ" in detail

    suite._corpus = Corpus(triples={"infinitesimal": build_infinitesimal(3)})
    passed, detail = suite.isomorphism_criteria()
    assert not passed
    assert "no triple with a singular φ" in detail
