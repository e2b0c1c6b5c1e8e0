"""Tests for permutations, symmetric sequences, plethysm and Schur functors."""

import pytest


# ============================================================================
# Permutations
# ============================================================================

def test_reduced_word_reproduces_every_permutation():
    """The word multiplies back to the permutation and has inversion-count length."""
    from species.permutations import adjacent, all_perms, compose, identity_perm, reduced_word

    for p in all_perms(4):
        product = identity_perm(4)
        for i in reduced_word(p):
            product = compose(product, adjacent(4, i))
        assert product == p
        inversions = sum(1 for a in range(4) for b in range(a + 1, 4) if p[a] > p[b])
        assert len(reduced_word(p)) == inversions


def test_compose_is_right_to_left():
    from species.permutations import compose, inverse_perm

    p = (1, 2, 0)
    q = (0, 2, 1)
    assert compose(p, q) == (1, 0, 2)
    assert compose(p, inverse_perm(p)) == (0, 1, 2)


def test_adjacent_out_of_range():
    from species.permutations import adjacent

    with pytest.raises(ValueError):
        adjacent(3, 3)


def test_sorting_perm_and_stabilizer():
    from species.permutations import act_on_word, sorting_perm, stabilizer

    word = ("b", "a", "b")
    rep, sigma = sorting_perm(word)
    assert rep == ("a", "b", "b")
    assert act_on_word(sigma, rep) == word
    assert len(stabilizer(rep)) == 2


def test_counting_helpers():
    from species.permutations import compositions, restricted_growth_strings, rgs_relabel, surjections

    assert compositions(4, 2) == ((1, 3), (2, 2), (3, 1))
    assert len(surjections(3, 2)) == 6
    assert restricted_growth_strings(3, 2) == ((0, 0, 1), (0, 1, 0), (0, 1, 1))
    _, relabelled = rgs_relabel((1, 0, 1))
    assert relabelled == (0, 1, 0)


# ============================================================================
# Sequences
# ============================================================================

def test_builtin_sequences_satisfy_coxeter_relations():
    from species.builtins import com_sequence, regular_sequence, sign_sequence
    from species.sequence import check_relations

    for seq in (com_sequence(4), sign_sequence(4), regular_sequence(4, 3)):
        assert check_relations(seq).passed
    assert regular_sequence(4, 3).dim(3) == 6


def test_bad_generator_is_reported():
    from exactla import Matrix
    from species.sequence import SequenceMode, check_relations, make_sequence

    seq = make_sequence([1, 1], SequenceMode.SYMMETRIC, [[], [Matrix.from_rows([[2]])]], name="Bad")
    report = check_relations(seq)
    assert not report.passed
    assert not report.axiom_passed("involution")
    assert report.axiom_passed("invertible")
    assert report.first_witness() == "s_1"


def test_sequence_construction_errors():
    from exactla import PreconditionError, ShapeError
    from species.sequence import SequenceMode, make_sequence

    with pytest.raises(ShapeError):
        make_sequence([1, 2], SequenceMode.SYMMETRIC)
    with pytest.raises(PreconditionError):
        make_sequence([2, 1], SequenceMode.NONSYMMETRIC)


def test_nonsymmetric_action_only_for_identity():
    from exactla import Matrix, ModeMismatchError
    from species.builtins import as_sequence

    seq = as_sequence(3)
    assert seq.action((0, 1)) == Matrix.identity(1)
    with pytest.raises(ModeMismatchError):
        seq.action((1, 0))


# ============================================================================
# Plethysm
# ============================================================================

def test_as_plethysm_dimensions_and_labels():
    from species.builtins import as_sequence
    from species.plethysm import plethysm

    seq = as_sequence(4)
    composite, index = plethysm(seq, seq)
    assert list(composite.dims) == [1, 2, 4, 8]
    assert [label.render() for label in index.labels_at(2)] == ["(1;(2))", "(2;(1,1))"]
    assert [label.render() for label in index.labels_at(3)] == ["(1;(3))", "(2;(1,2))", "(2;(2,1))", "(3;(1,1,1))"]


def test_com_plethysm_gives_bell_numbers():
    from species.builtins import com_sequence
    from species.plethysm import plethysm
    from species.sequence import check_relations

    seq = com_sequence(4)
    composite, _ = plethysm(seq, seq)
    assert list(composite.dims) == [1, 2, 5, 15]
    assert check_relations(composite).passed


def test_plethysm_is_memoized():
    from species.builtins import as_sequence
    from species.plethysm import plethysm

    seq = as_sequence(3)
    assert plethysm(seq, seq)[0] is plethysm(seq, seq)[0]


def test_plethysm_refuses_mixed_modes():
    from exactla import ModeMismatchError
    from species.builtins import as_sequence, com_sequence
    from species.plethysm import plethysm

    with pytest.raises(ModeMismatchError):
        plethysm(as_sequence(3), com_sequence(3))


def test_plethysm_matches_brute_force_oracle():
    """Orbit counting on the ordered model agrees with the canonical basis."""
    from evaluation.oracles import plethysm_dim
    from species.builtins import com_sequence, regular_sequence, sign_sequence
    from species.plethysm import plethysm

    n = 4
    for outer, inner in [
        (com_sequence(n), sign_sequence(n)),
        (sign_sequence(n), com_sequence(n)),
        (regular_sequence(n, 2), com_sequence(n)),
    ]:
        composite, _ = plethysm(outer, inner)
        for k in range(1, n + 1):
            assert composite.dim(k) == plethysm_dim(outer, inner, k)


# ============================================================================
# Monoidal structure
# ============================================================================

def test_associator_inverse_round_trip():
    from species.builtins import com_sequence
    from species.monoidal import associator, associator_inverse
    from species.morphism import SeqMorphism

    seq = com_sequence(3)
    forward = associator(seq, seq, seq)
    back = associator_inverse(seq, seq, seq)
    assert (back @ forward).same_matrices(SeqMorphism.identity(forward.source))


def test_pentagon_and_triangle():
    from species.builtins import as_sequence, com_sequence, sign_sequence
    from species.monoidal import check_coherence

    assert check_coherence(*(as_sequence(4),) * 4).passed
    com, sgn = com_sequence(3), sign_sequence(3)
    report = check_coherence(com, sgn, com, sgn)
    assert report.passed
    assert report.axiom_passed("pentagon") and report.axiom_passed("triangle")


def test_compare_reports_witness_label():
    from species.builtins import as_sequence
    from species.morphism import SeqMorphism, compare

    seq = as_sequence(3)
    entries = compare(SeqMorphism.identity(seq), SeqMorphism.zero(seq, seq), "identity")
    assert [entry.passed for entry in entries] == [False, False, False]
    assert entries[1].witness_label == "mu_2"


def test_equivariance_on_the_regular_representation():
    from exactla import Matrix
    from species.builtins import regular_sequence
    from species.morphism import SeqMorphism, check_equivariant

    reg = regular_sequence(2, 2)
    swap = SeqMorphism.identity(reg).with_block(2, Matrix.from_rows([[0, 1], [1, 0]]), name="swap")
    assert check_equivariant(swap).passed

    skew = SeqMorphism.identity(reg).with_block(2, Matrix.from_rows([[1, 0], [0, 2]]), name="skew")
    report = check_equivariant(skew)
    assert not report.passed
    assert report.failures()[0].arity == 2
    assert report.first_witness() == "s_1"


def test_equivariance_on_a_symmetric_composite():
    from exactla import Matrix
    from species.builtins import com_sequence, regular_sequence
    from species.monoidal import associator
    from species.morphism import SeqMorphism, check_equivariant
    from species.plethysm import plethysm

    com, reg = com_sequence(2), regular_sequence(2, 2)
    assert check_equivariant(associator(reg, com, reg)).passed

    composite, _ = plethysm(com, reg)
    # two labels (1;(2)) swapped by s_1, then the fixed label (2;(1,1))
    assert composite.dim(2) == 3
    skew = SeqMorphism.identity(composite).with_block(
        2, Matrix.from_rows([[2, 0, 0], [0, 1, 0], [0, 0, 1]]), name="skew")
    report = check_equivariant(skew)
    assert not report.passed
    assert report.first_witness() == "s_1"


def test_equivariance_needs_symmetric_sequences():
    from exactla import ModeMismatchError
    from species.builtins import as_sequence
    from species.morphism import SeqMorphism, check_equivariant

    with pytest.raises(ModeMismatchError):
        check_equivariant(SeqMorphism.identity(as_sequence(2)))


# ============================================================================
# Schur functors
# ============================================================================

def test_schur_dimensions():
    from species.builtins import as_sequence, com_sequence, sign_sequence
    from species.schur import schur_evaluate

    assert schur_evaluate(as_sequence(3), 2, 3).dim == 2 + 4 + 8
    # symmetric powers and exterior powers of a plane
    assert schur_evaluate(com_sequence(3), 2, 3).dim == 2 + 3 + 4
    assert schur_evaluate(sign_sequence(3), 2, 3).dim == 2 + 1 + 0


def test_schur_respects_weights():
    from species.builtins import as_sequence
    from species.schur import GradedSpace, schur_evaluate

    space = schur_evaluate(as_sequence(3), GradedSpace(2, (1, 2)), 3)
    assert space.dim == 6
    assert max(space.space.weights) == 3
    assert len(space.indices_of_arity(3)) == 1


def test_schur_truncation_beyond_sequence():
    from exactla import PreconditionError
    from species.builtins import as_sequence
    from species.schur import schur_evaluate

    with pytest.raises(PreconditionError):
        schur_evaluate(as_sequence(2), 1, 3)


def test_graded_space_rejects_bad_weights():
    from exactla import ShapeError
    from species.schur import GradedSpace

    with pytest.raises(ShapeError):
        GradedSpace(2, (1,))
    with pytest.raises(ShapeError):
        GradedSpace(1, (0,))


def test_evaluate_map_respects_horizontal_composition():
    """Evaluating f o g agrees with F_f followed by F_M'(F_g) across the regrouping maps."""
    from opcore.structures import canonical_unit
    from species.builtins import as_sequence
    from species.monoidal import hcompose
    from species.morphism import SeqMorphism
    from species.schur import apply_functor, eval_compose_iso, evaluate_map, schur_evaluate

    seq = as_sequence(3)
    f = SeqMorphism.identity(seq).scale(2)
    g = canonical_unit(seq)
    unit_space = schur_evaluate(g.source, 2, 3).space
    seq_space = schur_evaluate(seq, 2, 3).space

    lhs = eval_compose_iso(seq, seq, 2, 3) @ evaluate_map(hcompose(f, g), 2, 3)
    rhs = (
        apply_functor(seq, evaluate_map(g, 2, 3), unit_space, seq_space, 3)
        @ evaluate_map(f, unit_space, 3)
        @ eval_compose_iso(seq, g.source, 2, 3)
    )
    assert lhs == rhs
