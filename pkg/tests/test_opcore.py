"""Tests for operads, cooperads and their (co)algebras."""

import pytest


# ============================================================================
# Operads and cooperads
# ============================================================================

def test_as_operad_and_deconcatenation():
    from opcore.checks import check_cooperad, check_operad
    from shell.library import build_As_operad, build_deconcat_cooperad

    op = build_As_operad(4)
    co = build_deconcat_cooperad(4)
    assert check_operad(op).passed
    assert check_cooperad(co).passed
    assert op.mult.arity(3).to_strings() == [["1", "1", "1", "1"]]
    assert co.comult.arity(2).to_strings() == [["1"], ["1"]]


def test_com_operad_and_cooperad():
    from opcore.checks import check_cooperad, check_operad
    from shell.library import build_com_cooperad, build_com_operad

    op_report = check_operad(build_com_operad(3))
    assert op_report.passed
    assert any(entry.axiom == "equivariance_mult" for entry in op_report.entries)
    assert check_cooperad(build_com_cooperad(3)).passed


def test_broken_multiplication_fails_unit_law():
    from shell.library import build_As_operad
    from opcore.checks import check_operad

    op = build_As_operad(3)
    broken = op.with_maps(mult=op.mult.scale(2), name="As*2")
    report = check_operad(broken)
    assert not report.passed
    assert not report.axiom_passed("left_unit")
    assert report.first_witness() is not None


def test_multiplication_shape_is_validated():
    from exactla import ShapeError
    from opcore.structures import OperadStructure, canonical_unit
    from shell.library import build_As_operad
    from species.morphism import SeqMorphism

    op = build_As_operad(3)
    with pytest.raises(ShapeError):
        OperadStructure(op.carrier, SeqMorphism.identity(op.carrier), canonical_unit(op.carrier))


def test_augmentation_and_split_unit():
    from opcore.checks import check_augmentation, split_unit_check, unit_is_mono
    from shell.library import build_As_operad

    op = build_As_operad(3)
    assert check_augmentation(op)
    assert split_unit_check(op)
    assert unit_is_mono(op)


def test_grouplike_coaugmentation():
    from opcore.checks import check_grouplike
    from opcore.structures import canonical_unit
    from shell.library import build_deconcat_cooperad

    co = build_deconcat_cooperad(3)
    g = canonical_unit(co.carrier)
    assert check_grouplike(co, g)
    assert not check_grouplike(co, g.scale(2))


# ============================================================================
# Algebras and coalgebras
# ============================================================================

def test_free_algebra_and_cofree_coalgebra():
    from opcore.algebras import check_algebra, check_coalgebra, cofree_coalgebra, free_algebra
    from shell.library import build_As_operad, build_deconcat_cooperad

    alg = free_algebra(build_As_operad(3), 2, 3)
    coalg = cofree_coalgebra(build_deconcat_cooperad(3), 2, 3)
    assert alg.dim == 14
    assert coalg.dim == 14
    assert check_algebra(alg).passed
    assert check_coalgebra(coalg).passed


def test_trivial_structures_on_a_graded_space():
    from opcore.algebras import check_algebra, check_coalgebra, trivial_algebra, trivial_coalgebra
    from shell.library import build_As_operad, build_deconcat_cooperad

    assert check_algebra(trivial_algebra(build_As_operad(3), 2, 3)).passed
    assert check_coalgebra(trivial_coalgebra(build_deconcat_cooperad(3), 2, 3)).passed


def test_broken_action_is_caught_by_weight():
    from exactla import LinearMap, ShapeError
    from opcore.algebras import AlgebraObject, check_algebra, free_algebra
    from shell.library import build_As_operad

    alg = free_algebra(build_As_operad(3), 1, 3)
    broken = AlgebraObject(alg.operad, alg.space, alg.trunc, alg.action.scale(2), name="broken")
    report = check_algebra(broken)
    assert not report.axiom_passed("unit")
    assert report.failures()[0].arity == 1

    with pytest.raises(ShapeError):
        AlgebraObject(alg.operad, alg.space, alg.trunc, LinearMap.identity(alg.dim + 1))
