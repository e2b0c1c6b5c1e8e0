"""Tests for the exact rational linear algebra layer."""

from fractions import Fraction

import pytest


# ============================================================================
# Rationals and matrices
# ============================================================================

def test_rational_literals():
    """Strings, ints and Fractions coerce exactly; floats are refused."""
    from exactla import format_rational, parse_rational, to_rational

    assert parse_rational(" 3/4 ") == Fraction(3, 4)
    assert to_rational("-2") == Fraction(-2)
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(6, 3)) == "2"
    with pytest.raises(ValueError):
        parse_rational("0.5")
    with pytest.raises(TypeError):
        to_rational(0.5)


def test_matrix_construction_and_shape_errors():
    from exactla import Matrix, ShapeError

    m = Matrix.from_rows([[1, "1/2"], [0, 3]])
    assert m.shape == (2, 2)
    assert m[0, 1] == Fraction(1, 2)
    assert m.to_strings() == [["1", "1/2"], ["0", "3"]]
    assert Matrix.from_rows([], cols=4).shape == (0, 4)

    with pytest.raises(ShapeError):
        Matrix.from_rows([[1, 2], [3]])
    with pytest.raises(ShapeError):
        m @ Matrix.zeros(3, 1)


def test_matrix_products_and_stacks():
    from exactla import Matrix

    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).to_rows() == [[2, 1], [4, 3]]
    assert a.transpose().to_rows() == [[1, 3], [2, 4]]
    assert a.hstack(b).shape == (2, 4)
    assert a.vstack(b).shape == (4, 2)
    assert Matrix.identity(2).kron(a).shape == (4, 4)
    assert Matrix.block_diagonal([a, Matrix.identity(1)]).to_rows() == [[1, 2, 0], [3, 4, 0], [0, 0, 1]]


def test_first_difference_is_column_major():
    from exactla import Matrix

    a = Matrix.from_rows([[1, 0], [0, 1]])
    b = Matrix.from_rows([[1, 5], [7, 1]])
    assert a.first_difference(b) == (1, 0)
    assert a.first_difference(a) == (-1, -1)


def test_rref_pivots():
    from exactla import Matrix, rref

    reduced, pivots = rref(Matrix.from_rows([[2, 4, 1], [1, 2, 0]]))
    assert pivots == (0, 2)
    assert reduced.to_rows() == [[1, 2, 0], [0, 0, 1]]


# ============================================================================
# Linear maps
# ============================================================================

def test_rank_kernel_and_image():
    from exactla import LinearMap, image_basis, kernel_basis, rank

    f = LinearMap.from_rows([[1, 2, 3], [2, 4, 6]])
    assert rank(f) == 1
    kernel = kernel_basis(f)
    assert len(kernel) == 2
    for v in kernel:
        assert all(x == 0 for x in f.apply(v))
    assert image_basis(f) == [(Fraction(1), Fraction(2))]


def test_inverse_exact_and_monomial():
    from exactla import LinearMap, inverse

    f = LinearMap.from_rows([[2, 1], [1, 1]])
    inv = inverse(f)
    assert inv.matrix.to_rows() == [[1, -1], [-1, 2]]
    assert (f @ inv) == LinearMap.identity(2)

    monomial = LinearMap.from_rows([[0, 3], [2, 0]])
    assert (inverse(monomial) @ monomial) == LinearMap.identity(2)


def test_inverse_of_singular_map_raises():
    from exactla import LinearMap, PreconditionError, inverse, is_isomorphism

    f = LinearMap.from_rows([[1, 1], [1, 1]])
    assert not is_isomorphism(f)
    with pytest.raises(PreconditionError):
        inverse(f)


def test_solve_returns_rref_particular_solution():
    from exactla import LinearMap, solve

    f = LinearMap.from_rows([[1, 1, 0], [0, 0, 1]])
    assert solve(f, [Fraction(2), Fraction(5)]) == (Fraction(2), Fraction(0), Fraction(5))


def test_inconsistent_system_carries_rank_certificate():
    from exactla import LinearMap, solve_with_certificate

    f = LinearMap.from_rows([[1, 1], [1, 1]])
    result = solve_with_certificate(f, [Fraction(1), Fraction(2)])
    assert result.solution is None
    assert result.coefficient_rank == 1
    assert result.augmented_rank == 2


def test_equalizer_is_maximal():
    from exactla import LinearMap, equalizer

    f = LinearMap.identity(3)
    g = LinearMap.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 1]])
    inclusion = equalizer(f, g)
    assert inclusion.domain_dim == 2
    assert f @ inclusion == g @ inclusion


def test_equalizer_shape_mismatch():
    from exactla import LinearMap, ShapeError, equalizer

    with pytest.raises(ShapeError):
        equalizer(LinearMap.identity(2), LinearMap.identity(3))


def test_idempotent_image_splits():
    from exactla import LinearMap, idempotent_image

    half = Fraction(1, 2)
    p = LinearMap.from_rows([[half, half], [half, half]])
    split = idempotent_image(p)
    assert split.inclusion.domain_dim == 1
    assert split.projection @ split.inclusion == LinearMap.identity(1)
    assert split.inclusion @ split.projection == p


def test_idempotent_image_refuses_non_idempotent():
    from exactla import LinearMap, PreconditionError, idempotent_image

    with pytest.raises(PreconditionError):
        idempotent_image(LinearMap.from_rows([[2, 0], [0, 1]]))


def test_same_column_space():
    from exactla import LinearMap, same_column_space

    a = LinearMap.from_rows([[1], [1], [0]])
    b = LinearMap.from_rows([[2], [2], [0]])
    c = LinearMap.from_rows([[1], [0], [0]])
    assert same_column_space(a, b)
    assert not same_column_space(a, c)
