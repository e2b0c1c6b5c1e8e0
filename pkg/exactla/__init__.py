"""Exact rational linear algebra."""

from exactla.errors import AlgebraError, ModeMismatchError, PreconditionError, ShapeError
from exactla.linear_map import (
    ImageFactorization,
    LinearMap,
    SolveResult,
    equalizer,
    idempotent_image,
    image_basis,
    inclusion_from_vectors,
    inverse,
    is_isomorphism,
    kernel_basis,
    rank,
    same_column_space,
    solve,
    solve_with_certificate,
)
from exactla.matrix import Matrix, rref
from exactla.rational import ONE, ZERO, Rational, format_rational, parse_rational, to_rational

__all__ = [
    "AlgebraError",
    "ImageFactorization",
    "LinearMap",
    "Matrix",
    "ModeMismatchError",
    "ONE",
    "PreconditionError",
    "Rational",
    "ShapeError",
    "SolveResult",
    "ZERO",
    "equalizer",
    "format_rational",
    "idempotent_image",
    "image_basis",
    "inclusion_from_vectors",
    "inverse",
    "is_isomorphism",
    "kernel_basis",
    "parse_rational",
    "rank",
    "rref",
    "same_column_space",
    "solve",
    "solve_with_certificate",
    "to_rational",
]
