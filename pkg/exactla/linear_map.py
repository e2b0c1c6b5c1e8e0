"""
Linear maps between coordinate spaces and the row-reduction toolkit built on them.

Kernels, images, equalizers and idempotent images all go through the exact
reduced row echelon form, so every answer is structural: no tolerances.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from exactla.errors import PreconditionError, ShapeError
from exactla.matrix import Matrix, Vector, rref
from exactla.rational import ONE, ZERO


@dataclass(frozen=True)
class LinearMap:
    """A linear map Q^domain_dim -> Q^codomain_dim given by its matrix."""

    domain_dim: int
    codomain_dim: int
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.codomain_dim, self.domain_dim):
            raise ShapeError(
                f"map {self.domain_dim} -> {self.codomain_dim} needs a "
                f"{self.codomain_dim}x{self.domain_dim} matrix, got "
                f"{self.matrix.rows}x{self.matrix.cols}"
            )

    @classmethod
    def from_matrix(cls, matrix: Matrix) -> "LinearMap":
        return cls(matrix.cols, matrix.rows, matrix)

    @classmethod
    def from_rows(cls, rows, domain_dim: int = None) -> "LinearMap":
        return cls.from_matrix(Matrix.from_rows(rows, cols=domain_dim))

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, Matrix.identity(n))

    @classmethod
    def zero(cls, domain_dim: int, codomain_dim: int) -> "LinearMap":
        return cls(domain_dim, codomain_dim, Matrix.zeros(codomain_dim, domain_dim))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        """Composite self . other (other is applied first)."""
        if other.codomain_dim != self.domain_dim:
            raise ShapeError(
                f"cannot compose {self.domain_dim}->{self.codomain_dim} after "
                f"{other.domain_dim}->{other.codomain_dim}"
            )
        return LinearMap(other.domain_dim, self.codomain_dim, self.matrix @ other.matrix)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap.from_matrix(self.matrix + other.matrix)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap.from_matrix(self.matrix - other.matrix)

    def __neg__(self) -> "LinearMap":
        return LinearMap.from_matrix(-self.matrix)

    def scale(self, factor) -> "LinearMap":
        return LinearMap.from_matrix(self.matrix.scale(factor))

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        return self.matrix.apply(vector)

    def column(self, j: int) -> Vector:
        return self.matrix.column(j)

    def restrict(self, domain_indices: Sequence[int], codomain_indices: Sequence[int] = None) -> "LinearMap":
        """Block of the map between chosen coordinate subsets."""
        rows = list(range(self.codomain_dim)) if codomain_indices is None else list(codomain_indices)
        return LinearMap.from_matrix(self.matrix.submatrix(rows, list(domain_indices)))


class ImageFactorization(NamedTuple):
    """p = inclusion . projection with projection . inclusion = id."""

    inclusion: LinearMap
    projection: LinearMap


class SolveResult(NamedTuple):
    solution: Optional[Vector]
    coefficient_rank: int
    augmented_rank: int


def rank(f: LinearMap) -> int:
    return len(rref(f.matrix)[1])


def kernel_basis(f: LinearMap) -> List[Vector]:
    """
    Basis of the null space, one vector per free column of the RREF.

    Args:
        f: Any linear map

    Returns:
        Independent vectors spanning {v : f(v) = 0}
    """
    reduced, pivots = rref(f.matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(f.domain_dim):
        if free in pivot_set:
            continue
        v = [ZERO] * f.domain_dim
        v[free] = ONE
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, free]
        basis.append(tuple(v))
    return basis


def image_basis(f: LinearMap) -> List[Vector]:
    """Pivot columns of the original matrix."""
    _, pivots = rref(f.matrix)
    return [f.matrix.column(p) for p in pivots]


def is_isomorphism(f: LinearMap) -> bool:
    return f.domain_dim == f.codomain_dim and rank(f) == f.domain_dim


def inverse(f: LinearMap) -> LinearMap:
    """
    Two-sided inverse of an isomorphism.

    Monomial matrices (one nonzero per row and column) are inverted directly;
    everything else goes through sympy's exact inverse over QQ.

    Raises:
        PreconditionError: if f is not invertible
    """
    m = f.matrix
    if not m.is_square():
        raise PreconditionError(f"map {f.domain_dim}->{f.codomain_dim} is not square")
    n = m.rows
    if n == 0:
        return f
    if m.is_monomial():
        items = [(j, i, ONE / value) for i, j, value in m.nonzero_items()]
        return LinearMap(n, n, Matrix.from_sparse(n, n, items))
    if not is_isomorphism(f):
        raise PreconditionError("map is not invertible")
    rows = [[QQ(x.numerator, x.denominator) for x in m.row(i)] for i in range(n)]
    inv = DomainMatrix(rows, (n, n), QQ).inv().to_Matrix()
    entries = tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for i in range(n) for j in range(n))
    return LinearMap(n, n, Matrix(n, n, entries))


def solve_with_certificate(f: LinearMap, b: Sequence[Fraction]) -> SolveResult:
    """
    Solve f(x) = b, choosing the RREF particular solution (free variables zero).

    When the system is inconsistent the ranks of the coefficient and the
    augmented matrix are returned so callers can report the defect.
    """
    if len(b) != f.codomain_dim:
        raise ShapeError(f"right-hand side of length {len(b)} against codomain {f.codomain_dim}")
    augmented = f.matrix.hstack(Matrix.from_columns([tuple(b)], f.codomain_dim))
    reduced, pivots = rref(augmented)
    coefficient_pivots = [p for p in pivots if p < f.domain_dim]
    if len(coefficient_pivots) != len(pivots):
        return SolveResult(None, len(coefficient_pivots), len(pivots))
    x = [ZERO] * f.domain_dim
    for i, p in enumerate(pivots):
        x[p] = reduced[i, f.domain_dim]
    return SolveResult(tuple(x), len(pivots), len(pivots))


def solve(f: LinearMap, b: Sequence[Fraction]) -> Optional[Vector]:
    return solve_with_certificate(f, b).solution


def inclusion_from_vectors(vectors: Sequence[Vector], ambient_dim: int) -> LinearMap:
    return LinearMap(len(vectors), ambient_dim, Matrix.from_columns(list(vectors), ambient_dim))


def equalizer(f: LinearMap, g: LinearMap) -> LinearMap:
    """
    Inclusion of {v : f(v) = g(v)}.

    Raises:
        ShapeError: if f and g do not share domain and codomain
    """
    if (f.domain_dim, f.codomain_dim) != (g.domain_dim, g.codomain_dim):
        raise ShapeError(
            f"equalizer of {f.domain_dim}->{f.codomain_dim} and {g.domain_dim}->{g.codomain_dim}"
        )
    return inclusion_from_vectors(kernel_basis(f - g), f.domain_dim)


def idempotent_image(p: LinearMap) -> ImageFactorization:
    """
    Split an idempotent through its image.

    The inclusion is made of the pivot columns of p and the projection of the
    nonzero rows of rref(p); together they satisfy projection . inclusion = id
    and inclusion . projection = p.

    Raises:
        PreconditionError: if p . p != p
    """
    if p.domain_dim != p.codomain_dim:
        raise ShapeError("idempotent must be an endomorphism")
    if (p @ p).matrix != p.matrix:
        raise PreconditionError("map is not idempotent")
    reduced, pivots = rref(p.matrix)
    n = p.domain_dim
    r = len(pivots)
    inclusion = LinearMap(r, n, p.matrix.submatrix(list(range(n)), list(pivots)))
    projection = LinearMap(n, r, reduced.submatrix(list(range(r)), list(range(n))))
    return ImageFactorization(inclusion, projection)


def same_column_space(a: LinearMap, b: LinearMap) -> bool:
    if a.codomain_dim != b.codomain_dim:
        raise ShapeError("column spaces live in different ambient spaces")
    ra, rb = rank(a), rank(b)
    joint = len(rref(a.matrix.hstack(b.matrix))[1])
    return ra == rb == joint
