"""Dense exact matrices over the rationals."""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from exactla.errors import ShapeError
from exactla.rational import ONE, ZERO, RationalLike, format_rational, to_rational

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class Matrix:
    """Immutable rows x cols grid of Fractions stored row-major."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError(f"negative matrix shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"matrix {self.rows}x{self.cols} needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: int = None) -> "Matrix":
        """
        Build a matrix from nested rows.

        Args:
            rows: Row-major nested sequence of ints, Fractions or "p/q" strings
            cols: Column count, required only when there are no rows

        Returns:
            The matrix
        """
        n_rows = len(rows)
        if n_rows == 0:
            return cls(0, cols or 0, ())
        n_cols = len(rows[0])
        if cols is not None and cols != n_cols:
            raise ShapeError(f"declared {cols} columns but rows have {n_cols}")
        entries: List[Fraction] = []
        for row in rows:
            if len(row) != n_cols:
                raise ShapeError("ragged rows in matrix literal")
            entries.extend(to_rational(x) for x in row)
        return cls(n_rows, n_cols, tuple(entries))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], rows: int) -> "Matrix":
        entries = [ZERO] * (rows * len(columns))
        n_cols = len(columns)
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise ShapeError(f"column {j} has length {len(column)}, expected {rows}")
            for i, value in enumerate(column):
                if value:
                    entries[i * n_cols + j] = to_rational(value)
        return cls(rows, n_cols, tuple(entries))

    @classmethod
    def from_sparse(cls, rows: int, cols: int, items: Iterable[Tuple[int, int, Fraction]]) -> "Matrix":
        """Assemble from (row, col, value) triples; repeated positions are summed."""
        entries = [ZERO] * (rows * cols)
        for i, j, value in items:
            if not (0 <= i < rows and 0 <= j < cols):
                raise ShapeError(f"entry ({i},{j}) outside {rows}x{cols}")
            entries[i * cols + j] += value
        return cls(rows, cols, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        entries = [ZERO] * (n * n)
        for i in range(n):
            entries[i * n + i] = ONE
        return cls(n, n, tuple(entries))

    @classmethod
    def block_diagonal(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        items = []
        r0 = c0 = 0
        for block in blocks:
            for i, j, value in block.nonzero_items():
                items.append((r0 + i, c0 + j, value))
            r0 += block.rows
            c0 += block.cols
        return cls.from_sparse(rows, cols, items)

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i},{j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_strings(self) -> List[List[str]]:
        return [[format_rational(x) for x in self.row(i)] for i in range(self.rows)]

    @cached_property
    def _sparse_rows(self) -> Tuple[Tuple[Tuple[int, Fraction], ...], ...]:
        return tuple(
            tuple((j, x) for j, x in enumerate(self.row(i)) if x)
            for i in range(self.rows)
        )

    @cached_property
    def _sparse_cols(self) -> Tuple[Tuple[Tuple[int, Fraction], ...], ...]:
        cols = [[] for _ in range(self.cols)]
        for i, row in enumerate(self._sparse_rows):
            for j, x in row:
                cols[j].append((i, x))
        return tuple(tuple(c) for c in cols)

    def column_items(self, j: int) -> Tuple[Tuple[int, Fraction], ...]:
        """Nonzero (row, value) pairs of column j."""
        return self._sparse_cols[j]

    def nonzero_items(self) -> Iterable[Tuple[int, int, Fraction]]:
        for i, row in enumerate(self._sparse_rows):
            for j, value in row:
                yield i, j, value

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "Matrix":
        entries = tuple(self.entries[i * self.cols + j] for i in row_indices for j in col_indices)
        return Matrix(len(row_indices), len(col_indices), entries)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _check_same_shape(self, other: "Matrix", op: str):
        if self.shape != other.shape:
            raise ShapeError(f"cannot {op} {self.rows}x{self.cols} and {other.rows}x{other.cols}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other, "add")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other, "subtract")
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, factor: RationalLike) -> "Matrix":
        c = to_rational(factor)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        right = other._sparse_rows
        n = other.cols
        out = [ZERO] * (self.rows * n)
        for i, row in enumerate(self._sparse_rows):
            acc = {}
            for k, a in row:
                for j, b in right[k]:
                    acc[j] = acc.get(j, ZERO) + a * b
            base = i * n
            for j, value in acc.items():
                out[base + j] = value
        return Matrix(self.rows, n, tuple(out))

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        if len(vector) != self.cols:
            raise ShapeError(f"vector of length {len(vector)} against {self.cols} columns")
        return tuple(
            sum((a * vector[j] for j, a in row), ZERO) for row in self._sparse_rows
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ShapeError(f"hstack of {self.rows} and {other.rows} rows")
        rows = [self.row(i) + other.row(i) for i in range(self.rows)]
        return Matrix(self.rows, self.cols + other.cols, tuple(x for r in rows for x in r))

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ShapeError(f"vstack of {self.cols} and {other.cols} columns")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def kron(self, other: "Matrix") -> "Matrix":
        items = []
        for i, j, a in self.nonzero_items():
            for k, l, b in other.nonzero_items():
                items.append((i * other.rows + k, j * other.cols + l, a * b))
        return Matrix.from_sparse(self.rows * other.rows, self.cols * other.cols, items)

    def first_difference(self, other: "Matrix") -> Tuple[int, int]:
        """Return the (row, col) of the first differing entry in column-major order, or (-1, -1)."""
        self._check_same_shape(other, "compare")
        for j in range(self.cols):
            for i in range(self.rows):
                if self.entries[i * self.cols + j] != other.entries[i * self.cols + j]:
                    return i, j
        return -1, -1

    def is_monomial(self) -> bool:
        """True when every row and column holds exactly one nonzero entry."""
        if not self.is_square():
            return False
        seen_cols = set()
        for row in self._sparse_rows:
            if len(row) != 1:
                return False
            seen_cols.add(row[0][0])
        return len(seen_cols) == self.cols

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, {self.to_strings()})"


def _to_domain(m: Matrix) -> DomainMatrix:
    rows = [[QQ(x.numerator, x.denominator) for x in m.row(i)] for i in range(m.rows)]
    return DomainMatrix(rows, (m.rows, m.cols), QQ)


def _from_sympy_rational(x) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def rref(m: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    """
    Reduced row echelon form.

    Args:
        m: Any matrix

    Returns:
        (reduced matrix, strictly increasing pivot columns)
    """
    if m.rows == 0 or m.cols == 0 or m.is_zero():
        return Matrix.zeros(m.rows, m.cols), ()
    reduced, pivots = _to_domain(m).rref()
    values = reduced.to_Matrix()
    entries = tuple(_from_sympy_rational(values[i, j]) for i in range(m.rows) for j in range(m.cols))
    return Matrix(m.rows, m.cols, entries), tuple(int(p) for p in pivots)
