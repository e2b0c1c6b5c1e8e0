"""Sparse coordinate vectors used while assembling structure matrices column by column."""

from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from exactla import Matrix

SparseVector = Dict[int, Fraction]
Terms = Sequence[Tuple[int, Fraction]]


def accumulate(target: Dict, source: Dict, scale: Fraction = Fraction(1)) -> Dict:
    for key, value in source.items():
        total = target.get(key, 0) + scale * value
        if total:
            target[key] = total
        else:
            target.pop(key, None)
    return target


def add_term(target: Dict, key, value: Fraction):
    total = target.get(key, 0) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def tensor_terms(factors: Sequence[Terms]) -> Iterator[Tuple[Tuple[int, ...], Fraction]]:
    """Expand a tensor product of sparse vectors into (index tuple, coefficient) pairs."""
    if not factors:
        yield (), Fraction(1)
        return
    for combo in product(*factors):
        coeff = Fraction(1)
        for _, value in combo:
            coeff *= value
        if coeff:
            yield tuple(index for index, _ in combo), coeff


def columns_to_matrix(columns: List[SparseVector], rows: int) -> Matrix:
    items: Iterable = ((i, j, value) for j, col in enumerate(columns) for i, value in col.items())
    return Matrix.from_sparse(rows, len(columns), items)


def matrix_column(matrix: Matrix, j: int) -> Terms:
    return matrix.column_items(j)


def unit_terms(index: int) -> Terms:
    return ((index, Fraction(1)),)
