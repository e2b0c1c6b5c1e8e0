"""
Brute-force oracles, written against sympy and plain enumeration rather
than the library's own elimination and basis code.
"""

from itertools import product
from typing import List, Sequence, Tuple

import numpy as np
import sympy

from exactla import LinearMap, Matrix
from species.sequence import SymmetricSequence


def sympy_rank(rows: Sequence[Sequence]) -> int:
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix([[sympy.Rational(x) for x in row] for row in rows]).rank()


def _all_surjections(n: int, k: int) -> List[Tuple[int, ...]]:
    return [a for a in product(range(k), repeat=n) if len(set(a)) == k]


def plethysm_dim(outer: SymmetricSequence, inner: SymmetricSequence, n: int) -> int:
    """
    dim (outer o inner)(n) from the ordered model.

    Nonsymmetric: sum over compositions. Symmetric: for each k the model
    over all surjections is divided by the S_k-coinvariant relations
    (g_i - 1)v for the adjacent transpositions g_i.
    """
    total = 0
    for k in range(1, n + 1):
        dim_outer = outer.dim(k)
        if dim_outer == 0:
            continue
        if not outer.symmetric:
            for cut in product((0, 1), repeat=n - 1):
                if sum(cut) != k - 1:
                    continue
                sizes, size = [], 1
                for c in cut:
                    if c:
                        sizes.append(size)
                        size = 1
                    else:
                        size += 1
                sizes.append(size)
                total += dim_outer * int(np.prod([inner.dim(s) for s in sizes]))
            continue
        basis = []
        for a in _all_surjections(n, k):
            sizes = [a.count(j) for j in range(k)]
            for mu in range(dim_outer):
                for nus in product(*(range(inner.dim(s)) for s in sizes)):
                    basis.append((a, mu, nus))
        if not basis:
            continue
        where = {b: i for i, b in enumerate(basis)}
        relations = []
        for i in range(1, k):
            g = outer.generator(k, i)
            swap = {i - 1: i, i: i - 1}
            for a, mu, nus in basis:
                a2 = tuple(swap.get(x, x) for x in a)
                nus2 = list(nus)
                nus2[i - 1], nus2[i] = nus[i], nus[i - 1]
                row = [0] * len(basis)
                for mu2 in range(dim_outer):
                    value = g[mu2, mu]
                    if value:
                        row[where[(a2, mu2, tuple(nus2))]] += value
                row[where[(a, mu, nus)]] -= 1
                relations.append(row)
        total += len(basis) - (sympy_rank(relations) if relations else 0)
    return total


def random_matrix(rng: np.random.Generator, rows: int, cols: int, low: int = -3, high: int = 3) -> Matrix:
    values = rng.integers(low, high + 1, size=(rows, cols))
    return Matrix.from_rows([[int(x) for x in row] for row in values], cols=cols)


def equalizer_is_maximal(f: LinearMap, g: LinearMap, inclusion: LinearMap) -> bool:
    """f.i = g.i, i injective, and dim = n - rank(f - g) by sympy's elimination."""
    if f @ inclusion != g @ inclusion:
        return False
    diff = (f - g).matrix
    expected = f.domain_dim - sympy_rank(diff.to_rows())
    if inclusion.domain_dim != expected:
        return False
    return inclusion.domain_dim == 0 or sympy_rank(inclusion.matrix.to_rows()) == inclusion.domain_dim
