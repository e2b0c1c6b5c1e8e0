"""
Plethysm of symmetric sequences.

(M o N)(n) is realized on an ordered model whose basis vectors are

    (k; composition; mu in M(k); nu_1..nu_k with nu_j in N(i_j); assignment)

where the assignment is a word of length n over 0..k-1 sending each point
to its block. S_k acts freely on the model by relabelling blocks (and by
rho_M on mu); the true basis keeps the labels whose assignment is a
restricted growth string, one per S_k-orbit. In nonsymmetric mode only the
consecutive assignment occurs and the model is the true basis.

Canonical order: k, then composition, then mu, then the nu's, then the
assignment.
"""

from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

from loguru import logger

from exactla import Matrix
from species.permutations import (
    Perm,
    adjacent,
    all_perms,
    block_points,
    block_reordering,
    compositions,
    consecutive_assignment,
    identity_perm,
    inverse_perm,
    restricted_growth_strings,
    rgs_relabel,
    surjections,
)
from species.sequence import SequenceMode, SymmetricSequence, require_same_mode
from species.sparse import SparseVector, add_term, columns_to_matrix, tensor_terms


class PlethysmLabel(NamedTuple):
    k: int
    composition: Tuple[int, ...]
    mu: int
    nus: Tuple[int, ...]
    assignment: Tuple[int, ...]

    def render(self) -> str:
        text = f"({self.k};({','.join(str(i) for i in self.composition)}))"
        if self.mu or any(self.nus):
            text += f"[{self.mu};{','.join(str(v) for v in self.nus)}]"
        if self.assignment != consecutive_assignment(self.composition):
            text += "<" + "".join(str(a) for a in self.assignment) + ">"
        return text


def _sizes(assignment: Sequence[int], k: int) -> Tuple[int, ...]:
    sizes = [0] * k
    for block in assignment:
        sizes[block] += 1
    return tuple(sizes)


def _labels_for(outer: SymmetricSequence, inner: SymmetricSequence, n: int, assignments) -> List[PlethysmLabel]:
    labels = []
    for k, assignment in assignments:
        comp = _sizes(assignment, k)
        nu_ranges = [range(inner.dim(i)) for i in comp]
        for mu in range(outer.dim(k)):
            for nus, _ in tensor_terms([[(v, Fraction(1)) for v in r] for r in nu_ranges]):
                labels.append(PlethysmLabel(k, comp, mu, nus, assignment))
    return labels


class PlethysmIndex:
    """Canonical bases of (M o N)(n) and the bookkeeping between model and true basis."""

    def __init__(self, outer: SymmetricSequence, inner: SymmetricSequence):
        require_same_mode(outer, inner)
        self.outer = outer
        self.inner = inner
        self.mode = outer.mode
        self.max_arity = outer.max_arity
        self.labels: Tuple[Tuple[PlethysmLabel, ...], ...] = tuple(
            tuple(sorted(_labels_for(outer, inner, n, self._true_assignments(n))))
            for n in range(1, self.max_arity + 1)
        )
        self.positions: Tuple[Dict[PlethysmLabel, int], ...] = tuple(
            {label: i for i, label in enumerate(labels)} for labels in self.labels
        )
        self._model_cache: Dict[int, Tuple[PlethysmLabel, ...]] = {}

    @property
    def symmetric(self) -> bool:
        return self.mode == SequenceMode.SYMMETRIC

    def _true_assignments(self, n: int) -> Iterable[Tuple[int, Tuple[int, ...]]]:
        for k in range(1, n + 1):
            if self.outer.dim(k) == 0:
                continue
            if self.symmetric:
                for a in restricted_growth_strings(n, k):
                    yield k, a
            else:
                for comp in compositions(n, k):
                    yield k, consecutive_assignment(comp)

    def dim(self, n: int) -> int:
        return len(self.labels[n - 1])

    def labels_at(self, n: int) -> Tuple[PlethysmLabel, ...]:
        return self.labels[n - 1]

    def position(self, label: PlethysmLabel) -> int:
        return self.positions[len(label.assignment) - 1][label]

    # ------------------------------------------------------------------
    # Model <-> true basis
    # ------------------------------------------------------------------

    def project(self, k: int, mu_vector: Dict[int, Fraction], nus: Sequence[int],
                assignment: Sequence[int]) -> SparseVector:
        """
        Class of a model vector in the true basis.

        The blocks are relabelled by first appearance (r); the nu's move with
        their blocks and mu is transported by rho_M(r).
        """
        r, rep = rgs_relabel(assignment)
        nus_rep = [0] * k
        for j in range(k):
            nus_rep[r[j]] = nus[j]
        nus_rep = tuple(nus_rep)
        comp = _sizes(rep, k)
        positions = self.positions[len(rep) - 1]
        out: SparseVector = {}
        if r == identity_perm(k):
            for mu, coeff in mu_vector.items():
                add_term(out, positions[PlethysmLabel(k, comp, mu, nus_rep, rep)], coeff)
            return out
        rho = self.outer.action(r)
        for mu, coeff in mu_vector.items():
            for row, value in rho.column_items(mu):
                add_term(out, positions[PlethysmLabel(k, comp, row, nus_rep, rep)], coeff * value)
        return out

    def act(self, perm: Perm, label: PlethysmLabel) -> SparseVector:
        """Induced S_n action on a true basis vector."""
        k = label.k
        pinv = inverse_perm(perm)
        moved = tuple(label.assignment[pinv[q]] for q in range(len(perm)))
        factors = []
        for j, points in enumerate(block_points(label.assignment, k)):
            h = block_reordering(perm, points)
            factors.append(self.inner.action(h).column_items(label.nus[j]))
        out: SparseVector = {}
        for nus, coeff in tensor_terms(factors):
            for pos, value in self.project(k, {label.mu: coeff}, nus, moved).items():
                add_term(out, pos, value)
        return out

    def generator_matrices(self, n: int) -> Tuple[Matrix, ...]:
        d = self.dim(n)
        gens = []
        for i in range(1, n):
            s = adjacent(n, i)
            gens.append(columns_to_matrix([self.act(s, label) for label in self.labels_at(n)], d))
        return tuple(gens)

    def model_labels(self, n: int) -> Tuple[PlethysmLabel, ...]:
        """Every ordered-model label of arity n (all surjective assignments)."""
        if n in self._model_cache:
            return self._model_cache[n]
        if not self.symmetric:
            labels = self.labels_at(n)
        else:
            assignments = [
                (k, a) for k in range(1, n + 1) if self.outer.dim(k) for a in surjections(n, k)
            ]
            labels = tuple(sorted(_labels_for(self.outer, self.inner, n, assignments)))
        self._model_cache[n] = labels
        return labels

    def inclusion(self, n: int) -> Matrix:
        """Averaging inclusion of the true basis into the ordered model."""
        if not self.symmetric:
            return Matrix.identity(self.dim(n))
        model = self.model_labels(n)
        where = {label: i for i, label in enumerate(model)}
        columns: List[SparseVector] = []
        for label in self.labels_at(n):
            k = label.k
            col: SparseVector = {}
            weight = Fraction(1, factorial(k))
            for tau in all_perms(k):
                assignment, nus = s_k_action_on_label(label, tau)
                rho = self.outer.action(tau)
                for row, value in rho.column_items(label.mu):
                    moved = PlethysmLabel(k, _sizes(assignment, k), row, nus, assignment)
                    add_term(col, where[moved], weight * value)
            columns.append(col)
        return columns_to_matrix(columns, len(model))

    def projection(self, n: int) -> Matrix:
        model = self.model_labels(n)
        columns = [
            self.project(label.k, {label.mu: Fraction(1)}, label.nus, label.assignment)
            for label in model
        ]
        return columns_to_matrix(columns, self.dim(n))

    def model_idempotent(self, n: int) -> Matrix:
        """Block-symmetrization idempotent on the ordered model."""
        return self.inclusion(n) @ self.projection(n)


def _compound_name(name: str) -> str:
    return f"({name})" if "∘" in name else name


def plethysm(outer: SymmetricSequence, inner: SymmetricSequence) -> Tuple[SymmetricSequence, PlethysmIndex]:
    """
    Plethysm outer o inner with its canonical index.

    Results are memoized on the outer sequence, so repeated calls return the
    same sequence object.
    """
    cached = outer._plethysms.get(id(inner))
    if cached is not None:
        return cached[1], cached[2]
    index = PlethysmIndex(outer, inner)
    n_max = index.max_arity
    if index.symmetric:
        generators = tuple(index.generator_matrices(n) for n in range(1, n_max + 1))
    else:
        generators = tuple(() for _ in range(n_max))
    names = tuple(tuple(label.render() for label in index.labels_at(n)) for n in range(1, n_max + 1))
    result = SymmetricSequence(
        max_arity=n_max,
        mode=index.mode,
        dims=tuple(index.dim(n) for n in range(1, n_max + 1)),
        generators=generators,
        name=f"{_compound_name(outer.name)}∘{_compound_name(inner.name)}",
        basis_names=names,
    )
    logger.debug(f"plethysm {result.name}: dims {list(result.dims)}; arities above {n_max} dropped")
    outer._plethysms[id(inner)] = (inner, result, index)
    return result, index


def plethysm_index(outer: SymmetricSequence, inner: SymmetricSequence) -> PlethysmIndex:
    return plethysm(outer, inner)[1]


def s_k_action_on_label(label: PlethysmLabel, tau: Perm) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Block relabelling tau applied to (assignment, nus), leaving mu untouched."""
    assignment = tuple(tau[a] for a in label.assignment)
    nus = [0] * label.k
    for j in range(label.k):
        nus[tau[j]] = label.nus[j]
    return assignment, tuple(nus)


__all__ = [
    "PlethysmIndex",
    "PlethysmLabel",
    "plethysm",
    "plethysm_index",
    "s_k_action_on_label",
]
