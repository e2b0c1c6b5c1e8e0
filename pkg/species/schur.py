"""
Schur functors evaluated on finite-dimensional graded spaces.

F_M(X) = sum over n of M(n) (x)_{S_n} X^{(x)n}, truncated at total weight <= N.
In symmetric mode the S_n-orbit of a word is represented by its sorted word
w, and the coinvariants of that orbit are the image of the averaging
idempotent over the stabilizer of w:

    iota(u at w)        = (1/n!) sum_tau rho(tau) u (x) tau.w
    pi(b (x) sigma.w)   = L_w rho(sigma^-1) b

where (I_w, L_w) split the stabilizer idempotent. In nonsymmetric mode every
word is its own orbit and I_w = L_w = id.
"""

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from loguru import logger

from exactla import LinearMap, Matrix, PreconditionError, ShapeError, idempotent_image, inverse
from species.morphism import SeqMorphism
from species.permutations import block_points, inverse_perm, sorting_perm, stabilizer
from species.plethysm import plethysm
from species.sequence import SymmetricSequence
from species.sparse import SparseVector, Terms, add_term, columns_to_matrix, tensor_terms


@dataclass(frozen=True)
class GradedSpace:
    """Coordinate space with a positive weight on each basis vector."""

    dim: int
    weights: Tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != self.dim:
            raise ShapeError(f"{len(self.weights)} weights for a space of dimension {self.dim}")
        if any(w < 1 for w in self.weights):
            raise ShapeError("weights must be positive")

    @classmethod
    def uniform(cls, dim: int) -> "GradedSpace":
        return cls(dim, (1,) * dim)

    def indices_of_weight(self, weight: int) -> List[int]:
        return [i for i, w in enumerate(self.weights) if w == weight]

    @property
    def max_weight(self) -> int:
        return max(self.weights, default=0)


Carrier = Union[GradedSpace, int]


def as_space(carrier: Carrier) -> GradedSpace:
    return carrier if isinstance(carrier, GradedSpace) else GradedSpace.uniform(carrier)


class SchurLabel(NamedTuple):
    arity: int
    word: Tuple[int, ...]
    component: int


class SchurSpace:
    """Canonical basis of the truncated F_M(X) with its orbit components."""

    def __init__(self, seq: SymmetricSequence, carrier: GradedSpace, trunc: int):
        if trunc > seq.max_arity:
            raise PreconditionError(f"truncation {trunc} exceeds max arity {seq.max_arity} of {seq.name}")
        self.seq = seq
        self.carrier = carrier
        self.trunc = trunc
        self._components: Dict[Tuple[int, ...], Tuple[Matrix, Matrix]] = {}
        labels: List[SchurLabel] = []
        weights: List[int] = []
        for n in range(1, trunc + 1):
            if seq.dim(n) == 0:
                continue
            for word, weight in self._words(n):
                inclusion, _ = self.component(word)
                for c in range(inclusion.cols):
                    labels.append(SchurLabel(n, word, c))
                    weights.append(weight)
        self.labels: Tuple[SchurLabel, ...] = tuple(labels)
        self.positions: Dict[SchurLabel, int] = {label: i for i, label in enumerate(labels)}
        self.space = GradedSpace(len(labels), tuple(weights))

    @property
    def dim(self) -> int:
        return len(self.labels)

    def _words(self, n: int):
        """Words of length n with total weight <= trunc (sorted words only in symmetric mode)."""
        letters = range(self.carrier.dim)
        weights = self.carrier.weights
        out = []

        def extend(prefix: List[int], weight: int):
            if len(prefix) == n:
                out.append((tuple(prefix), weight))
                return
            start = prefix[-1] if (prefix and self.seq.symmetric) else 0
            remaining = n - len(prefix) - 1
            for x in letters[start:]:
                w = weight + weights[x]
                if w + remaining <= self.trunc:
                    prefix.append(x)
                    extend(prefix, w)
                    prefix.pop()

        extend([], 0)
        return out

    def component(self, word: Tuple[int, ...]) -> Tuple[Matrix, Matrix]:
        """(I_w, L_w) for a representative word."""
        n = len(word)
        if not self.seq.symmetric:
            ident = Matrix.identity(self.seq.dim(n))
            return ident, ident
        runs = tuple(word[j] == word[j - 1] for j in range(1, n))
        key = (n,) + runs
        cached = self._components.get(key)
        if cached is not None:
            return cached
        stab = stabilizer(word)
        d = self.seq.dim(n)
        total = Matrix.zeros(d, d)
        for sigma in stab:
            total = total + self.seq.action(sigma)
        idem = total.scale(Fraction(1, len(stab)))
        split = idempotent_image(LinearMap.from_matrix(idem))
        result = (split.inclusion.matrix, split.projection.matrix)
        self._components[key] = result
        return result

    def weight_of(self, word: Sequence[int]) -> int:
        return sum(self.carrier.weights[x] for x in word)

    def project(self, mu_vector: Dict[int, Fraction], word: Sequence[int]) -> Optional[SparseVector]:
        """
        Class of mu_vector (x) word in the canonical basis, or None when the
        word's weight exceeds the truncation.
        """
        if self.weight_of(word) > self.trunc:
            return None
        n = len(word)
        out: SparseVector = {}
        if not self.seq.symmetric:
            word = tuple(word)
            for mu, coeff in mu_vector.items():
                add_term(out, self.positions[SchurLabel(n, word, mu)], coeff)
            return out
        rep, sigma = sorting_perm(word)
        b = mu_vector
        if sigma != tuple(range(n)):
            rho = self.seq.action(inverse_perm(sigma))
            b = {}
            for mu, coeff in mu_vector.items():
                for row, value in rho.column_items(mu):
                    add_term(b, row, coeff * value)
        _, proj = self.component(rep)
        for mu, coeff in b.items():
            for c, value in proj.column_items(mu):
                add_term(out, self.positions[SchurLabel(n, rep, c)], coeff * value)
        return out

    def representative(self, position: int) -> Tuple[int, Tuple[int, ...], Terms]:
        """(arity, word, u) with u the M(n)-vector of the basis element at its representative word."""
        label = self.labels[position]
        inclusion, _ = self.component(label.word)
        return label.arity, label.word, inclusion.column_items(label.component)

    def indices_of_arity(self, n: int) -> List[int]:
        return [i for i, label in enumerate(self.labels) if label.arity == n]

    def arity_of(self, position: int) -> int:
        return self.labels[position].arity

    def label_text(self, position: int) -> str:
        label = self.labels[position]
        word = ",".join(str(x) for x in label.word)
        if self.seq.symmetric:
            return f"{self.seq.name}({label.arity})#{label.component}[{word}]"
        return f"{self.seq.label(label.arity, label.component)}[{word}]"


def schur_evaluate(seq: SymmetricSequence, carrier: Carrier, trunc: int) -> SchurSpace:
    """
    Truncated F_M(X). For X = Q^d with unit weights this is arity <= trunc.

    Raises:
        PreconditionError: if trunc exceeds the sequence's max arity
    """
    space = as_space(carrier)
    key = (space, trunc)
    cached = seq._schur.get(key)
    if cached is None:
        cached = SchurSpace(seq, space, trunc)
        seq._schur[key] = cached
        logger.debug(f"F_{seq.name} on dim {space.dim} (trunc {trunc}): dim {cached.dim}")
    return cached


def require_unit_weights_fit(carrier: Carrier, trunc: int) -> GradedSpace:
    """F_I(X) is X itself exactly when every weight of X is within the truncation."""
    space = as_space(carrier)
    if space.max_weight > trunc:
        raise PreconditionError(f"carrier has weight {space.max_weight} above truncation {trunc}")
    return space


@lru_cache(maxsize=None)
def evaluate_map(f: SeqMorphism, carrier: Carrier, trunc: int) -> LinearMap:
    """F_f : F_M(X) -> F_M'(X), computed on representatives."""
    source = schur_evaluate(f.source, carrier, trunc)
    target = schur_evaluate(f.target, carrier, trunc)
    columns: List[SparseVector] = []
    for pos in range(source.dim):
        n, word, u = source.representative(pos)
        fu: SparseVector = {}
        for mu, coeff in u:
            for row, value in f.arity(n).column_items(mu):
                add_term(fu, row, coeff * value)
        columns.append(target.project(fu, word))
    return LinearMap(source.dim, target.dim, columns_to_matrix(columns, target.dim))


def apply_functor_with_overflow(seq: SymmetricSequence, phi: LinearMap, source_space: Carrier,
                                target_space: Carrier, trunc: int) -> Tuple[LinearMap, Tuple[int, ...]]:
    """
    F_M(phi) : F_M(X) -> F_M(Y) for a linear map phi : X -> Y.

    Pieces landing above the truncation are dropped; their weights are
    returned so callers can report them.
    """
    source = schur_evaluate(seq, source_space, trunc)
    target = schur_evaluate(seq, target_space, trunc)
    if phi.domain_dim != source.carrier.dim or phi.codomain_dim != target.carrier.dim:
        raise ShapeError(
            f"F_{seq.name}: map {phi.domain_dim}->{phi.codomain_dim} against carriers "
            f"{source.carrier.dim}->{target.carrier.dim}"
        )
    dropped = set()
    columns: List[SparseVector] = []
    for pos in range(source.dim):
        n, word, u = source.representative(pos)
        col: SparseVector = {}
        factors = [phi.matrix.column_items(x) for x in word]
        u_vec = dict(u)
        for image_word, coeff in tensor_terms(factors):
            scaled = {mu: coeff * value for mu, value in u_vec.items()}
            projected = target.project(scaled, image_word)
            if projected is None:
                dropped.add(target.weight_of(image_word))
                continue
            for key, value in projected.items():
                add_term(col, key, value)
        columns.append(col)
    if dropped:
        logger.debug(f"F_{seq.name}: dropped weights {sorted(dropped)} above truncation {trunc}")
    return LinearMap(source.dim, target.dim, columns_to_matrix(columns, target.dim)), tuple(sorted(dropped))


def apply_functor(seq: SymmetricSequence, phi: LinearMap, source_space: Carrier,
                  target_space: Carrier, trunc: int) -> LinearMap:
    return apply_functor_with_overflow(seq, phi, source_space, target_space, trunc)[0]


@lru_cache(maxsize=None)
def eval_compose_iso(outer: SymmetricSequence, inner: SymmetricSequence, carrier: Carrier,
                     trunc: int) -> LinearMap:
    """
    Regrouping F_{M o N}(X) -> F_M(F_N(X)).

    A word under a plethysm label is cut along the label's blocks; each
    sub-word goes under its nu_j into F_N(X) and the resulting word of
    F_N(X)-letters goes under mu into F_M. F_M(F_N(X)) is graded by total
    weight, so nothing is lost to truncation.
    """
    composite, index = plethysm(outer, inner)
    source = schur_evaluate(composite, carrier, trunc)
    inner_space = schur_evaluate(inner, carrier, trunc)
    target = schur_evaluate(outer, inner_space.space, trunc)
    columns: List[SparseVector] = []
    for pos in range(source.dim):
        n, word, u = source.representative(pos)
        col: SparseVector = {}
        for label_pos, coeff in u:
            label = index.labels_at(n)[label_pos]
            factors = []
            for j, points in enumerate(block_points(label.assignment, label.k)):
                sub_word = tuple(word[p] for p in points)
                factors.append(tuple(inner_space.project({label.nus[j]: Fraction(1)}, sub_word).items()))
            for letters, c2 in tensor_terms(factors):
                for key, value in target.project({label.mu: coeff * c2}, letters).items():
                    add_term(col, key, value)
        columns.append(col)
    return LinearMap(source.dim, target.dim, columns_to_matrix(columns, target.dim))


@lru_cache(maxsize=None)
def compose_iso_inverse(outer: SymmetricSequence, inner: SymmetricSequence, carrier: Carrier,
                        trunc: int) -> LinearMap:
    """F_M(F_N(X)) -> F_{M o N}(X)."""
    return inverse(eval_compose_iso(outer, inner, carrier, trunc))
