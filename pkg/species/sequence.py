"""Symmetric sequences: arity-graded spaces with symmetric-group actions."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

from loguru import logger

from data.schemas import CheckEntry, CheckReport, CheckStatus
from exactla import Matrix, ModeMismatchError, PreconditionError, ShapeError, is_isomorphism
from exactla.linear_map import LinearMap
from species.permutations import Perm, identity_perm, reduced_word


class SequenceMode(str, Enum):
    """Whether arities carry symmetric-group actions."""
    SYMMETRIC = "symmetric"
    NONSYMMETRIC = "nonsymmetric"


@dataclass(frozen=True, eq=False)
class SymmetricSequence:
    """
    Finite-dimensional Sigma-module truncated at max_arity.

    dims[n-1] is dim M(n). In symmetric mode generators[n-1][i-1] is the
    matrix of s_i on M(n); in nonsymmetric mode every generator tuple is empty.
    Equality is identity: plethysms and Schur functors are memoized on the
    instance.
    """

    max_arity: int
    mode: SequenceMode
    dims: Tuple[int, ...]
    generators: Tuple[Tuple[Matrix, ...], ...]
    name: str = "M"
    basis_names: Optional[Tuple[Tuple[str, ...], ...]] = None
    _actions: Dict = field(default_factory=dict, repr=False)
    _plethysms: Dict = field(default_factory=dict, repr=False)
    _schur: Dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.max_arity < 1:
            raise ShapeError("max_arity must be at least 1")
        if len(self.dims) != self.max_arity:
            raise ShapeError(f"{self.name}: {len(self.dims)} dims for max_arity {self.max_arity}")
        if self.dims[0] != 1:
            raise PreconditionError(f"{self.name}: arity-1 component must be one-dimensional")
        if len(self.generators) != self.max_arity:
            raise ShapeError(f"{self.name}: generators missing for some arities")
        for n, gens in enumerate(self.generators, start=1):
            expected = n - 1 if self.mode == SequenceMode.SYMMETRIC else 0
            if len(gens) != expected:
                raise ShapeError(f"{self.name}: arity {n} needs {expected} generators, got {len(gens)}")
            d = self.dims[n - 1]
            for g in gens:
                if g.shape != (d, d):
                    raise ShapeError(f"{self.name}: generator of arity {n} is not {d}x{d}")
        if self.basis_names is not None:
            for n, names in enumerate(self.basis_names, start=1):
                if len(names) != self.dims[n - 1]:
                    raise ShapeError(f"{self.name}: {len(names)} basis names in arity {n}")

    @property
    def symmetric(self) -> bool:
        return self.mode == SequenceMode.SYMMETRIC

    def dim(self, n: int) -> int:
        if n < 1 or n > self.max_arity:
            raise ShapeError(f"{self.name}: arity {n} outside 1..{self.max_arity}")
        return self.dims[n - 1]

    def generator(self, n: int, i: int) -> Matrix:
        return self.generators[n - 1][i - 1]

    def action(self, perm: Perm) -> Matrix:
        """Matrix of an arbitrary permutation, through its reduced word."""
        perm = tuple(perm)
        n = len(perm)
        cached = self._actions.get(perm)
        if cached is not None:
            return cached
        d = self.dim(n)
        if perm == identity_perm(n):
            result = Matrix.identity(d)
        elif not self.symmetric:
            raise ModeMismatchError(f"{self.name}: nonsymmetric sequence has no S_{n} action")
        else:
            word = reduced_word(perm)
            result = self.generator(n, word[0])
            for i in word[1:]:
                result = result @ self.generator(n, i)
        self._actions[perm] = result
        return result

    def label(self, n: int, index: int) -> str:
        if self.basis_names is not None:
            return self.basis_names[n - 1][index]
        return f"{self.name}({n})[{index}]"

    def same_shape(self, other: "SymmetricSequence") -> bool:
        return self.mode == other.mode and self.dims == other.dims

    def describe(self) -> str:
        return f"{self.name}<{self.mode.value}, N={self.max_arity}, dims={list(self.dims)}>"


def require_same_mode(*sequences: SymmetricSequence):
    modes = {s.mode for s in sequences}
    if len(modes) > 1:
        names = ", ".join(s.name for s in sequences)
        raise ModeMismatchError(f"mixed symmetric and nonsymmetric sequences: {names}")
    arities = {s.max_arity for s in sequences}
    if len(arities) > 1:
        raise ShapeError(f"sequences truncated at different arities: {sorted(arities)}")


def _entry(axiom: str, n: int, ok: bool, witness: Optional[str] = None) -> CheckEntry:
    return CheckEntry(
        axiom=axiom,
        arity=n,
        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
        witness_label=None if ok else witness,
    )


def check_relations(seq: SymmetricSequence) -> CheckReport:
    """
    Coxeter relations of the generators in every arity.

    Checks invertibility, s_i^2 = id, the braid relation and far commutation.
    """
    report = CheckReport(subject=seq.name, checked_arity=seq.max_arity)
    if not seq.symmetric:
        return report
    for n in range(2, seq.max_arity + 1):
        d = seq.dim(n)
        ident = Matrix.identity(d)
        gens = seq.generators[n - 1]
        for i, s in enumerate(gens, start=1):
            report.entries.append(_entry("invertible", n, is_isomorphism(LinearMap.from_matrix(s)), f"s_{i}"))
            report.entries.append(_entry("involution", n, s @ s == ident, f"s_{i}"))
        for i in range(1, n - 1):
            a, b = gens[i - 1], gens[i]
            report.entries.append(_entry("braid", n, a @ b @ a == b @ a @ b, f"s_{i}s_{i + 1}"))
        for i in range(1, n):
            for j in range(i + 2, n):
                a, b = gens[i - 1], gens[j - 1]
                report.entries.append(_entry("commute", n, a @ b == b @ a, f"s_{i}s_{j}"))
    if not report.passed:
        logger.warning(f"{seq.name}: generator relations fail ({len(report.failures())} entries)")
    return report


def make_sequence(
    dims: Sequence[int],
    mode: SequenceMode,
    generators: Optional[Sequence[Sequence[Matrix]]] = None,
    name: str = "M",
    basis_names=None,
) -> SymmetricSequence:
    """Convenience constructor; nonsymmetric sequences need no generators."""
    dims = tuple(dims)
    if generators is None:
        if mode == SequenceMode.SYMMETRIC:
            raise ShapeError(f"{name}: symmetric sequence needs action generators")
        generators = tuple(() for _ in dims)
    else:
        generators = tuple(tuple(g) for g in generators)
    names = tuple(tuple(ns) for ns in basis_names) if basis_names is not None else None
    return SymmetricSequence(len(dims), SequenceMode(mode), dims, generators, name, names)
