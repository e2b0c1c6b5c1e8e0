"""Morphisms of symmetric sequences and the per-arity comparisons used by every check."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from data.schemas import CheckEntry, CheckReport, CheckStatus
from exactla import Matrix, ModeMismatchError, ShapeError
from species.sequence import SymmetricSequence


@dataclass(frozen=True, eq=False)
class SeqMorphism:
    """Arity-graded linear map f_n: source(n) -> target(n), n = 1..max_arity."""

    source: SymmetricSequence
    target: SymmetricSequence
    matrices: Tuple[Matrix, ...]
    name: str = "f"

    def __post_init__(self):
        if self.source.mode != self.target.mode:
            raise ModeMismatchError(f"{self.name}: {self.source.name} and {self.target.name} differ in mode")
        if self.source.max_arity != self.target.max_arity:
            raise ShapeError(f"{self.name}: source and target truncated differently")
        if len(self.matrices) != self.source.max_arity:
            raise ShapeError(f"{self.name}: {len(self.matrices)} blocks for max_arity {self.source.max_arity}")
        for n, m in enumerate(self.matrices, start=1):
            expected = (self.target.dim(n), self.source.dim(n))
            if m.shape != expected:
                raise ShapeError(f"{self.name}: arity {n} block is {m.shape}, expected {expected}")

    @property
    def max_arity(self) -> int:
        return self.source.max_arity

    def arity(self, n: int) -> Matrix:
        return self.matrices[n - 1]

    @classmethod
    def identity(cls, seq: SymmetricSequence) -> "SeqMorphism":
        return cls(seq, seq, tuple(Matrix.identity(d) for d in seq.dims), name=f"id_{seq.name}")

    @classmethod
    def zero(cls, source: SymmetricSequence, target: SymmetricSequence, name: str = "0") -> "SeqMorphism":
        return cls(source, target, tuple(Matrix.zeros(target.dim(n), source.dim(n))
                                         for n in range(1, source.max_arity + 1)), name)

    @classmethod
    def from_blocks(cls, source: SymmetricSequence, target: SymmetricSequence,
                    blocks: Sequence[Sequence[Sequence]], name: str = "f") -> "SeqMorphism":
        """Build from per-arity nested row lists; empty blocks may be given as []."""
        matrices = []
        for n, rows in enumerate(blocks, start=1):
            matrices.append(Matrix.from_rows(rows, cols=source.dim(n)) if rows else
                            Matrix.zeros(target.dim(n), source.dim(n)))
        return cls(source, target, tuple(matrices), name)

    def __matmul__(self, other: "SeqMorphism") -> "SeqMorphism":
        """self . other"""
        if not other.target.same_shape(self.source):
            raise ShapeError(f"cannot compose {self.name} after {other.name}: "
                             f"{other.target.describe()} vs {self.source.describe()}")
        return SeqMorphism(
            other.source,
            self.target,
            tuple(a @ b for a, b in zip(self.matrices, other.matrices)),
            name=f"{self.name}·{other.name}",
        )

    def __add__(self, other: "SeqMorphism") -> "SeqMorphism":
        return SeqMorphism(self.source, self.target,
                           tuple(a + b for a, b in zip(self.matrices, other.matrices)), self.name)

    def __sub__(self, other: "SeqMorphism") -> "SeqMorphism":
        return SeqMorphism(self.source, self.target,
                           tuple(a - b for a, b in zip(self.matrices, other.matrices)), self.name)

    def scale(self, factor) -> "SeqMorphism":
        return SeqMorphism(self.source, self.target, tuple(m.scale(factor) for m in self.matrices), self.name)

    def with_block(self, n: int, block: Matrix, name: Optional[str] = None) -> "SeqMorphism":
        matrices = list(self.matrices)
        matrices[n - 1] = block
        return SeqMorphism(self.source, self.target, tuple(matrices), name or self.name)

    def renamed(self, name: str) -> "SeqMorphism":
        return SeqMorphism(self.source, self.target, self.matrices, name)

    def same_matrices(self, other: "SeqMorphism") -> bool:
        return all(a == b for a, b in zip(self.matrices, other.matrices))

    def __repr__(self) -> str:
        return f"SeqMorphism({self.name}: {self.source.name} -> {self.target.name})"


def compare(lhs: SeqMorphism, rhs: SeqMorphism, axiom: str) -> List[CheckEntry]:
    """
    One entry per arity stating whether lhs_n == rhs_n.

    The witness is the source basis label of the first differing column.
    """
    if lhs.max_arity != rhs.max_arity:
        raise ShapeError(f"{axiom}: sides truncated differently")
    entries = []
    for n in range(1, lhs.max_arity + 1):
        a, b = lhs.arity(n), rhs.arity(n)
        if a.shape != b.shape:
            raise ShapeError(f"{axiom}: arity {n} sides are {a.shape} and {b.shape}")
        if a == b:
            entries.append(CheckEntry(axiom=axiom, arity=n, status=CheckStatus.PASS))
            continue
        _, col = a.first_difference(b)
        entries.append(CheckEntry(
            axiom=axiom,
            arity=n,
            status=CheckStatus.FAIL,
            witness_label=lhs.source.label(n, col),
            detail=f"column {col}: {[str(x) for x in a.column(col)]} != {[str(x) for x in b.column(col)]}",
        ))
    return entries


def check_equivariant(f: SeqMorphism) -> CheckReport:
    """
    f_n . rho(s_i) == rho'(s_i) . f_n for every arity and generator.

    Raises:
        ModeMismatchError: on nonsymmetric sequences
    """
    if not f.source.symmetric:
        raise ModeMismatchError(f"{f.name}: equivariance needs symmetric sequences")
    report = CheckReport(subject=f.name, checked_arity=f.max_arity)
    for n in range(2, f.max_arity + 1):
        fn = f.arity(n)
        for i in range(1, n):
            ok = fn @ f.source.generator(n, i) == f.target.generator(n, i) @ fn
            report.entries.append(CheckEntry(
                axiom="equivariance",
                arity=n,
                status=CheckStatus.PASS if ok else CheckStatus.FAIL,
                witness_label=None if ok else f"s_{i}",
            ))
    return report


def equivariance_entries(f: SeqMorphism, axiom: str) -> List[CheckEntry]:
    """Equivariance of f under another axiom name; empty in nonsymmetric mode."""
    if not f.source.symmetric:
        return []
    return [entry.model_copy(update={"axiom": axiom}) for entry in check_equivariant(f).entries]
