"""Report models and spec-file models."""

from enum import Enum
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, computed_field


class CheckStatus(str, Enum):
    """Outcome of a single axiom check."""
    PASS = "PASS"
    FAIL = "FAIL"


class CheckEntry(BaseModel):
    """One axiom checked at one arity (or over the whole truncation when arity is None)."""
    axiom: str
    arity: Optional[int] = None
    status: CheckStatus
    witness_label: Optional[str] = None  # basis label of the first differing column
    detail: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS


class CheckReport(BaseModel):
    """Result of a check suite on one structure."""
    subject: str
    checked_arity: int
    entries: List[CheckEntry] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def failures(self) -> List[CheckEntry]:
        return [entry for entry in self.entries if not entry.passed]

    def axiom_passed(self, axiom: str) -> bool:
        return all(entry.passed for entry in self.entries if entry.axiom == axiom)

    def first_witness(self) -> Optional[str]:
        for entry in self.failures():
            if entry.witness_label:
                return entry.witness_label
        return None

    def extend(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for entry in other.entries:
            self.entries.append(entry.model_copy(update={"axiom": f"{prefix}{entry.axiom}"}))
        return self

    def __bool__(self) -> bool:
        return self.passed


class ImplicationEntry(BaseModel):
    """A theorem of the form premise => conclusion, evaluated on one triple."""
    name: str
    premise: bool
    conclusion: bool
    detail: Optional[str] = None

    @computed_field
    @property
    def violated(self) -> bool:
        return self.premise and not self.conclusion


class ImplicationReport(BaseModel):
    subject: str
    checked_arity: int
    entries: List[ImplicationEntry] = Field(default_factory=list)

    @computed_field
    @property
    def consistent(self) -> bool:
        return not any(entry.violated for entry in self.entries)

    def violations(self) -> List[ImplicationEntry]:
        return [entry for entry in self.entries if entry.violated]

    def premises_met(self) -> int:
        return sum(1 for entry in self.entries if entry.premise)

    def __bool__(self) -> bool:
        return self.consistent


class AntipodeCertificate(BaseModel):
    """Why the antipode system has no solution at some arity."""
    arity: int
    equations: int
    unknowns: int
    coefficient_rank: int
    augmented_rank: int

    @computed_field
    @property
    def rank_defect(self) -> int:
        return self.augmented_rank - self.coefficient_rank


class AntipodeReport(BaseModel):
    subject: str
    found: bool
    checked_arity: int
    matrices: Dict[str, List[List[str]]] = Field(default_factory=dict)
    residual_zero: Optional[bool] = None
    certificate: Optional[AntipodeCertificate] = None

    def __bool__(self) -> bool:
        return self.found


class TriangularityBlock(BaseModel):
    source_arity: int
    target_arity: int
    expected: str  # "zero" or "phi"
    status: CheckStatus
    witness_label: Optional[str] = None


class TriangularityReport(BaseModel):
    subject: str
    checked_arity: int
    blocks: List[TriangularityBlock] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(block.status == CheckStatus.PASS for block in self.blocks)

    def __bool__(self) -> bool:
        return self.passed


class PrimitivesReport(BaseModel):
    subject: str
    checked_arity: int
    space_dim: int
    prim_dim: int
    weights: List[int] = Field(default_factory=list)
    inclusion: List[List[str]] = Field(default_factory=list)


class PhiReport(BaseModel):
    subject: str
    checked_arity: int
    matrices: Dict[str, List[List[str]]] = Field(default_factory=dict)
    h2iso: bool
    is_identity: bool

    def __bool__(self) -> bool:
        return self.h2iso


class ReconstructionReport(BaseModel):
    invertible: bool
    checked_arity: int
    source_dim: int
    target_dim: int
    algebra_morphism: bool
    coalgebra_morphism: bool


class RigidityVerdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    REFUSED = "REFUSED"


class RigidityReport(BaseModel):
    subject: str
    checked_arity: int
    hypotheses: Dict[str, bool] = Field(default_factory=dict)
    failed_hypothesis: Optional[str] = None
    prim_dim: Optional[int] = None
    space_dim: Optional[int] = None
    reconstruction: Optional[ReconstructionReport] = None
    unit_direction: Optional[bool] = None
    verdict: RigidityVerdict = RigidityVerdict.FAIL

    def __bool__(self) -> bool:
        return self.verdict == RigidityVerdict.PASS


class AcceptanceSummary(BaseModel):
    """Aggregate of the acceptance suite."""
    total: int
    passed: int
    failed: int
    results: Dict[str, bool] = Field(default_factory=dict)
    details: Dict[str, str] = Field(default_factory=dict)

    @computed_field
    @property
    def pass_rate(self) -> float:
        return self.passed / self.total if self.total else 0.0


class PlethysmSummary(BaseModel):
    """Dimensions and canonical labels of (outer o inner)(n)."""
    subject: str
    checked_arity: int
    dims: List[int]
    labels: Dict[str, List[str]] = Field(default_factory=dict)


# ---------------------------------------------------------------------------
# Spec files
# ---------------------------------------------------------------------------

MatrixLiteral = List[List[Union[str, int]]]


class SequenceSpec(BaseModel):
    mode: str = "nonsymmetric"
    max_arity: int
    dims: List[int]
    actions: Optional[List[List[MatrixLiteral]]] = None  # per arity, one matrix per s_i
    basis_names: Optional[List[List[str]]] = None


class MorphismSpec(BaseModel):
    """Per-arity matrices; source and target name a sequence or a composite "A o C"."""
    source: str
    target: str
    matrices: List[MatrixLiteral]


class OperadSpec(BaseModel):
    carrier: str
    mult: List[MatrixLiteral]  # per arity, over the canonical plethysm basis
    unit: Optional[List[MatrixLiteral]] = None  # canonical when omitted
    augmentation: Optional[str] = None  # name of a morphism carrier -> I


class CooperadSpec(BaseModel):
    carrier: str
    comult: List[MatrixLiteral]
    counit: Optional[List[MatrixLiteral]] = None
    coaugmentation: Optional[str] = None  # name of a morphism I -> carrier


class EntwiningSpec(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    operad: str
    cooperad: str
    lambda_: List[MatrixLiteral] = Field(alias="lambda")


class BialgebraSpec(BaseModel):
    entwining: str
    dim: int
    weights: Optional[List[int]] = None
    h: List[MatrixLiteral]  # per arity n: (arity-n part of F_A(X)) -> X
    theta: List[MatrixLiteral]  # per arity n: X -> (arity-n part of F_C(X))


class SpecFileModel(BaseModel):
    """Top-level spec file."""
    field: str = "Q"
    max_arity: int
    sequences: Dict[str, SequenceSpec] = Field(default_factory=dict)
    morphisms: Dict[str, MorphismSpec] = Field(default_factory=dict)
    operads: Dict[str, OperadSpec] = Field(default_factory=dict)
    cooperads: Dict[str, CooperadSpec] = Field(default_factory=dict)
    entwinings: Dict[str, EntwiningSpec] = Field(default_factory=dict)
    bialgebras: Dict[str, BialgebraSpec] = Field(default_factory=dict)
