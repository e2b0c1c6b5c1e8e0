"""
Spec files: JSON persistence of SpecFileModel and its resolution into
sequences, operads, cooperads, entwinings and bialgebras.
"""

import json
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from loguru import logger
from pydantic import ValidationError

from data.schemas import (
    BialgebraSpec,
    CheckReport,
    CooperadSpec,
    EntwiningSpec,
    MorphismSpec,
    OperadSpec,
    SequenceSpec,
    SpecFileModel,
)
from entwine.diagrams import check_entwining
from entwine.structures import Bialgebra, EntwinedTriple, Entwining
from exactla import AlgebraError, LinearMap, Matrix
from opcore.algebras import AlgebraObject, CoalgebraObject
from opcore.checks import check_cooperad, check_operad
from opcore.structures import CooperadStructure, OperadStructure, canonical_counit, canonical_unit
from rigidity.bimodule import check_bimodule
from species.builtins import unit_sequence
from species.morphism import SeqMorphism, check_equivariant
from species.plethysm import plethysm
from species.schur import GradedSpace, schur_evaluate
from species.sequence import SequenceMode, SymmetricSequence, check_relations, make_sequence

COMPOSITE_SEPARATOR = " o "


class SpecLoadError(ValueError):
    """Malformed spec file: bad JSON, schema violation, wrong shape or failed axioms in strict mode."""


class UnknownReferenceError(SpecLoadError):
    """A name in the spec file does not resolve."""

    def __init__(self, kind: str, name: str, where: str):
        super().__init__(f"{where}: unknown {kind} {name!r}")
        self.kind = kind
        self.name = name


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------

class SpecPersistence(ABC):
    """Abstract interface for spec-file storage."""

    @abstractmethod
    def save(self, model: SpecFileModel, path: str) -> bool:
        """Save a spec file, returning whether it was written."""
        pass

    @abstractmethod
    def load(self, path: str) -> SpecFileModel:
        """Load and validate a spec file."""
        pass


class JSONSpecPersistence(SpecPersistence):
    """Spec files as JSON documents."""

    def __init__(self, indent: Optional[int] = 2):
        self.indent = indent

    def save(self, model: SpecFileModel, path: str) -> bool:
        """
        Write a spec file.

        Args:
            model: Spec file to write
            path: Destination path; parent directories are created

        Returns:
            True if the file was written
        """
        try:
            file_path = Path(path)
            file_path.parent.mkdir(parents=True, exist_ok=True)
            with open(file_path, "w") as f:
                f.write(model.model_dump_json(by_alias=True, indent=self.indent))
                f.write("\n")
            logger.info(f"Saved spec file to {path}")
            return True
        except OSError as e:
            logger.error(f"Error saving spec file to {path}: {str(e)}")
            return False

    def load(self, path: str) -> SpecFileModel:
        """
        Read a spec file.

        Raises:
            SpecLoadError: if the file is missing, is not JSON or violates the schema
        """
        file_path = Path(path)
        if not file_path.exists():
            raise SpecLoadError(f"spec file not found: {path}")
        try:
            with open(file_path, "r") as f:
                data = json.load(f)
            model = SpecFileModel.model_validate(data)
        except json.JSONDecodeError as e:
            raise SpecLoadError(f"{path}: not valid JSON ({e.msg} at line {e.lineno})") from e
        except ValidationError as e:
            raise SpecLoadError(f"{path}: schema violation: {e.errors()[0]['msg']} "
                                f"at {'.'.join(str(p) for p in e.errors()[0]['loc'])}") from e
        logger.info(f"Loaded spec file {path}: {len(model.sequences)} sequences, {len(model.operads)} operads, "
                    f"{len(model.cooperads)} cooperads, {len(model.entwinings)} entwinings, "
                    f"{len(model.bialgebras)} bialgebras")
        return model


# ---------------------------------------------------------------------------
# Resolved objects
# ---------------------------------------------------------------------------

@dataclass
class LoadedSpec:
    """Named structures of one spec file, all truncated at max_arity."""

    max_arity: int
    sequences: Dict[str, SymmetricSequence] = field(default_factory=dict)
    morphisms: Dict[str, SeqMorphism] = field(default_factory=dict)
    operads: Dict[str, OperadStructure] = field(default_factory=dict)
    cooperads: Dict[str, CooperadStructure] = field(default_factory=dict)
    entwinings: Dict[str, Entwining] = field(default_factory=dict)
    bialgebras: Dict[str, Bialgebra] = field(default_factory=dict)
    field_tag: str = "Q"
    warnings: List[str] = field(default_factory=list)

    def lookup(self, kind: str, name: str, where: str = "lookup"):
        """
        Raises:
            UnknownReferenceError: if nothing of that kind has that name
        """
        table = getattr(self, kind)
        if name not in table:
            raise UnknownReferenceError(kind.rstrip("s"), name, where)
        return table[name]

    def only(self, kind: str, where: str):
        """The single object of a kind, for commands run without --name."""
        table = getattr(self, kind)
        if len(table) != 1:
            raise UnknownReferenceError(kind.rstrip("s"), "<unnamed>", f"{where} ({len(table)} candidates)")
        return next(iter(table.values()))


def _matrix(literal, rows: int, cols: int, where: str) -> Matrix:
    """Validate a nested-list literal against the shape the basis demands."""
    if rows == 0:
        if literal:
            raise SpecLoadError(f"{where}: expected an empty 0x{cols} matrix")
        return Matrix.zeros(0, cols)
    try:
        m = Matrix.from_rows(literal, cols=cols)
    except (AlgebraError, TypeError) as e:
        raise SpecLoadError(f"{where}: {e}") from e
    except (ValueError, ZeroDivisionError) as e:
        raise SpecLoadError(f"{where}: bad rational literal ({e})") from e
    if m.shape != (rows, cols):
        raise SpecLoadError(f"{where}: matrix is {m.shape[0]}x{m.shape[1]}, expected {rows}x{cols}")
    return m


def _blocks(literals, source: SymmetricSequence, target: SymmetricSequence, where: str) -> tuple:
    if len(literals) != source.max_arity:
        raise SpecLoadError(f"{where}: {len(literals)} arity blocks for max_arity {source.max_arity}")
    return tuple(_matrix(lit, target.dim(n), source.dim(n), f"{where}[arity {n}]")
                 for n, lit in enumerate(literals, start=1))


class _Resolver:
    """Builds a LoadedSpec from a validated model, in dependency order."""

    def __init__(self, model: SpecFileModel, strict: bool):
        self.model = model
        self.strict = strict
        self.loaded = LoadedSpec(model.max_arity, field_tag=model.field)

    def _verdict(self, report: CheckReport, where: str):
        if report.passed:
            return
        failure = report.failures()[0]
        message = f"{where}: axiom {failure.axiom} fails at arity {failure.arity} (witness {failure.witness_label})"
        if self.strict:
            raise SpecLoadError(message)
        logger.warning(f"lenient load: {message}")
        self.loaded.warnings.append(message)

    def sequence(self, expr: str, where: str, mode: Optional[SequenceMode] = None) -> SymmetricSequence:
        """Resolve a sequence name, "I", or a composite "A o C"."""
        if COMPOSITE_SEPARATOR in expr:
            outer, inner = (part.strip() for part in expr.split(COMPOSITE_SEPARATOR, 1))
            a = self.sequence(outer, where, mode)
            c = self.sequence(inner, where, a.mode)
            composite, _ = plethysm(a, c)
            return composite
        if expr == "I" and expr not in self.loaded.sequences:
            return unit_sequence(self.model.max_arity, mode or SequenceMode.NONSYMMETRIC)
        return self.loaded.lookup("sequences", expr, where)

    def build_sequence(self, name: str, spec: SequenceSpec) -> SymmetricSequence:
        where = f"sequences.{name}"
        if spec.max_arity != self.model.max_arity:
            raise SpecLoadError(f"{where}: max_arity {spec.max_arity} differs from the file's {self.model.max_arity}")
        if len(spec.dims) != spec.max_arity:
            raise SpecLoadError(f"{where}: {len(spec.dims)} dims for max_arity {spec.max_arity}")
        try:
            mode = SequenceMode(spec.mode)
        except ValueError as e:
            raise SpecLoadError(f"{where}: unknown mode {spec.mode!r}") from e
        generators = None
        if mode == SequenceMode.SYMMETRIC:
            if spec.actions is None or len(spec.actions) != spec.max_arity:
                raise SpecLoadError(f"{where}: symmetric sequences need one action list per arity")
            generators = []
            for n, mats in enumerate(spec.actions, start=1):
                if len(mats) != n - 1:
                    raise SpecLoadError(f"{where}.actions[arity {n}]: {len(mats)} generators, expected {n - 1}")
                d = spec.dims[n - 1]
                generators.append([_matrix(lit, d, d, f"{where}.actions[arity {n}][s_{i}]")
                                   for i, lit in enumerate(mats, start=1)])
        elif spec.actions and any(spec.actions):
            raise SpecLoadError(f"{where}: nonsymmetric sequences carry no actions")
        seq = make_sequence(spec.dims, mode, generators, name=name, basis_names=spec.basis_names)
        if seq.symmetric:
            self._verdict(check_relations(seq), where)
        return seq

    def build_morphism(self, name: str, spec: MorphismSpec) -> SeqMorphism:
        where = f"morphisms.{name}"
        source = self.sequence(spec.source, where)
        target = self.sequence(spec.target, where, source.mode)
        f = SeqMorphism(source, target, _blocks(spec.matrices, source, target, where), name=name)
        if source.symmetric:
            self._verdict(check_equivariant(f), where)
        return f

    def build_operad(self, name: str, spec: OperadSpec) -> OperadStructure:
        where = f"operads.{name}"
        carrier = self.sequence(spec.carrier, where)
        composite, _ = plethysm(carrier, carrier)
        mult = SeqMorphism(composite, carrier, _blocks(spec.mult, composite, carrier, f"{where}.mult"),
                           name=f"m_{name}")
        unit = canonical_unit(carrier)
        if spec.unit is not None:
            unit = SeqMorphism(unit.source, carrier, _blocks(spec.unit, unit.source, carrier, f"{where}.unit"),
                               name=f"e_{name}")
        augmentation = None
        if spec.augmentation is not None:
            augmentation = self.loaded.lookup("morphisms", spec.augmentation, f"{where}.augmentation")
        op = OperadStructure(carrier, mult, unit, name=name, augmentation=augmentation)
        self._verdict(check_operad(op), where)
        return op

    def build_cooperad(self, name: str, spec: CooperadSpec) -> CooperadStructure:
        where = f"cooperads.{name}"
        carrier = self.sequence(spec.carrier, where)
        composite, _ = plethysm(carrier, carrier)
        comult = SeqMorphism(carrier, composite, _blocks(spec.comult, carrier, composite, f"{where}.comult"),
                             name=f"δ_{name}")
        counit = canonical_counit(carrier)
        if spec.counit is not None:
            counit = SeqMorphism(carrier, counit.target, _blocks(spec.counit, carrier, counit.target,
                                                                 f"{where}.counit"), name=f"ε_{name}")
        coaugmentation = None
        if spec.coaugmentation is not None:
            coaugmentation = self.loaded.lookup("morphisms", spec.coaugmentation, f"{where}.coaugmentation")
        co = CooperadStructure(carrier, comult, counit, name=name, coaugmentation=coaugmentation)
        self._verdict(check_cooperad(co), where)
        return co

    def build_entwining(self, name: str, spec: EntwiningSpec) -> Entwining:
        where = f"entwinings.{name}"
        op = self.loaded.lookup("operads", spec.operad, where)
        co = self.loaded.lookup("cooperads", spec.cooperad, where)
        source, _ = plethysm(op.carrier, co.carrier)
        target, _ = plethysm(co.carrier, op.carrier)
        lam = SeqMorphism(source, target, _blocks(spec.lambda_, source, target, f"{where}.lambda"), name=f"λ_{name}")
        kind = EntwinedTriple if op.carrier is co.carrier else Entwining
        ent = kind(op, co, lam, name=name)
        self._verdict(check_entwining(ent), where)
        return ent

    def build_bialgebra(self, name: str, spec: BialgebraSpec) -> Bialgebra:
        where = f"bialgebras.{name}"
        ent = self.loaded.lookup("entwinings", spec.entwining, where)
        weights = tuple(spec.weights) if spec.weights is not None else (1,) * spec.dim
        space = GradedSpace(spec.dim, weights)
        trunc = self.model.max_arity
        free = schur_evaluate(ent.op.carrier, space, trunc)
        cofree = schur_evaluate(ent.co.carrier, space, trunc)
        if len(spec.h) != trunc or len(spec.theta) != trunc:
            raise SpecLoadError(f"{where}: h and theta need one block per arity 1..{trunc}")
        items = []
        theta_items = []
        for n in range(1, trunc + 1):
            cols = free.indices_of_arity(n)
            block = _matrix(spec.h[n - 1], space.dim, len(cols), f"{where}.h[arity {n}]")
            items.extend((i, cols[j], v) for i, j, v in block.nonzero_items())
            rows = cofree.indices_of_arity(n)
            block = _matrix(spec.theta[n - 1], len(rows), space.dim, f"{where}.theta[arity {n}]")
            theta_items.extend((rows[i], j, v) for i, j, v in block.nonzero_items())
        action = LinearMap.from_matrix(Matrix.from_sparse(space.dim, free.dim, items))
        coaction = LinearMap.from_matrix(Matrix.from_sparse(cofree.dim, space.dim, theta_items))
        b = Bialgebra(
            ent,
            AlgebraObject(ent.op, space, trunc, action, name=name),
            CoalgebraObject(ent.co, space, trunc, coaction, name=name),
            name=name,
        )
        self._verdict(check_bimodule(b), where)
        return b

    def run(self) -> LoadedSpec:
        if self.model.field != "Q":
            raise SpecLoadError(f"unsupported field {self.model.field!r}; only Q is implemented")
        if self.model.max_arity < 1:
            raise SpecLoadError("max_arity must be at least 1")
        stages = [
            ("sequences", self.model.sequences, self.build_sequence),
            ("morphisms", self.model.morphisms, self.build_morphism),
            ("operads", self.model.operads, self.build_operad),
            ("cooperads", self.model.cooperads, self.build_cooperad),
            ("entwinings", self.model.entwinings, self.build_entwining),
            ("bialgebras", self.model.bialgebras, self.build_bialgebra),
        ]
        for kind, specs, build in stages:
            table = getattr(self.loaded, kind)
            for name, spec in specs.items():
                try:
                    table[name] = build(name, spec)
                except AlgebraError as e:
                    raise SpecLoadError(f"{kind}.{name}: {e}") from e
            logger.debug(f"resolved {len(specs)} {kind}")
        return self.loaded


def resolve(model: SpecFileModel, strict: bool = True) -> LoadedSpec:
    """
    Turn a validated spec file into structures.

    In strict mode every declared structure must pass its axiom checks; in
    lenient mode failures are logged and collected in LoadedSpec.warnings.

    Raises:
        UnknownReferenceError: for a dangling name
        SpecLoadError: for shape violations, or failed axioms in strict mode
    """
    return _Resolver(model, strict).run()


def load_spec(path: str, strict: bool = True, persistence: Optional[SpecPersistence] = None) -> LoadedSpec:
    """Read and resolve a spec file; see resolve for the error behaviour."""
    persistence = persistence or JSONSpecPersistence()
    loaded = resolve(persistence.load(path), strict=strict)
    if loaded.warnings:
        logger.warning(f"{path}: loaded with {len(loaded.warnings)} failing structures")
    return loaded


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _strings(matrices: Sequence[Matrix]) -> List[List[List[str]]]:
    return [m.to_strings() for m in matrices]


def _name_in(table: Dict, obj, kind: str) -> str:
    for name, candidate in table.items():
        if candidate is obj:
            return name
    raise UnknownReferenceError(kind, getattr(obj, "name", "?"), "serialize")


def _sequence_expr(loaded: LoadedSpec, seq: SymmetricSequence) -> str:
    for name, candidate in loaded.sequences.items():
        if candidate is seq:
            return name
    if seq.max_arity >= 1 and seq.dims[0] == 1 and not any(seq.dims[1:]) and seq.name == "I":
        return "I"
    for a_name, a in loaded.sequences.items():
        for c_name, c in loaded.sequences.items():
            if a.mode == c.mode and plethysm(a, c)[0] is seq:
                return f"{a_name}{COMPOSITE_SEPARATOR}{c_name}"
    raise UnknownReferenceError("sequence", seq.name, "serialize")


def serialize(loaded: LoadedSpec) -> SpecFileModel:
    """
    Write structures back as a spec file.

    Units and counits equal to the canonical ones are omitted, as are
    (co)augmentations that were not overridden, so serialize(resolve(f))
    reproduces f up to the formatting of rationals.
    """
    model = SpecFileModel(field=loaded.field_tag, max_arity=loaded.max_arity)
    for name, seq in loaded.sequences.items():
        model.sequences[name] = SequenceSpec(
            mode=seq.mode.value,
            max_arity=seq.max_arity,
            dims=list(seq.dims),
            actions=[_strings(gens) for gens in seq.generators] if seq.symmetric else None,
            basis_names=[list(names) for names in seq.basis_names] if seq.basis_names is not None else None,
        )
    for name, f in loaded.morphisms.items():
        model.morphisms[name] = MorphismSpec(
            source=_sequence_expr(loaded, f.source),
            target=_sequence_expr(loaded, f.target),
            matrices=_strings(f.matrices),
        )
    for name, op in loaded.operads.items():
        unit = None if op.unit.same_matrices(canonical_unit(op.carrier)) else _strings(op.unit.matrices)
        augmentation = None
        if not op.augmentation.same_matrices(canonical_counit(op.carrier)):
            augmentation = _name_in(loaded.morphisms, op.augmentation, "morphism")
        model.operads[name] = OperadSpec(
            carrier=_name_in(loaded.sequences, op.carrier, "sequence"),
            mult=_strings(op.mult.matrices),
            unit=unit,
            augmentation=augmentation,
        )
    for name, co in loaded.cooperads.items():
        counit = None if co.counit.same_matrices(canonical_counit(co.carrier)) else _strings(co.counit.matrices)
        coaugmentation = None
        if not co.coaugmentation.same_matrices(canonical_unit(co.carrier)):
            coaugmentation = _name_in(loaded.morphisms, co.coaugmentation, "morphism")
        model.cooperads[name] = CooperadSpec(
            carrier=_name_in(loaded.sequences, co.carrier, "sequence"),
            comult=_strings(co.comult.matrices),
            counit=counit,
            coaugmentation=coaugmentation,
        )
    for name, ent in loaded.entwinings.items():
        model.entwinings[name] = EntwiningSpec(
            operad=_name_in(loaded.operads, ent.op, "operad"),
            cooperad=_name_in(loaded.cooperads, ent.co, "cooperad"),
            lambda_=_strings(ent.lam.matrices),
        )
    for name, b in loaded.bialgebras.items():
        model.bialgebras[name] = _bialgebra_spec(loaded, b)
    return model


def _bialgebra_spec(loaded: LoadedSpec, b: Bialgebra) -> BialgebraSpec:
    free = schur_evaluate(b.entwining.op.carrier, b.space, b.trunc)
    cofree = schur_evaluate(b.entwining.co.carrier, b.space, b.trunc)
    h_blocks = []
    theta_blocks = []
    everything = range(b.dim)
    for n in range(1, b.trunc + 1):
        h_blocks.append(b.action.matrix.submatrix(everything, free.indices_of_arity(n)))
        theta_blocks.append(b.coaction.matrix.submatrix(cofree.indices_of_arity(n), everything))
    weights = list(b.space.weights)
    return BialgebraSpec(
        entwining=_name_in(loaded.entwinings, b.entwining, "entwining"),
        dim=b.dim,
        weights=None if all(w == 1 for w in weights) else weights,
        h=_strings(h_blocks),
        theta=_strings(theta_blocks),
    )
