"""
Test corpus: the built-in triples, seeded lambda perturbations, bialgebras
(including twisted ones) and deliberately corrupted fixtures.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import numpy as np
from loguru import logger

from config.settings import settings
from data.schemas import CheckReport
from entwine.diagrams import check_entwining
from entwine.structures import Bialgebra, EntwinedTriple
from exactla import LinearMap, Matrix
from opcore.algebras import CoalgebraObject
from opcore.checks import check_cooperad, check_operad
from rigidity.bimodule import check_bimodule, twist_bialgebra
from rigidity.comparison import comparison_K
from shell.library import build_identity_triple, build_infinitesimal, corrupt_lambda
from species.schur import SchurLabel, schur_evaluate


def _bumped(matrix: Matrix, row: int, col: int, value) -> Matrix:
    entries = list(matrix.entries)
    entries[row * matrix.cols + col] = Fraction(value)
    return Matrix(matrix.rows, matrix.cols, tuple(entries))


# ---------------------------------------------------------------------------
# Perturbations and corruptions
# ---------------------------------------------------------------------------

def lambda_perturbations(t: EntwinedTriple, count: int, seed: int) -> List[EntwinedTriple]:
    """
    count copies of t, each with one entry of lambda in arity >= 2 moved by a
    nonzero integer in [-2, 2].
    """
    rng = np.random.default_rng(seed)
    arities = [n for n in range(2, t.max_arity + 1) if t.lam.arity(n).rows]
    if not arities:
        raise ValueError(f"{t.name}: no lambda block to perturb")
    out = []
    for i in range(count):
        n = int(rng.choice(arities))
        block = t.lam.arity(n)
        r = int(rng.integers(block.rows))
        c = int(rng.integers(block.cols))
        delta = int(rng.choice([-2, -1, 1, 2]))
        lam = t.lam.with_block(n, _bumped(block, r, c, block[r, c] + delta), name=f"λ~{i}")
        out.append(t.with_lambda(lam, name=f"{t.name}~{i}[{n}:{r},{c}{delta:+d}]"))
    logger.debug(f"{count} λ perturbations of {t.name} from seed {seed}")
    return out


def corrupt_mult(t: EntwinedTriple, arity: int = 3) -> EntwinedTriple:
    """m_arity doubled on the label (1;(arity)); the unit law fails there."""
    m = t.m.with_block(arity, _bumped(t.m.arity(arity), 0, 0, 2), name="m_corrupt")
    return t.replace(op=t.op.with_maps(mult=m), name=f"{t.name}/m")


def corrupt_comult(t: EntwinedTriple, arity: int = 3) -> EntwinedTriple:
    """delta_arity doubled on the label (1;(arity)); the counit law fails there."""
    delta = t.delta.with_block(arity, _bumped(t.delta.arity(arity), 0, 0, 2), name="δ_corrupt")
    return t.replace(co=t.co.with_maps(comult=delta), name=f"{t.name}/δ")


def corrupt_unit(t: EntwinedTriple) -> EntwinedTriple:
    """e_1 = 2."""
    e = t.e.with_block(1, Matrix.from_rows([[2]]), name="e_corrupt")
    return t.replace(op=t.op.with_maps(unit=e), name=f"{t.name}/e")


def degenerate_lambda(t: EntwinedTriple, arity: int = 2) -> EntwinedTriple:
    """lambda_arity set to zero; phi_arity vanishes with it, so phi is singular."""
    if not 2 <= arity <= t.max_arity:
        raise ValueError(f"no lambda block of arity {arity} below {t.max_arity}")
    block = t.lam.arity(arity)
    lam = t.lam.with_block(arity, Matrix.zeros(block.rows, block.cols), name=f"λ_{arity}=0")
    return t.with_lambda(lam, name=f"{t.name}/λ_{arity}=0")


def corrupt_coaction(b: Bialgebra) -> Bialgebra:
    """
    Double the (0,0)-component of theta on the word of length two in K(V);
    theta stays coassociative but the pentagon breaks.
    """
    ent, x, n = b.entwining, b.space, b.trunc
    if n < 2:
        raise ValueError("corrupting theta needs trunc >= 2")
    free = schur_evaluate(ent.op.carrier, len(x.indices_of_weight(1)), n)
    cofree = schur_evaluate(ent.co.carrier, x, n)
    col = free.positions[SchurLabel(2, (0, 0), 0)]
    row = cofree.positions[SchurLabel(2, (0, 0), 0)]
    coaction = LinearMap.from_matrix(_bumped(b.coaction.matrix, row, col, 2 * b.coaction.matrix[row, col]))
    coalg = CoalgebraObject(ent.co, x, n, coaction, name=f"{b.coalgebra.name}/θ")
    return Bialgebra(ent, b.algebra, coalg, name=f"{b.name}/θ")


def random_change_of_basis(space, rng: np.random.Generator) -> LinearMap:
    """Weight-preserving and invertible: unit upper triangular inside each weight, nonzero diagonal."""
    items = []
    for w in sorted(set(space.weights)):
        idx = space.indices_of_weight(w)
        for a, i in enumerate(idx):
            items.append((i, i, Fraction(int(rng.choice([-2, -1, 1, 2, 3])))))
            for j in idx[a + 1:]:
                value = int(rng.integers(-2, 3))
                if value:
                    items.append((i, j, Fraction(value)))
    return LinearMap.from_matrix(Matrix.from_sparse(space.dim, space.dim, items))


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------

@dataclass
class CorruptedFixture:
    """A broken structure and the check expected to catch it."""

    name: str
    part: str
    bialgebra: Bialgebra
    check: Callable[[], CheckReport]


@dataclass
class Corpus:
    triples: Dict[str, EntwinedTriple] = field(default_factory=dict)
    bialgebras: Dict[str, Bialgebra] = field(default_factory=dict)
    corrupted: List[CorruptedFixture] = field(default_factory=list)


def corrupted_fixtures(max_arity: int = 3, dim: int = 1) -> List[CorruptedFixture]:
    """Five fixtures, one per corrupted part: lambda, m, delta, e, theta."""
    if max_arity < 3:
        raise ValueError("corrupted fixtures need max_arity >= 3")
    t = build_infinitesimal(max_arity)
    fixtures = []
    for part, broken, check in (
        ("λ", corrupt_lambda(t), check_entwining),
        ("m", corrupt_mult(t), lambda s: check_operad(s.op)),
        ("δ", corrupt_comult(t), lambda s: check_cooperad(s.co)),
        ("e", corrupt_unit(t), lambda s: check_operad(s.op)),
    ):
        b = comparison_K(broken, dim, max_arity, validate=False)
        fixtures.append(CorruptedFixture(broken.name, part, b, lambda s=broken, c=check: c(s)))
    b = corrupt_coaction(comparison_K(t, dim, max_arity))
    fixtures.append(CorruptedFixture(b.name, "θ", b, lambda b=b: check_bimodule(b)))
    return fixtures


def build_corpus(max_arity: int = 3, dim: int = 1, count: Optional[int] = None,
                 seed: Optional[int] = None) -> Corpus:
    """
    Identity and infinitesimal triples, count lambda perturbations of the
    infinitesimal one plus one with a vanishing lambda block, K(V) for the
    first two, a twisted K(V) and the corrupted fixtures. count and seed
    default to the settings.
    """
    count = max(count if count is not None else settings.corpus_perturbations, 10)
    seed = seed if seed is not None else settings.corpus_seed
    corpus = Corpus()
    identity = build_identity_triple(max_arity)
    infinitesimal = build_infinitesimal(max_arity)
    corpus.triples[identity.name] = identity
    corpus.triples[infinitesimal.name] = infinitesimal
    for p in lambda_perturbations(infinitesimal, count, seed):
        corpus.triples[p.name] = p
    degenerate = degenerate_lambda(infinitesimal)
    corpus.triples[degenerate.name] = degenerate
    k_identity = comparison_K(identity, dim, max_arity)
    k_inf = comparison_K(infinitesimal, dim, max_arity)
    corpus.bialgebras[k_identity.name] = k_identity
    corpus.bialgebras[k_inf.name] = k_inf
    change = random_change_of_basis(k_inf.space, np.random.default_rng(seed))
    twisted = twist_bialgebra(k_inf, change, name=f"{k_inf.name}^g")
    corpus.bialgebras[twisted.name] = twisted
    corpus.corrupted = corrupted_fixtures(max_arity, dim)
    logger.info(f"corpus: {len(corpus.triples)} triples, {len(corpus.bialgebras)} bialgebras, "
                f"{len(corpus.corrupted)} corrupted fixtures")
    return corpus
