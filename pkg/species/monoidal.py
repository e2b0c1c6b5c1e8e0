"""
Monoidal structure of plethysm: horizontal composition, associators and unitors.

Every map is computed on canonical representatives: the image of a true
basis label is assembled on the ordered model and then projected back to
the true basis of the target.
"""

from fractions import Fraction
from typing import List

from data.schemas import CheckReport
from exactla import LinearMap, inverse
from species.builtins import unit_sequence
from species.morphism import SeqMorphism, compare
from species.permutations import block_points
from species.plethysm import PlethysmLabel, plethysm
from species.sequence import SymmetricSequence, require_same_mode
from species.sparse import SparseVector, add_term, columns_to_matrix, tensor_terms


def unit_for(seq: SymmetricSequence) -> SymmetricSequence:
    return unit_sequence(seq.max_arity, seq.mode)


def hcompose(f: SeqMorphism, g: SeqMorphism) -> SeqMorphism:
    """
    Horizontal composite f o g : M o N -> M' o N'.

    f acts on the outer factor and g on each inner factor; the assignment is
    untouched, so representatives stay representatives.
    """
    require_same_mode(f.source, g.source)
    source, src_index = plethysm(f.source, g.source)
    target, tgt_index = plethysm(f.target, g.target)
    blocks = []
    for n in range(1, source.max_arity + 1):
        columns: List[SparseVector] = []
        for label in src_index.labels_at(n):
            factors = [f.arity(label.k).column_items(label.mu)]
            factors.extend(g.arity(i).column_items(nu) for i, nu in zip(label.composition, label.nus))
            col: SparseVector = {}
            for indices, coeff in tensor_terms(factors):
                image = PlethysmLabel(label.k, label.composition, indices[0], indices[1:], label.assignment)
                add_term(col, tgt_index.position(image), coeff)
            columns.append(col)
        blocks.append(columns_to_matrix(columns, target.dim(n)))
    return SeqMorphism(source, target, tuple(blocks), name=f"({f.name}∘{g.name})")


def whisker_left(seq: SymmetricSequence, g: SeqMorphism) -> SeqMorphism:
    """id_seq o g"""
    return hcompose(SeqMorphism.identity(seq), g)


def whisker_right(f: SeqMorphism, seq: SymmetricSequence) -> SeqMorphism:
    """f o id_seq"""
    return hcompose(f, SeqMorphism.identity(seq))


def associator(m: SymmetricSequence, n: SymmetricSequence, p: SymmetricSequence) -> SeqMorphism:
    """
    Rebracketing (M o N) o P -> M o (N o P).

    A source label nests an (M o N)(k) label (l blocks, assignment b) inside
    an outer assignment a of the n points onto k blocks. The target outer
    assignment is b . a; inside each outer block the k-blocks are renumbered
    in increasing order and the resulting N o P label is projected before the
    outer label is.
    """
    require_same_mode(m, n, p)
    mn, mn_index = plethysm(m, n)
    source, src_index = plethysm(mn, p)
    np_, np_index = plethysm(n, p)
    target, tgt_index = plethysm(m, np_)
    blocks = []
    for arity in range(1, source.max_arity + 1):
        columns: List[SparseVector] = []
        for label in src_index.labels_at(arity):
            inner = mn_index.labels_at(label.k)[label.mu]
            outer_assignment = tuple(inner.assignment[q] for q in label.assignment)
            factors = []
            for j, k_blocks in enumerate(block_points(inner.assignment, inner.k)):
                rank = {q: r for r, q in enumerate(k_blocks)}
                points = [x for x in range(arity) if outer_assignment[x] == j]
                sub_assignment = tuple(rank[label.assignment[x]] for x in points)
                sub_nus = tuple(label.nus[q] for q in k_blocks)
                projected = np_index.project(len(k_blocks), {inner.nus[j]: Fraction(1)}, sub_nus, sub_assignment)
                factors.append(tuple(projected.items()))
            col: SparseVector = {}
            for inner_positions, coeff in tensor_terms(factors):
                image = tgt_index.project(inner.k, {inner.mu: coeff}, inner_positions, outer_assignment)
                for pos, value in image.items():
                    add_term(col, pos, value)
            columns.append(col)
        blocks.append(columns_to_matrix(columns, target.dim(arity)))
    return SeqMorphism(source, target, tuple(blocks), name=f"assoc_{m.name},{n.name},{p.name}")


def inverse_morphism(f: SeqMorphism) -> SeqMorphism:
    """Arity-wise inverse of an isomorphism of sequences."""
    blocks = tuple(inverse(LinearMap.from_matrix(f.arity(k))).matrix for k in range(1, f.max_arity + 1))
    return SeqMorphism(f.target, f.source, blocks, name=f"{f.name}⁻¹")


def associator_inverse(m: SymmetricSequence, n: SymmetricSequence, p: SymmetricSequence) -> SeqMorphism:
    return inverse_morphism(associator(m, n, p))


def left_unitor(seq: SymmetricSequence) -> SeqMorphism:
    """I o M -> M: the only labels are (1;(n)) carrying nu in M(n)."""
    source, index = plethysm(unit_for(seq), seq)
    blocks = []
    for n in range(1, seq.max_arity + 1):
        columns = [{label.nus[0]: Fraction(1)} for label in index.labels_at(n)]
        blocks.append(columns_to_matrix(columns, seq.dim(n)))
    return SeqMorphism(source, seq, tuple(blocks), name=f"l_{seq.name}")


def right_unitor(seq: SymmetricSequence) -> SeqMorphism:
    """M o I -> M: the only representatives are (n;(1,...,1)) with the identity assignment."""
    source, index = plethysm(seq, unit_for(seq))
    blocks = []
    for n in range(1, seq.max_arity + 1):
        columns = [{label.mu: Fraction(1)} for label in index.labels_at(n)]
        blocks.append(columns_to_matrix(columns, seq.dim(n)))
    return SeqMorphism(source, seq, tuple(blocks), name=f"r_{seq.name}")


def left_unitor_inverse(seq: SymmetricSequence) -> SeqMorphism:
    return inverse_morphism(left_unitor(seq))


def right_unitor_inverse(seq: SymmetricSequence) -> SeqMorphism:
    return inverse_morphism(right_unitor(seq))


def check_coherence(m: SymmetricSequence, n: SymmetricSequence, p: SymmetricSequence,
                    q: SymmetricSequence) -> CheckReport:
    """
    Pentagon for ((M o N) o P) o Q -> M o (N o (P o Q)) and triangle for
    (M o I) o N -> M o N, arity by arity.
    """
    mn, _ = plethysm(m, n)
    np_, _ = plethysm(n, p)
    pq, _ = plethysm(p, q)
    two_steps = associator(m, n, pq) @ associator(mn, p, q)
    three_steps = (whisker_left(m, associator(n, p, q)) @ associator(m, np_, q)
                   @ whisker_right(associator(m, n, p), q))
    unit = unit_for(m)
    triangle_lhs = whisker_left(m, left_unitor(n)) @ associator(m, unit, n)
    triangle_rhs = whisker_right(right_unitor(m), n)
    report = CheckReport(subject=f"coherence {m.name},{n.name},{p.name},{q.name}", checked_arity=m.max_arity)
    report.entries.extend(compare(two_steps, three_steps, "pentagon"))
    report.entries.extend(compare(triangle_lhs, triangle_rhs, "triangle"))
    return report
