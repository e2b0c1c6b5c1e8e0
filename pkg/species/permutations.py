"""
Permutations as image tuples.

A permutation p of {0..n-1} is stored as (p(0), ..., p(n-1)). Composition is
right-to-left: compose(p, q)(j) = p(q(j)). Adjacent transpositions s_i are
numbered from 1 and swap the points i-1 and i.
"""

from functools import lru_cache
from itertools import permutations as _permutations
from typing import Dict, List, Sequence, Tuple

Perm = Tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[j] for j in q)


def inverse_perm(p: Perm) -> Perm:
    inv = [0] * len(p)
    for j, image in enumerate(p):
        inv[image] = j
    return tuple(inv)


def adjacent(n: int, i: int) -> Perm:
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not an adjacent transposition of S_{n}")
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


@lru_cache(maxsize=None)
def reduced_word(p: Perm) -> Tuple[int, ...]:
    """
    Adjacent-transposition word (a_1, ..., a_k) with p = s_{a_1} s_{a_2} ... s_{a_k}.

    Right descents are removed one at a time (bubble sort), so the word is
    reduced and its length is the inversion count of p.
    """
    q = list(p)
    collected: List[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(1, len(q)):
            if q[i - 1] > q[i]:
                q[i - 1], q[i] = q[i], q[i - 1]
                collected.append(i)
                changed = True
    return tuple(reversed(collected))


@lru_cache(maxsize=None)
def all_perms(n: int) -> Tuple[Perm, ...]:
    return tuple(_permutations(range(n)))


def act_on_word(p: Perm, word: Sequence) -> tuple:
    """Move the letter at position j to position p(j)."""
    out = [None] * len(word)
    for j, letter in enumerate(word):
        out[p[j]] = letter
    return tuple(out)


def sorting_perm(word: Sequence) -> Tuple[tuple, Perm]:
    """
    Return (sorted word w, sigma) with act_on_word(sigma, w) == word.

    The sort is stable, so sigma is the minimal coset representative.
    """
    order = sorted(range(len(word)), key=lambda j: (word[j], j))
    return tuple(word[j] for j in order), tuple(order)


def stabilizer(word: Sequence) -> List[Perm]:
    """Permutations fixing a word under act_on_word."""
    return [p for p in all_perms(len(word)) if act_on_word(p, word) == tuple(word)]


def rgs_relabel(assignment: Sequence[int]) -> Tuple[Perm, Tuple[int, ...]]:
    """
    Relabel blocks by order of first appearance.

    Returns (r, r . assignment) where r is the block relabelling and the
    second component is a restricted growth string.
    """
    k = max(assignment) + 1 if assignment else 0
    r = [-1] * k
    nxt = 0
    for value in assignment:
        if r[value] < 0:
            r[value] = nxt
            nxt += 1
    if nxt != k:
        raise ValueError(f"assignment {tuple(assignment)} does not use every block")
    relabel = tuple(r)
    return relabel, tuple(relabel[v] for v in assignment)


def is_rgs(assignment: Sequence[int]) -> bool:
    seen = -1
    for value in assignment:
        if value > seen + 1:
            return False
        seen = max(seen, value)
    return True


def block_points(assignment: Sequence[int], k: int) -> List[List[int]]:
    blocks: List[List[int]] = [[] for _ in range(k)]
    for point, block in enumerate(assignment):
        blocks[block].append(point)
    return blocks


def block_reordering(p: Perm, points: Sequence[int]) -> Perm:
    """
    Rank permutation induced by p on a sorted block of points.

    The r-th smallest point of the block is sent to the h(r)-th smallest point
    of its image under p.
    """
    images = [p[x] for x in points]
    ranks: Dict[int, int] = {value: rank for rank, value in enumerate(sorted(images))}
    return tuple(ranks[value] for value in images)


def consecutive_assignment(composition: Sequence[int]) -> Tuple[int, ...]:
    out: List[int] = []
    for block, size in enumerate(composition):
        out.extend([block] * size)
    return tuple(out)


@lru_cache(maxsize=None)
def compositions(n: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    """Ordered compositions of n into k positive parts, lexicographically."""
    if k == 0:
        return ((),) if n == 0 else ()
    if k == 1:
        return ((n,),) if n >= 1 else ()
    out = []
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def surjections(n: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    """All assignments of n points onto k nonempty blocks, lexicographically."""
    out = []

    def extend(prefix: List[int]):
        if len(prefix) == n:
            if len(set(prefix)) == k:
                out.append(tuple(prefix))
            return
        missing = k - len(set(prefix))
        if n - len(prefix) < missing:
            return
        for value in range(k):
            prefix.append(value)
            extend(prefix)
            prefix.pop()

    extend([])
    return tuple(out)


@lru_cache(maxsize=None)
def restricted_growth_strings(n: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    """Set partitions of n points into k blocks, as RGS in lexicographic order."""
    return tuple(a for a in surjections(n, k) if is_rgs(a))


def shuffle_for(assignment: Sequence[int], k: int) -> Perm:
    """
    Permutation carrying the consecutive assignment of the same block sizes
    onto `assignment`, order-preserving inside each block.

    Position start_j + r of the consecutive layout goes to the r-th point of
    block j.
    """
    out: List[int] = []
    for points in block_points(assignment, k):
        out.extend(points)
    return tuple(out)
