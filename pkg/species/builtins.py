"""Built-in symmetric sequences."""

from functools import lru_cache

from exactla import ONE, Matrix
from species.permutations import adjacent, all_perms, compose
from species.sequence import SequenceMode, SymmetricSequence, make_sequence


def unit_sequence(max_arity: int, mode: SequenceMode = SequenceMode.NONSYMMETRIC) -> SymmetricSequence:
    """The plethysm unit: k in arity 1, zero elsewhere. One shared instance per (arity, mode)."""
    return _unit_sequence(max_arity, SequenceMode(mode))


@lru_cache(maxsize=None)
def _unit_sequence(max_arity: int, mode: SequenceMode) -> SymmetricSequence:
    dims = [1] + [0] * (max_arity - 1)
    generators = None
    if mode == SequenceMode.SYMMETRIC:
        generators = [[Matrix.zeros(dims[n - 1], dims[n - 1]) for _ in range(n - 1)]
                      for n in range(1, max_arity + 1)]
    return make_sequence(dims, mode, generators, name="I", basis_names=[["1"]] + [[] for _ in dims[1:]])


@lru_cache(maxsize=None)
def as_sequence(max_arity: int) -> SymmetricSequence:
    """Nonsymmetric sequence with one generator mu_n per arity."""
    return make_sequence(
        [1] * max_arity,
        SequenceMode.NONSYMMETRIC,
        name="As",
        basis_names=[[f"mu_{n}"] for n in range(1, max_arity + 1)],
    )


def _constant_symmetric(max_arity: int, sign: int, name: str) -> SymmetricSequence:
    generators = [[Matrix.from_rows([[sign]]) for _ in range(n - 1)] for n in range(1, max_arity + 1)]
    return make_sequence(
        [1] * max_arity,
        SequenceMode.SYMMETRIC,
        generators,
        name=name,
        basis_names=[[f"{name.lower()}_{n}"] for n in range(1, max_arity + 1)],
    )


@lru_cache(maxsize=None)
def com_sequence(max_arity: int) -> SymmetricSequence:
    """Trivial one-dimensional representation in every arity."""
    return _constant_symmetric(max_arity, 1, "Com")


@lru_cache(maxsize=None)
def sign_sequence(max_arity: int) -> SymmetricSequence:
    """Sign representation in every arity."""
    return _constant_symmetric(max_arity, -1, "Sgn")


@lru_cache(maxsize=None)
def regular_sequence(max_arity: int, arity: int) -> SymmetricSequence:
    """
    Regular representation of S_arity in one arity, trivial elsewhere.

    The basis of the regular arity is all_perms(arity); s_i sends e_p to e_{s_i p}.
    """
    dims = []
    generators = []
    names = []
    for n in range(1, max_arity + 1):
        if n != arity:
            dims.append(1)
            generators.append([Matrix.identity(1) for _ in range(n - 1)])
            names.append([f"t_{n}"])
            continue
        perms = all_perms(n)
        where = {p: j for j, p in enumerate(perms)}
        dims.append(len(perms))
        gens = []
        for i in range(1, n):
            s = adjacent(n, i)
            items = [(where[compose(s, p)], j, ONE) for j, p in enumerate(perms)]
            gens.append(Matrix.from_sparse(len(perms), len(perms), items))
        generators.append(gens)
        names.append(["".join(str(x) for x in p) for p in perms])
    return make_sequence(dims, SequenceMode.SYMMETRIC, generators, name=f"Reg{arity}", basis_names=names)
