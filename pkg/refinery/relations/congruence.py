# Copyright 2026 The Refinery Authors. All Rights Reserved.

from typing import Iterable, Optional, Tuple

import numpy as np

from .binrel import BinRel
from .calculus import Relation, as_binrel, compose
from .partition import Partition
from .union_find import UnionFind
from ..algebras.algebra import FiniteAlgebra, flat_index, tuple_digits
from ..utils.errors import NotACongruenceError, SizeMismatchError
from ..utils.logger import get_logger

logger = get_logger()


def _closure(algebra: FiniteAlgebra, uf: UnionFind) -> Partition:
    # Identify t(x) with t(rep(x)) for every basic translation t until nothing merges.
    rows, _ = algebra.translations
    rounds = 0
    while True:
        roots = uf.roots()
        if rows.shape[0] == 0:
            break
        left = roots[rows]
        right = roots[rows[:, roots]]
        mask = left != right
        if not mask.any():
            break
        pairs = np.unique(np.stack([left[mask], right[mask]], axis=1), axis=0)
        for x, y in pairs:
            uf.union(int(x), int(y))
        rounds += 1
    logger.debug(f"congruence closure on {algebra.size} elements reached its fixpoint after {rounds} rounds")
    return Partition(uf.roots())


def generated_congruence(algebra: FiniteAlgebra, seed: Iterable[Tuple[int, int]]) -> Partition:
    """ Least congruence of algebra containing every seed pair.

    Args:
        algebra (FiniteAlgebra):
        seed (Iterable[Tuple[int, int]]): Pairs of elements.

    Raises:
        ValueError: A pair lies outside the universe.
    """
    n = algebra.size
    uf = UnionFind(n)
    for x, y in seed:
        if not (0 <= x < n and 0 <= y < n):
            raise ValueError(f"pair {(x, y)} out of range [0, {n})")
        uf.union(int(x), int(y))
    return _closure(algebra, uf)


def principal_congruence(algebra: FiniteAlgebra, a, b) -> Partition:
    return generated_congruence(algebra, [(a, b)])


def find_incompatibility(algebra: FiniteAlgebra, theta: Partition) -> Optional[Tuple[str, int, Tuple[int, int]]]:
    """ First (symbol, coordinate, pair) where theta fails to be compatible, None for a congruence.
    """
    if theta.size != algebra.size:
        raise SizeMismatchError(f"partition on {theta.size} elements for an algebra of size {algebra.size}")
    rows, spans = algebra.translations
    if rows.shape[0] == 0:
        return None
    labels, reps = theta.labels, theta.representatives
    bad = labels[rows] != labels[rows[:, reps]]
    if not bad.any():
        return None
    row, x = (int(v) for v in np.argwhere(bad)[0])
    for symbol, coordinate, start, stop in spans:
        if start <= row < stop:
            return symbol, coordinate, (int(reps[x]), x)
    raise RuntimeError("translation row outside every span")


def check_congruence(algebra: FiniteAlgebra, theta: Partition):
    """ Raise NotACongruenceError naming the violating operation, coordinate and pair.
    """
    failure = find_incompatibility(algebra, theta)
    if failure is not None:
        raise NotACongruenceError(*failure)


def is_congruence(algebra: FiniteAlgebra, theta: Partition) -> bool:
    return find_incompatibility(algebra, theta) is None


def is_compatible(algebra: FiniteAlgebra, relation: Relation):
    """ Whether a raw relation is a subuniverse of A x A.

    Returns:
        (True, None) or (False, (symbol, left arguments, right arguments)).
    """
    r = as_binrel(relation)
    if r.size != algebra.size:
        raise SizeMismatchError(f"relation on {r.size} elements for an algebra of size {algebra.size}")
    xs, ys = np.nonzero(r.matrix)
    for symbol, arity in algebra.signature:
        table = algebra.table(symbol)
        if arity == 0:
            c = int(table[0])
            if not r.matrix[c, c]:
                return False, (symbol, (), ())
            continue
        # every arity-tuple of related pairs
        choice = tuple_digits(len(xs) ** arity, len(xs), arity)
        left = table[flat_index([xs[c] for c in choice], algebra.size)]
        right = table[flat_index([ys[c] for c in choice], algebra.size)]
        bad = np.nonzero(~r.matrix[left, right])[0]
        if len(bad) > 0:
            p = choice[:, bad[0]]
            return False, (symbol, tuple(int(v) for v in xs[p]), tuple(int(v) for v in ys[p]))
    return True, None


def join(algebra: FiniteAlgebra, theta: Partition, phi: Partition) -> Partition:
    """ Congruence join, generated_congruence of the union.

    Raises:
        NotACongruenceError: theta or phi is not a congruence of algebra.
    """
    check_congruence(algebra, theta)
    check_congruence(algebra, phi)
    return join_unchecked(algebra, theta, phi)


def join_unchecked(algebra: FiniteAlgebra, theta: Partition, phi: Partition) -> Partition:
    uf = UnionFind(algebra.size)
    for x, y in theta.seed_pairs() + phi.seed_pairs():
        uf.union(x, y)
    return _closure(algebra, uf)


def meet(theta: Partition, phi: Partition) -> Partition:
    return theta.meet(phi)


def permutes(theta: Relation, phi: Relation) -> bool:
    return compose(theta, phi) == compose(phi, theta)


def as_partition(relation: BinRel) -> Partition:
    """ Partition of an equivalence BinRel.
    """
    if not relation.is_equivalence():
        raise ValueError("relation is not an equivalence relation")
    return Partition(np.argmax(relation.matrix, axis=1))
