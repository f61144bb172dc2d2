# Copyright 2026 The Refinery Authors. All Rights Reserved.

from typing import List, Optional, Tuple

import numpy as np

from .algebra import ElementMap, FiniteAlgebra, flat_index, tuple_digits
from ..utils.errors import SignatureMismatchError, SizeMismatchError


def is_homomorphism(a: FiniteAlgebra, b: FiniteAlgebra, f: ElementMap) -> Tuple[bool, Optional[Tuple]]:
    """ Whether f commutes with every operation.

    Returns:
        (True, None), or (False, (symbol, argument tuple in A)) for the first failing entry.
    """
    if a.signature != b.signature:
        raise SignatureMismatchError("homomorphisms need a common signature")
    if f.source_size != a.size or f.target_size != b.size:
        raise SizeMismatchError(f"map {f.source_size} -> {f.target_size} does not fit {a.size} -> {b.size}")
    v = f.values
    for symbol, arity in a.signature:
        args = tuple_digits(a.size ** arity, a.size, arity)
        lhs = v[a.table(symbol)[flat_index(args, a.size)]] if arity else v[a.table(symbol)]
        rhs = b.table(symbol)[flat_index(v[args], b.size)] if arity else b.table(symbol)
        bad = np.nonzero(lhs != rhs)[0]
        if len(bad) > 0:
            return False, (symbol, tuple(int(x) for x in args[:, bad[0]]))
    return True, None


def table_fingerprint(algebra: FiniteAlgebra) -> Tuple:
    """ Isomorphism invariant: size plus, per operation, the sorted multiset of value counts.
    """
    parts = [algebra.size]
    for symbol, arity in algebra.signature:
        counts = np.bincount(algebra.table(symbol), minlength=algebra.size)
        parts.append((symbol, arity, tuple(sorted(int(c) for c in counts))))
    return tuple(parts)


def _profiles(algebra: FiniteAlgebra) -> List[Tuple]:
    n = algebra.size
    profile = [[] for _ in range(n)]
    for symbol, arity in algebra.signature:
        table = algebra.table(symbol)
        counts = np.bincount(table, minlength=n)
        diagonal = table[flat_index([np.arange(n)] * arity, n)] if arity else None
        for x in range(n):
            entry = [int(counts[x])]
            if arity:
                entry.append(int(diagonal[x] == x))
                entry.append(int(np.sum(diagonal == x)))
            profile[x].append(tuple(entry))
    return [tuple(p) for p in profile]


class _Search(object):

    def __init__(self, a: FiniteAlgebra, b: FiniteAlgebra):
        self.a, self.b = a, b
        self.n = a.size
        self.ops = []
        for symbol, arity in a.signature:
            if arity == 0:
                continue
            args = tuple_digits(self.n ** arity, self.n, arity)
            self.ops.append((args, a.table(symbol), b.table(symbol)))
        self.profile_a, self.profile_b = _profiles(a), _profiles(b)
        self.candidates = [[y for y in range(self.n) if self.profile_b[y] == self.profile_a[x]]
                           for x in range(self.n)]

    def propagate(self, f: np.ndarray) -> bool:
        """ Extend f along fully assigned argument tuples, False on a contradiction.
        """
        changed = True
        while changed:
            changed = False
            for args, table_a, table_b in self.ops:
                assigned = np.all(f[args] >= 0, axis=0)
                if not assigned.any():
                    continue
                sel = args[:, assigned]
                value = table_a[flat_index(sel, self.n)]
                image = table_b[flat_index(f[sel], self.n)]
                current = f[value]
                if np.any((current >= 0) & (current != image)):
                    return False
                for x, y in zip(value[current < 0], image[current < 0]):
                    if f[x] >= 0:
                        if f[x] != y:
                            return False
                        continue
                    if np.any(f == y):
                        return False
                    f[x] = y
                    changed = True
        return True

    def run(self, f: np.ndarray) -> Optional[np.ndarray]:
        unassigned = np.nonzero(f < 0)[0]
        if len(unassigned) == 0:
            return f
        x = int(unassigned[0])
        used = set(int(y) for y in f[f >= 0])
        for y in self.candidates[x]:
            if y in used:
                continue
            trial = f.copy()
            trial[x] = y
            if self.propagate(trial):
                result = self.run(trial)
                if result is not None:
                    return result
        return None


def find_isomorphism(a: FiniteAlgebra, b: FiniteAlgebra) -> Optional[ElementMap]:
    """ First isomorphism A -> B found by backtracking in element order, None if there is none.

    Raises:
        SignatureMismatchError: signatures differ.
    """
    if a.signature != b.signature:
        raise SignatureMismatchError("isomorphisms need a common signature")
    if a.size != b.size or table_fingerprint(a) != table_fingerprint(b):
        return None
    n = a.size
    search = _Search(a, b)
    if any(len(c) == 0 for c in search.candidates):
        return None
    if sorted(search.profile_a) != sorted(search.profile_b):
        return None
    f = np.full(n, -1, dtype=np.intp)
    for symbol, arity in a.signature:
        if arity == 0:
            x, y = int(a.table(symbol)[0]), int(b.table(symbol)[0])
            if f[x] >= 0 and f[x] != y or (f[x] < 0 and np.any(f == y)):
                return None
            f[x] = y
    if not search.propagate(f):
        return None
    result = search.run(f)
    if result is None:
        return None
    return ElementMap(result, n)
