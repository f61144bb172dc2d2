# Copyright 2026 The Refinery Authors. All Rights Reserved.

from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .algebra import FiniteAlgebra, flat_index
from ..utils.logger import get_logger

logger = get_logger()

_CHUNK = 1 << 16


class _RowStore(object):
    """ Growing (m, N) array of distinct tuples with a bytes index.
    """

    def __init__(self, width, dtype):
        self.width = width
        self.dtype = dtype
        self.data = np.zeros((16, width), dtype=dtype)
        self.count = 0
        self.index = {}

    def add(self, row) -> Tuple[int, bool]:
        key = row.tobytes()
        found = self.index.get(key)
        if found is not None:
            return found, False
        if self.count == self.data.shape[0]:
            self.data = np.concatenate([self.data, np.zeros_like(self.data)], axis=0)
        self.data[self.count] = row
        self.index[key] = self.count
        self.count += 1
        return self.count - 1, True

    def get(self, row) -> Optional[int]:
        return self.index.get(np.asarray(row, dtype=self.dtype).tobytes())

    def rows(self) -> np.ndarray:
        return self.data[:self.count]


class SubpowerClosure(object):
    """ Result of closing a set of tuples of A^N under the basic operations.

    Attributes:
        rows (np.ndarray): (m, N) distinct tuples, generators first.
        parents (list): For row i, (None, (g,)) for generator g, or (symbol, argument rows).
        complete (bool): False when the enumeration stopped at its limit or at the target.
        target_index (int, None): Row index of the target once reached.
    """

    def __init__(self, rows, parents, complete, target_index=None):
        rows.setflags(write=False)
        self.rows = rows
        self.parents = parents
        self.complete = complete
        self.target_index = target_index

    def __len__(self):
        return self.rows.shape[0]

    def index_of(self, row) -> Optional[int]:
        matches = np.nonzero(np.all(self.rows == np.asarray(row)[None, :], axis=1))[0]
        return int(matches[0]) if len(matches) else None

    def term(self, index, leaves: Sequence, make: Callable):
        """ Rebuild the term producing row `index`.

        Args:
            index (int):
            leaves (Sequence): Term for each generator.
            make (callable): (symbol, argument terms) -> term.
        """
        memo = {}

        def _build(i):
            if i not in memo:
                symbol, args = self.parents[i]
                memo[i] = leaves[args[0]] if symbol is None else make(symbol, tuple(_build(j) for j in args))
            return memo[i]

        return _build(index)


def subpower_closure(algebra: FiniteAlgebra,
                     generators,
                     limit: Optional[int] = None,
                     target=None,
                     closed: int = 0) -> SubpowerClosure:
    """ Close the generator tuples of A^N under every basic operation, generation by generation.

    Each generation only combines tuples where at least one argument is new, so the work is
    proportional to the number of new argument tuples (semi-naive evaluation).

    Args:
        algebra (FiniteAlgebra):
        generators (array_like): (g, N) tuples.
        limit (int, None): Stop once more than limit distinct tuples exist.
        target (array_like, None): Stop as soon as this tuple is generated.
        closed (int): The first `closed` generators already form a closed set.

    Returns:
        SubpowerClosure.
    """
    n = algebra.size
    generators = np.asarray(generators, dtype=np.intp)
    if generators.ndim != 2:
        raise ValueError(f"generators must be a (g, N) array, got shape {generators.shape}")
    width = generators.shape[1]
    dtype = np.uint8 if n <= 256 else np.uint16
    store = _RowStore(width, dtype)
    parents: List[Tuple] = []
    target_key = None if target is None else np.asarray(target, dtype=dtype).tobytes()

    def _finish(complete):
        found = None if target_key is None else store.index.get(target_key)
        logger.debug(f"subpower closure in A^{width} with {store.count} tuples, complete={complete}")
        return SubpowerClosure(store.rows().astype(np.intp), parents, complete, found)

    for g, row in enumerate(generators):
        _, added = store.add(row.astype(dtype))
        if added:
            parents.append((None, (g,)))
    for symbol, arity in algebra.signature:
        if arity == 0 and closed == 0:
            _, added = store.add(np.full(width, algebra.table(symbol)[0], dtype=dtype))
            if added:
                parents.append((symbol, ()))
    if target_key is not None and target_key in store.index:
        return _finish(False)

    ops = [(symbol, arity, algebra.table(symbol)) for symbol, arity in algebra.signature if arity > 0]
    old = min(closed, store.count)
    while old < store.count:
        total = store.count
        for symbol, arity, table in ops:
            for i in range(arity):
                # positions before i take old tuples, position i new ones, positions after i any
                bounds = [(0, old)] * i + [(old, total)] + [(0, total)] * (arity - 1 - i)
                sizes = [hi - lo for lo, hi in bounds]
                count = int(np.prod(sizes))
                for start in range(0, count, _CHUNK):
                    flat = np.arange(start, min(start + _CHUNK, count), dtype=np.intp)
                    picks = []
                    for (lo, _), size in zip(reversed(bounds), reversed(sizes)):
                        picks.append(lo + flat % size)
                        flat = flat // size
                    picks.reverse()
                    data = store.data
                    result = table[flat_index([data[p].astype(np.intp) for p in picks], n)].astype(dtype)
                    _, first = np.unique(result, axis=0, return_index=True)
                    for j in np.sort(first):
                        index, added = store.add(result[j])
                        if not added:
                            continue
                        parents.append((symbol, tuple(int(p[j]) for p in picks)))
                        if target_key is not None and index == store.index.get(target_key):
                            return _finish(False)
                        if limit is not None and store.count > limit:
                            return _finish(False)
        old = total
    return _finish(True)
