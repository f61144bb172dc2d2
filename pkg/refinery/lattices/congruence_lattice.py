# Copyright 2026 The Refinery Authors. All Rights Reserved.

import functools
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from .poset import covering_pairs, refinement_order
from ..algebras.algebra import FiniteAlgebra, require_global_support
from ..relations.congruence import join_unchecked, principal_congruence
from ..relations.partition import Partition
from ..utils.errors import CapExhaustedError
from ..utils.logger import get_logger

DEFAULT_CON_LIMIT = 10000

logger = get_logger()


class CongruenceLattice(object):
    """ Con(A) as a sorted tuple of partitions.

    Elements are ordered by class count descending, then by their class lists, so Delta comes
    first and Nabla last.

    Args:
        algebra (FiniteAlgebra):
        elements (Sequence[Partition]): Distinct congruences closed under join and meet.
    """

    def __init__(self, algebra: FiniteAlgebra, elements: Sequence[Partition]):
        self.algebra = algebra
        self.elements: Tuple[Partition, ...] = tuple(sorted(elements, key=Partition.sort_key))
        self._index = {p: i for i, p in enumerate(self.elements)}
        self._leq = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.elements)

    def __getitem__(self, i) -> Partition:
        return self.elements[i]

    def __contains__(self, theta):
        return theta in self._index

    def index(self, theta: Partition) -> int:
        return self._index[theta]

    @property
    def bottom(self) -> Partition:
        return self.elements[0]

    @property
    def top(self) -> Partition:
        return self.elements[-1]

    @property
    def leq(self) -> np.ndarray:
        if self._leq is None:
            self._leq = refinement_order(self.elements)
        return self._leq

    def join(self, theta: Partition, phi: Partition) -> Partition:
        return join_unchecked(self.algebra, theta, phi)

    def meet(self, theta: Partition, phi: Partition) -> Partition:
        return theta.meet(phi)

    def covers(self) -> List[Tuple[int, int]]:
        return covering_pairs(self.leq)

    def to_json(self) -> dict:
        return dict(size=self.algebra.size, congruences=[p.serialize() for p in self.elements])

    def __repr__(self):
        return f"CongruenceLattice({len(self)} congruences of {self.algebra!r})"


def all_congruences(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> CongruenceLattice:
    """ Every congruence of algebra, as the join-closure of the principal congruences.

    Args:
        algebra (FiniteAlgebra): Non-empty algebra.
        limit (int): Abort once more than limit congruences are found.

    Raises:
        GlobalSupportError: algebra is empty.
        CapExhaustedError: more than limit congruences.
    """
    return _all_congruences(algebra, int(limit))


@functools.lru_cache(maxsize=128)
def _all_congruences(algebra: FiniteAlgebra, limit: int) -> CongruenceLattice:
    require_global_support(algebra)
    n = algebra.size
    found = {Partition.delta(n): None}
    for a in range(n):
        for b in range(a + 1, n):
            found.setdefault(principal_congruence(algebra, a, b), None)
    principals = len(found)
    if len(found) > limit:
        raise CapExhaustedError("congruence lattice", limit)

    elements = list(found)
    i = 0
    while i < len(elements):
        x = elements[i]
        for j in range(i):
            y = elements[j]
            if x.refines(y) or y.refines(x):
                continue
            z = join_unchecked(algebra, x, y)
            if z not in found:
                found[z] = None
                elements.append(z)
                if len(elements) > limit:
                    raise CapExhaustedError("congruence lattice", limit)
        i += 1
    logger.debug(f"Con of {algebra!r}: {principals} principal, {len(elements)} total congruences")
    return CongruenceLattice(algebra, elements)
