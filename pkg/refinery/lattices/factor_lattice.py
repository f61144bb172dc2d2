# Copyright 2026 The Refinery Authors. All Rights Reserved.

import functools
from collections import OrderedDict
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .congruence_lattice import DEFAULT_CON_LIMIT, all_congruences
from .poset import covering_pairs, greatest, least, refinement_order
from ..algebras.algebra import FiniteAlgebra
from ..relations.calculus import compose, intersect
from ..relations.congruence import check_congruence, join_unchecked
from ..relations.partition import Partition
from ..utils.logger import get_logger

logger = get_logger()


def is_factor_pair(algebra: FiniteAlgebra, f: Partition, g: Partition) -> Tuple[bool, Optional[dict]]:
    """ Whether F and G are complementary factor congruences: F meet G = Delta and F o G = Nabla.

    Returns:
        (True, None), or (False, witness) where witness names the failing condition and a pair.

    Raises:
        NotACongruenceError: F or G is not a congruence.
    """
    check_congruence(algebra, f)
    check_congruence(algebra, g)
    common = intersect(f, g).matrix & ~np.eye(algebra.size, dtype=bool)
    if common.any():
        x, y = (int(v) for v in np.argwhere(common)[0])
        return False, dict(condition="intersection", pair=[x, y])
    missing = ~compose(f, g).matrix
    if missing.any():
        x, z = (int(v) for v in np.argwhere(missing)[0])
        return False, dict(condition="composition", pair=[x, z])
    return True, None


def complementary(f: Partition, g: Partition) -> bool:
    """ Factor pair test for two congruences of the same algebra.

    F meet G = Delta makes x -> (F-class, G-class) injective, F o G = Nabla makes it onto all
    class pairs, together they mean |A| = |A/F| * |A/G| with injective class pairs.
    """
    if f.num_classes * g.num_classes != f.size:
        return False
    return len(np.unique(f.labels * g.num_classes + g.labels)) == f.size


class FactorLattice(object):
    """ The poset F(X) of factor congruences with every complement of each element.

    Args:
        algebra (FiniteAlgebra):
        elements (Sequence[Partition]): Factor congruences in Con order.
        complements (Sequence[Sequence[int]]): Indices into elements of the complements of each element.
    """

    def __init__(self, algebra: FiniteAlgebra, elements: Sequence[Partition], complements: Sequence[Sequence[int]]):
        self.algebra = algebra
        self.elements: Tuple[Partition, ...] = tuple(elements)
        self.complements: Tuple[Tuple[int, ...], ...] = tuple(tuple(c) for c in complements)
        self._index = {p: i for i, p in enumerate(self.elements)}
        self.leq = refinement_order(self.elements)
        self.bottom = self._index[Partition.delta(algebra.size)]
        self.top = self._index[Partition.nabla(algebra.size)]
        self.sublattice_witness = self._find_non_closed_pair()
        self.lattice_witness = None
        self._lub, self._glb = self._poset_operations()
        self.flags = self._compute_flags()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, theta):
        return theta in self._index

    def index(self, theta: Partition) -> int:
        return self._index[theta]

    def complements_of(self, theta: Partition) -> List[Partition]:
        return [self.elements[j] for j in self.complements[self._index[theta]]]

    def pairs(self) -> List[Tuple[Partition, Partition]]:
        """ Every factor pair (F, F') in element order.
        """
        return [(f, self.elements[j]) for f, c in zip(self.elements, self.complements) for j in c]

    def lub(self, i, j) -> Optional[int]:
        return self._lub[i][j]

    def glb(self, i, j) -> Optional[int]:
        return self._glb[i][j]

    def covers(self) -> List[Tuple[int, int]]:
        return covering_pairs(self.leq)

    def _find_non_closed_pair(self) -> Optional[Dict]:
        # factor congruences closed under the congruence join and intersection
        for i, f in enumerate(self.elements):
            for g in self.elements[i + 1:]:
                for operation, h in (("join", join_unchecked(self.algebra, f, g)), ("meet", f.meet(g))):
                    if h not in self._index:
                        return OrderedDict(operation=operation, pair=[f.serialize(), g.serialize()],
                                           result=h.serialize())
        return None

    def _poset_operations(self):
        k = len(self.elements)
        lub = [[None] * k for _ in range(k)]
        glb = [[None] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                lub[i][j] = least(self.leq[i] & self.leq[j], self.leq)
                glb[i][j] = greatest(self.leq[:, i] & self.leq[:, j], self.leq)
                if self.lattice_witness is None and (lub[i][j] is None or glb[i][j] is None):
                    self.lattice_witness = [self.elements[i].serialize(), self.elements[j].serialize()]
        return lub, glb

    def _distributivity_witness(self) -> Optional[List]:
        k = len(self.elements)
        lub, glb = self._lub, self._glb
        for x in range(k):
            for y in range(k):
                for z in range(k):
                    if glb[x][lub[y][z]] != lub[glb[x][y]][glb[x][z]]:
                        return [self.elements[t].serialize() for t in (x, y, z)]
        return None

    def _compute_flags(self) -> Dict[str, bool]:
        is_lattice = self.lattice_witness is None
        self.distributivity_witness = self._distributivity_witness() if is_lattice else None
        is_distributive = is_lattice and self.distributivity_witness is None
        complemented = is_lattice and all(
            any(self._lub[x][y] == self.top and self._glb[x][y] == self.bottom for y in range(len(self)))
            for x in range(len(self)))
        return OrderedDict(
            is_sublattice_of_con=self.sublattice_witness is None,
            is_lattice=is_lattice,
            is_distributive=is_distributive,
            is_boolean=is_distributive and complemented,
            complement_unique=all(len(c) == 1 for c in self.complements),
        )

    def to_json(self) -> dict:
        return OrderedDict(elements=[p.serialize() for p in self.elements],
                           complements=[list(c) for c in self.complements],
                           flags=dict(self.flags))

    def __repr__(self):
        return f"FactorLattice({len(self)} factor congruences of {self.algebra!r})"


def factor_congruences(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> FactorLattice:
    """ F(X): every congruence with at least one complement, together with all its complements.

    Raises:
        GlobalSupportError: algebra is empty.
        CapExhaustedError: Con(A) exceeds limit.
    """
    return _factor_congruences(algebra, int(limit))


@functools.lru_cache(maxsize=128)
def _factor_congruences(algebra: FiniteAlgebra, limit: int) -> FactorLattice:
    con = all_congruences(algebra, limit)
    partners = [[j for j, g in enumerate(con) if complementary(f, g)] for f in con]
    keep = [i for i, c in enumerate(partners) if c]
    position = {i: k for k, i in enumerate(keep)}
    elements = [con[i] for i in keep]
    complements = [[position[j] for j in partners[i]] for i in keep]
    logger.debug(f"F(X) of {algebra!r}: {len(elements)} of {len(con)} congruences are factor congruences")
    return FactorLattice(algebra, elements, complements)
