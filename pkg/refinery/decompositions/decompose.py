# Copyright 2026 The Refinery Authors. All Rights Reserved.

from collections import OrderedDict, defaultdict, namedtuple
from typing import List, Optional

from .tree import DecompositionTree
from ..algebras.algebra import ElementMap, FiniteAlgebra, require_global_support
from ..algebras.constructions import product, quotient
from ..algebras.isomorphism import find_isomorphism, table_fingerprint
from ..lattices.congruence_lattice import DEFAULT_CON_LIMIT
from ..lattices.factor_lattice import factor_congruences
from ..utils.logger import get_logger
from ..utils.random import make_rng

logger = get_logger()


class LeafMatch(namedtuple("LeafMatch", ["left", "right", "iso"])):
    """ Leaf `left` of the first tree is isomorphic to leaf `right` of the second via iso.
    """

    def to_json(self) -> OrderedDict:
        return OrderedDict(left=self.left, right=self.right, iso=self.iso.to_list())


def _nontrivial_pairs(algebra: FiniteAlgebra, limit):
    lattice = factor_congruences(algebra, limit)
    return [(f, g) for f, g in lattice.pairs() if not f.is_delta() and not f.is_nabla()]


def is_directly_indecomposable(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> bool:
    """ At least two elements and no factor pairs besides (Delta, Nabla) and (Nabla, Delta).
    """
    require_global_support(algebra)
    return algebra.size >= 2 and len(_nontrivial_pairs(algebra, limit)) == 0


def decompose(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT, rng=None) -> DecompositionTree:
    """ Split recursively along factor pairs until every leaf is directly indecomposable or trivial.

    Without rng the split at each node uses the nontrivial factor congruence F with the fewest
    classes (ties broken by class lists) and its first complement. With a numpy Generator (or an
    int seed) the factor pair is drawn at random.

    Raises:
        GlobalSupportError: algebra is empty.
    """
    require_global_support(algebra)
    rng = None if rng is None else make_rng(rng)
    return _decompose(algebra, limit, rng)


def _decompose(algebra: FiniteAlgebra, limit, rng) -> DecompositionTree:
    pairs = _nontrivial_pairs(algebra, limit)
    if algebra.size == 1 or not pairs:
        return DecompositionTree(algebra)
    if rng is None:
        f, g = min(pairs, key=lambda p: (p[0].num_classes, p[0].serialize()))
    else:
        f, g = pairs[int(rng.integers(len(pairs)))]
    left, q_left = quotient(algebra, f)
    right, q_right = quotient(algebra, g)
    iso = ElementMap(q_left.values * right.size + q_right.values, left.size * right.size)
    logger.debug(f"split {algebra.size} = {left.size} x {right.size} along {f}")
    children = (_decompose(left, limit, rng), _decompose(right, limit, rng))
    return DecompositionTree(algebra, (f, g), children, iso)


def leaves(tree: DecompositionTree) -> List[FiniteAlgebra]:
    return tree.leaves()


def reassemble(tree: DecompositionTree) -> FiniteAlgebra:
    """ Iterated product of the leaves in tree order.
    """
    result = None
    for leaf in tree.leaves():
        result = leaf if result is None else product(result, leaf)[0]
    return result


def verify_unique_decomposition(algebra: FiniteAlgebra,
                                first: DecompositionTree,
                                second: DecompositionTree) -> Optional[List[LeafMatch]]:
    """ Match the non-trivial leaves of two decompositions of algebra by isomorphism.

    Returns:
        A list of LeafMatch (leaf indices refer to tree order), or None if no bijection of
        isomorphic leaves exists.

    Raises:
        ValueError: a tree does not decompose algebra.
    """
    if first.algebra != algebra or second.algebra != algebra:
        raise ValueError("decomposition trees are not over the given algebra")
    left = [(i, leaf) for i, leaf in enumerate(first.leaves()) if leaf.size > 1]
    right = [(j, leaf) for j, leaf in enumerate(second.leaves()) if leaf.size > 1]
    if len(left) != len(right):
        return None
    buckets = defaultdict(list)
    for j, leaf in right:
        buckets[table_fingerprint(leaf)].append((j, leaf))
    isos = {}

    def _iso(i, a, j, b):
        if (i, j) not in isos:
            isos[(i, j)] = find_isomorphism(a, b)
        return isos[(i, j)]

    matching, used = [], set()

    def _match(k):
        if k == len(left):
            return True
        i, a = left[k]
        for j, b in buckets.get(table_fingerprint(a), []):
            if j in used:
                continue
            iso = _iso(i, a, j, b)
            if iso is None:
                continue
            used.add(j)
            matching.append(LeafMatch(i, j, iso))
            if _match(k + 1):
                return True
            used.discard(j)
            matching.pop()
        return False

    return matching if _match(0) else None
