# Copyright 2026 The Refinery Authors. All Rights Reserved.

from collections import OrderedDict
from typing import List, Optional, Tuple

from ..algebras.algebra import ElementMap, FiniteAlgebra
from ..relations.partition import Partition


class DecompositionTree(object):
    """ A direct product decomposition of an algebra down to its leaves.

    An internal node records the factor pair (F, F') it split along, the subtrees of A/F and A/F',
    and the isomorphism x -> q_F(x) * |A/F'| + q_F'(x) onto A/F x A/F'.

    Args:
        algebra (FiniteAlgebra):
        factor_pair (Tuple[Partition, Partition], None): None for a leaf.
        children (Tuple[DecompositionTree, DecompositionTree], ()):
        iso (ElementMap, None):
    """

    def __init__(self,
                 algebra: FiniteAlgebra,
                 factor_pair: Optional[Tuple[Partition, Partition]] = None,
                 children: Tuple["DecompositionTree", ...] = (),
                 iso: Optional[ElementMap] = None):
        if (factor_pair is None) != (len(children) == 0) or (factor_pair is None) != (iso is None):
            raise ValueError("a node has either a factor pair, two children and an iso, or none of them")
        self.algebra = algebra
        self.factor_pair = factor_pair
        self.children = tuple(children)
        self.iso = iso

    @property
    def is_leaf(self) -> bool:
        return self.factor_pair is None

    @property
    def size(self) -> int:
        return self.algebra.size

    def leaves(self) -> List[FiniteAlgebra]:
        if self.is_leaf:
            return [self.algebra]
        return [leaf for child in self.children for leaf in child.leaves()]

    def depth(self) -> int:
        return 0 if self.is_leaf else 1 + max(child.depth() for child in self.children)

    def to_json(self) -> OrderedDict:
        return OrderedDict([
            ("size", self.size),
            ("factor_pair", None if self.is_leaf else [p.serialize() for p in self.factor_pair]),
            ("children", [child.to_json() for child in self.children]),
            ("iso", None if self.iso is None else self.iso.to_list()),
        ])

    def __repr__(self):
        return f"DecompositionTree(size={self.size}, leaves={[leaf.size for leaf in self.leaves()]})"
