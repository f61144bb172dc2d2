# Copyright 2026 The Refinery Authors. All Rights Reserved.

from typing import TYPE_CHECKING, Union

import numpy as np

from .binrel import BinRel
from .partition import Partition
from .union_find import UnionFind
from ..utils.errors import SizeMismatchError

if TYPE_CHECKING:
    from ..algebras.algebra import ElementMap

Relation = Union[BinRel, Partition]


def as_binrel(r: Relation) -> BinRel:
    if isinstance(r, Partition):
        return r.to_relation()
    if isinstance(r, BinRel):
        return r
    raise TypeError(f"expected BinRel or Partition, got {type(r)}")


def _pair(r, s):
    r, s = as_binrel(r), as_binrel(s)
    if r.size != s.size:
        raise SizeMismatchError(f"relations on universes of size {r.size} and {s.size}")
    return r, s


def compose(r: Relation, s: Relation) -> BinRel:
    """ (x, z) in r o s iff x r y and y s z for some y.
    """
    r, s = _pair(r, s)
    return BinRel((r.matrix.astype(np.int32) @ s.matrix.astype(np.int32)) > 0)


def intersect(r: Relation, s: Relation) -> BinRel:
    r, s = _pair(r, s)
    return BinRel(r.matrix & s.matrix)


def union(r: Relation, s: Relation) -> BinRel:
    r, s = _pair(r, s)
    return BinRel(r.matrix | s.matrix)


def union_closure(r: Relation) -> Partition:
    """ Smallest equivalence relation containing r.
    """
    r = as_binrel(r)
    uf = UnionFind(r.size)
    for x, y in r.pairs():
        uf.union(x, y)
    return Partition(uf.roots())


def _check_map(f: "ElementMap", r: BinRel, size, side):
    if r.size != size:
        raise SizeMismatchError(f"relation on {r.size} elements does not live on the map {side} "
                                f"of size {size}")


def image(f: "ElementMap", r: Relation) -> BinRel:
    """ Raw direct image {(f x, f y) : x r y}, no closure applied.

    Raises:
        ValueError: f is not surjective.
    """
    r = as_binrel(r)
    _check_map(f, r, f.source_size, "source")
    if not f.is_surjective():
        raise ValueError("image is only defined along surjective maps")
    xs, ys = np.nonzero(r.matrix)
    matrix = np.zeros((f.target_size, f.target_size), dtype=bool)
    matrix[f.values[xs], f.values[ys]] = True
    return BinRel(matrix)


def preimage(f: "ElementMap", r: Relation) -> BinRel:
    r = as_binrel(r)
    _check_map(f, r, f.target_size, "target")
    v = f.values
    return BinRel(r.matrix[v[:, None], v[None, :]])


def kernel(f: "ElementMap") -> Partition:
    return Partition(f.values)
