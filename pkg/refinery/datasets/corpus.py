# Copyright 2026 The Refinery Authors. All Rights Reserved.

import itertools
from typing import Iterator

from .pinned import group_algebra, pinned_algebras, small_group_tables
from .registry import DATASETS
from ..algebras.algebra import FiniteAlgebra, Signature
from ..utils.random import make_rng


def random_algebra(rng, max_size=6, max_ops=2, name="") -> FiniteAlgebra:
    """ Draws one algebra with tables uniform from rng.

    Size is uniform in [2, max_size], the number of operations in [1, max_ops], each arity in {1, 2}.
    """
    size = int(rng.integers(2, max_size + 1))
    num_ops = int(rng.integers(1, max_ops + 1))
    symbols, tables = [], {}
    for i in range(num_ops):
        arity = int(rng.integers(1, 3))
        symbol = f"f{i}"
        symbols.append((symbol, arity))
        tables[symbol] = rng.integers(0, size, size ** arity)
    return FiniteAlgebra(Signature(symbols), size, tables, name=name)


@DATASETS.register_class()
class AlgebraCorpus(object):
    """ Seeded corpus of small algebras, the pinned set first.

    Args:
        count (int): Number of random algebras after the pinned set.
        max_size (int): Largest universe size of a random algebra, at least 2.
        max_ops (int): Largest number of operations of a random algebra, at least 1.
        seed (int): Seed of the generator, the same seed always yields the same corpus.
        pinned (bool): Emit the pinned algebras before the random ones.
    """

    def __init__(self, count=500, max_size=6, max_ops=2, seed=0, pinned=True):
        if count < 0:
            raise ValueError(f"count must be >= 0, got {count}")
        if max_size < 2:
            raise ValueError(f"max_size must be >= 2, got {max_size}")
        if max_ops < 1:
            raise ValueError(f"max_ops must be >= 1, got {max_ops}")
        self.count = int(count)
        self.max_size = int(max_size)
        self.max_ops = int(max_ops)
        self.seed = seed
        self.pinned = pinned

    def __iter__(self) -> Iterator[FiniteAlgebra]:
        if self.pinned:
            yield from pinned_algebras().values()
        rng = make_rng(self.seed)
        for i in range(self.count):
            yield random_algebra(rng, self.max_size, self.max_ops, name=f"random-{i}")

    def __len__(self):
        return self.count + (len(pinned_algebras()) if self.pinned else 0)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}: count={self.count}, max_size={self.max_size}, " \
               f"max_ops={self.max_ops}, seed={self.seed}, len={len(self)}"


@DATASETS.register_function("GroupCorpus")
def group_corpus(max_order=12):
    """ The small groups as algebras of signature (*, inv, e), in table order.

    Args:
        max_order (int): Largest group order kept.
    """
    return [group_algebra(table, name=name) for name, table in small_group_tables().items()
            if len(table) <= max_order]


class ChainedCorpus(object):
    def __init__(self, *corpora):
        self.corpora = corpora

    def __iter__(self):
        return itertools.chain(*self.corpora)

    def __len__(self):
        return sum(len(c) for c in self.corpora)


def generate_corpus(config) -> Iterator[FiniteAlgebra]:
    """ Stream of algebras described by the `corpus` section of a run config.

    Args:
        config (Config, dict): A run config holding a `corpus` entry, or the corpus entry itself.
    """
    cfg = config.get("corpus", config)
    if not isinstance(cfg, list):
        cfg = dict(cfg)
        cfg.setdefault("type", "AlgebraCorpus")
    return iter(DATASETS.build(cfg))
