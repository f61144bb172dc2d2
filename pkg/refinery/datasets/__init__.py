# Copyright 2026 The Refinery Authors. All Rights Reserved.

from .corpus import AlgebraCorpus, ChainedCorpus, generate_corpus, group_corpus, random_algebra
from .pinned import (GROUP_SIGNATURE, S3_PERMUTATIONS, boolean_lattice, cyclic_group, group_algebra, klein_four,
                     permutation_table, pinned_algebras, small_group_tables, symmetric_group_s3,
                     trivial_algebra, two_element_lattice)
from .registry import DATASETS

__all__ = [
    'AlgebraCorpus', 'ChainedCorpus', 'generate_corpus', 'group_corpus', 'random_algebra',
    'GROUP_SIGNATURE', 'S3_PERMUTATIONS', 'boolean_lattice', 'cyclic_group', 'group_algebra', 'klein_four',
    'permutation_table', 'pinned_algebras', 'small_group_tables', 'symmetric_group_s3',
    'trivial_algebra', 'two_element_lattice',
    'DATASETS',
]
