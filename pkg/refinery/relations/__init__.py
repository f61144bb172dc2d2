# Copyright 2026 The Refinery Authors. All Rights Reserved.

from .binrel import BinRel
from .calculus import as_binrel, compose, image, intersect, kernel, preimage, union, union_closure
from .congruence import (as_partition, check_congruence, find_incompatibility, generated_congruence, is_compatible,
                         is_congruence, join, join_unchecked, meet, permutes, principal_congruence)
from .partition import Partition, normalize_labels
from .union_find import UnionFind

__all__ = [
    'BinRel', 'Partition', 'UnionFind', 'normalize_labels',
    'as_binrel', 'compose', 'image', 'intersect', 'kernel', 'preimage', 'union', 'union_closure',
    'as_partition', 'check_congruence', 'find_incompatibility', 'generated_congruence', 'is_compatible',
    'is_congruence', 'join', 'join_unchecked', 'meet', 'permutes', 'principal_congruence',
]
