# Copyright 2026 The Refinery Authors. All Rights Reserved.

from .decompose import LeafMatch, decompose, is_directly_indecomposable, leaves, reassemble, \
    verify_unique_decomposition
from .tree import DecompositionTree

__all__ = ['DecompositionTree', 'LeafMatch', 'decompose', 'is_directly_indecomposable', 'leaves', 'reassemble',
           'verify_unique_decomposition']
