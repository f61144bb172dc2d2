# Copyright 2026 The Refinery Authors. All Rights Reserved.

from .base_solver import BaseSolver
from .registry import SOLVERS
from .suite_solver import EQUIVALENT_PROPERTIES, SUITE_PROPERTIES, SuiteSolver, cross_implications

__all__ = ['SOLVERS', 'BaseSolver', 'SuiteSolver', 'SUITE_PROPERTIES', 'EQUIVALENT_PROPERTIES',
           'cross_implications']
