# Copyright 2026 The Refinery Authors. All Rights Reserved.

from .congruence_lattice import DEFAULT_CON_LIMIT, CongruenceLattice, all_congruences
from .factor_lattice import FactorLattice, complementary, factor_congruences, is_factor_pair
from .hasse import hasse_dot
from .poset import covering_pairs, refinement_order

__all__ = ['DEFAULT_CON_LIMIT', 'CongruenceLattice', 'FactorLattice', 'all_congruences', 'complementary',
           'covering_pairs', 'factor_congruences', 'hasse_dot', 'is_factor_pair', 'refinement_order']
