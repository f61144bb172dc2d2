# Copyright 2026 The Refinery Authors. All Rights Reserved.

from .centrality import check_centerless
from .coextensivity import (check_boolean_sublattice, check_codisjoint_products, check_complement_order,
                            check_condition_vi, check_factorable, check_projection_coextensive,
                            check_projection_pushouts, check_regularly_coextensive, check_srp_definition,
                            has_global_support, pushout_along)
from .majority import (DEFAULT_REFLEXIVE_LIMIT, check_factor_permutable, check_majority_laws,
                       check_reflexive_majority_laws, compatible_reflexive_relations)
from .properties import BaseCheck
from .registry import CHECKS
from .verdict import Verdict

__all__ = [
    'CHECKS', 'BaseCheck', 'Verdict', 'DEFAULT_REFLEXIVE_LIMIT',
    'check_boolean_sublattice', 'check_centerless', 'check_codisjoint_products', 'check_complement_order',
    'check_condition_vi', 'check_factor_permutable', 'check_factorable', 'check_majority_laws',
    'check_projection_coextensive', 'check_projection_pushouts', 'check_reflexive_majority_laws',
    'check_regularly_coextensive', 'check_srp_definition', 'compatible_reflexive_relations',
    'has_global_support', 'pushout_along',
]
