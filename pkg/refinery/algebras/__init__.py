# Copyright 2026 The Refinery Authors. All Rights Reserved.

from .algebra import (ElementMap, FiniteAlgebra, Signature, flat_index, has_global_support, require_global_support,
                      tuple_digits, validate_tables)
from .constructions import compose_maps, identity_map, product, quotient, relabel, row_codes, subalgebra
from .io import algebra_to_json, dump_algebra, load_algebra, parse_algebra
from .isomorphism import find_isomorphism, is_homomorphism, table_fingerprint
from .subpower import SubpowerClosure, subpower_closure

__all__ = [
    'ElementMap', 'FiniteAlgebra', 'Signature', 'flat_index', 'has_global_support', 'require_global_support',
    'tuple_digits', 'validate_tables',
    'compose_maps', 'identity_map', 'product', 'quotient', 'relabel', 'row_codes', 'subalgebra',
    'algebra_to_json', 'dump_algebra', 'load_algebra', 'parse_algebra',
    'find_isomorphism', 'is_homomorphism', 'table_fingerprint',
    'SubpowerClosure', 'subpower_closure',
]
