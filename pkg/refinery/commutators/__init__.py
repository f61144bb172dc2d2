# Copyright 2026 The Refinery Authors. All Rights Reserved.

from .clone import (DEFAULT_CLONE_LIMIT, MAJORITY, MALTSEV, TERM_KINDS, GateStatus, find_term, identity_points,
                    maltsev_gate, satisfies)
from .commutator import center_congruence, centrality_witness, commutator, is_centerless, matrix_relation
from .term import Application, Term, Variable, parse_term

__all__ = [
    'DEFAULT_CLONE_LIMIT', 'MAJORITY', 'MALTSEV', 'TERM_KINDS', 'GateStatus', 'find_term', 'identity_points',
    'maltsev_gate', 'satisfies',
    'center_congruence', 'centrality_witness', 'commutator', 'is_centerless', 'matrix_relation',
    'Application', 'Term', 'Variable', 'parse_term',
]
