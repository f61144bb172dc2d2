# Copyright 2026 The Refinery Authors. All Rights Reserved.

from collections import OrderedDict

from .verdict import Verdict
from ..algebras.algebra import FiniteAlgebra, require_global_support
from ..commutators.clone import DEFAULT_CLONE_LIMIT, maltsev_gate
from ..commutators.commutator import center_congruence, centrality_witness


def check_centerless(algebra: FiniteAlgebra, clone_limit: int = DEFAULT_CLONE_LIMIT) -> Verdict:
    """ No congruence other than Delta commutes with Nabla.

    Verdicts on algebras without a known Mal'tsev term carry an advisory note.
    """
    require_global_support(algebra)
    gate = maltsev_gate(algebra, clone_limit)
    notes = [f"maltsev term: {gate.term}"] if gate.status == "found" else \
        [f"advisory: Mal'tsev term {gate.status}, commutators computed without it"]
    center = center_congruence(algebra, clone_limit)
    if center.is_delta():
        return Verdict.passed("centerless", notes=notes)
    witness = OrderedDict(center=center.serialize(),
                          central_principal=centrality_witness(algebra, clone_limit).serialize())
    return Verdict.failed("centerless", witness, notes=notes)
