# Copyright 2026 The Refinery Authors. All Rights Reserved.

import functools
from collections import OrderedDict, namedtuple
from typing import Optional, Tuple

import numpy as np

from .term import Application, Term, Variable
from ..algebras.algebra import FiniteAlgebra, require_global_support
from ..algebras.subpower import subpower_closure
from ..utils.errors import CapExhaustedError
from ..utils.logger import get_logger

MALTSEV = "maltsev"
MAJORITY = "majority"
TERM_KINDS = (MALTSEV, MAJORITY)
DEFAULT_CLONE_LIMIT = 200000

GateStatus = namedtuple("GateStatus", ["status", "term"])

logger = get_logger()


def identity_points(n, kind) -> Tuple[np.ndarray, np.ndarray]:
    """ The argument triples the identities of kind constrain, with the required value on each.

    Returns:
        (triples, target): triples has shape (m, 3).
    """
    points = OrderedDict()
    for x in range(n):
        for y in range(n):
            if kind == MALTSEV:
                cases = ((x, y, y), (y, y, x))
            elif kind == MAJORITY:
                cases = ((x, x, y), (x, y, x), (y, x, x))
            else:
                raise ValueError(f"unknown term kind {kind!r}, expect one of {TERM_KINDS}")
            for triple in cases:
                points[triple] = x
    triples = np.array(list(points.keys()), dtype=np.intp).reshape(-1, 3)
    return triples, np.array(list(points.values()), dtype=np.intp)


def satisfies(algebra: FiniteAlgebra, term: Term, kind) -> bool:
    """ Check the identities of kind on the full ternary table of term.
    """
    table = term.evaluate(algebra, arity=3)
    triples, target = identity_points(algebra.size, kind)
    n = algebra.size
    return bool(np.array_equal(table[(triples[:, 0] * n + triples[:, 1]) * n + triples[:, 2]], target))


def find_term(algebra: FiniteAlgebra, kind, max_ops: int = DEFAULT_CLONE_LIMIT) -> Optional[Term]:
    """ Search the ternary clone of algebra for a Mal'tsev or majority term.

    Term operations are generated from the three projections by the basic operations, compared
    only on the argument triples the identities mention.

    Args:
        algebra (FiniteAlgebra): Non-empty algebra.
        kind (str): 'maltsev' or 'majority'.
        max_ops (int): Cap on distinct (restricted) ternary term operations.

    Returns:
        A term, or None when the whole clone was generated without finding one.

    Raises:
        GlobalSupportError: algebra is empty.
        CapExhaustedError: the cap was reached first, the answer is unknown.
    """
    require_global_support(algebra)
    triples, target = identity_points(algebra.size, kind)
    closure = subpower_closure(algebra, triples.T, limit=max_ops, target=target)
    logger.debug(f"{kind} search on {algebra!r} generated {len(closure)} term operations")
    if closure.target_index is not None:
        projections = [Variable(1), Variable(2), Variable(3)]
        term = closure.term(closure.target_index, projections, Application)
        return term
    if closure.complete:
        return None
    raise CapExhaustedError(f"{kind} term search", max_ops)


def maltsev_gate(algebra: FiniteAlgebra, clone_limit: int = DEFAULT_CLONE_LIMIT) -> GateStatus:
    """ Whether commutator based verdicts are backed by a Mal'tsev term.

    Returns:
        GateStatus with status 'found', 'absent' or 'unknown' and the term when found.
    """
    return _maltsev_gate(algebra, int(clone_limit))


@functools.lru_cache(maxsize=128)
def _maltsev_gate(algebra: FiniteAlgebra, clone_limit: int) -> GateStatus:
    try:
        term = find_term(algebra, MALTSEV, clone_limit)
    except CapExhaustedError:
        return GateStatus("unknown", None)
    return GateStatus("found", term) if term is not None else GateStatus("absent", None)
