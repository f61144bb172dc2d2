# Copyright 2026 The Refinery Authors. All Rights Reserved.

from collections import OrderedDict
from typing import Dict, List

import numpy as np

from .verdict import Verdict
from ..algebras.algebra import FiniteAlgebra, require_global_support
from ..algebras.subpower import subpower_closure
from ..lattices.congruence_lattice import DEFAULT_CON_LIMIT, all_congruences
from ..lattices.factor_lattice import factor_congruences
from ..relations.binrel import BinRel
from ..relations.calculus import compose
from ..utils.errors import CapExhaustedError
from ..utils.logger import get_logger

DEFAULT_REFLEXIVE_LIMIT = 64

logger = get_logger()


def check_factor_permutable(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> Verdict:
    """ Every factor congruence permutes with every congruence.
    """
    require_global_support(algebra)
    lattice = factor_congruences(algebra, limit)
    con = all_congruences(algebra, limit)
    for f in lattice.elements:
        for e in con:
            fe, ef = compose(f, e), compose(e, f)
            if fe != ef:
                x, y = (int(v) for v in np.argwhere(fe.matrix != ef.matrix)[0])
                return Verdict.failed("factor-perm", OrderedDict(F=f.serialize(), E=e.serialize(), pair=[x, y],
                                                                 in_F_then_E=bool(fe.matrix[x, y])))
    return Verdict.passed("factor-perm")


class _RelationTable(object):
    """ Relations of one universe as (k, n*n) boolean rows with lazily composed pairs.
    """

    def __init__(self, matrices: np.ndarray):
        self.matrices = matrices.astype(bool)
        self.k, self.n = matrices.shape[0], matrices.shape[1]
        self.flat = self.matrices.reshape(self.k, -1)
        self._rows = {}
        self._index = {row.tobytes(): i for i, row in enumerate(self.flat)}

    def composed_row(self, i) -> np.ndarray:
        """ (k, n*n) rows of R_i o R_t for every t.
        """
        if i not in self._rows:
            left = self.matrices[i].astype(np.int32)
            self._rows[i] = (np.matmul(left[None], self.matrices.astype(np.int32)) > 0).reshape(self.k, -1)
        return self._rows[i]

    def meets(self) -> np.ndarray:
        """ Index of R_i meet R_j, the family being closed under intersection.
        """
        meet = np.empty((self.k, self.k), dtype=np.intp)
        for i in range(self.k):
            for j in range(self.k):
                meet[i, j] = self._index[(self.flat[i] & self.flat[j]).tobytes()]
        return meet


def _law_failures(table: _RelationTable, exact: bool):
    """ First failure of the two distributivity laws over all triples.

    With exact=True both sides must be equal (congruence form), otherwise the first law asks for
    R meet (S o T) <= (R meet S) o (R meet T) and the second for R o (S meet T) >= (R o S) meet (R o T).
    """
    meet = table.meets()
    k = table.k
    for i in range(k):
        for j in range(k):
            lhs = table.flat[i][None, :] & table.composed_row(j)
            rhs = table.composed_row(meet[i, j])[meet[i]]
            bad = (lhs != rhs) if exact else (lhs & ~rhs)
            hits = np.nonzero(bad.any(axis=1))[0]
            if len(hits) > 0:
                return "intersection-over-composition", (i, j, int(hits[0]))
    for i in range(k):
        row = table.composed_row(i)
        for j in range(k):
            lhs = row[meet[j]]
            rhs = row[j][None, :] & row
            bad = (lhs != rhs) if exact else (rhs & ~lhs)
            hits = np.nonzero(bad.any(axis=1))[0]
            if len(hits) > 0:
                return "composition-over-intersection", (i, j, int(hits[0]))
    return None


def check_majority_laws(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> Verdict:
    """ R meet (S o T) = (R meet S) o (R meet T) and R o (S meet T) = (R o S) meet (R o T) on Con(A).
    """
    require_global_support(algebra)
    con = all_congruences(algebra, limit)
    table = _RelationTable(np.stack([p.to_relation().matrix for p in con.elements]))
    failure = _law_failures(table, exact=True)
    if failure is not None:
        law, triple = failure
        return Verdict.failed("majority", OrderedDict(law=law, triple=[con[t].serialize() for t in triple]))
    return Verdict.passed("majority", notes=["checked on congruences only"])


def compatible_reflexive_relations(algebra: FiniteAlgebra, limit: int = DEFAULT_REFLEXIVE_LIMIT) -> List[BinRel]:
    """ Every reflexive subuniverse of A x A, grown one pair at a time from the diagonal.

    Raises:
        CapExhaustedError: more than limit relations.
    """
    require_global_support(algebra)
    n = algebra.size
    diagonal = np.stack([np.arange(n), np.arange(n)], axis=1)
    found: Dict[bytes, np.ndarray] = OrderedDict()
    start = subpower_closure(algebra, diagonal).rows
    queue = [start]
    found[_relation_key(n, start)] = start
    while queue:
        rows = queue.pop(0)
        matrix = np.zeros((n, n), dtype=bool)
        matrix[rows[:, 0], rows[:, 1]] = True
        for x, y in np.argwhere(~matrix):
            grown = subpower_closure(algebra, np.concatenate([rows, [[x, y]]], axis=0), closed=len(rows)).rows
            key = _relation_key(n, grown)
            if key in found:
                continue
            found[key] = grown
            queue.append(grown)
            if len(found) > limit:
                raise CapExhaustedError("compatible reflexive relations", limit)
    relations = []
    for rows in found.values():
        matrix = np.zeros((n, n), dtype=bool)
        matrix[rows[:, 0], rows[:, 1]] = True
        relations.append(BinRel(matrix))
    logger.debug(f"{algebra!r} has {len(relations)} compatible reflexive relations")
    return relations


def _relation_key(n, rows) -> bytes:
    matrix = np.zeros((n, n), dtype=bool)
    matrix[rows[:, 0], rows[:, 1]] = True
    return np.packbits(matrix).tobytes()


def check_reflexive_majority_laws(algebra: FiniteAlgebra, limit: int = DEFAULT_REFLEXIVE_LIMIT) -> Verdict:
    """ R meet (S o T) <= (R meet S) o (R meet T) and R o (S meet T) >= (R o S) meet (R o T) for all
    compatible reflexive relations R, S, T.

    Raises:
        CapExhaustedError: more than limit compatible reflexive relations.
    """
    relations = compatible_reflexive_relations(algebra, limit)
    table = _RelationTable(np.stack([r.matrix for r in relations]))
    failure = _law_failures(table, exact=False)
    if failure is not None:
        law, triple = failure
        return Verdict.failed("majority-reflexive",
                              OrderedDict(law=law, triple=[relations[t].serialize() for t in triple]))
    return Verdict.passed("majority-reflexive", notes=[f"{len(relations)} compatible reflexive relations"])

