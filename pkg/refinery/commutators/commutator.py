# Copyright 2026 The Refinery Authors. All Rights Reserved.

import functools
from typing import Optional

import numpy as np

from .clone import DEFAULT_CLONE_LIMIT, maltsev_gate
from ..algebras.algebra import FiniteAlgebra, require_global_support
from ..algebras.constructions import row_codes, subalgebra
from ..algebras.subpower import subpower_closure
from ..relations.congruence import check_congruence, generated_congruence, join_unchecked, principal_congruence
from ..relations.partition import Partition
from ..utils.logger import get_logger

logger = get_logger()


def _pairs_of(theta: Partition) -> np.ndarray:
    """ All (x, y) with x theta y, lexicographically sorted.
    """
    labels = theta.labels
    xs, ys = np.nonzero(labels[:, None] == labels[None, :])
    return np.stack([xs, ys], axis=1)


def _matrices_by_congruence(algebra: FiniteAlgebra, alpha: Partition, beta: Partition) -> np.ndarray:
    # With a Mal'tsev term every reflexive compatible relation on alpha <= A^2 is a congruence,
    # M is the congruence of alpha generated by ((c,c),(d,d)) for c beta d.
    rows = _pairs_of(alpha)
    alpha_algebra = subalgebra(algebra, rows)
    codes = row_codes(rows, algebra.size)
    diagonal = np.searchsorted(codes, np.arange(algebra.size) * (algebra.size + 1))
    seed = [(int(diagonal[c]), int(diagonal[d])) for c, d in _pairs_of(beta) if c != d]
    theta = generated_congruence(alpha_algebra, seed)
    top, bottom = [], []
    for members in theta.classes():
        members = np.asarray(members)
        top.append(np.repeat(members, len(members)))
        bottom.append(np.tile(members, len(members)))
    top, bottom = np.concatenate(top), np.concatenate(bottom)
    return np.concatenate([rows[top], rows[bottom]], axis=1)


def _matrices_by_closure(algebra: FiniteAlgebra, alpha: Partition, beta: Partition) -> np.ndarray:
    a_pairs, b_pairs = _pairs_of(alpha), _pairs_of(beta)
    generators = np.concatenate([
        np.concatenate([a_pairs, a_pairs], axis=1),
        np.stack([b_pairs[:, 0], b_pairs[:, 0], b_pairs[:, 1], b_pairs[:, 1]], axis=1),
    ], axis=0)
    return subpower_closure(algebra, generators).rows


def matrix_relation(algebra: FiniteAlgebra, alpha: Partition, beta: Partition, use_maltsev=True) -> np.ndarray:
    """ M(alpha, beta) <= A^4, generated by (a, b, a, b) for a alpha b and (c, c, d, d) for c beta d.

    Rows are (x11, x12, x21, x22), the top and bottom rows of 2 x 2 matrices.

    Args:
        use_maltsev (bool): Compute M as a congruence of alpha <= A^2, only valid when the
            algebra has a Mal'tsev term.
    """
    if use_maltsev:
        return _matrices_by_congruence(algebra, alpha, beta)
    return _matrices_by_closure(algebra, alpha, beta)


def commutator(algebra: FiniteAlgebra,
               alpha: Partition,
               beta: Partition,
               clone_limit: int = DEFAULT_CLONE_LIMIT) -> Partition:
    """ The commutator [alpha, beta] by the matrix construction.

    The result is the least delta with (x21, x22) in delta whenever (x11, x12, x21, x22) is in
    M(alpha, beta) and x11 delta x12. Without a known Mal'tsev term the result is advisory and a
    warning is logged.

    Raises:
        NotACongruenceError: alpha or beta is not a congruence.
        GlobalSupportError: algebra is empty.
    """
    require_global_support(algebra)
    check_congruence(algebra, alpha)
    check_congruence(algebra, beta)
    gate = maltsev_gate(algebra, clone_limit)
    if gate.status != "found":
        logger.warning(f"no Mal'tsev term known for {algebra!r} ({gate.status}), commutator is advisory")
    return _commutator(algebra, alpha, beta, gate.status == "found")


@functools.lru_cache(maxsize=1024)
def _commutator(algebra: FiniteAlgebra, alpha: Partition, beta: Partition, use_maltsev: bool) -> Partition:
    matrices = matrix_relation(algebra, alpha, beta, use_maltsev=use_maltsev)
    delta = Partition.delta(algebra.size)
    while True:
        labels = delta.labels
        related = labels[matrices[:, 0]] == labels[matrices[:, 1]]
        seed = [(int(x), int(y)) for x, y in np.unique(matrices[related][:, 2:4], axis=0) if x != y]
        grown = generated_congruence(algebra, seed + delta.seed_pairs())
        if grown == delta:
            return delta
        delta = grown


def center_congruence(algebra: FiniteAlgebra, clone_limit: int = DEFAULT_CLONE_LIMIT) -> Partition:
    """ Join of the principal congruences Cg(a, b) with [Cg(a, b), Nabla] = Delta.
    """
    require_global_support(algebra)
    n = algebra.size
    delta, nabla = Partition.delta(n), Partition.nabla(n)
    principals = dict.fromkeys(principal_congruence(algebra, a, b) for a in range(n) for b in range(a + 1, n))
    center = delta
    for theta in principals:
        if theta.refines(center):
            continue
        if commutator(algebra, theta, nabla, clone_limit) == delta:
            center = join_unchecked(algebra, center, theta)
    return center


def is_centerless(algebra: FiniteAlgebra, clone_limit: int = DEFAULT_CLONE_LIMIT) -> bool:
    return center_congruence(algebra, clone_limit).is_delta()


def centrality_witness(algebra: FiniteAlgebra, clone_limit: int = DEFAULT_CLONE_LIMIT) -> Optional[Partition]:
    """ A principal congruence other than Delta that commutes with Nabla, if any.
    """
    n = algebra.size
    delta, nabla = Partition.delta(n), Partition.nabla(n)
    for a in range(n):
        for b in range(a + 1, n):
            theta = principal_congruence(algebra, a, b)
            if commutator(algebra, theta, nabla, clone_limit) == delta:
                return theta
    return None
