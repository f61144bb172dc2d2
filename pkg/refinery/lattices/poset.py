# Copyright 2026 The Refinery Authors. All Rights Reserved.

from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..relations.partition import Partition


def refinement_order(elements: Sequence[Partition]) -> np.ndarray:
    """ leq[i, j] is True iff elements[i] refines elements[j].
    """
    k = len(elements)
    leq = np.ones((k, k), dtype=bool)
    if k == 0 or elements[0].size == 0:
        return leq
    labels = np.stack([p.labels for p in elements])
    # i refines j iff every x shares its j-class with its i-representative
    for i, p in enumerate(elements):
        leq[i] = np.all(labels[:, p.representatives] == labels, axis=1)
    return leq


def covering_pairs(leq: np.ndarray) -> List[Tuple[int, int]]:
    """ (i, j) with i strictly below j and nothing strictly in between.
    """
    strict = leq & ~np.eye(len(leq), dtype=bool)
    between = (strict.astype(np.int32) @ strict.astype(np.int32)) > 0
    xs, ys = np.nonzero(strict & ~between)
    return [(int(x), int(y)) for x, y in zip(xs, ys)]


def least(candidates: np.ndarray, leq: np.ndarray) -> Optional[int]:
    """ The element of the candidate mask below every other candidate, if any.
    """
    idx = np.nonzero(candidates)[0]
    for i in idx:
        if np.all(leq[i, idx]):
            return int(i)
    return None


def greatest(candidates: np.ndarray, leq: np.ndarray) -> Optional[int]:
    idx = np.nonzero(candidates)[0]
    for i in idx:
        if np.all(leq[idx, i]):
            return int(i)
    return None
