# Copyright 2026 The Refinery Authors. All Rights Reserved.

from typing import Iterable, List, Tuple

import numpy as np


class BinRel(object):
    """ A binary relation on {0..n-1} as a dense boolean matrix.

    Args:
        matrix (array_like): n x n booleans, matrix[x, y] means (x, y) is in the relation.
    """

    def __init__(self, matrix):
        matrix = np.array(matrix, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"relation matrix must be square, got shape {matrix.shape}")
        matrix.setflags(write=False)
        self._matrix = matrix

    @classmethod
    def from_pairs(cls, n, pairs: Iterable[Tuple[int, int]]) -> "BinRel":
        matrix = np.zeros((n, n), dtype=bool)
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"pair {(x, y)} out of range [0, {n})")
            matrix[x, y] = True
        return cls(matrix)

    @classmethod
    def identity(cls, n) -> "BinRel":
        return cls(np.eye(n, dtype=bool))

    @classmethod
    def full(cls, n) -> "BinRel":
        return cls(np.ones((n, n), dtype=bool))

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def size(self) -> int:
        return self._matrix.shape[0]

    def __contains__(self, pair):
        x, y = pair
        return bool(self._matrix[x, y])

    def __len__(self):
        return int(self._matrix.sum())

    def pairs(self) -> List[Tuple[int, int]]:
        xs, ys = np.nonzero(self._matrix)
        return [(int(x), int(y)) for x, y in zip(xs, ys)]

    def issubset(self, other: "BinRel") -> bool:
        return not bool(np.any(self._matrix & ~other.matrix))

    def __le__(self, other):
        return self.issubset(other)

    def is_reflexive(self) -> bool:
        return bool(np.all(np.diagonal(self._matrix)))

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self._matrix, self._matrix.T))

    def is_transitive(self) -> bool:
        square = (self._matrix.astype(np.int32) @ self._matrix.astype(np.int32)) > 0
        return not bool(np.any(square & ~self._matrix))

    def is_equivalence(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()

    def serialize(self) -> List[List[int]]:
        return [[x, y] for x, y in self.pairs()]

    def __eq__(self, other):
        return isinstance(other, BinRel) and np.array_equal(self._matrix, other.matrix)

    def __hash__(self):
        return hash((self.size, np.packbits(self._matrix).tobytes()))

    def __repr__(self):
        return f"BinRel({self.serialize()})"
