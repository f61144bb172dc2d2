# Copyright 2026 The Refinery Authors. All Rights Reserved.

import numpy as np


class UnionFind(object):
    """ Disjoint sets over {0..n-1}, union by rank with path compression.
    """

    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        """ Returns True if two classes were merged.
        """
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return True

    def roots(self) -> np.ndarray:
        return np.array([self.find(x) for x in range(len(self.parent))], dtype=np.intp)

    def __len__(self):
        return sum(1 for x in range(len(self.parent)) if self.parent[x] == x)
