# Copyright 2026 The Refinery Authors. All Rights Reserved.

import json
from typing import List, Sequence, Tuple

import numpy as np

from .binrel import BinRel
from ..utils.errors import SizeMismatchError
from ..utils.typing import is_class_list


def normalize_labels(labels) -> np.ndarray:
    """ Renumber class ids so that first occurrences are 0, 1, 2, ... in element order.
    """
    labels = np.asarray(labels, dtype=np.intp).reshape(-1)
    if len(labels) == 0:
        return labels.copy()
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    order = np.argsort(first, kind="stable")
    rank = np.empty_like(order)
    rank[order] = np.arange(len(order))
    return rank[inverse.reshape(-1)]


class Partition(object):
    """ An equivalence relation on {0..n-1} stored as a normalized class-id vector.

    Class ids are normalized: scanning elements in order, new ids appear as 0, 1, 2, ... so
    class i is the class whose least member is the i-th smallest representative.

    Args:
        labels (Sequence[int]): Class id of each element, any integers.
    """

    def __init__(self, labels: Sequence[int]):
        labels = normalize_labels(labels)
        labels.setflags(write=False)
        self._labels = labels
        self._num_classes = int(labels.max()) + 1 if len(labels) else 0

    @classmethod
    def delta(cls, n) -> "Partition":
        return cls(np.arange(n))

    @classmethod
    def nabla(cls, n) -> "Partition":
        return cls(np.zeros(n, dtype=np.intp))

    @classmethod
    def from_classes(cls, classes: Sequence[Sequence[int]], n=None) -> "Partition":
        """ Build from a list of classes which must cover {0..n-1} disjointly.

        Args:
            classes (Sequence[Sequence[int]]):
            n (int, None): Universe size, inferred as the number of listed elements if None.
        """
        if not is_class_list(classes):
            raise ValueError(f"partition must be a list of integer lists, got {classes!r}")
        members = [x for c in classes for x in c]
        n = len(members) if n is None else n
        labels = np.full(n, -1, dtype=np.intp)
        for class_id, c in enumerate(classes):
            if len(c) == 0:
                raise ValueError("partition classes must be non-empty")
            for x in c:
                if x < 0 or x >= n:
                    raise ValueError(f"element {x} out of range [0, {n})")
                if labels[x] >= 0:
                    raise ValueError(f"element {x} appears in more than one class")
                labels[x] = class_id
        missing = np.nonzero(labels < 0)[0]
        if len(missing) > 0:
            raise ValueError(f"partition does not cover element {int(missing[0])}")
        return cls(labels)

    @classmethod
    def parse(cls, text, n=None) -> "Partition":
        """ Parse a class list such as '[[0,2,4],[1,3,5]]'.
        """
        try:
            classes = json.loads(text) if isinstance(text, str) else text
        except json.JSONDecodeError as e:
            raise ValueError(f"malformed partition {text!r}, {e.msg}")
        return cls.from_classes(classes, n=n)

    @property
    def labels(self) -> np.ndarray:
        return self._labels

    @property
    def size(self) -> int:
        return len(self._labels)

    @property
    def num_classes(self) -> int:
        return self._num_classes

    @property
    def representatives(self) -> np.ndarray:
        """ Least member of each element's class, indexed by element.
        """
        _, first = np.unique(self._labels, return_index=True)
        return first[self._labels]

    def classes(self) -> List[List[int]]:
        classes = [[] for _ in range(self._num_classes)]
        for x, c in enumerate(self._labels):
            classes[c].append(x)
        return classes

    def seed_pairs(self) -> List[Tuple[int, int]]:
        """ (representative, x) for every non-representative x, these generate the partition.
        """
        reps = self.representatives
        return [(int(reps[x]), x) for x in range(self.size) if reps[x] != x]

    def related(self, x, y) -> bool:
        return bool(self._labels[x] == self._labels[y])

    def is_delta(self) -> bool:
        return self._num_classes == self.size

    def is_nabla(self) -> bool:
        return self._num_classes <= 1

    def refines(self, other: "Partition") -> bool:
        """ self is contained in other as a relation.
        """
        _check_same_size(self, other)
        if self.size == 0:
            return True
        # every class of self must sit inside one class of other
        images = np.full(self._num_classes, -1, dtype=np.intp)
        images[self._labels] = other.labels
        return bool(np.array_equal(images[self._labels], other.labels))

    def meet(self, other: "Partition") -> "Partition":
        _check_same_size(self, other)
        return Partition(self._labels * max(other.num_classes, 1) + other.labels)

    def to_relation(self) -> BinRel:
        return BinRel(self._labels[:, None] == self._labels[None, :])

    def serialize(self) -> List[List[int]]:
        return self.classes()

    def sort_key(self):
        return -self._num_classes, self.classes()

    def __eq__(self, other):
        return isinstance(other, Partition) and np.array_equal(self._labels, other._labels)

    def __hash__(self):
        return hash((self.size, self._labels.tobytes()))

    def __repr__(self):
        return json.dumps(self.serialize(), separators=(",", ":"))


def _check_same_size(a, b):
    if a.size != b.size:
        raise SizeMismatchError(f"relations on universes of size {a.size} and {b.size}")
