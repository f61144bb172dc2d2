import numpy as np
import pytest

from refinery.relations import BinRel, Partition


def test_from_pairs():
    r = BinRel.from_pairs(3, [(0, 1), (1, 2)])
    assert (0, 1) in r and (1, 0) not in r
    assert len(r) == 2
    assert r.pairs() == [(0, 1), (1, 2)]
    with pytest.raises(ValueError):
        BinRel.from_pairs(2, [(0, 2)])


def test_properties():
    assert BinRel.identity(3).is_equivalence()
    assert BinRel.full(3).is_equivalence()
    r = BinRel.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1)])
    assert r.is_reflexive() and r.is_transitive() and not r.is_symmetric()
    assert BinRel.identity(3) <= r <= BinRel.full(3)
    assert not r.issubset(BinRel.identity(3))


def test_partition_round_trip():
    theta = Partition.from_classes([[0, 2], [1]])
    r = theta.to_relation()
    assert r.is_equivalence()
    assert r == BinRel(np.array([[1, 0, 1], [0, 1, 0], [1, 0, 1]], dtype=bool))
    assert r.serialize() == [[0, 0], [0, 2], [1, 1], [2, 0], [2, 2]]
