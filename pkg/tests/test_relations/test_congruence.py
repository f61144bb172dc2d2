import itertools

import pytest
from hypothesis import given, strategies as st

from refinery.algebras import FiniteAlgebra, Signature
from refinery.datasets import cyclic_group, klein_four, symmetric_group_s3
from refinery.relations import (BinRel, Partition, as_partition, check_congruence, compose, find_incompatibility,
                                generated_congruence, is_compatible, is_congruence, join, meet, permutes,
                                principal_congruence)
from refinery.utils.errors import NotACongruenceError, SizeMismatchError
from ..strategies import algebras, congruences


def _naive_congruence(algebra, seed):
    n = algebra.size
    related = {(x, x) for x in range(n)} | set(seed) | {(y, x) for x, y in seed}
    while True:
        grown = set(related)
        grown |= {(x, z) for x, y in related for y2, z in related if y == y2}
        for symbol, arity in algebra.signature:
            for args in itertools.product(range(n), repeat=arity):
                for i in range(arity):
                    for x, y in related:
                        if args[i] == x:
                            other = args[:i] + (y,) + args[i + 1:]
                            grown.add((algebra.apply(symbol, *args), algebra.apply(symbol, *other)))
        if grown == related:
            return as_partition(BinRel.from_pairs(n, related))
        related = grown


@given(algebras(max_size=4), st.data())
def test_generated_congruence_matches_fixpoint(algebra, data):
    n = algebra.size
    seed = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3))
    theta = generated_congruence(algebra, seed)
    assert theta == _naive_congruence(algebra, seed)
    assert is_congruence(algebra, theta)


def test_generated_congruence_rejects_out_of_range():
    with pytest.raises(ValueError):
        generated_congruence(cyclic_group(4), [(0, 4)])


def test_principal_congruences_of_z6():
    z6 = cyclic_group(6)
    assert principal_congruence(z6, 0, 3).classes() == [[0, 3], [1, 4], [2, 5]]
    assert principal_congruence(z6, 0, 2).classes() == [[0, 2, 4], [1, 3, 5]]
    assert principal_congruence(z6, 0, 1).is_nabla()
    assert principal_congruence(z6, 4, 4).is_delta()


def test_check_congruence_names_the_violation():
    s3 = symmetric_group_s3()
    theta = Partition.from_classes([[0, 1], [2], [3], [4], [5]])
    failure = find_incompatibility(s3, theta)
    assert failure is not None
    with pytest.raises(NotACongruenceError) as e:
        check_congruence(s3, theta)
    assert e.value.symbol in ("*", "inv")
    x, y = e.value.pair
    assert theta.related(x, y)
    with pytest.raises(SizeMismatchError):
        check_congruence(s3, Partition.delta(4))


def test_is_compatible():
    z4 = cyclic_group(4)
    ok, witness = is_compatible(z4, Partition.from_classes([[0, 2], [1, 3]]))
    assert ok and witness is None
    order = BinRel.from_pairs(4, [(x, y) for x in range(4) for y in range(4) if x <= y])
    ok, witness = is_compatible(z4, order)
    assert not ok
    symbol, left, right = witness
    assert symbol in z4.signature
    assert all((x, y) in order for x, y in zip(left, right))


def test_is_compatible_constant():
    algebra = FiniteAlgebra(Signature([("c", 0)]), 2, {"c": [1]})
    ok, witness = is_compatible(algebra, BinRel.from_pairs(2, [(0, 0)]))
    assert not ok and witness == ("c", (), ())


def test_join_and_meet_in_klein_four():
    klein = klein_four()
    alpha = Partition.from_classes([[0, 1], [2, 3]])
    beta = Partition.from_classes([[0, 2], [1, 3]])
    assert join(klein, alpha, beta).is_nabla()
    assert meet(alpha, beta).is_delta()
    with pytest.raises(NotACongruenceError):
        join(symmetric_group_s3(), Partition.from_classes([[0, 1], [2], [3], [4], [5]]), Partition.delta(6))


@given(algebras(max_size=4).flatmap(lambda a: st.tuples(st.just(a), congruences(a), congruences(a))))
def test_permuting_congruences_join_is_composite(case):
    algebra, theta, phi = case
    if permutes(theta, phi):
        assert compose(theta, phi) == join(algebra, theta, phi).to_relation()
    assert compose(theta, phi).issubset(join(algebra, theta, phi).to_relation())


def test_as_partition():
    assert as_partition(BinRel.full(3)).is_nabla()
    with pytest.raises(ValueError):
        as_partition(BinRel.from_pairs(2, [(0, 1)]))
