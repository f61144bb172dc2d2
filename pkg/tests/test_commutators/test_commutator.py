import itertools

import pytest

from refinery.datasets import cyclic_group, group_algebra, klein_four, small_group_tables, symmetric_group_s3
from refinery.commutators import center_congruence, centrality_witness, commutator, is_centerless, matrix_relation
from refinery.algebras import product
from refinery.lattices import all_congruences
from refinery.relations import Partition
from refinery.utils.errors import NotACongruenceError

GROUPS = small_group_tables()


def _identity(table):
    n = len(table)
    return next(e for e in range(n) if all(table[e][x] == x for x in range(n)))


def _cosets(table, subgroup):
    n = len(table)
    return Partition([min(table[x][h] for h in subgroup) for x in range(n)])


def _center(table):
    n = len(table)
    return [z for z in range(n) if all(table[z][g] == table[g][z] for g in range(n))]


def _derived_subgroup(table):
    n = len(table)
    e = _identity(table)
    inverse = [next(y for y in range(n) if table[x][y] == e) for x in range(n)]
    subgroup = {table[table[inverse[g]][inverse[h]]][table[g][h]] for g, h in itertools.product(range(n), repeat=2)}
    while True:
        grown = subgroup | {table[x][y] for x in subgroup for y in subgroup}
        if grown == subgroup:
            return sorted(subgroup)
        subgroup = grown


def test_enough_groups():
    assert len(GROUPS) >= 20


@pytest.mark.parametrize("name", list(GROUPS))
def test_center_matches_group_center(name):
    table = GROUPS[name].tolist()
    algebra = group_algebra(table, name=name)
    assert center_congruence(algebra) == _cosets(table, _center(table))


@pytest.mark.parametrize("name", list(GROUPS))
def test_derived_subgroup(name):
    table = GROUPS[name].tolist()
    algebra = group_algebra(table, name=name)
    nabla = Partition.nabla(len(table))
    assert commutator(algebra, nabla, nabla) == _cosets(table, _derived_subgroup(table))


def test_z4():
    z4 = cyclic_group(4)
    nabla = Partition.nabla(4)
    assert commutator(z4, nabla, nabla).is_delta()
    assert center_congruence(z4).is_nabla()
    assert not is_centerless(z4)
    assert centrality_witness(z4) is not None


def test_s3():
    s3 = symmetric_group_s3()
    nabla = Partition.nabla(6)
    assert commutator(s3, nabla, nabla).serialize() == [[0, 4, 5], [1, 2, 3]]
    assert is_centerless(s3)
    assert centrality_witness(s3) is None


def test_commutator_is_below_meet():
    klein = klein_four()
    alpha = Partition.from_classes([[0, 1], [2, 3]])
    beta = Partition.from_classes([[0, 2], [1, 3]])
    assert commutator(klein, alpha, beta).refines(alpha.meet(beta))


def test_matrix_relation_agrees_with_closure():
    s3 = symmetric_group_s3()
    a3 = Partition.from_classes([[0, 4, 5], [1, 2, 3]])
    nabla = Partition.nabla(6)
    by_congruence = {tuple(r) for r in matrix_relation(s3, a3, nabla, use_maltsev=True).tolist()}
    by_closure = {tuple(r) for r in matrix_relation(s3, a3, nabla, use_maltsev=False).tolist()}
    assert by_congruence == by_closure


def test_rejects_non_congruence():
    s3 = symmetric_group_s3()
    with pytest.raises(NotACongruenceError):
        commutator(s3, Partition.from_classes([[0, 1], [2], [3], [4], [5]]), Partition.nabla(6))


@pytest.mark.parametrize("name", ["D3", "D4", "Q8", "A4", "Dic3"])
def test_commutator_symmetric_and_below_meet(name):
    algebra = group_algebra(GROUPS[name], name=name)
    con = all_congruences(algebra)
    for alpha in con:
        assert commutator(algebra, Partition.delta(algebra.size), alpha).is_delta()
        for beta in con:
            c = commutator(algebra, alpha, beta)
            assert c == commutator(algebra, beta, alpha)
            assert c.refines(alpha.meet(beta))
            for gamma in con:
                if beta.refines(gamma):
                    assert c.refines(commutator(algebra, alpha, gamma))


@pytest.mark.parametrize("left, right", [("D3", "Z2"), ("D3", "Z1"), ("Z2", "Z3"), ("Q8", "Z1")])
def test_centerless_products(left, right):
    a = group_algebra(GROUPS[left], name=left)
    b = group_algebra(GROUPS[right], name=right)
    ab, _, _ = product(a, b)
    assert is_centerless(ab) == (is_centerless(a) and is_centerless(b))
