import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from refinery.algebras import (compose_maps, find_isomorphism, identity_map, is_homomorphism, product, quotient,
                               relabel, subalgebra)
from refinery.datasets import cyclic_group, klein_four, two_element_lattice
from refinery.relations import Partition, generated_congruence, image, join, kernel
from refinery.utils.errors import NotACongruenceError, SignatureMismatchError
from ..strategies import algebra_pairs, algebras, congruences


def test_product_of_cyclic_groups():
    z2, z3 = cyclic_group(2), cyclic_group(3)
    z2z3, p1, p2 = product(z2, z3)
    assert z2z3.size == 6
    assert z2z3.name == "Z2 x Z3"
    # (x, y) is encoded as x * 3 + y
    assert z2z3.apply("+", 1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1
    assert is_homomorphism(z2z3, z2, p1)[0]
    assert is_homomorphism(z2z3, z3, p2)[0]
    assert find_isomorphism(z2z3, cyclic_group(6)) is not None


def test_product_projections_are_a_factor_pair():
    a, p1, p2 = product(cyclic_group(2), cyclic_group(2))
    assert kernel(p1).meet(kernel(p2)).is_delta()
    assert find_isomorphism(a, klein_four()) is not None


def test_product_signature_mismatch():
    with pytest.raises(SignatureMismatchError):
        product(cyclic_group(2), two_element_lattice())


def test_quotient():
    z6 = cyclic_group(6)
    theta = Partition.from_classes([[0, 2, 4], [1, 3, 5]])
    z2, q = quotient(z6, theta)
    assert z2 == cyclic_group(2)
    assert q.to_list() == [0, 1, 0, 1, 0, 1]
    assert kernel(q) == theta
    assert is_homomorphism(z6, z2, q)[0]


def test_quotient_numbers_classes_by_least_member():
    z6 = cyclic_group(6)
    _, q = quotient(z6, Partition.from_classes([[2, 5], [0, 3], [1, 4]]))
    assert q.to_list() == [0, 1, 2, 0, 1, 2]


def test_quotient_rejects_non_congruence():
    with pytest.raises(NotACongruenceError) as e:
        quotient(cyclic_group(6), Partition.from_classes([[0, 1], [2, 3], [4, 5]]))
    assert e.value.symbol == "+"


def test_subalgebra():
    z4 = cyclic_group(4)
    evens = subalgebra(z4, [[0], [2]])
    assert evens == cyclic_group(2)
    with pytest.raises(ValueError):
        subalgebra(z4, [[0], [1]])


def test_subalgebra_of_square():
    z2 = cyclic_group(2)
    diagonal = subalgebra(z2, [[0, 0], [1, 1]])
    assert diagonal == z2


def test_relabel_is_isomorphism():
    z4 = cyclic_group(4)
    copy, rename = relabel(z4, [2, 0, 3, 1])
    assert copy != z4
    assert is_homomorphism(z4, copy, rename)[0]
    with pytest.raises(ValueError):
        relabel(z4, [0, 0, 1, 2])


def test_compose_maps():
    f = identity_map(3)
    g = quotient(cyclic_group(3), Partition.nabla(3))[1]
    assert compose_maps(f, g).to_list() == [0, 0, 0]
    assert np.array_equal(compose_maps(g, identity_map(1)).values, g.values)


@settings(deadline=None, max_examples=200)
@given(algebra_pairs())
def test_product_projections_are_homomorphisms(pair):
    a, b = pair
    ab, p1, p2 = product(a, b)
    assert ab.size == a.size * b.size
    assert is_homomorphism(ab, a, p1)[0]
    assert is_homomorphism(ab, b, p2)[0]
    assert kernel(p1).meet(kernel(p2)).is_delta()


@settings(deadline=None, max_examples=300)
@given(st.data())
def test_quotient_by_pushed_congruence_is_quotient_by_join(data):
    a = data.draw(algebras(max_size=5))
    theta = data.draw(congruences(a))
    phi = data.draw(congruences(a))
    a_theta, q = quotient(a, theta)
    assert kernel(q) == theta
    assert q.is_surjective() and is_homomorphism(a, a_theta, q)[0]

    pushed = generated_congruence(a_theta, image(q, phi).pairs())
    top, r = quotient(a_theta, pushed)
    by_join, _ = quotient(a, join(a, theta, phi))
    assert kernel(compose_maps(q, r)) == join(a, theta, phi)
    assert find_isomorphism(top, by_join) is not None
