import pytest
from hypothesis import given, settings, strategies as st

from refinery.algebras import ElementMap, find_isomorphism, is_homomorphism, relabel, table_fingerprint
from refinery.datasets import (S3_PERMUTATIONS, cyclic_group, group_algebra, klein_four, permutation_table,
                               small_group_tables, two_element_lattice)
from refinery.utils.errors import SignatureMismatchError
from ..strategies import algebras


def test_is_homomorphism_witness():
    ok, witness = is_homomorphism(cyclic_group(4), klein_four(), ElementMap.identity(4))
    assert not ok
    assert witness == ("+", (1, 1))


def test_cyclic_groups_of_same_order():
    assert find_isomorphism(cyclic_group(4), klein_four()) is None
    iso = find_isomorphism(cyclic_group(5), relabel(cyclic_group(5), [4, 2, 0, 3, 1])[0])
    assert iso is not None


def test_signature_mismatch():
    with pytest.raises(SignatureMismatchError):
        find_isomorphism(cyclic_group(2), two_element_lattice())


def test_groups_of_order_eight_and_twelve():
    tables = small_group_tables()
    groups = {name: group_algebra(tables[name], name) for name in ("Z8", "Z2xZ4", "Z2xZ2xZ2", "D4", "Q8")}
    for a in groups.values():
        for b in groups.values():
            assert (find_isomorphism(a, b) is not None) == (a.name == b.name)
    d6, z2s3 = group_algebra(tables["D6"]), group_algebra(tables["Z2xS3"])
    assert find_isomorphism(d6, z2s3) is not None
    assert find_isomorphism(group_algebra(tables["A4"]), d6) is None


def test_dihedral_and_symmetric():
    s3 = group_algebra(permutation_table(S3_PERMUTATIONS))
    iso = find_isomorphism(group_algebra(small_group_tables()["D3"]), s3)
    assert iso is not None
    assert iso.is_bijective()


def test_fingerprint_is_invariant():
    z6 = cyclic_group(6)
    assert table_fingerprint(z6) == table_fingerprint(relabel(z6, [5, 4, 3, 2, 1, 0])[0])


@settings(max_examples=60, deadline=None)
@given(algebras(max_size=5), st.randoms(use_true_random=False))
def test_relabelled_copy_is_found(algebra, random):
    permutation = list(range(algebra.size))
    random.shuffle(permutation)
    copy, _ = relabel(algebra, permutation)
    iso = find_isomorphism(algebra, copy)
    assert iso is not None
    assert is_homomorphism(algebra, copy, iso)[0]
    assert find_isomorphism(copy, algebra) is not None
