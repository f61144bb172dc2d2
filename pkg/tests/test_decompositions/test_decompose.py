import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from refinery.algebras import FiniteAlgebra, Signature, find_isomorphism, is_homomorphism, product, relabel
from refinery.checks import check_projection_coextensive
from refinery.datasets import AlgebraCorpus, boolean_lattice, cyclic_group, klein_four, symmetric_group_s3, \
    trivial_algebra
from refinery.decompositions import (DecompositionTree, decompose, is_directly_indecomposable, leaves, reassemble,
                                     verify_unique_decomposition)
from refinery.utils.errors import GlobalSupportError


@pytest.mark.parametrize("algebra, sizes", [
    (cyclic_group(6), [2, 3]),
    (cyclic_group(12), [3, 4]),
    (klein_four(), [2, 2]),
    (boolean_lattice(), [2, 2]),
    (cyclic_group(4), [4]),
    (symmetric_group_s3(), [6]),
    (trivial_algebra(), [1]),
])
def test_leaf_sizes(algebra, sizes):
    tree = decompose(algebra)
    assert [leaf.size for leaf in leaves(tree)] == sizes
    assert all(leaf.size == 1 or is_directly_indecomposable(leaf) for leaf in tree.leaves())


def test_tree_json():
    tree = decompose(cyclic_group(6))
    data = tree.to_json()
    assert data["size"] == 6
    assert data["factor_pair"] == [[[0, 2, 4], [1, 3, 5]], [[0, 3], [1, 4], [2, 5]]]
    assert [child["size"] for child in data["children"]] == [2, 3]
    assert data["iso"] == [0, 4, 2, 3, 1, 5]
    assert tree.depth() == 1
    assert repr(tree) == "DecompositionTree(size=6, leaves=[2, 3])"


def test_reassemble_is_isomorphic():
    for algebra in (cyclic_group(12), klein_four(), boolean_lattice()):
        rebuilt = reassemble(decompose(algebra))
        assert rebuilt.size == algebra.size
        assert find_isomorphism(rebuilt, algebra) is not None


def test_node_invariant():
    with pytest.raises(ValueError):
        DecompositionTree(cyclic_group(2), children=(DecompositionTree(cyclic_group(2)),))


def test_empty_algebra():
    with pytest.raises(GlobalSupportError):
        decompose(FiniteAlgebra(Signature([("f", 1)]), 0, {"f": []}))


def test_indecomposable():
    assert is_directly_indecomposable(cyclic_group(4))
    assert not is_directly_indecomposable(cyclic_group(6))
    assert not is_directly_indecomposable(trivial_algebra())


@settings(deadline=None, max_examples=30)
@given(st.integers(0, 2 ** 16))
def test_random_splits_agree(seed):
    algebra, _, _ = product(klein_four(), cyclic_group(2))
    first, second = decompose(algebra), decompose(algebra, rng=seed)
    matches = verify_unique_decomposition(algebra, first, second)
    assert matches is not None
    assert len(matches) == 3


@settings(deadline=None, max_examples=30)
@given(st.randoms(use_true_random=False))
def test_relabelled_copy_decomposes_alike(random):
    algebra = cyclic_group(12)
    permutation = list(range(12))
    random.shuffle(permutation)
    copy, _ = relabel(algebra, permutation)
    assert sorted(leaf.size for leaf in leaves(decompose(copy))) == [3, 4]


def test_verify_rejects_foreign_tree():
    with pytest.raises(ValueError):
        verify_unique_decomposition(cyclic_group(6), decompose(cyclic_group(6)), decompose(klein_four()))


def test_verify_mismatched_leaves():
    z6 = cyclic_group(6)
    assert verify_unique_decomposition(z6, decompose(z6), DecompositionTree(z6)) is None


def test_corpus_decompositions_are_unique():
    corpus = AlgebraCorpus(count=60, max_size=6, seed=4)
    for i, algebra in enumerate(corpus):
        if not check_projection_coextensive(algebra).holds:
            continue
        first, second = decompose(algebra, rng=i), decompose(algebra, rng=i + 1000)
        assert verify_unique_decomposition(algebra, first, second) is not None, algebra.name
        for tree in (first, second):
            assert int(np.prod([leaf.size for leaf in tree.leaves()])) == algebra.size


def test_klein_four_leaves_match_without_srp():
    klein = klein_four()
    assert not check_projection_coextensive(klein).holds
    trees = [decompose(klein, rng=seed) for seed in range(6)]
    for tree in trees:
        assert verify_unique_decomposition(klein, trees[0], tree) is not None


def test_node_isomorphisms_are_homomorphisms():
    def _walk(tree):
        if tree.is_leaf:
            return
        left, right = tree.children
        target, _, _ = product(left.algebra, right.algebra)
        assert tree.iso.is_bijective()
        assert is_homomorphism(tree.algebra, target, tree.iso)[0]
        _walk(left)
        _walk(right)

    _walk(decompose(cyclic_group(12)))
    _walk(decompose(boolean_lattice()))
