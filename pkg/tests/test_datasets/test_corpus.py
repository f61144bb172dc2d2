import pytest

from refinery.algebras import algebra_to_json
from refinery.datasets import DATASETS, GROUP_SIGNATURE, AlgebraCorpus, ChainedCorpus, generate_corpus, \
    pinned_algebras, random_algebra, small_group_tables
from refinery.utils.random import make_rng


def _dump(corpus):
    return [algebra_to_json(a) for a in corpus]


def test_pinned_first():
    corpus = AlgebraCorpus(count=4, seed=3)
    algebras = list(corpus)
    assert len(algebras) == len(corpus) == len(pinned_algebras()) + 4
    assert [a.name for a in algebras[:len(pinned_algebras())]] == list(pinned_algebras())
    assert [a.name for a in algebras[len(pinned_algebras()):]] == ["random-0", "random-1", "random-2", "random-3"]


def test_same_seed_same_corpus():
    assert _dump(AlgebraCorpus(count=20, seed=11)) == _dump(AlgebraCorpus(count=20, seed=11))
    assert _dump(AlgebraCorpus(count=20, seed=11)) != _dump(AlgebraCorpus(count=20, seed=12))


def test_count_zero():
    assert list(AlgebraCorpus(count=0, pinned=False)) == []
    assert len(list(AlgebraCorpus(count=0))) == len(pinned_algebras())


def test_random_algebra_bounds():
    rng = make_rng(5)
    for _ in range(50):
        a = random_algebra(rng, max_size=3, max_ops=2)
        assert 2 <= a.size <= 3
        assert 1 <= len(a.signature) <= 2
        assert all(arity in (1, 2) for _, arity in a.signature)


@pytest.mark.parametrize("kwargs", [dict(count=-1), dict(max_size=1), dict(max_ops=0)])
def test_rejects(kwargs):
    with pytest.raises(ValueError):
        AlgebraCorpus(**kwargs)


def test_build_from_registry():
    corpus = DATASETS.build(dict(type="AlgebraCorpus", count=2, pinned=False))
    assert isinstance(corpus, AlgebraCorpus)
    chained = DATASETS.build([dict(type="AlgebraCorpus", count=2, pinned=False),
                              dict(type="AlgebraCorpus", count=3, seed=1, pinned=False)])
    assert isinstance(chained, ChainedCorpus)
    assert len(chained) == 5 and len(list(chained)) == 5
    with pytest.raises(ValueError):
        DATASETS.build([])


def test_generate_corpus():
    algebras = list(generate_corpus(dict(corpus=dict(count=2, max_size=3, seed=7, pinned=False))))
    assert [a.name for a in algebras] == ["random-0", "random-1"]
    assert _dump(generate_corpus(dict(count=2, max_size=3, seed=7, pinned=False))) == _dump(algebras)


def test_group_corpus_is_a_registered_function():
    groups = DATASETS.build(dict(type="GroupCorpus", max_order=8))
    assert len(groups) == 14
    assert [g.name for g in groups][:3] == ["Z1", "Z2", "Z3"]
    assert all(g.signature == GROUP_SIGNATURE for g in groups)
    assert len(DATASETS.build(dict(type="GroupCorpus"))) == len(small_group_tables())
    chained = generate_corpus(dict(corpus=[dict(type="GroupCorpus", max_order=3),
                                           dict(type="AlgebraCorpus", count=1, pinned=False)]))
    assert [a.name for a in chained] == ["Z1", "Z2", "Z3", "random-0"]
