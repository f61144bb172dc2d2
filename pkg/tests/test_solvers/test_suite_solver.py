import pytest

from refinery.datasets import DATASETS, AlgebraCorpus, cyclic_group, klein_four, pinned_algebras
from refinery.hooks import HOOKS, Hook, LogHook
from refinery.solvers import SOLVERS
from refinery.solvers.suite_solver import SUITE_PROPERTIES, SuiteSolver, cross_implications


@HOOKS.register_class()
class _Recorder(Hook):
    def __init__(self, priority=0):
        super(_Recorder, self).__init__(priority=priority)
        self.events = []

    def before_solve(self, solver):
        self.events.append("before_solve")

    def before_iter(self, solver):
        self.events.append(f"before_iter:{solver.iter}")

    def after_iter(self, solver):
        self.events.append(f"after_iter:{solver.iter}")

    def after_solve(self, solver):
        self.events.append("after_solve")


def test_cross_implications():
    holds = dict.fromkeys(SUITE_PROPERTIES, True)
    assert all(cross_implications(holds, True).values())
    assert not cross_implications(holds, False)["proj-coext-implies-unique-complements"]
    holds["srp"] = False
    relations = cross_implications(holds, True)
    assert not relations["equivalence"]
    assert relations["factorable-iff-reg-coext"]


def test_pinned_corpus_agrees():
    solver = SOLVERS.build(dict(type="SuiteSolver", hooks=[dict(type="LogHook", log_interval=4)]))
    outputs = solver.solve(AlgebraCorpus(count=0))
    assert solver.ok
    assert outputs["checked"] == len(pinned_algebras())
    assert outputs["skipped"] == [] and outputs["failures"] == []
    # Klein four is the only pinned algebra without the strict refinement property
    assert outputs["counts"]["srp"] == dict(holds=len(pinned_algebras()) - 1, fails=1)
    assert outputs["counts"]["equivalence"] == dict(holds=len(pinned_algebras()), fails=0)


def test_random_corpus_agrees():
    solver = SuiteSolver(hooks=dict(log=dict(type="LogHook", log_interval=10)))
    outputs = solver.solve(AlgebraCorpus(count=30, max_size=4, seed=2, pinned=False))
    assert solver.ok, outputs["failures"]
    assert outputs["checked"] + len(outputs["skipped"]) == 30


def test_cap_skips():
    solver = SuiteSolver(con_limit=2)
    outputs = solver.solve([cyclic_group(6), cyclic_group(2)])
    assert outputs["checked"] == 1
    assert [s["name"] for s in outputs["skipped"]] == ["Z6"]
    assert "cap of 2" in outputs["skipped"][0]["reason"]


def test_hooks_order_and_protocol():
    solver = SuiteSolver(hooks=[dict(type="_Recorder", priority=5), dict(type="LogHook")])
    assert [type(h).__name__ for h in solver.hooks] == ["_Recorder", "LogHook"]
    solver.solve([klein_four()])
    recorder = solver.hooks[0]
    assert recorder.events == ["before_solve", "before_iter:0", "after_iter:0", "after_solve"]
    assert solver.iter == 1 and solver.max_iter == 1
    assert solver.iter_outputs["srp"] is False
    assert solver.agg_iter_outputs["srp"] == (0, 1)


def test_log_hook_priority():
    assert LogHook().priority == 100
    assert LogHook(priority=3).priority == 3


def test_solver_requires_registered_type():
    with pytest.raises(KeyError):
        SOLVERS.build(dict(type="NoSuchSolver"))


def test_default_corpus_agrees():
    corpus = AlgebraCorpus()
    solver = SuiteSolver()
    outputs = solver.solve(corpus)
    assert solver.ok, outputs["failures"]
    assert outputs["checked"] + len(outputs["skipped"]) == len(pinned_algebras()) + 500


def test_group_corpus_agrees():
    solver = SuiteSolver()
    outputs = solver.solve(DATASETS.build(dict(type="GroupCorpus", max_order=8)))
    assert solver.ok, outputs["failures"]
    assert outputs["checked"] == 14
