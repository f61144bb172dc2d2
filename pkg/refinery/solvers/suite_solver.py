# Copyright 2026 The Refinery Authors. All Rights Reserved.

from collections import OrderedDict

from .base_solver import BaseSolver
from .registry import SOLVERS
from ..algebras.io import algebra_to_json
from ..checks import CHECKS
from ..checks.majority import DEFAULT_REFLEXIVE_LIMIT
from ..commutators.clone import DEFAULT_CLONE_LIMIT
from ..lattices.congruence_lattice import DEFAULT_CON_LIMIT
from ..lattices.factor_lattice import factor_congruences
from ..utils.errors import CapExhaustedError

SUITE_PROPERTIES = ("srp", "proj-coext", "boolean", "cond-vi", "factorable", "reg-coext")
EQUIVALENT_PROPERTIES = ("srp", "proj-coext", "boolean", "cond-vi")


def cross_implications(holds: dict, complement_unique: bool) -> OrderedDict:
    """ Relations between suite verdicts that must hold on every algebra, name -> satisfied.
    """
    return OrderedDict([
        ("equivalence", len({holds[p] for p in EQUIVALENT_PROPERTIES}) == 1),
        ("factorable-iff-reg-coext", holds["factorable"] == holds["reg-coext"]),
        ("reg-coext-implies-proj-coext", not holds["reg-coext"] or holds["proj-coext"]),
        ("proj-coext-implies-unique-complements", not holds["proj-coext"] or complement_unique),
    ])


@SOLVERS.register_class()
class SuiteSolver(BaseSolver):
    """ Runs the six coextensivity verdicts on every algebra of a corpus and records disagreements.

    Algebras on which a cap is exhausted are recorded as skipped, not as failures.

    Args:
        con_limit (int): Cap on the number of congruences.
        clone_limit (int): Cap on term operations in term searches.
        reflexive_limit (int): Cap on compatible reflexive relations.
        logger (logging.Logger, None): If None, use global logger.
        hooks (List[dict], Dict[str, dict], None): Hook configurations.
    """

    def __init__(self, con_limit=DEFAULT_CON_LIMIT, clone_limit=DEFAULT_CLONE_LIMIT,
                 reflexive_limit=DEFAULT_REFLEXIVE_LIMIT, **kwargs):
        super(SuiteSolver, self).__init__(**kwargs)
        self.con_limit = con_limit
        self.checks = OrderedDict(
            (name, CHECKS.build(dict(type=name, con_limit=con_limit, clone_limit=clone_limit,
                                     reflexive_limit=reflexive_limit)))
            for name in SUITE_PROPERTIES)

    def before_solve(self, *args, **kwargs):
        super(SuiteSolver, self).before_solve()
        self._solve_outputs.update(checked=0, skipped=[], failures=[])

    def run_iter(self, algebra) -> OrderedDict:
        try:
            verdicts = OrderedDict((name, check(algebra)) for name, check in self.checks.items())
            complement_unique = factor_congruences(algebra, self.con_limit).flags["complement_unique"]
        except CapExhaustedError as e:
            self.logger.warning(f"Skip {algebra.name or 'algebra'} of size {algebra.size}: {e}")
            self._solve_outputs["skipped"].append(OrderedDict([("name", algebra.name), ("reason", str(e))]))
            return OrderedDict()

        holds = OrderedDict((name, v.holds) for name, v in verdicts.items())
        relations = cross_implications(holds, complement_unique)
        self._solve_outputs["checked"] += 1
        broken = [name for name, ok in relations.items() if not ok]
        if broken:
            self.logger.error(f"{algebra.name or 'algebra'} breaks {', '.join(broken)}")
            self._solve_outputs["failures"].append(OrderedDict([
                ("name", algebra.name),
                ("broken", broken),
                ("algebra", algebra_to_json(algebra)),
                ("verdicts", [v.to_json() for v in verdicts.values()]),
                ("complement_unique", complement_unique),
            ]))
        outputs = OrderedDict(holds)
        outputs.update(relations)
        return outputs

    def after_all_iter(self, *args, **kwargs):
        super(SuiteSolver, self).after_all_iter()
        self._solve_outputs["counts"] = OrderedDict(
            (name, OrderedDict([("holds", h), ("fails", f)])) for name, (h, f) in self.agg_iter_outputs.items())

    @property
    def ok(self) -> bool:
        return len(self._solve_outputs.get("failures", [])) == 0
