# Copyright 2026 The Refinery Authors. All Rights Reserved.
import time

from .hook import Hook
from .registry import HOOKS
from ..utils.logger import VerdictAgg

_DEFAULT_LOG_PRIORITY = 100


def _print_counts(counts: dict) -> str:
    return ", ".join(f"{k}: {holds}/{holds + fails}" for k, (holds, fails) in counts.items())


def _print_iter_log(solver, counts, elapsed, final=False):
    solver.logger.info(
        f"iter: [{solver.iter + 1 if not final else solver.iter}/{solver.max_iter}], "
        f"time: {elapsed:.4f}, "
        f"{_print_counts(counts)}")


@HOOKS.register_class()
class LogHook(Hook):
    """ Logs running holds counts of the suite verdicts.

    Args:
        log_interval (int): Log every log_interval algebras.
    """

    def __init__(self, log_interval=10, **kwargs):
        priority = kwargs.pop("priority") if "priority" in kwargs else _DEFAULT_LOG_PRIORITY
        super(LogHook, self).__init__(priority=priority)
        self.log_interval = log_interval
        self.verdict_agg = VerdictAgg()
        self.last_log_step = 0
        self.time = time.time()

    def before_all_iter(self, solver):
        self.time = time.time()
        self.last_log_step = 0
        self.verdict_agg.reset()

    def after_iter(self, solver):
        self.verdict_agg.update(solver.iter_outputs)
        if (solver.iter + 1) % self.log_interval == 0:
            _print_iter_log(solver, self.verdict_agg.aggregate(), time.time() - self.time)
            self.last_log_step = solver.iter + 1

    def after_all_iter(self, solver):
        solver.agg_iter_outputs = self.verdict_agg.aggregate()
        if solver.iter != self.last_log_step:
            _print_iter_log(solver, solver.agg_iter_outputs, time.time() - self.time, final=True)
            self.last_log_step = solver.iter

    def after_solve(self, solver):
        outputs = solver.solve_outputs
        solver.logger.info(f"Checked {outputs.get('checked', 0)} algebras, "
                           f"skipped {len(outputs.get('skipped', []))}, "
                           f"failures {len(outputs.get('failures', []))}")
