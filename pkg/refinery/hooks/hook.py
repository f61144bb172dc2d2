# Copyright 2026 The Refinery Authors. All Rights Reserved.

from abc import ABCMeta


class Hook(object, metaclass=ABCMeta):
    """ Observer of a solver pass over a corpus of algebras.

    Hooks are called in ascending priority. Each callback receives the solver, whose
    iter_inputs is the algebra being checked and iter_outputs the verdicts of the last one.

    Args:
        priority (int): Lower runs first.
    """

    def __init__(self, priority=0):
        self.priority = priority

    def before_solve(self, solver):
        """ Once, before the corpus is read. """

    def after_solve(self, solver):
        """ Once, after solve_outputs holds the final counts, skips and failures. """

    def before_all_iter(self, solver):
        """ Once the corpus is materialised and max_iter is known. """

    def before_iter(self, solver):
        """ Before the verdicts of one algebra are computed. """

    def after_iter(self, solver):
        """ After iter_outputs holds the verdicts of one algebra, or its skip reason. """

    def after_all_iter(self, solver):
        """ After the last algebra, before after_solve. """
