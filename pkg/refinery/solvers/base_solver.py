# Copyright 2026 The Refinery Authors. All Rights Reserved.

from abc import ABCMeta, abstractmethod
from collections import OrderedDict

from ..hooks import HOOKS
from ..utils.logger import get_logger
from ..utils.typing import is_named_configs


class BaseSolver(object, metaclass=ABCMeta):
    """ Base Solver, drives a pass over a corpus of algebras and notifies hooks.

    Args:
        logger (logging.Logger, None): If None, use global logger.
        hooks (List[dict], Dict[str, dict], None): Hook configurations.
    """

    def __init__(self, logger=None, hooks=None):
        self.logger = logger or get_logger()
        self._iter = 0
        self._max_iter = 0
        self._iter_inputs = None
        self._iter_outputs = OrderedDict()
        self._agg_iter_outputs = OrderedDict()
        self._solve_outputs = OrderedDict()
        self._hooks = []
        self._load_hook(hooks)

    def solve(self, corpus):
        items = list(corpus)
        self._max_iter = len(items)
        self.before_solve()
        self.before_all_iter()
        for item in items:
            self._iter_inputs = item
            self.before_iter()
            self._iter_outputs = self.run_iter(item)
            self.after_iter()
        self.after_all_iter()
        self.after_solve()
        return self._solve_outputs

    def before_solve(self, *args, **kwargs):
        self._iter = 0
        self._solve_outputs = OrderedDict()
        [t.before_solve(self) for t in self._hooks]

    def after_solve(self, *args, **kwargs):
        [t.after_solve(self) for t in self._hooks]

    @abstractmethod
    def run_iter(self, item) -> OrderedDict:
        pass

    def before_all_iter(self):
        [t.before_all_iter(self) for t in self._hooks]

    def before_iter(self, *args, **kwargs):
        [t.before_iter(self) for t in self._hooks]

    def after_iter(self, *args, **kwargs):
        [t.after_iter(self) for t in self._hooks]
        self._iter += 1

    def after_all_iter(self, *args, **kwargs):
        [t.after_all_iter(self) for t in self._hooks]

    @property
    def iter(self) -> int:
        return self._iter

    @property
    def max_iter(self) -> int:
        return self._max_iter

    @property
    def iter_inputs(self):
        return self._iter_inputs

    @property
    def iter_outputs(self) -> OrderedDict:
        return self._iter_outputs

    @property
    def agg_iter_outputs(self) -> OrderedDict:
        return self._agg_iter_outputs

    @agg_iter_outputs.setter
    def agg_iter_outputs(self, new_outputs):
        assert isinstance(new_outputs, dict)
        self._agg_iter_outputs = new_outputs

    @property
    def solve_outputs(self) -> OrderedDict:
        return self._solve_outputs

    @property
    def hooks(self):
        return list(self._hooks)

    def _load_hook(self, hooks):
        if hooks is not None and len(hooks) > 0:
            if is_named_configs(hooks):
                hooks = list(hooks.values())
            for hook_cfg in hooks:
                if hook_cfg is None:
                    continue
                self._hooks.append(HOOKS.build(hook_cfg))
        self._hooks.sort(key=lambda a: a.priority)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}"
