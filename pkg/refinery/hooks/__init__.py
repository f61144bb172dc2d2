# Copyright 2026 The Refinery Authors. All Rights Reserved.

from .hook import Hook
from .log import LogHook
from .registry import HOOKS

__all__ = ['HOOKS', 'Hook', 'LogHook']
