# Copyright 2026 The Refinery Authors. All Rights Reserved.

from ..utils.registry import Registry

SOLVERS = Registry("SOLVERS", allow_types=("class",))
