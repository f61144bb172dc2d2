# Copyright 2026 The Refinery Authors. All Rights Reserved.

from ..utils.registry import Registry

HOOKS = Registry("HOOKS", allow_types=("class",))
