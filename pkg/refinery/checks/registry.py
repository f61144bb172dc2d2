# Copyright 2026 The Refinery Authors. All Rights Reserved.

from ..utils.registry import Registry

CHECKS = Registry("CHECKS", allow_types=("class",))
