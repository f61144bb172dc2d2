# Copyright 2026 The Refinery Authors. All Rights Reserved.

from .cli import build_run_config, main, parse_args, run
from .config import ENV_OVERRIDES, get_base_config

__all__ = ['ENV_OVERRIDES', 'build_run_config', 'get_base_config', 'main', 'parse_args', 'run']
