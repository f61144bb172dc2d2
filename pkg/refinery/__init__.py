# Copyright 2026 The Refinery Authors. All Rights Reserved.

from .version import __version__

# algebras must be imported before relations, which import from it
from . import algebras
from . import relations
