#!/usr/bin/python3
# Copyright 2026 The Refinery Authors. All Rights Reserved.

import os.path as osp
import sys

sys.path.insert(0, osp.dirname(osp.dirname(__file__)))

from refinery.apis.cli import main

if __name__ == "__main__":
    main()
