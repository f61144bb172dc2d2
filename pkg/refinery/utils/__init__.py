# Copyright 2026 The Refinery Authors. All Rights Reserved.
