# Copyright 2026 The Refinery Authors. All Rights Reserved.

import numpy as np


def make_rng(seed=None):
    """ Seeded numpy Generator, the single source of randomness for corpus and split orders.

    Args:
        seed (int, np.random.Generator, None): Seed, or an existing Generator which is returned as is.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)
