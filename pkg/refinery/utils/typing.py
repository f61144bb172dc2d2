# Copyright 2026 The Refinery Authors. All Rights Reserved.

import numbers


def is_named_configs(value) -> bool:
    """ Whether value maps names to buildable configs, e.g. dict(log=dict(type="LogHook")).

    A None entry disables that name.
    """
    if not isinstance(value, dict):
        return False
    return all(isinstance(key, str) and (cfg is None or (isinstance(cfg, dict) and "type" in cfg))
               for key, cfg in value.items())


def _is_element(value) -> bool:
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


def is_class_list(value) -> bool:
    """ Whether value looks like a serialised partition: a list of lists of integer elements.

    Ranges, emptiness of classes and disjointness are left to Partition.from_classes.
    """
    if not isinstance(value, (list, tuple)):
        return False
    return all(isinstance(c, (list, tuple)) and all(_is_element(x) for x in c) for c in value)
