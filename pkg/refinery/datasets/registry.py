# Copyright 2026 The Refinery Authors. All Rights Reserved.

from ..utils.registry import Registry, build_from_config


def build_corpus(cfg, registry, **kwargs):
    """ Builds one corpus, or chains several when cfg is a list of corpus configs.
    """
    if isinstance(cfg, list):
        if len(cfg) == 0:
            raise ValueError("Corpus config contains nothing")
        if len(cfg) == 1:
            return build_from_config(cfg[0], registry, **kwargs)
        from .corpus import ChainedCorpus
        return ChainedCorpus(*[build_from_config(c, registry, **kwargs) for c in cfg])
    return build_from_config(cfg, registry, **kwargs)


DATASETS = Registry("DATASETS", build_func=build_corpus)
