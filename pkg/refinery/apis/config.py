import os.path as osp

from ..utils.config import Config

ENV_OVERRIDES = {"REFINERY_CON_LIMIT": "caps.con_limit"}


def get_base_config() -> Config:
    return Config.load(osp.join(osp.dirname(__file__), '_standard_config.py'))
