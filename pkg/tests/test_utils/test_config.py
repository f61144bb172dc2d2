import os.path as osp

import pytest

from refinery.utils.config import Config

DATA_DIR = osp.join(osp.dirname(osp.dirname(__file__)), "data", "configs")


def test_load_json_config():
    cfg = Config.load(osp.join(DATA_DIR, "caps.json"))
    assert cfg.caps.con_limit == 50
    assert cfg.output.format == "json"


def test_load_py_config_with_base():
    cfg = Config.load(osp.join(DATA_DIR, "small_suite.py"))
    assert cfg.caps.con_limit == 50
    assert cfg.corpus.count == 3
    assert cfg.output.format == "text"
    assert cfg.names == ["f0", "f1"]
    assert "get_names" not in cfg


def test_loads_json_config():
    json_str = """
    {
      "a": 100,
      "b": false
    }
    """
    cfg = Config.loads(json_str)
    assert cfg.a == 100
    assert cfg.b is False


def test_loads_rejects_non_dict():
    with pytest.raises(ValueError):
        Config.loads("[1, 2]")


def test_dumps_config():
    cfg = Config.load(osp.join(DATA_DIR, "small_suite.py"))
    py_s = cfg.dumps(dump_format="py")
    assert "corpus" in py_s

    json_s = cfg.dumps(dump_format="json")
    assert Config.loads(json_s).corpus.seed == 7


def test_set_value():
    cfg = Config.loads('{"a": 100}')
    cfg.c = dict(d=100, e=dict(v=200))
    cfg.c.e.v = 300
    assert cfg.c.e.v == 300


def test_get_returns_plain_dict():
    cfg = Config.load(osp.join(DATA_DIR, "caps.json"))
    caps = cfg.get("caps")
    assert type(caps) is dict
    assert cfg.get("missing", 5) == 5


def test_merge():
    cfg = Config.load(osp.join(DATA_DIR, "caps.json"))
    cfg.none_value = None
    cfg.not_none_value = "Not none"

    cfg_add = Config.loads('{"caps": {"con_limit": 7}, "h": "NewKey"}')
    cfg_add.none_value = 1
    cfg_add.not_none_value = None

    cfg_new = Config.merge_a_into_b(cfg_add, cfg)

    assert cfg_new.caps.con_limit == 7
    assert cfg_new.caps.clone_limit == 5000
    assert cfg_new.h == "NewKey"
    assert cfg_new.none_value == 1
    assert cfg_new.not_none_value is None


def test_apply_env_overrides():
    cfg = Config.load(osp.join(DATA_DIR, "caps.json"))
    cfg.apply_env_overrides({"REFINERY_CON_LIMIT": "caps.con_limit"}, environ={"REFINERY_CON_LIMIT": "12"})
    assert cfg.caps.con_limit == 12

    cfg.apply_env_overrides({"REFINERY_CON_LIMIT": "caps.con_limit"}, environ={})
    assert cfg.caps.con_limit == 12


def test_apply_env_overrides_rejects_non_integer():
    cfg = Config.load(osp.join(DATA_DIR, "caps.json"))
    with pytest.raises(ValueError):
        cfg.apply_env_overrides({"REFINERY_CON_LIMIT": "caps.con_limit"}, environ={"REFINERY_CON_LIMIT": "many"})
