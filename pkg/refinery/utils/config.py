# Copyright 2026 The Refinery Authors. All Rights Reserved.

# Config class partially modified from https://github.com/open-mmlab/mmcv/blob/master/mmcv/utils/config.py
# Copyright 2018-2020 Open-MMLab. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import copy
import inspect
import json
import numbers
import os
import os.path as osp
import sys
from importlib import import_module
from typing import Mapping, Optional

from addict import Dict
from yapf.yapflib.yapf_api import FormatCode

_BASE_KEY = "_base_"
_PY_SUFFIXES = (".py", ".pysc", ".pyc", ".pyo", ".pyd", ".pyx")


class ValueComment(object):
    """ Attach a comment to a value, rendered as `value  # comment` when dumped.
    """

    def __init__(self, value, comment):
        self.value = value
        self.comment = comment

    def __repr__(self):
        return f"{self.value} # {self.comment}"


class ConfigDict(Dict):
    """ addict.Dict which raises KeyError on missing keys instead of creating them.

    >>> cfg = ConfigDict(dict(caps=dict(con_limit=10000)))
    >>> cfg.caps.con_limit
    10000
    >>> cfg.caps.missing
    KeyError: 'missing'
    """

    def __missing__(self, name):
        raise KeyError(name)

    def __getattr__(self, name):
        return super(ConfigDict, self).__getattr__(name)

    @staticmethod
    def merge_a_into_b(a, b):
        """ Merge ConfigDict a into ConfigDict b, returning a new ConfigDict.

        Nested dicts merge recursively, None on either side is replaced, numbers may change type,
        any other type change raises ValueError.
        """
        b = copy.deepcopy(b)
        for key, value in a.items():
            if key not in b.keys():
                b[key] = value
                continue
            value_b = b[key]
            if value_b is None or value is None:
                b[key] = value
            elif isinstance(value, numbers.Number) and isinstance(value_b, numbers.Number):
                b[key] = value
            elif type(value) == type(value_b):
                if type(value) is ConfigDict:
                    b[key] = ConfigDict.merge_a_into_b(value, value_b)
                else:
                    b[key] = value
            else:
                raise ValueError(f"Expect {key} of type {type(value_b)}, got {type(value)}")
        return b


class Config(object):
    """ Config parser and pretty printer for python and json config files.

    Example:
        >>> cfg = Config(dict(caps=dict(con_limit=10000)))
        >>> cfg.caps.con_limit
        10000
        >>> cfg = Config.load("suite.py")
    """

    def __init__(self, cfg_dict=None, source=None):
        super(Config, self).__setattr__("_cfg_dict", ConfigDict(cfg_dict if cfg_dict is not None else {}))
        super(Config, self).__setattr__("_source", source)

    def __repr__(self):
        return (f"Config from {self._source}: \n" if self._source is not None else "") + f"{self.dumps()}"

    def __len__(self):
        return len(self._cfg_dict)

    def __getattr__(self, name):
        return self._cfg_dict.__getattr__(name)

    def __getitem__(self, name):
        return self._cfg_dict.__getitem__(name)

    def __setattr__(self, key, value):
        self.__setitem__(key, value)

    def __setitem__(self, key, value):
        if isinstance(value, dict):
            value = ConfigDict(value)
        self._cfg_dict.__setitem__(key, value)

    def __contains__(self, name):
        return name in self._cfg_dict

    def __iter__(self):
        return iter(self._cfg_dict)

    def get(self, name, default=None):
        """ Get a value by name, plain dicts are returned instead of ConfigDict.
        """
        if name not in self._cfg_dict:
            return default
        value = self._cfg_dict.__getitem__(name)
        if type(value) is ConfigDict:
            value = value.to_dict()
        return value

    def to_dict(self):
        return self._cfg_dict.to_dict()

    @staticmethod
    def merge_a_into_b(a, b):
        """ Merge Config a into Config b.

        Args:
            a (Config): Source config.
            b (Config): Target config.

        Returns:
            A new Config.
        """
        cfg_dict = ConfigDict.merge_a_into_b(a.__getattribute__("_cfg_dict"), b.__getattribute__("_cfg_dict"))
        return Config(cfg_dict=cfg_dict)

    def apply_env_overrides(self, overrides: Mapping[str, str], environ: Optional[Mapping[str, str]] = None):
        """ Override integer leaves from environment variables.

        Args:
            overrides (Mapping[str, str]): Environment variable name -> dotted config key, e.g.
                {"REFINERY_CON_LIMIT": "caps.con_limit"}.
            environ (Mapping[str, str], None): Defaults to os.environ.

        Raises:
            ValueError: If a set variable is not an integer.
        """
        environ = os.environ if environ is None else environ
        for env_key, dotted in overrides.items():
            raw = environ.get(env_key)
            if raw is None or raw == "":
                continue
            try:
                value = int(raw)
            except ValueError:
                raise ValueError(f"{env_key} must be an integer, got {raw!r}")
            *parents, leaf = dotted.split(".")
            node = self._cfg_dict
            for parent in parents:
                node = node[parent]
            node[leaf] = value
        return self

    @staticmethod
    def load(filename):
        """ Load config from a python or json file.

        Args:
            filename (str): config file path.

        Returns:
            Config instance.
        """
        if filename.endswith(_PY_SUFFIXES):
            cfg_dict = Config._parse_python_file(filename)
        elif filename.endswith(".json"):
            with open(filename) as f:
                cfg_dict = Config._loads_json(f.read())
        else:
            raise ValueError(f"Unsupported config file {filename}, expect .py or .json")

        cfg_dict = Config._process_base(cfg_dict, filename=filename)
        return Config(cfg_dict=cfg_dict, source=filename)

    @staticmethod
    def _parse_python_file(filename) -> dict:
        """ Import a python file and keep its plain module-level values.
        """
        filepath = osp.abspath(osp.expanduser(filename))
        if not osp.exists(filepath):
            raise FileNotFoundError(f"File {filepath} not found")
        sys.path.insert(0, osp.dirname(filepath))
        module_name, _ = osp.splitext(osp.basename(filepath))
        try:
            module = import_module(module_name)
        finally:
            sys.path.pop(0)
        cfg_dict = {name: value for name, value in module.__dict__.items() if not name.startswith("__") and
                    not inspect.isfunction(value) and not inspect.ismodule(value) and not inspect.isclass(value)}
        del sys.modules[module_name]
        return cfg_dict

    @staticmethod
    def loads(s):
        cfg_dict = Config._process_base(Config._loads_json(s))
        return Config(cfg_dict=cfg_dict)

    @staticmethod
    def _loads_json(s) -> dict:
        cfg_dict = json.loads(s)
        if type(cfg_dict) is not dict:
            raise ValueError(f"Json config should contain a dict, got {type(cfg_dict)}")
        return cfg_dict

    @staticmethod
    def _process_base(cfg_dict: dict, filename: Optional[str] = None) -> dict:
        # _base_ holds paths relative to filename, later bases override earlier ones
        if _BASE_KEY not in cfg_dict:
            return cfg_dict
        bases = cfg_dict.pop(_BASE_KEY)
        if isinstance(bases, str):
            bases = [bases]
        if not isinstance(bases, (list, tuple)) or len(bases) == 0:
            raise ValueError(f"{_BASE_KEY} should be a str or a non-empty list, got {bases!r}")

        def _resolve(path):
            if filename is None:
                return path
            return osp.abspath(osp.expanduser(osp.join(osp.dirname(filename), path)))

        merged = Config.load(_resolve(bases[0]))
        for path in bases[1:]:
            merged = Config.merge_a_into_b(Config.load(_resolve(path)), merged)
        merged = Config.merge_a_into_b(Config(cfg_dict=cfg_dict), merged)
        return merged.__getattribute__("_cfg_dict")

    def dumps(self, dump_format="py"):
        """ Dump current config to a string.

        Args:
            dump_format (str): 'py' or 'json'.
        """
        if dump_format == "py":
            text, _ = FormatCode(Config._dump_dict(self._cfg_dict, root_level=True),
                                 style_config=dict(based_on_style='pep8', COLUMN_LIMIT=120))
            return text
        elif dump_format == "json":
            return json.dumps(self._cfg_dict.to_dict(), ensure_ascii=False, indent=2)
        raise ValueError(f"Unsupported dump format {dump_format}")

    @staticmethod
    def _dump_value(v):
        if isinstance(v, ValueComment):
            v = v.value
        if isinstance(v, dict):
            return f"dict({Config._dump_dict(v)})"
        if isinstance(v, (list, tuple)):
            inner = ", ".join(Config._dump_value(t) for t in v)
            return f"[{inner}]" if isinstance(v, list) else f"({inner}{',' if len(v) == 1 else ''})"
        return repr(v)

    @staticmethod
    def _dump_dict(input_dict, root_level=False) -> str:
        lines = []
        for k, v in input_dict.items():
            comment = ""
            if isinstance(v, ValueComment):
                comment = "  # " + v.comment.replace("\n", " ")
            line = f"{k}={Config._dump_value(v)}"
            lines.append(line + comment if root_level else line + "," + comment)
        return "\n".join(lines) + "\n"
