# Copyright 2026 The Refinery Authors. All Rights Reserved.

# Registry class & build_from_config function partially modified from
# https://github.com/open-mmlab/mmcv/blob/master/mmcv/utils/registry.py
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
import warnings
from collections import OrderedDict

from docstring_parser import parser

from .config import ValueComment


def build_from_config(cfg, registry, **kwargs):
    """ Default builder function.

    Args:
        cfg (dict): Parameters passed to the target class or function, must contain key 'type'.
        registry (Registry): Registry to search the target in.
        kwargs (dict, optional): Extra parameters not in the config dict.

    Returns:
        Target class instance or the value returned by the function.

    Raises:
        TypeError: cfg is not a dict or registry is not a Registry.
        KeyError: 'type' missing or not registered.
    """
    if not isinstance(cfg, dict):
        raise TypeError(f"config must be type dict, got {type(cfg)}")
    if "type" not in cfg:
        raise KeyError(f"config must contain key type, got {cfg}")
    if not isinstance(registry, Registry):
        raise TypeError(f"registry must be type Registry, got {type(registry)}")

    cfg = copy.deepcopy(dict(cfg))
    req_type = cfg.pop("type")
    req_type_entry = req_type
    if isinstance(req_type, str):
        req_type_entry = registry.get(req_type)
        if req_type_entry is None:
            raise KeyError(f"{req_type} not found in {registry.name} registry")

    cfg.update(kwargs)

    if inspect.isclass(req_type_entry) or inspect.isfunction(req_type_entry):
        return req_type_entry(**cfg)
    raise TypeError(f"type must be str, class or function, got {type(req_type_entry)}")


def _get_doc_params(doc_str):
    ret = OrderedDict()
    if not doc_str:
        return ret
    for param in parser.parse(doc_str).params:
        if param.description is not None:
            ret[param.arg_name] = param.description
    return ret


def _describe_parameters(parameters, doc_params, owner_name, args):
    for key, value in parameters.items():
        if key == "self" or key in args:
            continue
        if value.kind == inspect.Parameter.VAR_KEYWORD:
            args[key] = ValueComment(dict(), "")
            continue
        if value.kind not in (inspect.Parameter.POSITIONAL_OR_KEYWORD, inspect.Parameter.KEYWORD_ONLY):
            continue
        if value.default != inspect.Parameter.empty:
            default_value, default_doc = value.default, ""
        else:
            default_value, default_doc = None, f"Required by {owner_name}. "
        if key in doc_params:
            default_doc += doc_params[key].replace("\n", " ")
        args[key] = ValueComment(default_value, default_doc.strip())


def get_class_arguments(cls):
    args = OrderedDict()
    for type_c in cls.__mro__:
        if type_c is object:
            continue
        _describe_parameters(inspect.signature(type_c.__init__).parameters,
                             _get_doc_params(type_c.__doc__), type_c.__name__, args)
    return args


def get_function_arguments(func):
    args = OrderedDict()
    _describe_parameters(inspect.signature(func).parameters, _get_doc_params(func.__doc__), func.__name__, args)
    return args


class Registry(object):
    """ A registry maps names to classes or functions.

    Example:
         >>> CHECKS = Registry('CHECKS', allow_types=("class",))
         >>> @CHECKS.register_class("srp")
         >>> class StrictRefinementCheck(BaseCheck):
         >>>     pass
         >>> check = CHECKS.build(dict(type="srp"))

    Args:
        name (str): Registry name.
        build_func (func, None): Instance construct function. Default is build_from_config.
        allow_types (tuple): Whether classes, functions or both may be registered.
    """

    REGISTRY_LIST = []

    def __init__(self, name, build_func=None, allow_types=("class", "function")):
        self.name = name
        self.allow_types = allow_types
        self.class_map = OrderedDict()
        self.func_map = OrderedDict()
        self.build_func = build_func or build_from_config

        Registry.REGISTRY_LIST.append(self)

    def get(self, req_type):
        return self.class_map.get(req_type) or self.func_map.get(req_type)

    def build(self, *args, **kwargs):
        return self.build_func(*args, **kwargs, registry=self)

    def keys(self):
        return sorted(list(self.class_map.keys()) + list(self.func_map.keys()))

    def _register(self, kind, mapping, entry, name):
        if kind not in self.allow_types:
            raise TypeError(f"Registry {self.name} only allows type {self.allow_types}, got {kind}")
        if name in mapping:
            warnings.warn(f"{kind.capitalize()} {name} already registered by {mapping[name]}, "
                          f"will be replaced by {entry}")
        mapping[name] = entry
        return entry

    def register_class(self, name=None):
        def _register(cls):
            if not inspect.isclass(cls):
                raise TypeError(f"Module must be type class, got {type(cls)}")
            return self._register("class", self.class_map, cls, name or cls.__name__)

        return _register

    def register_function(self, name=None):
        def _register(func):
            if not inspect.isfunction(func):
                raise TypeError(f"Registry must be type function, got {type(func)}")
            return self._register("function", self.func_map, func, name or func.__name__)

        return _register

    def fetch_parameters(self, req_type):
        """ Get the full parameter dict of req_type.

        Args:
            req_type (str): Registered type name.

        Returns:
            An ordered dict of arguments with default values and comments.
        """
        if req_type in self.class_map:
            return get_class_arguments(self.class_map[req_type])
        elif req_type in self.func_map:
            return get_function_arguments(self.func_map[req_type])
        raise ValueError(f"Unexpected type {req_type}")

    def contains(self, req_type):
        return req_type in self.class_map or req_type in self.func_map

    def __repr__(self):
        descriptions = []
        for key in self.keys():
            entry = self.get(key)
            descriptions.append(f"\t{key}: {entry.__module__}.{entry.__name__}")
        return f"{self.__class__.__name__} [{self.name}], \n" + "\n".join(descriptions)
