#!/usr/bin/python3
# Copyright 2026 The Refinery Authors. All Rights Reserved.

import argparse
import os.path as osp
import sys

sys.path.insert(0, osp.dirname(osp.dirname(__file__)))

import refinery.checks  # noqa: F401
import refinery.datasets  # noqa: F401
import refinery.hooks  # noqa: F401
import refinery.solvers  # noqa: F401
from refinery.utils.config import Config
from refinery.utils.registry import Registry


def display_all_modules():
    for registry in Registry.REGISTRY_LIST:
        print(registry)
        print()


def parse_args():
    parser = argparse.ArgumentParser()
    parser.add_argument("-m", "--module", default=None, type=str,
                        help="Display a specify registry, e.g. CHECKS.")
    parser.add_argument("-t", "--type", default=None, type=str,
                        help="Display a specify type parameters, e.g. srp.")
    return parser.parse_args()


def main():
    args = parse_args()

    if args.module is None or args.type is None:
        display_all_modules()
        print("You can specify -m and -t to list detailed parameters.")
        return

    specify_module = [t for t in Registry.REGISTRY_LIST if t.name == args.module]
    if len(specify_module) == 0:
        print(f"{args.module} not found.")
        display_all_modules()
        return
    specify_module = specify_module[0]

    if not specify_module.contains(args.type):
        print(f"{args.type} not found in {args.module}")
        print(specify_module)
        return

    type_args = specify_module.fetch_parameters(args.type)
    print(Config(dict(__key__=dict(type=args.type, **type_args))))


if __name__ == "__main__":
    main()
