# Copyright 2026 The Refinery Authors. All Rights Reserved.

import argparse
import json
import logging
import sys
from collections import OrderedDict
from contextlib import redirect_stderr, redirect_stdout

from .config import ENV_OVERRIDES, get_base_config
from ..algebras.io import algebra_to_json, load_algebra
from ..checks import CHECKS, pushout_along
from ..datasets import generate_corpus
from ..decompositions import decompose
from ..lattices import all_congruences, factor_congruences, hasse_dot
from ..relations.partition import Partition
from ..solvers import SOLVERS
from ..utils.config import Config
from ..utils.errors import CapExhaustedError
from ..utils.logger import get_logger, init_logger
from ..version import __version__

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _make_parser():
    parser = argparse.ArgumentParser(prog="refinery", allow_abbrev=False, description="""
    Congruences, factor congruences and strict refinement checks of finite algebras
    """)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", type=str, help="""
    path to a .py or .json config merged over the standard config, default is None
    """)
    parser.add_argument("--log-file", dest="log_file", type=str, help="""
    also write diagnostics to this file, default is None
    """)
    parser.add_argument("--format", choices=("json", "text", "dot"), help="""
    output format, default comes from output.format of the config
    """)
    parser.add_argument("--con-limit", dest="con_limit", type=int, help="cap on the number of congruences")
    parser.add_argument("--clone-limit", dest="clone_limit", type=int, help="cap on term operations in term searches")

    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("con", help="list the congruences")
    p.add_argument("file")

    p = sub.add_parser("factors", help="factor congruences, complements and lattice flags")
    p.add_argument("file")

    p = sub.add_parser("lattice", help="Hasse diagram of the factor congruences")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="emit DOT, the default for this command")
    p.add_argument("--con", action="store_true", help="draw all congruences instead of the factor congruences")

    p = sub.add_parser("check", help="check one property")
    p.add_argument("file")
    p.add_argument("--property", dest="prop", required=True, choices=CHECKS.keys())

    p = sub.add_parser("decompose", help="split into directly indecomposable factors")
    p.add_argument("file")
    p.add_argument("--seed", type=int, help="draw factor pairs at random with this seed")

    p = sub.add_parser("pushout", help="pushout of two quotient maps")
    p.add_argument("file")
    p.add_argument("--theta", required=True, help="partition as a class list, e.g. '[[0,2,4],[1,3,5]]'")
    p.add_argument("--phi", required=True, help="partition as a class list")

    p = sub.add_parser("suite", help="run the equivalence suite over a seeded corpus")
    p.add_argument("--count", type=int)
    p.add_argument("--max-size", dest="max_size", type=int)
    p.add_argument("--max-ops", dest="max_ops", type=int)
    p.add_argument("--seed", type=int)
    return parser


def parse_args(argv=None):
    return _make_parser().parse_args(argv)


def build_run_config(args) -> Config:
    """ Standard config, then the --config file, then flags, then environment overrides.

    Raises:
        ValueError: REFINERY_CON_LIMIT is set but not an integer.
    """
    cfg = get_base_config()
    if args.config is not None:
        cfg = Config.merge_a_into_b(Config.load(args.config), cfg)
    cfg.command = args.command
    cfg.inputs = [args.file] if getattr(args, "file", None) is not None else []
    if args.format is not None:
        cfg.output.format = args.format
    if args.con_limit is not None:
        cfg.caps.con_limit = args.con_limit
    if args.clone_limit is not None:
        cfg.caps.clone_limit = args.clone_limit
    if args.command == "suite":
        for key in ("count", "max_size", "max_ops", "seed"):
            value = getattr(args, key)
            if value is not None:
                cfg.corpus[key] = value
    cfg.apply_env_overrides(ENV_OVERRIDES)
    return cfg


def _print_text(payload, stdout):
    if isinstance(payload, dict):
        for k, v in payload.items():
            stdout.write(f"{k}: {json.dumps(v, separators=(',', ':'))}\n")
    elif isinstance(payload, list):
        for v in payload:
            stdout.write(f"{json.dumps(v, separators=(',', ':'))}\n")
    else:
        stdout.write(f"{payload}\n")


def _emit(payload, fmt, stdout):
    if isinstance(payload, str):
        stdout.write(payload if payload.endswith("\n") else payload + "\n")
    elif fmt == "text":
        _print_text(payload, stdout)
    else:
        stdout.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")


def _run_command(cfg, args, stdout, logger) -> int:
    caps = cfg.caps
    fmt = cfg.output.format

    if args.command == "suite":
        corpus = generate_corpus(cfg)
        solver = SOLVERS.build(cfg.solver, con_limit=caps.con_limit, clone_limit=caps.clone_limit,
                               reflexive_limit=caps.reflexive_limit, logger=logger)
        outputs = solver.solve(corpus)
        _emit(outputs, "json" if fmt == "dot" else fmt, stdout)
        return EXIT_OK if solver.ok else EXIT_FAILS

    algebra = load_algebra(args.file)
    logger.debug(f"Loaded {algebra!r} from {args.file}")

    if args.command == "con":
        lattice = all_congruences(algebra, caps.con_limit)
        if fmt == "dot":
            _emit(hasse_dot(lattice), fmt, stdout)
        elif fmt == "text":
            _emit([p.serialize() for p in lattice.elements], fmt, stdout)
        else:
            _emit(lattice.to_json(), fmt, stdout)
        return EXIT_OK

    if args.command == "factors":
        lattice = factor_congruences(algebra, caps.con_limit)
        _emit(hasse_dot(lattice) if fmt == "dot" else lattice.to_json(), fmt, stdout)
        return EXIT_OK

    if args.command == "lattice":
        lattice = all_congruences(algebra, caps.con_limit) if args.con else factor_congruences(algebra, caps.con_limit)
        if args.dot or fmt in ("dot", "json"):
            _emit(hasse_dot(lattice, name=algebra.name or None), fmt, stdout)
        else:
            _emit(lattice.to_json(), fmt, stdout)
        return EXIT_OK

    if args.command == "check":
        check = CHECKS.build(dict(type=args.prop, con_limit=caps.con_limit, clone_limit=caps.clone_limit,
                                  reflexive_limit=caps.reflexive_limit))
        verdict = check(algebra)
        _emit(verdict.to_json(), "json" if fmt == "dot" else fmt, stdout)
        return EXIT_OK if verdict.holds else EXIT_FAILS

    if args.command == "decompose":
        tree = decompose(algebra, caps.con_limit, rng=args.seed)
        _emit(tree.to_json(), "json" if fmt == "dot" else fmt, stdout)
        return EXIT_OK

    if args.command == "pushout":
        theta = Partition.parse(args.theta, n=algebra.size)
        phi = Partition.parse(args.phi, n=algebra.size)
        top, from_theta, from_phi = pushout_along(algebra, theta, phi)
        _emit(OrderedDict([("pushout", algebra_to_json(top)), ("from_theta", from_theta.to_list()),
                           ("from_phi", from_phi.to_list())]), "json" if fmt == "dot" else fmt, stdout)
        return EXIT_OK

    raise ValueError(f"unknown command {args.command}")


def run(argv=None, stdout=None, stderr=None) -> int:
    """ Runs one command line and returns its exit code.

    Exit codes: 0 ran and the property holds (or the listing succeeded), 1 the property fails or the
    suite found a disagreement, 2 usage or validation error, 3 a cap was exhausted.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    logger = get_logger()
    try:
        cfg = build_run_config(args)
        if args.log_file is not None:
            init_logger(logger, log_file=args.log_file)
        logger.debug(f"Running with config: \n{cfg}")
        return _run_command(cfg, args, stdout, logger)
    except CapExhaustedError as e:
        stderr.write(f"refinery: error: {e}\n")
        return EXIT_CAP
    except (ValueError, KeyError, OSError) as e:
        stderr.write(f"refinery: error: {e}\n")
        return EXIT_USAGE
    finally:
        for handler in [h for h in logger.handlers if isinstance(h, logging.FileHandler)]:
            handler.close()
            logger.removeHandler(handler)


def main():
    sys.exit(run())
