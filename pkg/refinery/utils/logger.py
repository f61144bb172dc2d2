# Copyright 2026 The Refinery Authors. All Rights Reserved.

import logging
import sys
from collections import OrderedDict

_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
_STDERR_HANDLER = "refinery-stderr"


def get_logger(name="refinery"):
    logger = logging.getLogger(name)
    logger.propagate = False
    if not any(h.get_name() == _STDERR_HANDLER for h in logger.handlers):
        # stdout carries verdicts and diagrams, diagnostics go to stderr
        std_handler = logging.StreamHandler(sys.stderr)
        std_handler.set_name(_STDERR_HANDLER)
        std_handler.setFormatter(logging.Formatter(_FORMAT))
        logger.setLevel(logging.INFO)
        logger.addHandler(std_handler)
    return logger


def init_logger(in_logger, log_file=None, level=logging.INFO):
    """ Set log level and optionally add a file handler.

    Args:
        in_logger (logging.Logger):
        log_file (str, None): If not None, a file handler will be added to in_logger.
        level (int): Logging level for in_logger and its handlers.
    """
    if log_file is not None:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter(_FORMAT))
        in_logger.addHandler(file_handler)
        in_logger.info(f"Running task with log file: {log_file}")
    in_logger.setLevel(level)
    for handler in in_logger.handlers:
        handler.setLevel(level)


class VerdictAgg(object):
    """ Count holds / fails per property over a corpus run.

    Example:
        >>> agg = VerdictAgg()
        >>> agg.update(dict(srp=True, boolean=True))
        >>> agg.update(dict(srp=False, boolean=False))
        >>> agg.aggregate()
        OrderedDict([('srp', (1, 1)), ('boolean', (1, 1))])
    """

    def __init__(self):
        self.buffer = OrderedDict()
        self.count = 0

    def update(self, kv: dict):
        """ Update counters.

        Args:
            kv (dict): property name -> bool
        """
        for k, v in kv.items():
            if not isinstance(v, bool):
                continue
            holds, fails = self.buffer.get(k, (0, 0))
            self.buffer[k] = (holds + 1, fails) if v else (holds, fails + 1)
        self.count += 1

    def aggregate(self):
        """ Returns an OrderedDict of property -> (holds, fails).
        """
        return OrderedDict(self.buffer)

    def reset(self):
        self.buffer.clear()
        self.count = 0
