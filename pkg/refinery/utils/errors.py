# Copyright 2026 The Refinery Authors. All Rights Reserved.


class AlgebraFormatError(ValueError):
    """ An algebra document is malformed.

    Args:
        message (str): What is wrong.
        path (str): JSON path of the offending entry, e.g. '$.operations[0].table[5]'.
    """

    def __init__(self, message, path="$"):
        super(AlgebraFormatError, self).__init__(f"{path}: {message}")
        self.path = path


class SignatureMismatchError(ValueError):
    pass


class SizeMismatchError(ValueError):
    pass


class NotACongruenceError(ValueError):
    """ A partition is not compatible with an operation.

    Args:
        symbol (str): Operation symbol.
        coordinate (int): Argument position that was varied.
        pair (tuple): (x, y) related by the partition whose translates are not.
    """

    def __init__(self, symbol, coordinate, pair):
        super(NotACongruenceError, self).__init__(
            f"partition is not compatible with operation '{symbol}' at coordinate {coordinate} for pair {pair}")
        self.symbol = symbol
        self.coordinate = coordinate
        self.pair = pair


class GlobalSupportError(ValueError):
    def __init__(self, message="algebra lacks global support"):
        super(GlobalSupportError, self).__init__(message)


class CapExhaustedError(RuntimeError):
    """ An enumeration stopped at its configured cap, the answer is unknown.
    """

    def __init__(self, what, cap):
        super(CapExhaustedError, self).__init__(f"{what} exceeded the cap of {cap}")
        self.what = what
        self.cap = cap
