# Copyright 2026 The Refinery Authors. All Rights Reserved.

import json
import numbers

from .algebra import FiniteAlgebra, Signature, validate_tables
from ..utils.errors import AlgebraFormatError


def _is_int(value):
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


def parse_algebra(text) -> FiniteAlgebra:
    """ Parse the JSON algebra document.

    The document looks like
    {"name": "Z4", "size": 4, "operations": [{"name": "+", "arity": 2, "table": [0, 1, 2, 3, 1, ...]}]},
    tables being flat row-major, a constant may give a single int as its table.

    Args:
        text (str, bytes): UTF-8 document.

    Returns:
        FiniteAlgebra.

    Raises:
        AlgebraFormatError: with the JSON path of the offending entry.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise AlgebraFormatError(f"malformed document, not UTF-8 at byte {e.start}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraFormatError(f"malformed document, {e.msg} at line {e.lineno} column {e.colno}")
    if not isinstance(doc, dict):
        raise AlgebraFormatError(f"document must be an object, got {type(doc).__name__}")

    name = doc.get("name", "")
    if not isinstance(name, str):
        raise AlgebraFormatError("name must be a string", "$.name")
    size = doc.get("size")
    if not _is_int(size) or size < 0:
        raise AlgebraFormatError(f"size must be a non-negative integer, got {size!r}", "$.size")
    operations = doc.get("operations", [])
    if not isinstance(operations, list):
        raise AlgebraFormatError("operations must be a list", "$.operations")

    symbols, tables, paths = [], {}, {}
    for i, op in enumerate(operations):
        path = f"$.operations[{i}]"
        if not isinstance(op, dict):
            raise AlgebraFormatError("operation must be an object", path)
        symbol, arity, table = op.get("name"), op.get("arity"), op.get("table")
        if not isinstance(symbol, str) or symbol == "":
            raise AlgebraFormatError("operation name must be a non-empty string", f"{path}.name")
        if symbol in tables:
            raise AlgebraFormatError(f"duplicate symbol '{symbol}'", f"{path}.name")
        if not _is_int(arity) or arity < 0:
            raise AlgebraFormatError(f"arity must be a non-negative integer, got {arity!r}", f"{path}.arity")
        if arity == 0 and _is_int(table):
            table = [table]
        if not isinstance(table, list):
            raise AlgebraFormatError("table must be a list of integers", f"{path}.table")
        for j, entry in enumerate(table):
            if not _is_int(entry):
                raise AlgebraFormatError(f"table entry must be an integer, got {entry!r}", f"{path}.table[{j}]")
        symbols.append((symbol, arity))
        tables[symbol] = table
        paths[symbol] = f"{path}.table"

    signature = Signature(symbols)
    validate_tables(signature, size, tables, path_of=paths.get)
    return FiniteAlgebra(signature, size, tables, name=name)


def load_algebra(filename) -> FiniteAlgebra:
    with open(filename, "rb") as f:
        return parse_algebra(f.read())


def algebra_to_json(algebra: FiniteAlgebra) -> dict:
    operations = []
    for symbol, arity in algebra.signature:
        table = [int(v) for v in algebra.table(symbol)]
        operations.append(dict(name=symbol, arity=arity, table=table[0] if arity == 0 else table))
    return dict(name=algebra.name, size=algebra.size, operations=operations)


def dump_algebra(algebra: FiniteAlgebra, indent=None) -> str:
    """ Inverse of parse_algebra.
    """
    return json.dumps(algebra_to_json(algebra), ensure_ascii=False, indent=indent)
