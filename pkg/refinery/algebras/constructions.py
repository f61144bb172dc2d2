# Copyright 2026 The Refinery Authors. All Rights Reserved.

from typing import Tuple

import numpy as np

from .algebra import ElementMap, FiniteAlgebra, flat_index, tuple_digits
from ..relations.congruence import check_congruence
from ..relations.partition import Partition
from ..utils.errors import SignatureMismatchError


def _check_signatures(a: FiniteAlgebra, b: FiniteAlgebra):
    if a.signature != b.signature:
        raise SignatureMismatchError(f"signatures differ: {list(a.signature.symbols)} vs {list(b.signature.symbols)}")


def product(a: FiniteAlgebra, b: FiniteAlgebra) -> Tuple[FiniteAlgebra, ElementMap, ElementMap]:
    """ Direct product with componentwise operations, the pair (x, y) is encoded as x * |B| + y.

    Returns:
        (A x B, projection onto A, projection onto B)
    """
    _check_signatures(a, b)
    size = a.size * b.size
    tables = {}
    for symbol, arity in a.signature:
        if arity == 0:
            tables[symbol] = [a.table(symbol)[0] * b.size + b.table(symbol)[0]]
            continue
        args = tuple_digits(size ** arity, size, arity)
        left = a.table(symbol)[flat_index(args // max(b.size, 1), a.size)]
        right = b.table(symbol)[flat_index(args % max(b.size, 1), b.size)]
        tables[symbol] = left * b.size + right
    name = f"{a.name} x {b.name}" if a.name and b.name else ""
    algebra = FiniteAlgebra(a.signature, size, tables, name=name)
    elements = np.arange(size)
    return (algebra,
            ElementMap(elements // max(b.size, 1), a.size),
            ElementMap(elements % max(b.size, 1), b.size))


def quotient(a: FiniteAlgebra, theta: Partition) -> Tuple[FiniteAlgebra, ElementMap]:
    """ Quotient algebra A / theta, classes numbered by least member.

    Raises:
        NotACongruenceError: theta is not compatible with some operation.
    """
    check_congruence(a, theta)
    m = theta.num_classes
    labels = theta.labels
    reps = np.unique(theta.representatives)
    tables = {}
    for symbol, arity in a.signature:
        if arity == 0:
            tables[symbol] = [labels[a.table(symbol)[0]]]
            continue
        args = reps[tuple_digits(m ** arity, m, arity)]
        tables[symbol] = labels[a.table(symbol)[flat_index(args, a.size)]]
    name = f"{a.name}/{theta}" if a.name else ""
    return FiniteAlgebra(a.signature, m, tables, name=name), ElementMap(labels, m)


def row_codes(rows: np.ndarray, base: int) -> np.ndarray:
    """ Integer code of each row of an (m, N) element array.
    """
    rows = np.asarray(rows, dtype=np.intp)
    if rows.shape[1] == 0:
        return np.zeros(rows.shape[0], dtype=np.intp)
    return np.ravel_multi_index(tuple(rows.T), (base,) * rows.shape[1])


def subalgebra(a: FiniteAlgebra, rows) -> FiniteAlgebra:
    """ The subalgebra of A^N on a closed set of tuples, element i being rows[i].

    Args:
        a (FiniteAlgebra):
        rows (array_like): (m, N) distinct tuples closed under every operation.

    Raises:
        ValueError: rows are not closed.
    """
    rows = np.asarray(rows, dtype=np.intp)
    m, width = rows.shape
    codes = row_codes(rows, a.size)
    order = np.argsort(codes, kind="stable")
    sorted_codes = codes[order]
    if len(np.unique(codes)) != m:
        raise ValueError("subalgebra rows must be distinct")

    def _lookup(result_rows, symbol):
        found = row_codes(result_rows, a.size)
        pos = np.clip(np.searchsorted(sorted_codes, found), 0, max(m - 1, 0))
        if m == 0 or not np.array_equal(sorted_codes[pos], found):
            raise ValueError(f"rows are not closed under '{symbol}'")
        return order[pos]

    tables = {}
    for symbol, arity in a.signature:
        table = a.table(symbol)
        if arity == 0:
            tables[symbol] = _lookup(np.full((1, width), table[0]), symbol)
            continue
        choice = tuple_digits(m ** arity, m, arity)
        result = np.stack([table[flat_index([rows[c, j] for c in choice], a.size)] for j in range(width)], axis=1)
        tables[symbol] = _lookup(result, symbol) if m > 0 else []
    return FiniteAlgebra(a.signature, m, tables)


def identity_map(n) -> ElementMap:
    return ElementMap.identity(n)


def compose_maps(f: ElementMap, g: ElementMap) -> ElementMap:
    """ x -> g(f(x)).
    """
    return f.then(g)


def relabel(a: FiniteAlgebra, permutation) -> Tuple[FiniteAlgebra, ElementMap]:
    """ The isomorphic copy of A in which element x is renamed permutation[x].

    Returns:
        (copy, the renaming as an isomorphism A -> copy)
    """
    rename = ElementMap(permutation, a.size)
    if not rename.is_bijective():
        raise ValueError("relabelling needs a permutation of the universe")
    back = rename.inverse().values
    tables = {}
    for symbol, arity in a.signature:
        if arity == 0:
            tables[symbol] = rename.values[a.table(symbol)]
            continue
        args = back[tuple_digits(a.size ** arity, a.size, arity)]
        tables[symbol] = rename.values[a.table(symbol)[flat_index(args, a.size)]]
    return FiniteAlgebra(a.signature, a.size, tables, name=a.name), rename
