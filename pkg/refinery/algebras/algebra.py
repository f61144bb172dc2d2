# Copyright 2026 The Refinery Authors. All Rights Reserved.

from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..utils.errors import AlgebraFormatError, GlobalSupportError, SizeMismatchError


def _frozen(array, dtype=np.intp):
    array = np.array(array, dtype=dtype).reshape(-1)
    array.setflags(write=False)
    return array


def tuple_digits(count, base, arity):
    """ Row-major argument tuples of the first `count` flat positions.

    Returns an array of shape (arity, count) whose column p holds (a_1..a_k) with
    p = sum a_i * base^(k-i).
    """
    flat = np.arange(count, dtype=np.intp)
    digits = np.empty((arity, count), dtype=np.intp)
    for i in range(arity - 1, -1, -1):
        digits[i] = flat % base if base > 0 else 0
        flat = flat // base if base > 0 else flat
    return digits


def flat_index(args, base):
    """ Inverse of tuple_digits: args is a sequence of k equally shaped integer arrays.
    """
    index = np.zeros(np.shape(args[0]), dtype=np.intp)
    for a in args:
        index = index * base + a
    return index


class Signature(object):
    """ Ordered operation symbols with arities.

    Args:
        symbols (Sequence[Tuple[str, int]]): (name, arity) pairs, names unique, arities >= 0.
    """

    def __init__(self, symbols: Sequence[Tuple[str, int]]):
        symbols = tuple((str(name), int(arity)) for name, arity in symbols)
        seen = set()
        for name, arity in symbols:
            if name in seen:
                raise AlgebraFormatError(f"duplicate symbol '{name}'")
            if arity < 0:
                raise AlgebraFormatError(f"arity of '{name}' must be >= 0, got {arity}")
            seen.add(name)
        self._symbols = symbols
        self._arity = dict(symbols)

    @property
    def symbols(self) -> Tuple[Tuple[str, int], ...]:
        return self._symbols

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self._symbols)

    def arity(self, name) -> int:
        return self._arity[name]

    def __contains__(self, name):
        return name in self._arity

    def __iter__(self) -> Iterator[Tuple[str, int]]:
        return iter(self._symbols)

    def __len__(self):
        return len(self._symbols)

    def __eq__(self, other):
        return isinstance(other, Signature) and self._symbols == other._symbols

    def __hash__(self):
        return hash(self._symbols)

    def __repr__(self):
        return f"Signature({list(self._symbols)})"


def validate_tables(signature: Signature, size: int, tables: Mapping[str, Sequence[int]], path_of=None):
    """ Check table lengths and entry ranges, raising AlgebraFormatError with the offending path.

    Args:
        path_of (callable, None): symbol -> path prefix, defaults to 'tables.<symbol>'.
    """
    path_of = path_of or (lambda symbol: f"$.tables.{symbol}")
    if size < 0:
        raise AlgebraFormatError(f"size must be >= 0, got {size}", "$.size")
    missing = [name for name in signature.names if name not in tables]
    extra = [name for name in tables if name not in signature]
    if missing or extra:
        raise AlgebraFormatError(f"tables do not match signature, missing {missing}, extra {extra}")
    for name, arity in signature:
        table = np.asarray(tables[name]).reshape(-1)
        expected = size ** arity
        if table.shape[0] != expected:
            raise AlgebraFormatError(f"table length mismatch, expected {size}^{arity}={expected}, "
                                     f"got {table.shape[0]}", path_of(name))
        bad = np.nonzero((table < 0) | (table >= size))[0]
        if len(bad) > 0:
            position = int(bad[0])
            raise AlgebraFormatError(f"entry out of range, {int(table[position])} not in [0, {size})",
                                     f"{path_of(name)}[{position}]" if arity > 0 else path_of(name))


class FiniteAlgebra(object):
    """ A finite algebra on {0..n-1} with flat row-major operation tables.

    Instances are immutable: tables are read-only numpy arrays, equality and hashing only
    look at the signature and the tables (the name is a label).

    Args:
        signature (Signature):
        size (int): Universe size n, 0 is allowed.
        tables (Mapping[str, Sequence[int]]): symbol -> flat table of length n^arity.
        name (str): Display name.
    """

    def __init__(self, signature: Signature, size: int, tables: Mapping[str, Sequence[int]], name: str = ""):
        validate_tables(signature, size, tables)
        self._signature = signature
        self._size = int(size)
        self._tables = {symbol: _frozen(tables[symbol]) for symbol in signature.names}
        self._name = name
        self._translations = None
        self._hash = None

    @property
    def signature(self) -> Signature:
        return self._signature

    @property
    def size(self) -> int:
        return self._size

    @property
    def name(self) -> str:
        return self._name

    @property
    def tables(self) -> Dict[str, np.ndarray]:
        return dict(self._tables)

    def table(self, symbol) -> np.ndarray:
        return self._tables[symbol]

    def shaped(self, symbol) -> np.ndarray:
        """ Table as an n x ... x n array (arity axes).
        """
        return self._tables[symbol].reshape((self._size,) * self._signature.arity(symbol))

    def apply(self, symbol, *args) -> int:
        arity = self._signature.arity(symbol)
        if len(args) != arity:
            raise ValueError(f"'{symbol}' takes {arity} arguments, got {len(args)}")
        return int(self._tables[symbol][int(flat_index([np.intp(a) for a in args], self._size))])

    def apply_rows(self, symbol, arg_rows: Sequence[np.ndarray]) -> np.ndarray:
        """ Apply an operation coordinatewise to equally shaped element arrays.
        """
        if self._signature.arity(symbol) == 0:
            raise ValueError(f"'{symbol}' is a constant")
        return self._tables[symbol][flat_index(arg_rows, self._size)]

    def constants(self) -> Dict[str, int]:
        return {name: int(self._tables[name][0]) for name, arity in self._signature if arity == 0}

    def with_name(self, name) -> "FiniteAlgebra":
        return FiniteAlgebra(self._signature, self._size, self._tables, name=name)

    @property
    def translations(self) -> Tuple[np.ndarray, Tuple[Tuple[str, int, int, int], ...]]:
        """ All basic one-variable translations x -> f(c_1..x..c_k) as rows of an array.

        Returns:
            (rows, spans): rows has shape (T, n); spans lists (symbol, coordinate, start, stop)
            row ranges.
        """
        if self._translations is None:
            blocks, spans, start = [], [], 0
            for symbol, arity in self._signature:
                if arity == 0 or self._size == 0:
                    continue
                shaped = self.shaped(symbol)
                for coordinate in range(arity):
                    rows = np.moveaxis(shaped, coordinate, -1).reshape(-1, self._size)
                    blocks.append(rows)
                    spans.append((symbol, coordinate, start, start + rows.shape[0]))
                    start += rows.shape[0]
            rows = np.concatenate(blocks, axis=0) if blocks else np.zeros((0, self._size), dtype=np.intp)
            rows.setflags(write=False)
            self._translations = (rows, tuple(spans))
        return self._translations

    def _key(self):
        return (self._signature, self._size) + tuple(self._tables[s].tobytes() for s in self._signature.names)

    def __eq__(self, other):
        return isinstance(other, FiniteAlgebra) and self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        label = f"'{self._name}', " if self._name else ""
        return f"FiniteAlgebra({label}size={self._size}, signature={list(self._signature.symbols)})"


def has_global_support(algebra: FiniteAlgebra) -> bool:
    return algebra.size >= 1


def require_global_support(algebra: FiniteAlgebra):
    if not has_global_support(algebra):
        raise GlobalSupportError()


class ElementMap(object):
    """ A total map between finite universes.

    Args:
        values (Sequence[int]): Image of each source element.
        target_size (int):
        surjective (bool, None): When True the map is validated to hit every target element.
    """

    def __init__(self, values: Sequence[int], target_size: int, surjective: Optional[bool] = None):
        self._values = _frozen(values)
        self._target_size = int(target_size)
        if len(self._values) and (self._values.min() < 0 or self._values.max() >= self._target_size):
            raise SizeMismatchError(f"map values must lie in [0, {self._target_size})")
        if surjective and not self.is_surjective():
            raise ValueError("map flagged surjective does not hit every target element")

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def source_size(self) -> int:
        return len(self._values)

    @property
    def target_size(self) -> int:
        return self._target_size

    def __call__(self, x) -> int:
        return int(self._values[x])

    def is_surjective(self) -> bool:
        return len(np.unique(self._values)) == self._target_size

    def is_injective(self) -> bool:
        return len(np.unique(self._values)) == len(self._values)

    def is_bijective(self) -> bool:
        return self.source_size == self._target_size and self.is_injective()

    def then(self, other: "ElementMap") -> "ElementMap":
        """ Composite x -> other(self(x)).
        """
        if other.source_size != self._target_size:
            raise SizeMismatchError(f"cannot compose map into {self._target_size} elements with map from "
                                    f"{other.source_size}")
        return ElementMap(other.values[self._values], other.target_size)

    def inverse(self) -> "ElementMap":
        if not self.is_bijective():
            raise ValueError("only bijections have inverses")
        inverse = np.empty_like(self._values)
        inverse[self._values] = np.arange(len(self._values))
        return ElementMap(inverse, len(self._values))

    def to_list(self):
        return [int(v) for v in self._values]

    @staticmethod
    def identity(n) -> "ElementMap":
        return ElementMap(np.arange(n), n)

    def __eq__(self, other):
        return (isinstance(other, ElementMap) and self._target_size == other._target_size
                and np.array_equal(self._values, other._values))

    def __hash__(self):
        return hash((self._target_size, self._values.tobytes()))

    def __repr__(self):
        return f"ElementMap({self.to_list()} -> {self._target_size})"
