# Copyright 2026 The Refinery Authors. All Rights Reserved.

import re
from abc import ABCMeta, abstractmethod
from typing import Optional, Tuple

import numpy as np

from ..algebras.algebra import FiniteAlgebra, Signature, tuple_digits

_TOKEN = re.compile(r"\(|\)|[^\s()]+")
_VARIABLE = re.compile(r"x([1-9][0-9]*)")


class Term(object, metaclass=ABCMeta):
    """ A term over variables x1..xk, printed as an S-expression such as (+ x1 (- x2)).
    """

    @abstractmethod
    def max_variable(self) -> int:
        pass

    @abstractmethod
    def _evaluate(self, algebra: FiniteAlgebra, columns, memo) -> np.ndarray:
        pass

    @abstractmethod
    def sexpr(self) -> str:
        pass

    def evaluate(self, algebra: FiniteAlgebra, arity: Optional[int] = None) -> np.ndarray:
        """ Flat row-major table of the term operation in arity variables.

        Args:
            algebra (FiniteAlgebra):
            arity (int, None): Defaults to the largest variable index.
        """
        arity = self.max_variable() if arity is None else arity
        if arity < self.max_variable():
            raise ValueError(f"term uses x{self.max_variable()} but arity is {arity}")
        columns = tuple_digits(algebra.size ** arity, algebra.size, arity)
        return self._evaluate(algebra, columns, {})

    def __str__(self):
        return self.sexpr()

    def __repr__(self):
        return f"Term({self.sexpr()})"


class Variable(Term):

    def __init__(self, index: int):
        if index < 1:
            raise ValueError(f"variables are numbered from 1, got {index}")
        self.index = index

    def max_variable(self) -> int:
        return self.index

    def _evaluate(self, algebra, columns, memo):
        return columns[self.index - 1]

    def sexpr(self) -> str:
        return f"x{self.index}"

    def __eq__(self, other):
        return isinstance(other, Variable) and other.index == self.index

    def __hash__(self):
        return hash(("var", self.index))


class Application(Term):
    """ symbol applied to argument terms, a constant when there are none.
    """

    def __init__(self, symbol: str, args: Tuple[Term, ...] = ()):
        self.symbol = symbol
        self.args = tuple(args)
        self._max_variable = max((a.max_variable() for a in self.args), default=0)

    def max_variable(self) -> int:
        return self._max_variable

    def _evaluate(self, algebra, columns, memo):
        # shared subterms are evaluated once
        key = id(self)
        if key not in memo:
            table = algebra.table(self.symbol)
            if len(self.args) != algebra.signature.arity(self.symbol):
                raise ValueError(f"'{self.symbol}' applied to {len(self.args)} arguments")
            if not self.args:
                value = np.full(columns.shape[1], table[0], dtype=np.intp)
            else:
                index = np.zeros(columns.shape[1], dtype=np.intp)
                for arg in self.args:
                    index = index * algebra.size + arg._evaluate(algebra, columns, memo)
                value = table[index]
            memo[key] = (self, value)
        return memo[key][1]

    def sexpr(self) -> str:
        if not self.args:
            return f"({self.symbol})"
        return f"({self.symbol} {' '.join(a.sexpr() for a in self.args)})"

    def __eq__(self, other):
        return isinstance(other, Application) and other.symbol == self.symbol and other.args == self.args

    def __hash__(self):
        return hash((self.symbol, self.args))


def parse_term(text: str, signature: Signature) -> Term:
    """ Parse an S-expression term, checking arities against signature.
    """
    tokens = _TOKEN.findall(text)
    position = 0

    def _parse():
        nonlocal position
        if position >= len(tokens):
            raise ValueError(f"unexpected end of term {text!r}")
        token = tokens[position]
        position += 1
        if token == "(":
            if position >= len(tokens) or tokens[position] in "()":
                raise ValueError(f"missing operation symbol in {text!r}")
            symbol = tokens[position]
            position += 1
            if symbol not in signature:
                raise ValueError(f"unknown symbol '{symbol}'")
            args = []
            while position < len(tokens) and tokens[position] != ")":
                args.append(_parse())
            if position >= len(tokens):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            position += 1
            if len(args) != signature.arity(symbol):
                raise ValueError(f"'{symbol}' has arity {signature.arity(symbol)}, got {len(args)} arguments")
            return Application(symbol, tuple(args))
        match = _VARIABLE.fullmatch(token)
        if match is None:
            raise ValueError(f"unexpected token {token!r} in {text!r}")
        return Variable(int(match.group(1)))

    term = _parse()
    if position != len(tokens):
        raise ValueError(f"trailing tokens in {text!r}")
    return term
