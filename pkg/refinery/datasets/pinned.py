# Copyright 2026 The Refinery Authors. All Rights Reserved.

import itertools
from collections import OrderedDict

import numpy as np

from ..algebras.algebra import FiniteAlgebra, Signature

GROUP_SIGNATURE = Signature([("*", 2), ("inv", 1), ("e", 0)])


def group_algebra(multiplication, name="") -> FiniteAlgebra:
    """ Turns a group multiplication table into an algebra of signature (*, inv, e).

    Args:
        multiplication (array-like): n x n table, multiplication[x][y] = x * y.
        name (str):

    Raises:
        ValueError: the table has no two-sided identity or some element has no inverse.
    """
    table = np.asarray(multiplication, dtype=np.intp)
    n = table.shape[0]
    arange = np.arange(n)
    units = [e for e in range(n) if (table[e] == arange).all() and (table[:, e] == arange).all()]
    if not units:
        raise ValueError("multiplication table has no identity")
    unit = units[0]
    inverse = np.empty(n, dtype=np.intp)
    for x in range(n):
        found = np.flatnonzero(table[x] == unit)
        if len(found) == 0:
            raise ValueError(f"element {x} has no inverse")
        inverse[x] = found[0]
    return FiniteAlgebra(GROUP_SIGNATURE, n, {"*": table.reshape(-1), "inv": inverse, "e": [unit]}, name=name)


def cyclic_group(n: int) -> FiniteAlgebra:
    """ Z_n under addition modulo n, presented with the binary symbol "+" only.
    """
    arange = np.arange(n)
    table = (arange[:, None] + arange[None, :]) % n
    return FiniteAlgebra(Signature([("+", 2)]), n, {"+": table.reshape(-1)}, name=f"Z{n}")


def klein_four() -> FiniteAlgebra:
    arange = np.arange(4)
    return FiniteAlgebra(Signature([("+", 2)]), 4, {"+": (arange[:, None] ^ arange[None, :]).reshape(-1)},
                         name="KleinFour")


# 0 = identity, 1..3 = transpositions, 4..5 = 3-cycles
S3_PERMUTATIONS = ((0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1))


def permutation_table(permutations):
    """ Multiplication table of a list of permutations closed under composition, (p * q)(x) = p(q(x)).
    """
    perms = [tuple(p) for p in permutations]
    index = {p: i for i, p in enumerate(perms)}
    table = np.empty((len(perms), len(perms)), dtype=np.intp)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[tuple(p[x] for x in q)]
    return table


def symmetric_group_s3() -> FiniteAlgebra:
    table = permutation_table(S3_PERMUTATIONS)
    return FiniteAlgebra(Signature([("*", 2)]), 6, {"*": table.reshape(-1)}, name="S3")


def two_element_lattice() -> FiniteAlgebra:
    return FiniteAlgebra(Signature([("meet", 2), ("join", 2)]), 2,
                         {"meet": [0, 0, 0, 1], "join": [0, 1, 1, 1]}, name="L2")


def boolean_lattice() -> FiniteAlgebra:
    """ The four-element Boolean lattice on bit masks {0, 1, 2, 3}.
    """
    arange = np.arange(4)
    return FiniteAlgebra(Signature([("meet", 2), ("join", 2)]), 4,
                         {"meet": (arange[:, None] & arange[None, :]).reshape(-1),
                          "join": (arange[:, None] | arange[None, :]).reshape(-1)},
                         name="B4")


def trivial_algebra() -> FiniteAlgebra:
    return FiniteAlgebra(Signature([("+", 2)]), 1, {"+": [0]}, name="1")


def pinned_algebras():
    """ The fixed algebras every corpus starts with, keyed by name.
    """
    pinned = OrderedDict()
    for n in (2, 3, 4, 6, 12):
        pinned[f"Z{n}"] = cyclic_group(n)
    for algebra in (klein_four(), symmetric_group_s3(), two_element_lattice(), boolean_lattice(),
                    trivial_algebra()):
        pinned[algebra.name] = algebra
    return pinned


def _cyclic_table(n):
    arange = np.arange(n)
    return (arange[:, None] + arange[None, :]) % n


def _direct_table(left, right):
    m = right.shape[0]
    table = left[:, None, :, None] * m + right[None, :, None, :]
    return table.reshape(left.shape[0] * m, left.shape[0] * m)


def dihedral_table(m):
    """ D_m of order 2m: element r^i s^j is encoded as i + m * j.
    """
    table = np.empty((2 * m, 2 * m), dtype=np.intp)
    for (i, j), (k, l) in itertools.product(itertools.product(range(m), range(2)), repeat=2):
        # r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j + l)
        rot = (i + (k if j == 0 else -k)) % m
        table[i + m * j, k + m * l] = rot + m * ((j + l) % 2)
    return table


def dicyclic_table(m):
    """ Dic_m of order 4m, a^(2m) = 1 and x^2 = a^m: element a^i x^j is encoded as i + 2m * j.
    """
    n = 2 * m
    table = np.empty((2 * n, 2 * n), dtype=np.intp)
    for (i, j), (k, l) in itertools.product(itertools.product(range(n), range(2)), repeat=2):
        # x a^k = a^(-k) x
        rot = i + (k if j == 0 else -k)
        if j + l == 2:
            rot += m
        table[i + n * j, k + n * l] = rot % n + n * ((j + l) % 2)
    return table


def quaternion_table():
    """ Q8 with elements sign * unit encoded as unit + 4 * (sign < 0), units ordered 1, i, j, k.
    """
    # unit products as (sign, unit)
    units = [[(1, 0), (1, 1), (1, 2), (1, 3)],
             [(1, 1), (-1, 0), (1, 3), (-1, 2)],
             [(1, 2), (-1, 3), (-1, 0), (1, 1)],
             [(1, 3), (1, 2), (-1, 1), (-1, 0)]]
    table = np.empty((8, 8), dtype=np.intp)
    for x, y in itertools.product(range(8), repeat=2):
        sign, unit = units[x % 4][y % 4]
        if (x >= 4) != (y >= 4):
            sign = -sign
        table[x, y] = unit + 4 * (sign < 0)
    return table


def alternating_a4_table():
    perms = [p for p in itertools.permutations(range(4))
             if sum(p[i] > p[j] for i in range(4) for j in range(i + 1, 4)) % 2 == 0]
    return permutation_table(perms)


def small_group_tables():
    """ Multiplication tables of groups of order at most 12, keyed by name.
    """
    tables = OrderedDict()
    for n in range(1, 13):
        tables[f"Z{n}"] = _cyclic_table(n)
    z2, z3 = _cyclic_table(2), _cyclic_table(3)
    tables["Z2xZ2"] = _direct_table(z2, z2)
    tables["Z2xZ4"] = _direct_table(z2, _cyclic_table(4))
    tables["Z2xZ2xZ2"] = _direct_table(z2, _direct_table(z2, z2))
    tables["Z3xZ3"] = _direct_table(z3, z3)
    tables["Z2xZ6"] = _direct_table(z2, _cyclic_table(6))
    for m in range(3, 7):
        tables[f"D{m}"] = dihedral_table(m)
    tables["Q8"] = quaternion_table()
    tables["A4"] = alternating_a4_table()
    tables["Z2xS3"] = _direct_table(z2, permutation_table(S3_PERMUTATIONS))
    tables["Dic3"] = dicyclic_table(3)
    return tables
