# Copyright 2026 The Refinery Authors. All Rights Reserved.

from typing import Union

from graphviz import Digraph

from .congruence_lattice import CongruenceLattice
from .factor_lattice import FactorLattice


def hasse_dot(lattice: Union[FactorLattice, CongruenceLattice], name=None) -> str:
    """ DOT source of the covering relation, bottom drawn at the bottom.

    Nodes are n0, n1, ... in element order and labelled by the class lists of their partition.
    """
    if name is None:
        name = "factor_lattice" if isinstance(lattice, FactorLattice) else "congruence_lattice"
    dot = Digraph(name=name, graph_attr=dict(rankdir="BT"), node_attr=dict(shape="box", fontname="monospace"))
    for i, theta in enumerate(lattice.elements):
        dot.node(f"n{i}", repr(theta))
    for lower, upper in lattice.covers():
        dot.edge(f"n{lower}", f"n{upper}")
    return dot.source
