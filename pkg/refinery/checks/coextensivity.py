# Copyright 2026 The Refinery Authors. All Rights Reserved.

from collections import OrderedDict
from typing import Tuple

import numpy as np

from .verdict import Verdict
from ..algebras.algebra import ElementMap, FiniteAlgebra, has_global_support, require_global_support
from ..algebras.constructions import quotient
from ..lattices.congruence_lattice import DEFAULT_CON_LIMIT, all_congruences
from ..lattices.factor_lattice import factor_congruences
from ..relations.calculus import compose, image, intersect, union_closure
from ..relations.congruence import check_congruence, join_unchecked
from ..relations.partition import Partition


def _witness(**kwargs) -> OrderedDict:
    return OrderedDict((k, v.serialize() if isinstance(v, Partition) else v) for k, v in kwargs.items())


def _is_full(relation) -> bool:
    return bool(relation.matrix.all())


def pushout_along(algebra: FiniteAlgebra, theta: Partition, phi: Partition) \
        -> Tuple[FiniteAlgebra, ElementMap, ElementMap]:
    """ Pushout of the quotient maps A -> A/theta and A -> A/phi.

    Returns:
        (A/(theta v phi), induced map A/theta -> pushout, induced map A/phi -> pushout)

    Raises:
        NotACongruenceError: theta or phi is not a congruence.
    """
    check_congruence(algebra, theta)
    check_congruence(algebra, phi)
    top, q = quotient(algebra, join_unchecked(algebra, theta, phi))
    from_theta = q.values[np.unique(theta.representatives)]
    from_phi = q.values[np.unique(phi.representatives)]
    return top, ElementMap(from_theta, top.size), ElementMap(from_phi, top.size)


def _product_above(g: Partition, x: Partition, y: Partition):
    """ Which condition fails for (x, y) to be a factor pair of A/g, with g below both.
    """
    if x.meet(y) != g:
        return "intersection"
    if not _is_full(compose(x, y)):
        return "composition"
    return None


def check_projection_coextensive(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> Verdict:
    """ Pushing a product diagram out along a product projection gives a product diagram.

    For every factor pair (F, F') and factor congruence G, (F v G, F' v G) must be a factor pair
    of A/G.
    """
    require_global_support(algebra)
    lattice = factor_congruences(algebra, limit)
    for f, f_c in lattice.pairs():
        for g in lattice.elements:
            x, y = join_unchecked(algebra, f, g), join_unchecked(algebra, f_c, g)
            condition = _product_above(g, x, y)
            if condition is not None:
                return Verdict.failed("proj-coext", _witness(F=f, F_complement=f_c, G=g, condition=condition,
                                                             F_join_G=x, F_complement_join_G=y))
    return Verdict.passed("proj-coext")


def check_srp_definition(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> Verdict:
    """ Two binary decompositions (F, F') and (G, G') always have a common refinement.

    The four quotients A/(F_i v G_j) must split A/F_i along G, G' and A/G_j along F, F'.
    """
    require_global_support(algebra)
    lattice = factor_congruences(algebra, limit)
    pairs = lattice.pairs()
    for f, f_c in pairs:
        for g, g_c in pairs:
            for side, base, (u, v) in (("F", f, (g, g_c)), ("F_complement", f_c, (g, g_c)),
                                       ("G", g, (f, f_c)), ("G_complement", g_c, (f, f_c))):
                condition = _product_above(base, join_unchecked(algebra, base, u), join_unchecked(algebra, base, v))
                if condition is not None:
                    return Verdict.failed("srp", _witness(F=f, F_complement=f_c, G=g, G_complement=g_c,
                                                          refined_side=side, condition=condition))
    return Verdict.passed("srp")


def check_condition_vi(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> Verdict:
    """ Factor congruences permute, and a complementary pair G, G' stays disjoint in every A/F.
    """
    require_global_support(algebra)
    lattice = factor_congruences(algebra, limit)
    for f in lattice.elements:
        q = ElementMap(f.labels, f.num_classes)
        delta = np.eye(f.num_classes, dtype=bool)
        for g, g_c in lattice.pairs():
            if compose(f, g) != compose(g, f):
                return Verdict.failed("cond-vi", _witness(F=f, G=g, condition="permutability"))
            common = intersect(image(q, g), image(q, g_c))
            if not np.array_equal(common.matrix, delta):
                return Verdict.failed("cond-vi", _witness(F=f, G=g, G_complement=g_c, condition="disjointness",
                                                          intersection=common.serialize()))
    return Verdict.passed("cond-vi")


def check_boolean_sublattice(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> Verdict:
    """ F(X) is a Boolean sublattice of Con(A), with joins computed as closures of composites.
    """
    require_global_support(algebra)
    lattice = factor_congruences(algebra, limit)
    flags = lattice.flags
    if not flags["is_sublattice_of_con"]:
        return Verdict.failed("boolean", _witness(condition="sublattice", **lattice.sublattice_witness))
    if not flags["is_boolean"]:
        if lattice.distributivity_witness is not None:
            return Verdict.failed("boolean", _witness(condition="distributivity",
                                                      triple=lattice.distributivity_witness))
        return Verdict.failed("boolean", _witness(condition="complemented", flags=dict(flags)))
    for i, f in enumerate(lattice.elements):
        for g in lattice.elements[i + 1:]:
            closed = union_closure(compose(f, g))
            if closed not in lattice or closed != join_unchecked(algebra, f, g):
                return Verdict.failed("boolean", _witness(condition="composite-closure", F=f, G=g, closure=closed))
    return Verdict.passed("boolean")


def _factorable_failure(f: Partition, f_c: Partition, theta: Partition):
    rebuilt = intersect(compose(f, compose(theta, f)), compose(f_c, compose(theta, f_c)))
    return None if rebuilt == theta.to_relation() else rebuilt


def check_factorable(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> Verdict:
    """ Every congruence is the product of its images along every factor pair.
    """
    require_global_support(algebra)
    lattice = factor_congruences(algebra, limit)
    con = all_congruences(algebra, limit)
    for f, f_c in lattice.pairs():
        for theta in con:
            rebuilt = _factorable_failure(f, f_c, theta)
            if rebuilt is not None:
                return Verdict.failed("factorable", _witness(F=f, F_complement=f_c, theta=theta,
                                                             rebuilt=rebuilt.serialize()))
    return Verdict.passed("factorable")


def check_regularly_coextensive(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> Verdict:
    """ Pushing a product diagram out along any quotient A -> A/theta gives a product diagram.
    """
    require_global_support(algebra)
    lattice = factor_congruences(algebra, limit)
    con = all_congruences(algebra, limit)
    for f, f_c in lattice.pairs():
        for theta in con:
            x, y = join_unchecked(algebra, f, theta), join_unchecked(algebra, f_c, theta)
            condition = _product_above(theta, x, y)
            if condition is not None:
                return Verdict.failed("reg-coext", _witness(F=f, F_complement=f_c, theta=theta, condition=condition,
                                                            F_join_theta=x, F_complement_join_theta=y))
    return Verdict.passed("reg-coext")


def check_codisjoint_products(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> Verdict:
    """ The pushout of the two projections of every product diagram is the one-element algebra.
    """
    require_global_support(algebra)
    lattice = factor_congruences(algebra, limit)
    for f, f_c in lattice.pairs():
        top, _, _ = pushout_along(algebra, f, f_c)
        if top.size != 1:
            return Verdict.failed("codisjoint", _witness(F=f, F_complement=f_c, pushout_size=top.size))
    return Verdict.passed("codisjoint")


def check_projection_pushouts(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> Verdict:
    """ The join of two factor congruences is again a factor congruence.
    """
    require_global_support(algebra)
    lattice = factor_congruences(algebra, limit)
    for i, f in enumerate(lattice.elements):
        for g in lattice.elements[i + 1:]:
            joined = join_unchecked(algebra, f, g)
            if joined not in lattice:
                return Verdict.failed("proj-pushouts", _witness(F=f, G=g, join=joined))
    return Verdict.passed("proj-pushouts")


def check_complement_order(algebra: FiniteAlgebra, limit: int = DEFAULT_CON_LIMIT) -> Verdict:
    """ Complements are unique, complementation reverses refinement, and only Nabla has complement Delta.
    """
    require_global_support(algebra)
    lattice = factor_congruences(algebra, limit)
    delta, nabla = Partition.delta(algebra.size), Partition.nabla(algebra.size)
    for f in lattice.elements:
        complements = lattice.complements_of(f)
        if len(complements) > 1:
            return Verdict.failed("complement-order", _witness(condition="uniqueness", F=f,
                                                               complements=[c.serialize() for c in complements]))
        if complements[0] == delta and f != nabla:
            return Verdict.failed("complement-order", _witness(condition="delta-complement", F=f))
    for f in lattice.elements:
        for g in lattice.elements:
            f_c, g_c = lattice.complements_of(f)[0], lattice.complements_of(g)[0]
            if f.refines(g) and not g_c.refines(f_c):
                return Verdict.failed("complement-order", _witness(condition="order-reversal", F=f, G=g,
                                                                   F_complement=f_c, G_complement=g_c))
    return Verdict.passed("complement-order")

