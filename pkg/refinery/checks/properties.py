# Copyright 2026 The Refinery Authors. All Rights Reserved.

from abc import ABCMeta, abstractmethod

from .centrality import check_centerless
from .coextensivity import (check_boolean_sublattice, check_codisjoint_products, check_complement_order,
                            check_condition_vi, check_factorable, check_projection_coextensive,
                            check_projection_pushouts, check_regularly_coextensive, check_srp_definition)
from .majority import DEFAULT_REFLEXIVE_LIMIT, check_factor_permutable, check_majority_laws, \
    check_reflexive_majority_laws
from .registry import CHECKS
from .verdict import Verdict
from ..algebras.algebra import FiniteAlgebra
from ..commutators.clone import DEFAULT_CLONE_LIMIT
from ..lattices.congruence_lattice import DEFAULT_CON_LIMIT


class BaseCheck(object, metaclass=ABCMeta):
    """ A property check, called on an algebra and returning a Verdict.

    Args:
        con_limit (int): Cap on the number of congruences.
        clone_limit (int): Cap on ternary term operations in term searches.
        reflexive_limit (int): Cap on compatible reflexive relations.
    """

    def __init__(self, con_limit=DEFAULT_CON_LIMIT, clone_limit=DEFAULT_CLONE_LIMIT,
                 reflexive_limit=DEFAULT_REFLEXIVE_LIMIT):
        self.con_limit = con_limit
        self.clone_limit = clone_limit
        self.reflexive_limit = reflexive_limit

    @abstractmethod
    def __call__(self, algebra: FiniteAlgebra) -> Verdict:
        pass


@CHECKS.register_class("srp")
class StrictRefinementCheck(BaseCheck):
    def __call__(self, algebra):
        return check_srp_definition(algebra, self.con_limit)


@CHECKS.register_class("proj-coext")
class ProjectionCoextensiveCheck(BaseCheck):
    def __call__(self, algebra):
        return check_projection_coextensive(algebra, self.con_limit)


@CHECKS.register_class("reg-coext")
class RegularlyCoextensiveCheck(BaseCheck):
    def __call__(self, algebra):
        return check_regularly_coextensive(algebra, self.con_limit)


@CHECKS.register_class("factorable")
class FactorableCheck(BaseCheck):
    def __call__(self, algebra):
        return check_factorable(algebra, self.con_limit)


@CHECKS.register_class("boolean")
class BooleanSublatticeCheck(BaseCheck):
    def __call__(self, algebra):
        return check_boolean_sublattice(algebra, self.con_limit)


@CHECKS.register_class("cond-vi")
class DisjointImagesCheck(BaseCheck):
    def __call__(self, algebra):
        return check_condition_vi(algebra, self.con_limit)


@CHECKS.register_class("majority")
class MajorityLawsCheck(BaseCheck):
    def __call__(self, algebra):
        return check_majority_laws(algebra, self.con_limit)


@CHECKS.register_class("majority-reflexive")
class ReflexiveMajorityLawsCheck(BaseCheck):
    def __call__(self, algebra):
        return check_reflexive_majority_laws(algebra, self.reflexive_limit)


@CHECKS.register_class("factor-perm")
class FactorPermutableCheck(BaseCheck):
    def __call__(self, algebra):
        return check_factor_permutable(algebra, self.con_limit)


@CHECKS.register_class("centerless")
class CenterlessCheck(BaseCheck):
    def __call__(self, algebra):
        return check_centerless(algebra, self.clone_limit)


@CHECKS.register_class("codisjoint")
class CodisjointProductsCheck(BaseCheck):
    def __call__(self, algebra):
        return check_codisjoint_products(algebra, self.con_limit)


@CHECKS.register_class("proj-pushouts")
class ProjectionPushoutsCheck(BaseCheck):
    def __call__(self, algebra):
        return check_projection_pushouts(algebra, self.con_limit)


@CHECKS.register_class("complement-order")
class ComplementOrderCheck(BaseCheck):
    def __call__(self, algebra):
        return check_complement_order(algebra, self.con_limit)
