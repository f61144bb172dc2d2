import pytest
from hypothesis import given, settings

from refinery.algebras import quotient
from refinery.checks import (check_boolean_sublattice, check_centerless, check_condition_vi, check_factor_permutable,
                             check_factorable, check_majority_laws, check_projection_coextensive,
                             check_regularly_coextensive, check_srp_definition)
from refinery.commutators import maltsev_gate
from refinery.datasets import group_algebra, klein_four, small_group_tables
from refinery.lattices import factor_congruences
from refinery.solvers.suite_solver import cross_implications
from ..strategies import algebras


@settings(max_examples=200, deadline=None)
@given(algebras(max_size=4, max_ops=2))
def test_verdicts_agree(algebra):
    holds = {
        "srp": check_srp_definition(algebra).holds,
        "proj-coext": check_projection_coextensive(algebra).holds,
        "boolean": check_boolean_sublattice(algebra).holds,
        "cond-vi": check_condition_vi(algebra).holds,
        "factorable": check_factorable(algebra).holds,
        "reg-coext": check_regularly_coextensive(algebra).holds,
    }
    complement_unique = factor_congruences(algebra).flags["complement_unique"]
    relations = cross_implications(holds, complement_unique)
    assert all(relations.values()), (relations, holds)


@settings(max_examples=100, deadline=None)
@given(algebras(max_size=4, max_ops=2))
def test_majority_laws_imply_permutability_and_coextensivity(algebra):
    if check_majority_laws(algebra).holds:
        assert check_factor_permutable(algebra).holds
        assert check_projection_coextensive(algebra).holds


@settings(max_examples=100, deadline=None)
@given(algebras(max_size=4, max_ops=2))
def test_coextensivity_passes_to_factors(algebra):
    if check_projection_coextensive(algebra).holds:
        for f in factor_congruences(algebra):
            factor, _ = quotient(algebra, f)
            assert check_projection_coextensive(factor).holds


@pytest.mark.parametrize("name", ["Z6", "D3", "D4", "Q8", "A4", "Z2xS3", "Dic3"])
def test_centerless_groups_are_coextensive(name):
    algebra = group_algebra(small_group_tables()[name], name=name)
    assert maltsev_gate(algebra).status == "found"
    if check_centerless(algebra).holds:
        assert check_projection_coextensive(algebra).holds


def test_klein_four_srp_witness_has_two_complements():
    w = check_srp_definition(klein_four()).witness
    assert w["F"] == w["G"]
    assert w["F_complement"] != w["G_complement"]
