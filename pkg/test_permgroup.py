import os
import random
import sys

import pytest
from sympy.combinatorics import Permutation

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from derq.errors import DegreeMismatchError, InputError, MembershipError
from derq.oracles import CayleyGroup
from derq.permgroup import (
    PermGroup,
    commutator_group,
    format_permutation,
    normal_closure,
    parse_permutation,
    schreier_sims,
    subgroup_generated,
    sylow2_generators,
    sylow2_sym,
)
from derq.series import derived_series


def test_parse_permutation_notations():
    cycles = parse_permutation("(1,2)(3,4)")
    images = parse_permutation("[2,1,4,3]")
    assert cycles == images
    assert format_permutation(cycles) == "(1,2)(3,4)"
    assert format_permutation(parse_permutation("()", degree=4)) == "()"
    assert parse_permutation("(1 2 3)", degree=5).size == 5


@pytest.mark.parametrize("text", ["(1,2", "[1,1,2]", "(1,a)", "[2,1", "(1,1)"])
def test_parse_permutation_rejects(text):
    with pytest.raises(InputError):
        parse_permutation(text)


def test_parse_permutation_degree():
    with pytest.raises(DegreeMismatchError):
        parse_permutation("(1,5)", degree=4)
    with pytest.raises(DegreeMismatchError):
        parse_permutation("[2,1,3]", degree=4)


def test_schreier_sims_orders():
    assert schreier_sims([Permutation([0, 1, 2, 3])]).order() == 1
    s4 = schreier_sims([parse_permutation("(1,2)", 4), parse_permutation("(1,2,3,4)", 4)])
    assert s4.order() == 24
    assert s4.contains(parse_permutation("(1,3)", 4))
    with pytest.raises(DegreeMismatchError):
        s4.contains(parse_permutation("(1,3)", 5))
    with pytest.raises(DegreeMismatchError):
        schreier_sims([parse_permutation("(1,2)", 3), parse_permutation("(1,2)", 4)])


@pytest.mark.parametrize("m,exp", [(2, 1), (4, 3), (8, 7), (16, 15)])
def test_sylow2_orders(m, exp):
    assert sylow2_sym(m).order() == 2 ** exp
    assert len(sylow2_generators(m)) == m.bit_length() - 1


@pytest.mark.parametrize("m", [0, 1, 6, 12])
def test_sylow2_needs_power_of_two(m):
    with pytest.raises(InputError):
        sylow2_sym(m)


def test_sylow2_of_s4_is_dihedral():
    engine = PermGroup(sylow2_sym(4))
    exps = [t.order_exp() for t in derived_series(engine)]
    assert exps == [3, 1, 0]


def test_subgroup_operations():
    P = sylow2_sym(4)
    derived = commutator_group(P, P)
    assert derived.order() == 2

    abelian = subgroup_generated(P, [parse_permutation("(1,2)", 4), parse_permutation("(3,4)", 4)])
    assert abelian.order() == 4
    assert commutator_group(abelian, abelian).order() == 1

    closure = normal_closure(P, [parse_permutation("(1,2)", 4)])
    assert closure.order() == 4

    with pytest.raises(MembershipError):
        subgroup_generated(P, [parse_permutation("(1,3)", 4)])
    with pytest.raises(MembershipError):
        normal_closure(P, [parse_permutation("(1,2,3)", 4)])


EXHAUSTIVE_GROUPS = [
    (4, ["(1,2)", "(1,2,3,4)"]),
    (4, ["(1,2,3)", "(2,3,4)"]),
    (5, ["(1,2,3)", "(1,2,3,4,5)"]),
    (6, ["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"]),
    (6, ["(1,2)", "(1,2,3,4,5,6)"]),
    (7, ["(1,2)", "(1,2,3,4,5,6,7)"]),
    (8, ["(1,2)(3,4)(5,6)(7,8)", "(1,3)(2,4)(5,7)(6,8)", "(1,5)(2,6)(3,7)(4,8)"]),
    (9, ["(1,2,3)", "(4,5,6)", "(7,8,9)", "(1,4,7)(2,5,8)(3,6,9)"]),
]


def exhaustive_order(gens):
    return len(CayleyGroup(PermGroup(gens), limit=10 ** 4).closure(gens))


@pytest.mark.parametrize("degree,cycles", EXHAUSTIVE_GROUPS)
def test_bsgs_order_matches_closure(degree, cycles):
    gens = [parse_permutation(c, degree) for c in cycles]
    assert schreier_sims(gens).order() == exhaustive_order(gens)


def test_bsgs_order_matches_closure_on_random_subgroups():
    rng = random.Random(20240601)
    for _ in range(20):
        gens = []
        for _ in range(rng.randint(1, 2)):
            points = list(range(7))
            rng.shuffle(points)
            gens.append(Permutation(points))
        assert schreier_sims(gens).order() == exhaustive_order(gens)


@pytest.mark.parametrize("m", [2, 4, 8])
def test_sylow2_order_matches_closure(m):
    assert sylow2_sym(m).order() == exhaustive_order(sylow2_generators(m))


def test_trivial_group_has_order_exponent_zero():
    engine = PermGroup([Permutation([0, 1, 2])])
    assert engine.order_exp() == 0
    assert engine.whole().order_exp() == 0


def test_perm_engine_infers_prime():
    engine = PermGroup(sylow2_sym(8))
    assert engine.p_of_group() == 2
    assert engine.order_exp() == 7
    assert engine.element_order(parse_permutation("(1,2,3,4)(5,6,7,8)", 8)) == 4


def test_workbench_scans_permutations():
    from derq import Workbench

    wb = Workbench()
    report = wb.scan(["(1,2)(3,4)", "(1,3)(2,4)"])
    assert report.p == 2
    assert report.order_exp == 2
    assert report.small_ds == []
    assert wb.scan(wb.sylow2(4)).small_ds == [0]
