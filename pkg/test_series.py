import os
import random
import sys

import pytest

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from derq.engine import abelian_invariants, frattini, has_cyclic_quotient, is_normal
from derq.enumeration.scheme import MaximalClassScheme
from derq.errors import DomainError, InputError, PreconditionError
from derq.library import GroupLibrary
from derq.oracles import CayleyGroup, heisenberg
from derq.pcgroup.group import PcGroup
from derq.permgroup import PermGroup, sylow2_sym
from derq.report import SeriesReport
from derq.series import (
    ChainClass,
    chain_classify,
    cyclic_quotient_commutator_check,
    degree_of_commutativity_zero,
    derived_series,
    hall_check,
    inclusion1_check,
    lcs_term,
    lower_central_series,
    order_lower_bound,
    rc_chain,
    small_indices,
    small_quotient_scan,
)

LIBRARY = GroupLibrary()

CORPUS = [
    ("heisenberg", 3), ("heisenberg", 5), ("extraspecial_exp_p2", 3), ("extraspecial_exp_p2", 5),
    ("elementary_abelian", 3), ("cyclic_p3", 3), ("abelian_p2_p", 5), ("maxclass_p4", 3),
    ("dihedral8", None), ("quaternion8", None), ("dihedral16", None),
]


def pc(name, p=None):
    return PcGroup(LIBRARY.get(name, p))


def exps(terms):
    return [t.order_exp() for t in terms]


@pytest.fixture(scope="module")
def sylow16():
    return PermGroup(sylow2_sym(16))


@pytest.fixture(scope="module")
def sylow16_report(sylow16):
    return small_quotient_scan(sylow16)


# -- series ---------------------------------------------------------------------


def test_abelian_series():
    G = pc("elementary_abelian", 5)
    assert exps(derived_series(G)) == [3, 0]
    assert exps(lower_central_series(G)) == [3, 0]


def test_heisenberg_series():
    G = PcGroup(heisenberg(5))
    assert exps(lower_central_series(G)) == [3, 1, 0]
    assert exps(derived_series(G)) == [3, 1, 0]


def test_maximal_class_lcs():
    G = pc("maxclass_p4", 5)
    assert exps(lower_central_series(G)) == [4, 2, 1, 0]
    assert exps(derived_series(G)) == [4, 2, 0]


@pytest.mark.parametrize("name,p", CORPUS)
def test_series_match_exhaustive_oracle(name, p):
    G = pc(name, p)
    oracle = CayleyGroup(G)
    assert exps(derived_series(G)) == exps(derived_series(oracle))
    assert exps(lower_central_series(G)) == exps(lower_central_series(oracle))


@pytest.mark.slow
def test_series_match_exhaustive_oracle_625():
    G = pc("maxclass_p4", 5)
    oracle = CayleyGroup(G)
    assert exps(derived_series(G)) == exps(derived_series(oracle))
    assert exps(lower_central_series(G)) == exps(lower_central_series(oracle))


def test_rc_chain_and_lcs_term():
    G = pc("maxclass_p4", 5)
    chain = rc_chain(G.whole(), 3)
    lcs = lower_central_series(G)
    assert exps(chain) == [4, 2, 1, 0]
    assert lcs_term(lcs, 10).is_trivial()


def test_small_indices():
    assert small_indices([3, 1, 0]) == [0]
    assert small_indices([3, 0]) == []
    assert small_indices([6, 4, 1, 0]) == [0, 1]
    assert small_indices([15, 12, 8, 3, 0]) == [2]


# -- scans ----------------------------------------------------------------------


def test_scan_abelian():
    report = small_quotient_scan(pc("abelian_p2_p", 5))
    assert report.small_ds == []
    assert report.metabelian
    assert report.nilpotency_class == 1


@pytest.mark.parametrize("name,p", [("heisenberg", 5), ("extraspecial_exp_p2", 3), ("quaternion8", None)])
def test_scan_extraspecial(name, p):
    report = small_quotient_scan(pc(name, p))
    assert report.small_ds == [0]
    assert report.chain_classes == {0: "ch2"}
    assert report.quotient_exps == {0: 2}
    assert report.failed_checks() == []


def test_chain_classify():
    G = PcGroup(heisenberg(3))
    assert chain_classify(G, 0) is ChainClass.CH2
    with pytest.raises(PreconditionError) as info:
        chain_classify(G, 1)
    assert info.value.reason == "not_small"


def test_sylow2_16_counterexample(sylow16_report):
    report = sylow16_report
    assert report.order_exp == 15
    assert report.derived_exps[2] - report.derived_exps[3] == 5
    assert report.derived_exps[3] > 0
    assert 2 in report.small_ds
    assert report.chain_classes[2] == "ch2"
    assert report.quotient_exps[2] == 2
    assert "theorem2_odd" not in report.checks
    assert report.checks["mann_at_most_two"] == "pass"
    assert report.checks["derived_in_lcs"] == "pass"


def test_sylow2_scans():
    report = small_quotient_scan(PermGroup(sylow2_sym(4)))
    assert report.small_ds == [0]
    assert report.failed_checks() == []

    report = small_quotient_scan(PermGroup(sylow2_sym(8)))
    assert report.order_exp == 7
    assert len(report.small_ds) <= 2
    for name in ("derived_in_lcs", "hall_derived", "mann_at_most_two", "inclusion1"):
        assert report.checks[name] == "pass", name


def test_report_json_round_trip(sylow16_report):
    text = sylow16_report.to_json()
    again = SeriesReport.from_json(text)
    assert again == sylow16_report
    assert again.to_json() == text
    data = sylow16_report.to_dict()
    for key in ("p", "order_exp", "derived_exps", "lcs_exps", "small_ds", "chain_classes", "class",
                "metabelian", "checks"):
        assert key in data


def test_scan_rejects_non_p_groups():
    from derq.permgroup import parse_permutation

    s3 = PermGroup([parse_permutation("(1,2)", 3), parse_permutation("(1,2,3)", 3)])
    with pytest.raises(InputError):
        small_quotient_scan(s3)


# -- lemma checks -------------------------------------------------------------------


def test_hall_check_examples(sylow16):
    G = PcGroup(heisenberg(5))
    result = hall_check(G, G.whole(), 1)
    assert result and result.values["quotient_exp"] == 2

    P2 = derived_series(sylow16)[2]
    result = hall_check(sylow16, P2, 4)
    assert result.passed
    assert result.values["quotient_exp"] == 5


def test_hall_check_preconditions():
    G = PcGroup(heisenberg(5))
    with pytest.raises(PreconditionError) as info:
        hall_check(G, lower_central_series(G)[1], 2)
    assert info.value.reason == "abelian"
    with pytest.raises(PreconditionError) as info:
        hall_check(G, G.whole(), 2)
    assert info.value.reason == "not_in_lcs_term"


def random_normal_subgroup(G, rng):
    g = G.identity()
    for _ in range(10):
        g = G.multiply(g, rng.choice(G.generators()))
    return G.normal_closure([g])


def test_hall_inequalities_on_sampled_pairs():
    rng = random.Random(20240601)
    groups = [PermGroup(sylow2_sym(8)), pc("maxclass_p4", 5), pc("dihedral16")]
    groups = [(G, lower_central_series(G)) for G in groups]
    executed = 0
    attempts = 0
    while executed < 100 and attempts < 2000:
        attempts += 1
        G, lcs = groups[attempts % len(groups)]
        H = random_normal_subgroup(G, rng)
        for i in range(1, len(lcs) + 1):
            try:
                result = hall_check(G, H, i, lcs)
            except PreconditionError:
                continue
            assert result.passed, (G, i, result.values)
            executed += 1
    assert executed >= 100


def test_inclusion1_on_sampled_triples():
    rng = random.Random(7)
    groups = [PermGroup(sylow2_sym(8)), pc("maxclass_p4", 5), PcGroup(heisenberg(5))]
    for k in range(100):
        G = groups[k % len(groups)]
        A = random_normal_subgroup(G, rng)
        B = random_normal_subgroup(G, rng)
        i = rng.randint(1, 4)
        assert inclusion1_check(G, A, B, i).passed


def test_inclusion1_examples():
    G = PcGroup(heisenberg(5))
    W = G.whole()
    derived = derived_series(G)[1]
    assert inclusion1_check(G, W, W, 1).passed
    assert inclusion1_check(G, derived, W, 2).values["left_exp"] == 0


def test_cyclic_quotient_check():
    G = pc("dihedral8")
    W = G.whole()
    assert cyclic_quotient_commutator_check(G, W).passed
    rotations = G.subgroup([(0, 1, 0)])
    assert cyclic_quotient_commutator_check(G, rotations).passed

    reflection = G.subgroup([(1, 0, 0)])
    with pytest.raises(PreconditionError) as info:
        cyclic_quotient_commutator_check(G, reflection)
    assert info.value.reason == "not_normal"

    E = pc("elementary_abelian", 5)
    with pytest.raises(PreconditionError) as info:
        cyclic_quotient_commutator_check(E, E.trivial())
    assert info.value.reason == "not_cyclic"


def test_degree_of_commutativity():
    with pytest.raises(PreconditionError) as info:
        degree_of_commutativity_zero(pc("elementary_abelian", 5))
    assert info.value.reason == "abelian"

    # all tails beyond the defining commutators trivial: metabelian, gamma_5 != 1
    scheme = MaximalClassScheme(5)
    G = PcGroup(scheme.presentation((0,) * scheme.key_length))
    assert G.pres.is_consistent()
    result = degree_of_commutativity_zero(G)
    assert not result.passed
    assert result.values["left_exp"] == 0
    assert result.values["gamma5_exp"] == 1

    # class 4 on 2^7 elements
    with pytest.raises(PreconditionError) as info:
        degree_of_commutativity_zero(PermGroup(sylow2_sym(8)))
    assert info.value.reason == "not_maximal_class"


def test_order_lower_bounds():
    assert order_lower_bound(3, "hall") == 11
    assert order_lower_bound(3, "mann") == 12
    assert order_lower_bound(5, "metabelian") == 41
    with pytest.raises(InputError):
        order_lower_bound(3, "other")
    with pytest.raises(DomainError):
        order_lower_bound(0)


# -- engine helpers -------------------------------------------------------------------


def test_frattini_and_invariants():
    G = pc("abelian_p2_p", 5)
    assert abelian_invariants(G.whole()) == [5, 25]
    assert frattini(G.whole()).order_exp() == 1
    H = PcGroup(heisenberg(5))
    assert abelian_invariants(H.whole()) == [5, 5]
    assert is_normal(lower_central_series(H)[1], H.whole())
    assert has_cyclic_quotient(H.whole(), H.subgroup([(1, 0, 0), (0, 0, 1)]))
    assert not has_cyclic_quotient(H.whole(), H.trivial())
