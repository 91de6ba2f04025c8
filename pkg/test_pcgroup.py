import os
import random
import sys

import pytest

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from derq.errors import (
    CollectionLimitError,
    InputError,
    PreconditionError,
    PresentationParseError,
    RankMismatchError,
    SupportViolationError,
)
from derq.library import GroupLibrary
from derq.oracles import UnitriangularOracle, heisenberg
from derq.pcgroup import (
    PcPresentation,
    commutator,
    consistency_check,
    element_count,
    format_presentation,
    inverse,
    layer_equations,
    load_presentation,
    multiply,
    normalize,
    parse_presentation,
    power,
)
from derq.pcgroup.collector import Collector
from derq.pcgroup.consistency import TrackingCollector
from derq.pcgroup.group import InducedSequence, PcGroup

ASSETS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "assets")

H5 = heisenberg(5)
LIBRARY = GroupLibrary()


def random_word(rng, pres):
    return tuple(rng.randrange(pres.prime) for _ in range(pres.rank))


# -- collection -------------------------------------------------------------


def test_normalize_heisenberg():
    assert normalize([], H5) == (0, 0, 0)
    assert normalize([(2, 1), (1, 1)], H5) == (1, 1, 1)
    assert normalize([(1, 5)], H5) == (0, 0, 0)
    assert normalize([(1, -1)], H5) == (4, 0, 0)


def test_normalize_rejects_bad_index():
    with pytest.raises(InputError):
        normalize([(4, 1)], H5)


def test_arithmetic_examples():
    a1, a2, a3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    assert commutator(a2, a1, H5) == a3
    assert commutator(a1, a1, H5) == (0, 0, 0)
    assert power(a1, 5, H5) == (0, 0, 0)
    assert multiply(a1, inverse(a1, H5), H5) == (0, 0, 0)
    with pytest.raises(RankMismatchError):
        multiply(a1, (1, 0), H5)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_heisenberg_matches_matrix_oracle(p):
    pres = heisenberg(p)
    oracle = UnitriangularOracle(p)
    rng = random.Random(1000 + p)
    for _ in range(1000):
        u, v = random_word(rng, pres), random_word(rng, pres)
        assert multiply(u, v, pres) == oracle.multiply(u, v)
    for _ in range(50):
        u, v = random_word(rng, pres), random_word(rng, pres)
        assert inverse(u, pres) == oracle.inverse(u)
        assert commutator(u, v, pres) == oracle.commutator(u, v)


LIBRARY_GROUPS = [
    ("heisenberg", 5),
    ("extraspecial_exp_p2", 3),
    ("elementary_abelian", 5),
    ("cyclic_p3", 3),
    ("abelian_p2_p", 5),
    ("maxclass_p4", 5),
    ("maxclass_p4", 7),
    ("dihedral8", None),
    ("quaternion8", None),
    ("dihedral16", None),
]


def assert_strategies_agree(pres, count, seed):
    collector = pres.collector
    p = pres.prime
    rng = random.Random(seed)
    for _ in range(count):
        word = [(rng.randint(1, pres.rank), rng.randint(-2 * p, 2 * p)) for _ in range(8)]
        assert collector.rewrite(word) == collector.normalize(word), word


def assert_associative(pres, count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        u, v, w = (random_word(rng, pres) for _ in range(3))
        assert multiply(multiply(u, v, pres), w, pres) == multiply(u, multiply(v, w, pres), pres), (u, v, w)


@pytest.mark.parametrize("name,p", [("heisenberg", 5), ("maxclass_p4", 5), ("dihedral16", None)])
def test_rewriting_agrees_with_collection(name, p):
    assert_strategies_agree(LIBRARY.get(name, p), 100, seed=7)


@pytest.mark.slow
@pytest.mark.parametrize("name,p", LIBRARY_GROUPS)
def test_rewriting_agrees_with_collection_on_many_words(name, p):
    assert_strategies_agree(LIBRARY.get(name, p), 10_000, seed=17)


@pytest.mark.parametrize("name,p", LIBRARY_GROUPS)
def test_multiplication_is_associative(name, p):
    assert_associative(LIBRARY.get(name, p), 1000, seed=23)


def test_tracking_collector_gives_same_normal_form():
    pres = LIBRARY.get("maxclass_p4", 5)
    plain, tracked = Collector(pres), TrackingCollector(pres)
    rng = random.Random(3)
    for _ in range(50):
        u, v = random_word(rng, pres), random_word(rng, pres)
        letters = [(i, e) for i, e in enumerate(v) if e]
        assert plain.collect(list(u), letters) == tracked.collect(list(u), letters)
    assert sum(tracked.counts.values()) > 0


def test_collection_cap():
    collector = Collector(H5, max_steps=2)
    with pytest.raises(CollectionLimitError):
        collector.collect([0, 4, 0], [(0, 1), (0, 1), (0, 1)])


# -- presentations ------------------------------------------------------------


def test_element_count():
    assert element_count(H5) == 125
    assert element_count(PcPresentation(5, 6)) == 15625
    assert element_count(PcPresentation(5, 0)) == 1


def test_support_rule():
    with pytest.raises(SupportViolationError):
        PcPresentation(5, 3, {}, {(2, 1): (0, 1, 0)})
    with pytest.raises(SupportViolationError):
        PcPresentation(5, 3, {}, {(2, 1): (0, 0, 1)}, weights=(1, 1, 1))
    with pytest.raises(InputError):
        PcPresentation(4, 2)


@pytest.mark.parametrize("name,p", [
    ("heisenberg", 3), ("heisenberg", 5), ("heisenberg", 2),
    ("extraspecial_exp_p2", 3), ("elementary_abelian", 5), ("cyclic_p3", 3),
    ("abelian_p2_p", 5), ("maxclass_p4", 3), ("maxclass_p4", 5),
    ("dihedral8", None), ("quaternion8", None), ("dihedral16", None),
])
def test_library_groups_are_consistent(name, p):
    assert consistency_check(LIBRARY.get(name, p)) == []


def test_library_rejects_wrong_prime():
    with pytest.raises(InputError):
        LIBRARY.get("dihedral8", 3)
    with pytest.raises(InputError):
        LIBRARY.get("maxclass_p4", 2)
    with pytest.raises(InputError):
        LIBRARY.get("no_such_group", 5)


def test_corrupted_tail_is_reported():
    pres = load_presentation(os.path.join(ASSETS, "corrupted.pc"))
    violations = consistency_check(pres)
    assert "power-self (1)" in violations
    assert not pres.is_consistent()


def test_parse_and_format():
    text = format_presentation(H5)
    again = parse_presentation(text)
    assert again == H5
    assert "comm 2 1 = a3" in text

    pres = load_presentation(os.path.join(ASSETS, "heisenberg5_scaled.pc"))
    assert pres.name == "heisenberg5_scaled"
    assert pres.commutator_tail(2, 1) == (0, 0, 2)
    assert pres.power_tail(1) == (0, 0, 0)
    assert load_presentation(os.path.join(ASSETS, "extraspecial3.pc")).power_tail(1) == (0, 0, 1)


def test_parse_errors_carry_line_numbers(tmp_path):
    with pytest.raises(PresentationParseError) as info:
        load_presentation(os.path.join(ASSETS, "unparseable.pc"))
    assert info.value.line == 3
    with pytest.raises(PresentationParseError) as info:
        parse_presentation("comm 2 1 = a3\np 5\nn 3\n")
    assert info.value.line == 1
    with pytest.raises(PresentationParseError):
        parse_presentation("p 5\nn 3\ncomm 2 1 = a3^5\n")
    with pytest.raises(PresentationParseError) as info:
        parse_presentation("p 5\nn 3\n= a1\n")
    assert info.value.line == 3
    with pytest.raises(InputError):
        load_presentation(os.path.join(ASSETS, "missing.pc"))
    binary = tmp_path / "binary.pc"
    binary.write_bytes(b"p 5\nn 3\n\xff\n")
    with pytest.raises(InputError):
        load_presentation(binary)


def test_quotient_truncates_tails():
    pres = LIBRARY.get("maxclass_p4", 5)
    q = pres.quotient(3)
    assert q.rank == 3
    assert q.commutator_tail(2, 1) == (0, 0, 1)
    assert q.commutator_tail(3, 1) == (0, 0, 0)


# -- layer equations ----------------------------------------------------------


def test_layer_equations_need_a_consistent_quotient():
    pres = load_presentation(os.path.join(ASSETS, "corrupted.pc"))
    with pytest.raises(PreconditionError) as info:
        layer_equations(pres)
    assert info.value.reason == "inconsistent"


def test_layer_equations_detect_a_bad_extension():
    # a central a4 on top of maxclass_p4/a4 must satisfy every recorded equation
    pres = LIBRARY.get("maxclass_p4", 5)
    equations = layer_equations(pres.quotient(3))
    values = {("comm", 2, 0): 1}
    for name, delta in equations:
        assert sum(c * values.get(key, 0) for key, c in delta.items()) % 5 == 0, name


# -- subgroups ----------------------------------------------------------------


def test_induced_sequence_orders():
    group = PcGroup(H5)
    seq = InducedSequence(group).add([(1, 0, 0), (0, 1, 0)])
    assert len(seq) == 3
    center = InducedSequence(group).add([(0, 0, 3)])
    assert len(center) == 1
    assert center.contains((0, 0, 2))
    assert not center.contains((1, 0, 0))
    assert InducedSequence(group).add([(1, 0, 0), (0, 1, 0)], stop_depth=2) is None


def test_element_orders():
    group = PcGroup(LIBRARY.get("extraspecial_exp_p2", 3))
    assert group.element_order((1, 0, 0)) == 9
    assert group.element_order((0, 1, 0)) == 3
    assert group.element_order((0, 0, 0)) == 1
    assert group.order() == 27


def test_library_listing():
    assert "heisenberg" in LIBRARY.names()
    assert "Dihedral" in LIBRARY.describe("dihedral16")
    assert LIBRARY.get("heisenberg", 7).name == "heisenberg7"
    assert LIBRARY.get("dihedral8").name == "dihedral8"
