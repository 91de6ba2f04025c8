"""Permutation groups with a base and strong generating set.

Points are 1-based in every text format and 0-based inside sympy.
Normal closures and commutator subgroups go through the generic engine
routines, which only conjugate by generators and so stay deterministic.
"""
import logging
import re

from sympy.combinatorics import Permutation, PermutationGroup

from .engine import GroupEngine, SubgroupHandle
from .errors import DegreeMismatchError, InputError, MembershipError

logger = logging.getLogger(__name__)

CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text, degree=None):
    """Read ``(1,2)(3,4)`` or ``[2,1,4,3]`` into a sympy Permutation."""
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise InputError(f"unterminated image list {text!r}")
        body = text[1:-1].replace(",", " ").split()
        try:
            images = [int(x) - 1 for x in body]
        except ValueError:
            raise InputError(f"image list {text!r} must contain integers") from None
        if sorted(images) != list(range(len(images))):
            raise InputError(f"{text!r} is not a permutation")
        if degree is not None and len(images) != degree:
            raise DegreeMismatchError(f"{text!r} has degree {len(images)}, expected {degree}")
        return Permutation(images)

    if CYCLE_RE.sub("", text).strip():
        raise InputError(f"cannot read permutation {text!r}")
    cycles = []
    for body in CYCLE_RE.findall(text):
        body = body.replace(",", " ").split()
        try:
            cycle = [int(x) - 1 for x in body]
        except ValueError:
            raise InputError(f"cycle ({body}) must contain integers") from None
        if any(x < 0 for x in cycle) or len(set(cycle)) != len(cycle):
            raise InputError(f"invalid cycle in {text!r}")
        if len(cycle) > 1:
            cycles.append(cycle)
    largest = max((x + 1 for c in cycles for x in c), default=0)
    size = degree if degree is not None else max(largest, 1)
    if largest > size:
        raise DegreeMismatchError(f"{text!r} moves point {largest} beyond degree {size}")
    return Permutation(cycles, size=size)


def format_permutation(perm):
    cycles = [c for c in perm.cyclic_form]
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cycles)


class BSGSGroup:
    """A permutation group together with a verified stabiliser chain."""

    def __init__(self, gens, degree=None):
        gens = list(gens)
        if degree is None:
            if not gens:
                raise InputError("an empty generating set needs an explicit degree")
            degree = gens[0].size
        for g in gens:
            if g.size != degree:
                raise DegreeMismatchError(f"generator of degree {g.size} in a group of degree {degree}")
        self.degree = degree
        self.generators = gens
        if gens:
            group = PermutationGroup(gens)
            group.schreier_sims()
            self.base = list(group.base)
            self.strong_gens = list(group.strong_gens)
            self.basic_orbits = [list(orbit) for orbit in group.basic_orbits]
            self.transversals = [dict(t) for t in group.basic_transversals]
        else:
            self.base, self.strong_gens, self.basic_orbits, self.transversals = [], [], [], []
        self._order = None

    def order(self):
        if self._order is None:
            order = 1
            for orbit in self.basic_orbits:
                order *= len(orbit)
            self._order = order
        return self._order

    def sift(self, g):
        h = g
        for b, transversal in zip(self.base, self.transversals):
            u = transversal.get(h.array_form[b])
            if u is None:
                return h
            h = h * ~u
        return h

    def contains(self, g):
        if g.size != self.degree:
            raise DegreeMismatchError(f"permutation of degree {g.size} tested against degree {self.degree}")
        return self.sift(g).is_Identity

    def __repr__(self):
        return f"<BSGSGroup degree={self.degree} order={self.order()}>"


def schreier_sims(gens, degree=None):
    return BSGSGroup(gens, degree)


def sylow2_generators(m):
    """Generators of the iterated wreath product C2 wr ... wr C2 on m = 2^delta points."""
    if m < 2 or m & (m - 1):
        raise InputError(f"{m} is not a power of two")
    gens = []
    block = 1
    while block < m:
        cycles = [[i, i + block] for i in range(block)]
        gens.append(Permutation(cycles, size=m))
        block *= 2
    return gens


def sylow2_sym(m):
    return BSGSGroup(sylow2_generators(m), m)


class PermGroup(GroupEngine):
    def __init__(self, gens, degree=None):
        self.bsgs = gens if isinstance(gens, BSGSGroup) else BSGSGroup(gens, degree)
        self.degree = self.bsgs.degree
        self.prime = None
        self._whole = None

    def __repr__(self):
        return f"<PermGroup degree={self.degree} order={self.order()}>"

    def identity(self):
        return Permutation(list(range(self.degree)))

    def is_identity(self, g):
        return g.is_Identity

    def generators(self):
        return list(self.bsgs.generators)

    def multiply(self, u, v):
        return u * v

    def inverse(self, u):
        return ~u

    def order(self):
        return self.bsgs.order()

    def element_order(self, g):
        return int(g.order())

    def whole(self):
        if self._whole is None:
            self._whole = SubgroupHandle(self, self.generators(), self.bsgs)
        return self._whole

    def subgroup_data(self, gens, base=None):
        if base is not None:
            gens = list(base.generators) + list(gens)
        return BSGSGroup(gens, self.degree)

    def data_contains(self, data, g):
        return data.contains(g)

    def data_order(self, data):
        return data.order()


def _engine_for(group):
    return PermGroup(group)


def subgroup_generated(group, gens):
    for g in gens:
        if not group.contains(g):
            raise MembershipError(f"{format_permutation(g)} is not in the group")
    return BSGSGroup(gens, group.degree)


def normal_closure(group, gens):
    engine = _engine_for(group)
    for g in gens:
        if not group.contains(g):
            raise MembershipError(f"{format_permutation(g)} is not in the group")
    return engine.normal_closure(list(gens)).data


def commutator_group(A, B):
    if A.degree != B.degree:
        raise DegreeMismatchError("subgroups act on different degrees")
    engine = PermGroup(BSGSGroup(A.generators + B.generators, A.degree))
    return engine.commutator_group(engine.subgroup(A.generators), engine.subgroup(B.generators)).data
