"""Independent reference implementations used to cross-check the engines.

``UnitriangularOracle`` multiplies 3x3 upper unitriangular matrices over
GF(p), which form the Heisenberg group of order p^3. ``CayleyGroup`` wraps
any engine and replaces every subgroup algorithm by explicit element sets:
closures are computed by breadth-first multiplication and [A, B] is the
closure of all commutators of elements.
"""
import logging
from collections import namedtuple

from sympy import eye

from .engine import GroupEngine
from .errors import InputError
from .pcgroup import PcPresentation

logger = logging.getLogger(__name__)

CayleyData = namedtuple("CayleyData", ["elements", "gens"])


def heisenberg(p):
    """Pc-presentation of the Heisenberg group: [a2, a1] = a3, all powers trivial."""
    return PcPresentation(p, 3, {}, {(2, 1): (0, 0, 1)}, weights=(1, 1, 2), name=f"heisenberg{p}")


class UnitriangularOracle:
    """a1 -> I + E12, a2 -> I + E23, a3 -> I - E13."""

    def __init__(self, p):
        self.p = p

    def _reduce(self, M):
        return M.applyfunc(lambda x: x % self.p)

    def matrix(self, word):
        e1, e2, e3 = word
        M = eye(3)
        M[0, 1] = e1
        M[1, 2] = e2
        # a1^e1 a2^e2 has corner e1*e2; a3^e3 subtracts e3
        M[0, 2] = e1 * e2 - e3
        return self._reduce(M)

    def word(self, M):
        a, b, c = int(M[0, 1]), int(M[1, 2]), int(M[0, 2])
        p = self.p
        return (a % p, b % p, (a * b - c) % p)

    def multiply(self, u, v):
        return self.word(self._reduce(self.matrix(u) * self.matrix(v)))

    def inverse(self, u):
        return self.word(self._reduce(self.matrix(u).inv_mod(self.p)))

    def commutator(self, u, v):
        U, V = self.matrix(u), self.matrix(v)
        Ui, Vi = U.inv_mod(self.p), V.inv_mod(self.p)
        return self.word(self._reduce(Ui * Vi * U * V))


class CayleyGroup(GroupEngine):
    """Exhaustive engine: subgroups are frozensets of elements."""

    def __init__(self, base, limit=5 ** 4):
        if base.order() > limit:
            raise InputError(f"exhaustive engine limited to {limit} elements, got {base.order()}")
        self.base = base
        self.prime = base.prime
        self._whole = None

    def identity(self):
        return self.base.identity()

    def is_identity(self, g):
        return self.base.is_identity(g)

    def generators(self):
        return self.base.generators()

    def multiply(self, u, v):
        return self.base.multiply(u, v)

    def inverse(self, u):
        return self.base.inverse(u)

    def order(self):
        return self.base.order()

    def closure(self, gens, start=None):
        elements = set(start) if start else {self.identity()}
        frontier = list(elements)
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.multiply(x, g)
                    if y not in elements:
                        elements.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(elements)

    def subgroup_data(self, gens, base=None):
        if base is None:
            return CayleyData(self.closure(gens), tuple(gens))
        gens = tuple(base.gens) + tuple(gens)
        return CayleyData(self.closure(gens, start=base.elements), gens)

    def data_contains(self, data, g):
        return g in data.elements

    def data_order(self, data):
        return len(data.elements)

    def normal_closure(self, gens, within=None):
        within = within or self.whole()
        conjugates = {self.conjugate(g, x) for g in gens for x in within.data.elements}
        return self.subgroup(sorted(conjugates, key=repr))

    def commutator_group(self, A, B):
        comms = {self.commutator(a, b) for a in A.data.elements for b in B.data.elements}
        return self.subgroup(sorted(comms, key=repr))
