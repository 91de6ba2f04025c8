"""GroupEngine over a consistent pc-presentation.

Subgroups are stored as induced generating sequences: at most one entry per
leading index, each normalised to leading exponent 1. Membership is a
single left-to-right sift and the order is p to the number of entries.
"""
import logging
from itertools import product

from ..engine import GroupEngine, SubgroupHandle
from ..errors import InputError, RankMismatchError
from .presentation import generator_word, identity_word, leading_index

logger = logging.getLogger(__name__)


class InducedSequence:
    def __init__(self, group, entries=None, powers=None):
        self.group = group
        self.entries = dict(entries or {})
        self._powers = dict(powers or {})

    def copy(self):
        return InducedSequence(self.group, self.entries, self._powers)

    def __len__(self):
        return len(self.entries)

    def depths(self):
        return sorted(self.entries)

    def _inverse_powers(self, d):
        """[h^0, h^-1, ..., h^-(p-1)] for the entry at depth d."""
        if d not in self._powers:
            group = self.group
            inv = group.inverse(self.entries[d])
            table = [group.identity()]
            for _ in range(group.prime - 1):
                table.append(group.multiply(table[-1], inv))
            self._powers[d] = table
        return self._powers[d]

    def sift(self, g):
        """Strip entries off the left of g; returns (remainder, exponents by depth)."""
        exponents = {}
        while True:
            d = leading_index(g)
            if d is None or d not in self.entries:
                return g, exponents
            e = g[d]
            exponents[d] = e
            g = self.group.multiply(self._inverse_powers(d)[e], g)

    def contains(self, g):
        rest, _ = self.sift(g)
        return leading_index(rest) is None

    def add(self, gens, stop_depth=None):
        """Close under the new generators.

        Returns None as soon as an entry at depth >= ``stop_depth`` appears.
        """
        group = self.group
        p = group.prime
        queue = list(gens)
        while queue:
            rest, _ = self.sift(queue.pop())
            d = leading_index(rest)
            if d is None:
                continue
            if stop_depth is not None and d >= stop_depth:
                return None
            e = rest[d]
            if e != 1:
                rest = group.power(rest, pow(e, -1, p))
            for other in list(self.entries.values()):
                queue.append(group.commutator(rest, other))
            queue.append(group.power(rest, p))
            self.entries[d] = rest
        return self


class PcGroup(GroupEngine):
    def __init__(self, pres):
        self.pres = pres
        self.prime = pres.prime
        self.rank = pres.rank
        self.collector = pres.collector
        self._whole = None

    def __repr__(self):
        return f"<PcGroup {self.pres!r}>"

    def identity(self):
        return identity_word(self.rank)

    def generators(self):
        return [generator_word(self.rank, i) for i in range(1, self.rank + 1)]

    def element(self, word):
        word = tuple(int(e) for e in word)
        if len(word) != self.rank:
            raise RankMismatchError(f"word has length {len(word)}, group rank is {self.rank}")
        if any(not 0 <= e < self.prime for e in word):
            raise InputError(f"exponents must lie in 0..{self.prime - 1}")
        return word

    def multiply(self, u, v):
        return tuple(self.collector.collect(list(u), [(i, e) for i, e in enumerate(v) if e]))

    def inverse(self, u):
        return self.collector.inverse(u)

    def power(self, g, k):
        return self.collector.power(g, k)

    def commutator(self, u, v):
        return self.collector.commutator(u, v)

    def order(self):
        return self.prime ** self.rank

    def element_order(self, g):
        n = 1
        while leading_index(g) is not None:
            g = self.power(g, self.prime)
            n *= self.prime
        return n

    def elements(self):
        return product(range(self.prime), repeat=self.rank)

    def whole(self):
        if self._whole is None:
            seq = InducedSequence(self)
            seq.entries = {i: g for i, g in enumerate(self.generators())}
            self._whole = self._handle(self.generators(), seq)
        return self._whole

    def _handle(self, gens, seq):
        return SubgroupHandle(self, gens, seq)

    def subgroup_data(self, gens, base=None):
        seq = base.copy() if base is not None else InducedSequence(self)
        return seq.add(gens)

    def data_contains(self, data, g):
        return data.contains(g)

    def data_order(self, data):
        return self.prime ** len(data)
