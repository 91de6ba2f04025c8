"""Backend-independent group interface and subgroup algorithms.

Every backend (pc presentations, permutation groups, the exhaustive Cayley
oracle) implements ``GroupEngine``; the series module only talks to this
interface. Subgroups are ``SubgroupHandle`` objects holding their generators
and whatever membership structure the backend builds for them.
"""
import logging
from abc import ABC, abstractmethod

from sympy import factorint

from .errors import InputError

logger = logging.getLogger(__name__)


def prime_power_exponent(order, prime):
    """k with ``order == prime**k``; InputError otherwise."""
    k = 0
    while order % prime == 0:
        order //= prime
        k += 1
    if order != 1:
        raise InputError(f"group order is not a power of {prime}")
    return k


def order_prime(order):
    """The unique prime dividing ``order`` (None for the trivial group)."""
    if order == 1:
        return None
    primes = list(factorint(order))
    if len(primes) != 1:
        raise InputError(f"group of order {order} is not a p-group")
    return primes[0]


class GroupEngine(ABC):
    """A finite group given by generators and exact arithmetic."""

    prime = None

    @abstractmethod
    def identity(self):
        pass

    @abstractmethod
    def generators(self):
        pass

    @abstractmethod
    def multiply(self, u, v):
        pass

    @abstractmethod
    def inverse(self, u):
        pass

    @abstractmethod
    def order(self):
        pass

    @abstractmethod
    def subgroup_data(self, gens, base=None):
        """Membership structure for <gens>; ``base`` is the data of a subgroup to extend."""

    @abstractmethod
    def data_contains(self, data, g):
        pass

    @abstractmethod
    def data_order(self, data):
        pass

    # -- derived arithmetic --------------------------------------------

    def is_identity(self, g):
        return g == self.identity()

    def power(self, g, k):
        if k < 0:
            g, k = self.inverse(g), -k
        result = self.identity()
        while k:
            if k & 1:
                result = self.multiply(result, g)
            k >>= 1
            if k:
                g = self.multiply(g, g)
        return result

    def commutator(self, u, v):
        return self.multiply(self.inverse(self.multiply(v, u)), self.multiply(u, v))

    def conjugate(self, u, v):
        return self.multiply(self.multiply(self.inverse(v), u), v)

    def element_order(self, g):
        n = 1
        h = g
        while not self.is_identity(h):
            h = self.multiply(h, g)
            n += 1
        return n

    def order_exp(self):
        if self.order() == 1:
            return 0
        return prime_power_exponent(self.order(), self.p_of_group())

    def p_of_group(self):
        if self.prime is None:
            self.prime = order_prime(self.order())
        return self.prime

    # -- subgroups -------------------------------------------------------

    def subgroup(self, gens):
        gens = [g for g in gens if not self.is_identity(g)]
        return SubgroupHandle(self, gens, self.subgroup_data(gens))

    def whole(self):
        if getattr(self, "_whole", None) is None:
            self._whole = self.subgroup(self.generators())
        return self._whole

    def trivial(self):
        return self.subgroup([])

    def normal_closure(self, gens, within=None):
        """Smallest subgroup containing ``gens`` and normalised by ``within``."""
        within = within or self.whole()
        closure = self.subgroup(gens)
        queue = list(closure.gens)
        while queue:
            g = queue.pop()
            for x in within.gens:
                c = self.conjugate(g, x)
                if not closure.contains(c):
                    closure = closure.extended([c])
                    queue.append(c)
        return closure

    def commutator_group(self, A, B):
        """[A, B]: normal closure in <A, B> of the generator commutators."""
        comms = [self.commutator(a, b) for a in A.gens for b in B.gens]
        join = self.subgroup(list(A.gens) + list(B.gens))
        return self.normal_closure(comms, within=join)


class SubgroupHandle:
    """A subgroup of an engine with exact membership and order."""

    def __init__(self, engine, gens, data):
        self.engine = engine
        self.gens = tuple(gens)
        self.data = data
        self._order = None

    def order(self):
        if self._order is None:
            self._order = self.engine.data_order(self.data)
        return self._order

    def order_exp(self):
        return prime_power_exponent(self.order(), self.engine.p_of_group()) if self.order() > 1 else 0

    def is_trivial(self):
        return self.order() == 1

    def contains(self, g):
        return self.engine.data_contains(self.data, g)

    def is_subgroup_of(self, other):
        return all(other.contains(g) for g in self.gens)

    def equals(self, other):
        return self.order() == other.order() and self.is_subgroup_of(other)

    def extended(self, gens):
        gens = [g for g in gens if not self.engine.is_identity(g)]
        data = self.engine.subgroup_data(gens, base=self.data)
        return SubgroupHandle(self.engine, list(self.gens) + gens, data)

    def __repr__(self):
        return f"<SubgroupHandle order={self.order()} gens={len(self.gens)}>"


def join(A, B):
    return A.extended(B.gens)


def is_normal(H, G):
    """Whether H is normalised by every generator of G."""
    engine = H.engine
    return all(H.contains(engine.conjugate(h, g)) for h in H.gens for g in G.gens)


def derived_subgroup(H):
    return H.engine.commutator_group(H, H)


def frattini(K):
    """Phi(K) = K' K^p for a p-group K."""
    engine = K.engine
    p = engine.p_of_group()
    powers = [engine.power(g, p) for g in K.gens]
    return derived_subgroup(K).extended(powers)


def abelian_invariants(K):
    """Orders of the cyclic factors of K/K', ascending."""
    engine = K.engine
    p = engine.p_of_group()
    base = derived_subgroup(K)
    base_exp = base.order_exp()
    # ranks[k] = log_p |K^{p^k} K' / K'|
    ranks = []
    k = 0
    while True:
        q = p ** k
        layer = base.extended([engine.power(g, q) for g in K.gens])
        ranks.append(layer.order_exp() - base_exp)
        if ranks[-1] == 0:
            break
        k += 1
    counts = [ranks[i] - ranks[i + 1] for i in range(len(ranks) - 1)]
    invariants = []
    for i in range(len(counts)):
        exactly = counts[i] - (counts[i + 1] if i + 1 < len(counts) else 0)
        invariants.extend([p ** (i + 1)] * exactly)
    return sorted(invariants)


def has_cyclic_quotient(K, H):
    """Whether K/H is cyclic, for H normal in the p-group K."""
    p = K.engine.p_of_group()
    top = join(H, frattini(K))
    return K.order() <= p * top.order()
