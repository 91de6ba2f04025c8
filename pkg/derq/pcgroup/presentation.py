"""Power-commutator presentations of finite p-groups.

Generators are numbered 1..n in every public interface. A presentation
stores, for each generator, the tail of ``a_i^p`` and, for each ordered pair
``j > i``, the tail of the commutator ``[a_j, a_i]``. Tails are exponent
words (tuples of length n, entries in 0..p-1) and must only mention
generators after ``i`` (powers) or after ``j`` (commutators).

Conventions used everywhere in derq:

* ``[x, y] = x^-1 y^-1 x y``, commutators are left-normed;
* ``a_j a_i = a_i a_j [a_j, a_i]`` for ``j > i``.
"""
from typing import Dict, Optional, Tuple

from sympy import isprime

from ..errors import InputError, RankMismatchError, SupportViolationError

ExponentWord = Tuple[int, ...]


def identity_word(rank) -> ExponentWord:
    return (0,) * rank


def generator_word(rank, index, exponent=1) -> ExponentWord:
    """The exponent word of ``a_index^exponent`` (1-based index)."""
    exps = [0] * rank
    exps[index - 1] = exponent
    return tuple(exps)


def leading_index(word) -> Optional[int]:
    """0-based position of the first non-zero exponent, or None."""
    for i, e in enumerate(word):
        if e:
            return i
    return None


def word_to_letters(word):
    """(0-based generator, exponent) pairs of a normal-form word."""
    return [(i, e) for i, e in enumerate(word) if e]


class PcPresentation:
    """A power-commutator presentation; immutable once built."""

    def __init__(self, prime, rank, power_tails=None, commutator_tails=None, weights=None, name=None):
        if not isprime(prime):
            raise InputError(f"{prime} is not a prime")
        if rank < 0:
            raise InputError("rank must be non-negative")
        self.prime = prime
        self.rank = rank
        self.name = name
        self.weights = tuple(weights) if weights is not None else None

        if self.weights is not None:
            if len(self.weights) != rank:
                raise RankMismatchError(f"expected {rank} weights, got {len(self.weights)}")
            if any(w < 1 for w in self.weights) or list(self.weights) != sorted(self.weights):
                raise InputError("weights must be positive and non-decreasing")

        self._power = [None] * rank
        self._comm = [[None] * rank for _ in range(rank)]

        for i, tail in (power_tails or {}).items():
            tail = self._check_word(tail)
            self._check_index(i)
            if any(tail[:i]):
                raise SupportViolationError(f"tail of a{i}^p must only involve generators after a{i}")
            if any(tail):
                self._power[i - 1] = tail

        for (j, i), tail in (commutator_tails or {}).items():
            tail = self._check_word(tail)
            self._check_index(j)
            self._check_index(i)
            if j <= i:
                raise SupportViolationError(f"commutator [a{j},a{i}] must have j > i")
            if any(tail[:j]):
                raise SupportViolationError(f"tail of [a{j},a{i}] must only involve generators after a{j}")
            if self.weights is not None:
                floor = self.weights[j - 1] + self.weights[i - 1]
                bad = [k + 1 for k, e in enumerate(tail) if e and self.weights[k] < floor]
                if bad:
                    raise SupportViolationError(
                        f"tail of [a{j},a{i}] involves a{bad[0]} of weight below {floor}"
                    )
            if any(tail):
                self._comm[j - 1][i - 1] = tail

        self._collector = None
        self._consistent = None

    def _check_word(self, tail):
        tail = tuple(int(e) for e in tail)
        if len(tail) != self.rank:
            raise RankMismatchError(f"tail has length {len(tail)}, presentation rank is {self.rank}")
        if any(e < 0 or e >= self.prime for e in tail):
            raise InputError(f"tail exponents must lie in 0..{self.prime - 1}")
        return tail

    def _check_index(self, i):
        if not 1 <= i <= self.rank:
            raise InputError(f"generator index {i} out of range 1..{self.rank}")

    # -- accessors -----------------------------------------------------

    def power_tail(self, i) -> ExponentWord:
        tail = self._power[i - 1]
        return tail if tail is not None else identity_word(self.rank)

    def commutator_tail(self, j, i) -> ExponentWord:
        tail = self._comm[j - 1][i - 1]
        return tail if tail is not None else identity_word(self.rank)

    @property
    def power_tails(self) -> Dict[int, ExponentWord]:
        return {i + 1: t for i, t in enumerate(self._power) if t is not None}

    @property
    def commutator_tails(self) -> Dict[Tuple[int, int], ExponentWord]:
        return {
            (j + 1, i + 1): self._comm[j][i]
            for j in range(self.rank)
            for i in range(j)
            if self._comm[j][i] is not None
        }

    def element_count(self):
        return self.prime ** self.rank

    def key(self):
        """Hashable identity of the presentation (prime, rank, all tails)."""
        return (
            self.prime,
            self.rank,
            tuple(self._power),
            tuple(tuple(row[:j]) for j, row in enumerate(self._comm)),
        )

    def __eq__(self, other):
        return isinstance(other, PcPresentation) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<PcPresentation{label} p={self.prime} n={self.rank}>"

    # -- derived presentations ----------------------------------------

    def quotient(self, k):
        """Presentation of G / <a_{k+1}, ..., a_n>, tails truncated to rank k."""
        if not 0 <= k <= self.rank:
            raise InputError(f"cannot truncate rank {self.rank} presentation to {k}")
        powers = {i + 1: t[:k] for i, t in enumerate(self._power[:k]) if t is not None}
        comms = {
            (j + 1, i + 1): self._comm[j][i][:k]
            for j in range(k)
            for i in range(j)
            if self._comm[j][i] is not None
        }
        weights = self.weights[:k] if self.weights is not None else None
        return PcPresentation(self.prime, k, powers, comms, weights=weights)

    # -- arithmetic ----------------------------------------------------

    @property
    def collector(self):
        if self._collector is None:
            from .collector import Collector

            self._collector = Collector(self)
        return self._collector

    def is_consistent(self):
        if self._consistent is None:
            from .consistency import consistency_check

            self._consistent = not consistency_check(self)
        return self._consistent
