"""Overlap tests for pc-presentations.

A presentation defines a group of order exactly p^n iff, for every test
below, both bracketings collect to the same normal form:

* ``(a_k a_j) a_i = a_k (a_j a_i)`` for k > j > i,
* ``(a_j^p) a_i = a_j^(p-1) (a_j a_i)`` for j > i,
* ``a_j (a_i^p) = (a_j a_i) a_i^(p-1)`` for j > i,
* ``(a_i^p) a_i = a_i (a_i^p)``.

``layer_equations`` evaluates the same tests on a quotient while counting
how often each relation is applied. When the next generator is central,
the tests of the extended presentation are affine in that generator's
tail coordinates, and the counts are the coefficients.
"""
import logging
from collections import Counter

from ..errors import CollectionLimitError, PreconditionError
from .collector import DEFAULT_MAX_STEPS, Collector
from .presentation import word_to_letters

logger = logging.getLogger(__name__)


def overlap_tests(rank):
    """Yield ``(name, kind, indices)`` for every test; indices are 0-based."""
    for k in range(rank):
        for j in range(k):
            for i in range(j):
                yield f"overlap ({k + 1},{j + 1},{i + 1})", "overlap", (k, j, i)
    for j in range(rank):
        for i in range(j):
            yield f"power-left ({j + 1},{i + 1})", "power-left", (j, i)
            yield f"power-right ({j + 1},{i + 1})", "power-right", (j, i)
    for i in range(rank):
        yield f"power-self ({i + 1})", "power-self", (i,)


def _unit(n, i, e=1):
    exps = [0] * n
    exps[i] = e
    return exps


def _tail(c, i):
    c.note_power(i)
    tail = c.pres._power[i]
    return list(tail) if tail is not None else [0] * c.n


def _lhs(c, kind, idx):
    n = c.n
    if kind == "overlap":
        k, j, i = idx
        x = _unit(n, k)
        c.collect(x, [(j, 1)])
        return c.collect(x, [(i, 1)])
    if kind == "power-left":
        j, i = idx
        return c.collect(_tail(c, j), [(i, 1)])
    if kind == "power-right":
        j, i = idx
        return c.collect(_unit(n, j), word_to_letters(_tail(c, i)))
    (i,) = idx
    return c.collect(_tail(c, i), [(i, 1)])


def _rhs(c, kind, idx):
    n, p = c.n, c.p
    if kind == "overlap":
        k, j, i = idx
        y = c.collect(_unit(n, j), [(i, 1)])
        return c.collect(_unit(n, k), word_to_letters(y))
    if kind == "power-left":
        j, i = idx
        y = c.collect(_unit(n, j), [(i, 1)])
        return c.collect(_unit(n, j, p - 1), word_to_letters(y))
    if kind == "power-right":
        j, i = idx
        y = c.collect(_unit(n, j), [(i, 1)])
        return c.collect(y, [(i, p - 1)])
    (i,) = idx
    return c.collect(_unit(n, i), word_to_letters(_tail(c, i)))


class _PlainCollector(Collector):
    def note_power(self, i):
        pass


def consistency_check(pres):
    """Names of the failing tests; an empty list means consistent."""
    c = _PlainCollector(pres)
    violations = []
    for name, kind, idx in overlap_tests(pres.rank):
        try:
            lhs = _lhs(c, kind, idx)
            rhs = _rhs(c, kind, idx)
        except CollectionLimitError:
            violations.append(f"{name}: collection limit")
            continue
        if lhs != rhs:
            violations.append(name)
    if violations:
        logger.debug("%r fails %d consistency tests", pres, len(violations))
    return violations


class TrackingCollector(Collector):
    """Collector that counts every relation it applies.

    Keys are ``("pow", i)`` and ``("comm", j, i)`` (0-based). Commutator
    passes are counted even when the stored tail is trivial, since the tail
    may still be non-trivial in the generator being added on top.
    """

    def __init__(self, pres, max_steps=DEFAULT_MAX_STEPS):
        super().__init__(pres, max_steps)
        self.counts = Counter()

    def note_power(self, i):
        self.counts[("pow", i)] += 1

    def collect(self, exps, letters):
        p, n = self.p, self.n
        conj = self._conj
        power_letters = self._power_letters
        blockers = self._blockers
        counts = self.counts

        stack = list(reversed(letters))
        steps = 0
        while stack:
            g, e = stack.pop()
            steps += 1
            if steps > self.max_steps:
                raise CollectionLimitError("tracked collection exceeded its step cap")

            if not any(exps[j] for j in blockers[g]):
                for j in range(g + 1, n):
                    if exps[j]:
                        counts[("comm", j, g)] += e * exps[j]
                total = exps[g] + e
                if total < p:
                    exps[g] = total
                    continue
                exps[g] = total - p
                counts[("pow", g)] += 1
                trailing = [(j, exps[j]) for j in range(g + 1, n) if exps[j]]
                for j, _ in trailing:
                    exps[j] = 0
                stack.extend(reversed(trailing))
                stack.extend(reversed(power_letters[g]))
                continue

            if e > 1:
                stack.append((g, e - 1))
            pushed = []
            for j in range(g + 1, n):
                ej = exps[j]
                if not ej:
                    continue
                exps[j] = 0
                counts[("comm", j, g)] += ej
                word = conj[j][g]
                if word is None:
                    pushed.append((j, ej))
                else:
                    pushed.extend(word * ej)
            stack.extend(reversed(pushed))
            if exps[g] + 1 == p:
                exps[g] = 0
                counts[("pow", g)] += 1
                stack.extend(reversed(power_letters[g]))
            else:
                exps[g] += 1
        return exps


def layer_equations(quotient):
    """Relation-count differences of every test evaluated on ``quotient``.

    Returns a list of ``(name, delta)`` where ``delta`` maps relation keys to
    ``count(lhs) - count(rhs)``. Adding a central generator a_{m+1} with tail
    coordinates ``v[rel]`` leaves test ``name`` satisfied iff
    ``sum(delta[rel] * v[rel]) = 0 mod p``. ``quotient`` must be consistent.
    """
    c = TrackingCollector(quotient)
    equations = []
    for name, kind, idx in overlap_tests(quotient.rank):
        c.counts = Counter()
        lhs = _lhs(c, kind, idx)
        left = c.counts
        c.counts = Counter()
        rhs = _rhs(c, kind, idx)
        if lhs != rhs:
            raise PreconditionError(f"quotient presentation fails {name}", reason="inconsistent")
        delta = Counter(left)
        delta.subtract(c.counts)
        delta = {key: v for key, v in delta.items() if v % quotient.prime}
        if delta:
            equations.append((name, delta))
    return equations
