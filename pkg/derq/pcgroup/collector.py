"""Exact arithmetic in a pc-presented p-group.

Two rewriting strategies are provided. ``Collector.collect`` is collection
from the left: the word is consumed letter by letter from a stack and each
letter is moved into place past the already collected tail using the
precomputed conjugates ``a_j^{a_i} = a_j [a_j, a_i]``. ``Collector.rewrite``
repeatedly rewrites the leftmost uncollected subword, in the manner of
sympy's ``Collector.collected_word``; it is slower and only used to
cross-check the first strategy.
"""
import logging

from ..errors import CollectionLimitError, InputError, RankMismatchError
from .presentation import identity_word, word_to_letters

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 10 ** 8


class Collector:
    def __init__(self, pres, max_steps=DEFAULT_MAX_STEPS):
        self.pres = pres
        self.p = pres.prime
        self.n = pres.rank
        self.max_steps = max_steps
        n = self.n

        # _conj[j][i] lists the letters of a_j^{a_i} when [a_j, a_i] != 1
        self._conj = [[None] * n for _ in range(n)]
        self._comm_letters = [[None] * n for _ in range(n)]
        self._blockers = [[] for _ in range(n)]
        for j in range(n):
            for i in range(j):
                tail = pres._comm[j][i]
                if tail is None:
                    continue
                letters = word_to_letters(tail)
                self._comm_letters[j][i] = letters
                self._conj[j][i] = [(j, 1)] + letters
                self._blockers[i].append(j)
        self._power_letters = [word_to_letters(t) if t is not None else [] for t in pres._power]

    # -- collection from the left --------------------------------------

    def collect(self, exps, letters):
        """Multiply the normal form ``exps`` (a list, modified in place) by ``letters``.

        Every letter is a (0-based generator, exponent) pair with the exponent
        in 1..p-1.
        """
        p, n = self.p, self.n
        conj = self._conj
        power_letters = self._power_letters
        blockers = self._blockers
        cap = self.max_steps

        stack = list(reversed(letters))
        steps = 0
        while stack:
            g, e = stack.pop()
            steps += 1
            if steps > cap:
                raise CollectionLimitError(
                    f"collection exceeded {cap} steps; the presentation is inconsistent"
                )

            if not any(exps[j] for j in blockers[g]):
                # a_g commutes with everything collected after it
                total = exps[g] + e
                if total < p:
                    exps[g] = total
                    continue
                exps[g] = total - p
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
                word = conj[j][g]
                if word is None:
                    pushed.append((j, ej))
                else:
                    pushed.extend(word * ej)
            stack.extend(reversed(pushed))
            if exps[g] + 1 == p:
                exps[g] = 0
                stack.extend(reversed(power_letters[g]))
            else:
                exps[g] += 1
        return exps

    def _check(self, word):
        if len(word) != self.n:
            raise RankMismatchError(f"word has length {len(word)}, presentation rank is {self.n}")

    def multiply(self, u, v):
        self._check(u)
        self._check(v)
        return tuple(self.collect(list(u), word_to_letters(v)))

    def inverse(self, u):
        self._check(u)
        p = self.p
        x = list(u)
        v = [0] * self.n
        for i in range(self.n):
            if x[i]:
                k = p - x[i]
                v[i] = k
                self.collect(x, [(i, k)])
        return tuple(v)

    def power(self, u, k):
        self._check(u)
        if k < 0:
            u, k = self.inverse(u), -k
        result = identity_word(self.n)
        base = tuple(u)
        while k:
            if k & 1:
                result = self.multiply(result, base)
            k >>= 1
            if k:
                base = self.multiply(base, base)
        return result

    def commutator(self, u, v):
        return self.multiply(
            self.multiply(self.inverse(u), self.inverse(v)),
            self.multiply(u, v),
        )

    def conjugate(self, u, v):
        """``u^v = v^-1 u v``."""
        return self.multiply(self.multiply(self.inverse(v), u), v)

    def normalize(self, word):
        """Normal form of a word given as (1-based generator, integer exponent) pairs."""
        p, n = self.p, self.n
        exps = [0] * n
        for g, e in word:
            if not 1 <= g <= n:
                raise InputError(f"generator index {g} out of range 1..{n}")
            e = int(e)
            if e == 0:
                continue
            if 0 < e < p:
                self.collect(exps, [(g - 1, e)])
                continue
            unit = [0] * n
            unit[g - 1] = 1
            factor = self.power(tuple(unit), e)
            self.collect(exps, word_to_letters(factor))
        return tuple(exps)

    # -- leftmost-subword rewriting --------------------------------------

    def rewrite(self, word):
        """Normal form by rewriting the leftmost uncollected subword.

        ``word`` holds (1-based generator, integer exponent) pairs.
        """
        p, n = self.p, self.n
        letters = []
        for g, e in word:
            if not 1 <= g <= n:
                raise InputError(f"generator index {g} out of range 1..{n}")
            letters.append((g - 1, int(e)))

        steps = 0
        i = 0
        while i < len(letters):
            steps += 1
            if steps > self.max_steps:
                raise CollectionLimitError("rewriting exceeded its step cap")
            g, e = letters[i]
            if e == 0:
                del letters[i]
                i = max(i - 1, 0)
                continue
            if e >= p:
                letters[i:i + 1] = [(g, e - p)] + self._power_letters[g]
                i = max(i - 1, 0)
                continue
            if e < 0:
                inverse_tail = [(h, -f) for h, f in reversed(self._power_letters[g])]
                letters[i:i + 1] = [(g, e + p)] + inverse_tail
                i = max(i - 1, 0)
                continue
            if i + 1 == len(letters):
                break
            h, f = letters[i + 1]
            if h == g:
                letters[i:i + 2] = [(g, e + f)]
                continue
            if h > g or f <= 0 or f >= p:
                i += 1
                continue
            # a_g^e a_h = a_h (a_g^{a_h})^e for g > h
            conj = self._conj[g][h] or [(g, 1)]
            replacement = [(h, 1)] + conj * e
            if f > 1:
                replacement.append((h, f - 1))
            letters[i:i + 2] = replacement
            i = max(i - 1, 0)

        exps = [0] * n
        for g, e in letters:
            exps[g] = e
        return tuple(exps)
