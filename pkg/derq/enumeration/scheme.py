"""Presentations of p-groups of maximal class and order p^6.

Every such group has a generating pair ``s, s1`` with ``s`` outside all
two-step centralisers; setting ``s_{i+1} = [s_i, s]`` gives a pc-generating
sequence

    a1 = s, a2 = s1, a3 = s2, ..., a6 = s5      weights 1 1 2 3 4 5

with ``[a_{i+1}, a1] = a_{i+2}`` fixed and ``a6`` central. What is left to
choose is a short list of tail coordinates, grouped by the generator they
multiply. A scheme key lists their values in ``coordinates`` order.

With ``two_step`` (the default) ``s1`` is taken in the two-step centraliser
``C_G(gamma_2/gamma_4)``, so the ``a4`` coordinate of ``[a3, a2]`` vanishes.
"""
import logging
from itertools import product

from ..pcgroup import PcPresentation
from ..pcgroup.presentation import leading_index

logger = logging.getLogger(__name__)

RANK = 6
WEIGHTS = (1, 1, 2, 3, 4, 5)

# [a_{i+1}, a1] = a_{i+2}
FIXED = {("comm", i + 1, 1): i + 2 for i in range(1, 5)}


def relation_key(rel):
    """0-based key as used by the layer equations."""
    if rel[0] == "pow":
        return ("pow", rel[1] - 1)
    return ("comm", rel[1] - 1, rel[2] - 1)


class MaximalClassScheme:
    def __init__(self, prime, two_step=True):
        self.prime = prime
        self.two_step = two_step
        self.unknowns = {
            3: [("pow", 1), ("pow", 2)],
            4: [("pow", 1), ("pow", 2), ("pow", 3)] + ([] if two_step else [("comm", 3, 2)]),
            5: [("pow", 1), ("pow", 2), ("pow", 3), ("pow", 4), ("comm", 3, 2), ("comm", 4, 2)],
            6: [("pow", i) for i in range(1, 6)]
            + [("comm", 3, 2), ("comm", 4, 2), ("comm", 5, 2), ("comm", 4, 3)],
        }
        self.coordinates = [(rel, t) for t in sorted(self.unknowns) for rel in self.unknowns[t]]
        self.relations = sorted({rel for rel, _ in self.coordinates})
        self._allowed = {}
        for rel, t in self.coordinates:
            self._allowed.setdefault(rel, set()).add(t)

    def __repr__(self):
        return f"<MaximalClassScheme p={self.prime} two_step={self.two_step}>"

    @property
    def key_length(self):
        return len(self.coordinates)

    def prefix_length(self, rank):
        """Number of key entries fixed once generators up to a_rank are present."""
        return sum(len(self.unknowns[t]) for t in self.unknowns if t <= rank)

    def presentation(self, values, rank=RANK, name=None):
        """Presentation of rank ``rank`` from the first key entries."""
        values = tuple(values)
        if len(values) != self.prefix_length(rank):
            raise ValueError(f"rank {rank} needs {self.prefix_length(rank)} values, got {len(values)}")
        tails = {}
        for rel, target in FIXED.items():
            if target <= rank:
                tails.setdefault(rel, [0] * rank)[target - 1] = 1
        for (rel, target), value in zip(self.coordinates, values):
            if value:
                tails.setdefault(rel, [0] * rank)[target - 1] = value
        powers = {rel[1]: tuple(w) for rel, w in tails.items() if rel[0] == "pow" and rel[1] <= rank}
        comms = {
            (rel[1], rel[2]): tuple(w)
            for rel, w in tails.items()
            if rel[0] == "comm" and rel[1] <= rank
        }
        return PcPresentation(self.prime, rank, powers, comms, weights=WEIGHTS[:rank], name=name)

    def layer_system(self, equations, target):
        """(rows, rhs) of the affine system for the coordinates multiplying a_target."""
        p = self.prime
        unknown_keys = [relation_key(rel) for rel in self.unknowns[target]]
        fixed_keys = {relation_key(rel) for rel, t in FIXED.items() if t == target}
        rows, rhs = [], []
        for _, delta in equations:
            constant = sum(v for key, v in delta.items() if key in fixed_keys)
            rows.append([delta.get(key, 0) % p for key in unknown_keys])
            rhs.append(-constant % p)
        return rows, rhs

    # -- re-presenting a group on another generating pair --------------

    def relative_key(self, group, x, y):
        """Scheme key of ``group`` on generators ``s = x, s1 = y``, or None.

        ``group`` is a PcGroup on a scheme presentation.
        """
        p = self.prime
        if (x[0] * y[1] - x[1] * y[0]) % p == 0:
            return None
        t = [x, y]
        for k in range(2, RANK):
            t.append(group.commutator(t[-1], x))
            if leading_index(t[k]) != k:
                return None

        strip = {}
        for k in range(2, RANK):
            inv = group.inverse(t[k])
            table = [group.identity()]
            for _ in range(p - 1):
                table.append(group.multiply(table[-1], inv))
            strip[k] = (pow(t[k][k], -1, p), table)

        def express(g):
            if g[0] or g[1]:
                return None
            exps = [0] * RANK
            for k in range(2, RANK):
                if g[k]:
                    lead_inv, table = strip[k]
                    e = g[k] * lead_inv % p
                    exps[k] = e
                    g = group.multiply(table[e], g)
            return exps

        tails = {}
        for rel in self.relations:
            if rel[0] == "pow":
                value = group.power(t[rel[1] - 1], p)
            else:
                value = group.commutator(t[rel[1] - 1], t[rel[2] - 1])
            tail = express(value)
            if tail is None:
                return None
            allowed = self._allowed[rel]
            if any(e and (k + 1) not in allowed for k, e in enumerate(tail)):
                return None
            tails[rel] = tail
        return tuple(tails[rel][target - 1] for rel, target in self.coordinates)

    def transversal(self, group):
        """Generating pairs (x, y) covering every scheme key of ``group``.

        x runs over the top layer only, since a valid s is conjugate to all
        of s*gamma_2. For y the a3 coordinate is absorbed by conjugating with
        powers of x and the central a6 coordinate does not change the key.
        """
        p = self.prime
        a3 = tuple(1 if i == 2 else 0 for i in range(RANK))
        tops = []
        for y1, y2 in product(range(p), repeat=2):
            if not (y1 or y2):
                continue
            if self.two_step:
                y0 = (y1, y2, 0, 0, 0, 0)
                if group.commutator(a3, y0)[3]:
                    continue
            tops.append((y1, y2))
        for x1, x2 in product(range(p), repeat=2):
            if not (x1 or x2):
                continue
            x = (x1, x2, 0, 0, 0, 0)
            for y1, y2 in tops:
                if (x1 * y2 - x2 * y1) % p == 0:
                    continue
                for y4, y5 in product(range(p), repeat=2):
                    yield x, (y1, y2, 0, y4, y5, 0)

    def orbit(self, group):
        """All scheme keys of ``group``, each with one generating pair producing it."""
        keys = {}
        for x, y in self.transversal(group):
            key = self.relative_key(group, x, y)
            if key is not None and key not in keys:
                keys[key] = (x, y)
        return keys
