"""Isomorphism testing for consistent pc-presentations.

A homomorphism A -> B is given by the images of A's free generators (the
pc generators outside the Frattini subgroup). It is well defined iff the
subgroup of A x B generated by the pairs ``(a, image)`` meets ``1 x B``
trivially, and onto iff the images generate B. Both conditions pass to
the quotients ``B / <b_{j+1}, ..., b_n>``, so the images are built one pc
coordinate at a time and checked at every layer.
"""
import logging
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Tuple

from ..engine import frattini
from ..errors import BudgetExceededError, RankMismatchError
from ..pcgroup import PcPresentation
from ..pcgroup.group import InducedSequence, PcGroup
from .fingerprint import fingerprint

logger = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 2_000_000


@dataclass
class IsoWitness:
    """Images of every pc generator of the source, or a certificate of failure."""

    images: Optional[Tuple[tuple, ...]] = None
    certificate: dict = field(default_factory=dict)

    @property
    def found(self):
        return self.images is not None

    def to_dict(self):
        return {
            "images": [list(w) for w in self.images] if self.images is not None else None,
            "certificate": dict(self.certificate),
        }


def direct_product(A, B):
    """Pc-presentation of A x B: generators of A first, then those of B."""
    if A.prime != B.prime:
        raise RankMismatchError("direct factors must share the prime")
    n, m = A.rank, B.rank
    pad = (0,) * m
    shift = (0,) * n
    powers = {i: tail + pad for i, tail in A.power_tails.items()}
    powers.update({i + n: shift + tail for i, tail in B.power_tails.items()})
    comms = {key: tail + pad for key, tail in A.commutator_tails.items()}
    comms.update({(j + n, i + n): shift + tail for (j, i), tail in B.commutator_tails.items()})
    return PcPresentation(A.prime, n + m, powers, comms)


def free_generators(group):
    """0-based indices of pc generators not covered by the Frattini subgroup."""
    phi = frattini(group.whole())
    covered = set(phi.data.depths())
    return [i for i in range(group.rank) if i not in covered]


def _class_prefixes(group, gens):
    """Prefix sets of the lexicographically least element of every conjugacy class.

    ``prefixes[k]`` holds the length-k prefixes.
    """
    seen = set()
    prefixes = [set() for _ in range(group.rank + 1)]
    for g in group.elements():
        if g in seen:
            continue
        # elements() runs in lex order, so g is least in its class
        for k in range(group.rank + 1):
            prefixes[k].add(g[:k])
        seen.add(g)
        frontier = [g]
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = group.conjugate(x, s)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return prefixes


def _graph(product_group, pairs, n):
    """Induced sequence of <pairs> in A x B, or None if it is not a graph."""
    return InducedSequence(product_group).add([a + b for a, b in pairs], stop_depth=n)


def _generates(group, words):
    return len(InducedSequence(group).add(words)) == group.rank


def _images_from_graph(seq, source_gens, n, target):
    images = []
    for g in source_gens:
        rest, _ = seq.sift(tuple(g) + target.identity())
        images.append(target.inverse(rest[n:]))
    return tuple(images)


def is_isomorphic(A, B, max_nodes=DEFAULT_MAX_NODES, budget_seconds=None):
    """(True, witness) or (False, certificate); budget breach raises."""
    if A.prime != B.prime or A.rank != B.rank:
        return False, IsoWitness(certificate={"reason": "order"})
    GA, GB = PcGroup(A), PcGroup(B)
    if A.key() == B.key():
        return True, IsoWitness(images=tuple(GA.generators()), certificate={"reason": "identical"})
    if fingerprint(GA) != fingerprint(GB):
        return False, IsoWitness(certificate={"reason": "fingerprint"})

    p, n = A.prime, A.rank
    deadline = time.time() + budget_seconds if budget_seconds else None
    free = free_generators(GA)
    free_gens = [GA.generators()[i] for i in free]
    prefixes = _class_prefixes(GB, [GB.generators()[i] for i in free_generators(GB)])
    quotients = [None] + [PcGroup(B.quotient(j)) for j in range(1, n + 1)]
    products = [None] + [PcGroup(direct_product(A, B.quotient(j))) for j in range(1, n + 1)]

    nodes = 0
    pruned = 0
    stack = [(0, tuple(() for _ in free))]
    while stack:
        j, images = stack.pop()
        if j == n:
            seq = _graph(products[n], list(zip(free_gens, images)), n)
            witness = _images_from_graph(seq, GA.generators(), n, GB)
            logger.debug("isomorphism %r -> %r found after %d nodes", A, B, nodes)
            return True, IsoWitness(images=witness, certificate={"nodes": nodes, "pruned": pruned})
        children = []
        for coords in product(range(p), repeat=len(free)):
            nodes += 1
            if nodes > max_nodes or (deadline and time.time() > deadline):
                raise BudgetExceededError(
                    f"isomorphism search {A!r} -> {B!r} exhausted its budget",
                    progress={"nodes": nodes, "pruned": pruned, "layer": j},
                )
            extended = tuple(img + (c,) for img, c in zip(images, coords))
            if extended[0] not in prefixes[j + 1]:
                pruned += 1
                continue
            if _graph(products[j + 1], list(zip(free_gens, extended)), n) is None:
                pruned += 1
                continue
            if not _generates(quotients[j + 1], extended):
                pruned += 1
                continue
            children.append((j + 1, extended))
        stack.extend(reversed(children))
    return False, IsoWitness(
        certificate={"reason": "exhausted", "nodes": nodes, "pruned": pruned, "free": len(free)}
    )


def apply_witness(source, target, witness, word):
    """Image of ``word`` (an element of ``source``) under the witness."""
    image = target.identity()
    for g, e in zip(witness.images, word):
        if e:
            image = target.multiply(image, target.power(g, e))
    return image


def verify_witness(A, B, witness):
    """Whether the images define an isomorphism A -> B."""
    if not witness.found or A.rank != B.rank or A.prime != B.prime:
        return False
    GA, GB = PcGroup(A), PcGroup(B)
    images = [GB.element(w) for w in witness.images]
    if len(images) != A.rank:
        return False
    n = A.rank
    seq = _graph(PcGroup(direct_product(A, B)), list(zip(GA.generators(), images)), n)
    return seq is not None and _generates(GB, images)


def invert_witness(A, B, witness):
    """Witness for B -> A from a verified witness for A -> B."""
    GA, GB = PcGroup(A), PcGroup(B)
    seq = _graph(PcGroup(direct_product(B, A)), list(zip(witness.images, GA.generators())), B.rank)
    images = _images_from_graph(seq, GB.generators(), B.rank, GA)
    return IsoWitness(images=images, certificate={"reason": "inverted"})


def compose_witness(A, B, C, first, second):
    """Witness for A -> C from witnesses A -> B and B -> C."""
    GB, GC = PcGroup(B), PcGroup(C)
    images = tuple(apply_witness(GB, GC, second, w) for w in first.images)
    return IsoWitness(images=images, certificate={"reason": "composed"})

