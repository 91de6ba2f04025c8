"""Maximal-class p-groups built one central step at a time.

A group G of maximal class and order p^(m+1) is a central extension of
Q = G / gamma_m(G) by a group of order p. Starting from C_p x C_p, each
step solves the layer equations of every class representative Q for the
coordinates of a new generator a_{m+1} on all relations of Q, keeps the
extensions of maximal class and splits them into isomorphism classes by
fingerprint and witness search. No scheme normal form is involved, so the
result is an independent count for the scheme census.

Two normalisations shrink each step. Re-lifting a_k (k >= 3) by a power of
the central a_{m+1} shifts the coordinates of every tail containing a_k,
so the coordinate of the first relation whose tail starts at a_k is set to
0. Replacing a_{m+1} by a power of itself scales all coordinates, so only
solutions whose first non-zero coordinate is 1 are kept.
"""
import logging
import time
from dataclasses import dataclass

from tqdm import tqdm

from ..errors import BudgetExceededError, DomainError
from ..linalg import solve_affine
from ..pcgroup import PcPresentation, layer_equations
from ..pcgroup.group import PcGroup
from ..pcgroup.presentation import leading_index
from ..series import lower_central_series
from .fingerprint import fingerprint
from .isomorphism import is_isomorphic

logger = logging.getLogger(__name__)


@dataclass
class DescendantClass:
    presentation: PcPresentation
    fingerprint: object


def _relations(rank):
    """0-based relation keys in the order used for solution vectors."""
    return [("pow", i) for i in range(rank)] + [("comm", j, i) for j in range(rank) for i in range(j)]


def _tail(pres, rel):
    if rel[0] == "pow":
        return pres.power_tail(rel[1] + 1)
    return pres.commutator_tail(rel[1] + 1, rel[2] + 1)


def _definitions(pres, relations):
    definitions = {}
    for rel in relations:
        k = leading_index(_tail(pres, rel))
        if k is not None and k >= 2 and k not in definitions:
            definitions[k] = rel
    return definitions


def is_maximal_class(pres):
    n = pres.rank
    exps = [t.order_exp() for t in lower_central_series(PcGroup(pres).whole())]
    return exps == [n] + list(range(n - 2, -1, -1))


def central_extensions(pres):
    """Consistent rank m+1 presentations extending ``pres`` by a central a_{m+1} of order p."""
    p, m = pres.prime, pres.rank
    relations = _relations(m)
    column = {rel: n for n, rel in enumerate(relations)}
    rows = [[delta.get(rel, 0) % p for rel in relations] for _, delta in layer_equations(pres)]
    for rel in _definitions(pres, relations).values():
        row = [0] * len(relations)
        row[column[rel]] = 1
        rows.append(row)

    extensions = []
    for values in solve_affine(rows, [0] * len(rows), len(relations), p):
        first = next((v for v in values if v), 0)
        if first != 1:
            continue
        powers, comms = {}, {}
        for rel, v in zip(relations, values):
            tail = _tail(pres, rel) + (v,)
            if not any(tail):
                continue
            if rel[0] == "pow":
                powers[rel[1] + 1] = tail
            else:
                comms[(rel[1] + 1, rel[2] + 1)] = tail
        extensions.append(PcPresentation(p, m + 1, powers, comms))
    return extensions


def maximal_class_descendants(p, rank, budget_seconds=None, progress=False):
    """Class representatives of the maximal-class groups of order p^2, ..., p^rank.

    Returns one list of DescendantClass per order, starting with the
    elementary abelian group of order p^2.
    """
    if rank < 2:
        raise DomainError("maximal class needs order at least p^2")
    deadline = time.time() + budget_seconds if budget_seconds else None
    start = PcPresentation(p, 2, name=f"mc{p}_2_1")
    layers = [[DescendantClass(start, fingerprint(PcGroup(start)))]]

    for m in range(2, rank):
        candidates = [c for q in layers[-1] for c in central_extensions(q.presentation)]
        classes = []
        for n, pres in enumerate(tqdm(candidates, desc=f"order {p}^{m + 1}", unit="ext", disable=not progress)):
            remaining = None
            if deadline:
                remaining = deadline - time.time()
                if remaining <= 0:
                    raise BudgetExceededError(
                        "descendant search stopped: time budget exhausted",
                        progress={"order_exp": m + 1, "candidates_done": n,
                                  "candidates_total": len(candidates), "classes": len(classes)},
                    )
            if not is_maximal_class(pres):
                continue
            fp = fingerprint(PcGroup(pres))
            if any(c.fingerprint == fp and is_isomorphic(c.presentation, pres, budget_seconds=remaining)[0]
                   for c in classes):
                continue
            named = PcPresentation(p, m + 1, pres.power_tails, pres.commutator_tails,
                                   name=f"mc{p}_{m + 1}_{len(classes) + 1}")
            classes.append(DescendantClass(named, fp))
        logger.info("order %d^%d: %d extensions, %d maximal-class groups", p, m + 1, len(candidates), len(classes))
        layers.append(classes)
    return layers
