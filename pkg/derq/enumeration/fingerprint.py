"""Isomorphism invariants of pc groups, used to split candidates into blocks."""
import logging
from collections import Counter
from dataclasses import dataclass

from ..engine import abelian_invariants
from ..pcgroup.presentation import leading_index
from ..series import derived_series, lower_central_series

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fingerprint:
    abelian_invariants: tuple
    derived_exps: tuple
    lcs_exps: tuple
    order_histogram: tuple
    omega1_center_exp: int

    def to_dict(self):
        return {
            "abelian_invariants": list(self.abelian_invariants),
            "derived_exps": list(self.derived_exps),
            "lcs_exps": list(self.lcs_exps),
            "order_histogram": {str(order): count for order, count in self.order_histogram},
            "omega1_center_exp": self.omega1_center_exp,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            abelian_invariants=tuple(data["abelian_invariants"]),
            derived_exps=tuple(data["derived_exps"]),
            lcs_exps=tuple(data["lcs_exps"]),
            order_histogram=tuple(sorted((int(k), v) for k, v in data["order_histogram"].items())),
            omega1_center_exp=data["omega1_center_exp"],
        )


def _element_profile(group):
    """(order histogram, number of central elements of order dividing p)."""
    p = group.prime
    gens = group.generators()
    histogram = Counter()
    omega = 0
    for g in group.elements():
        order = 1
        h = g
        while leading_index(h) is not None:
            h = group.power(h, p)
            order *= p
        histogram[order] += 1
        if order <= p and all(leading_index(group.commutator(g, x)) is None for x in gens):
            omega += 1
    return tuple(sorted(histogram.items())), omega


def fingerprint(group):
    """Fingerprint of a PcGroup. Enumerates every element once."""
    whole = group.whole()
    histogram, omega = _element_profile(group)
    omega_exp = 0
    while omega > 1:
        omega //= group.prime
        omega_exp += 1
    fp = Fingerprint(
        abelian_invariants=tuple(abelian_invariants(whole)),
        derived_exps=tuple(t.order_exp() for t in derived_series(whole)),
        lcs_exps=tuple(t.order_exp() for t in lower_central_series(whole)),
        order_histogram=histogram,
        omega1_center_exp=omega_exp,
    )
    logger.debug("fingerprint of %r: %s", group, fp)
    return fp
