"""Counting maximal-class groups of order p^6 with two small derived quotients."""
import logging
import random
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional

from sympy import isprime

from ..config import DEFAULT_SEED
from ..errors import DomainError, InputError
from ..pcgroup.group import PcGroup
from .catalog import EnumerationOptions, enumerate_maxclass_p6
from .isomorphism import is_isomorphic, verify_witness
from .scheme import MaximalClassScheme

logger = logging.getLogger(__name__)


def count_formula(p):
    """p + 4 + gcd(4, p-1) + gcd(5, p-1) + gcd(6, p-1), asserted for p >= 5."""
    if not isprime(p):
        raise InputError(f"{p} is not a prime")
    if p < 5:
        raise DomainError("the count is only asserted for p >= 5")
    return p + 4 + gcd(4, p - 1) + gcd(5, p - 1) + gcd(6, p - 1)


def expected_two_small(p):
    # no 3-group has two small derived quotients
    return 0 if p == 3 else count_formula(p)


@dataclass
class CensusReport:
    p: int
    expected: int
    total: int
    two_small: int
    metabelian: int
    checks: Dict[str, str] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)
    entries: Optional[list] = None

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {
            "p": self.p,
            "expected_two_small": self.expected,
            "two_small": self.two_small,
            "metabelian": self.metabelian,
            "total": self.total,
            "checks": dict(sorted(self.checks.items())),
            "failures": list(self.failures),
            "passed": self.passed,
        }

    def summary_lines(self):
        lines = [
            f"p={self.p}: {self.total} maximal-class groups of order p^6",
            f"{self.two_small} two-small classes (expected {self.expected})",
            f"{self.metabelian} metabelian classes",
        ]
        for name, status in sorted(self.checks.items()):
            lines.append(f"  {'✅' if status == 'pass' else '❌'} {name}")
        return lines


def _two_small_shape(entry):
    report = entry.report
    return (
        report.order_exp == 6
        and report.derived_exps[2] == 1
        and report.nilpotency_class == 5
        and report.chain_classes.get(0) == "ch2"
        and report.chain_classes.get(1) == "ch1"
        and report.checks.get("degree_of_commutativity_zero") == "pass"
    )


def _spot_check(entries, samples, seed, two_step):
    """Names of sampled classes whose re-presentation is not matched by a witness."""
    if not entries:
        return []
    rng = random.Random(seed)
    bad = []
    for entry in rng.sample(entries, min(samples, len(entries))):
        pres = entry.presentation
        scheme = MaximalClassScheme(pres.prime, two_step=two_step)
        keys = sorted(scheme.orbit(PcGroup(pres)))
        other = scheme.presentation(rng.choice(keys), name=f"{entry.name}_rebased")
        found, witness = is_isomorphic(pres, other)
        if not (found and verify_witness(pres, other, witness)):
            bad.append(entry.name)
    return bad


def verify_theorem_main(p, options=None, keep_entries=False, samples=0, seed=DEFAULT_SEED):
    """Enumerate, scan every class and compare the two-small count with the formula.

    ``samples`` classes, drawn with ``seed``, are re-presented on another
    generating pair and matched back by an isomorphism witness.
    """
    expected = expected_two_small(p)
    options = options or EnumerationOptions()
    entries = enumerate_maxclass_p6(p, options)
    two_small = [e for e in entries if e.report.two_small]

    failures = []
    checks = {}

    def record(name, bad):
        checks[name] = "fail" if bad else "pass"
        failures.extend(f"{name}: {e}" for e in bad)

    record("two_small_count", [] if len(two_small) == expected else [f"{len(two_small)} != {expected}"])
    record("two_small_shape", [e.name for e in two_small if not _two_small_shape(e)])
    record("two_small_iff_non_metabelian", [
        e.name for e in entries if e.report.two_small == e.report.metabelian
    ])
    record("mann_at_most_two", [e.name for e in entries if len(e.report.small_ds) > 2])
    record("theorem2_odd", [
        e.name for e in entries if e.report.checks.get("theorem2_odd", "pass") != "pass"
    ])
    record("scan_checks", [
        f"{e.name} ({', '.join(e.report.failed_checks())})" for e in entries if e.report.failed_checks()
    ])
    if samples:
        record("iso_spot_check", _spot_check(entries, samples, seed, options.two_step))

    report = CensusReport(
        p=p,
        expected=expected,
        total=len(entries),
        two_small=len(two_small),
        metabelian=sum(e.report.metabelian for e in entries),
        checks=checks,
        failures=failures,
        entries=entries if keep_entries else None,
    )
    logger.info("census p=%d: %s", p, "pass" if report.passed else "fail")
    return report
