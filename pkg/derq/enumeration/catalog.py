"""Catalogs of maximal-class groups of order p^6."""
import json
import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from sympy import isprime

from ..config import DEFAULT_BUDGET_SECONDS, DEFAULT_JOBS, DEFAULT_MAX_NODES, DEFAULT_MAX_PRIME
from ..errors import ClassificationError, DomainError, InputError
from ..pcgroup import format_presentation, parse_presentation
from ..pcgroup.group import PcGroup
from ..report import SeriesReport
from ..series import small_quotient_scan
from .classify import classify_keys, confirm_distinct
from .fingerprint import Fingerprint, fingerprint
from .scheme import MaximalClassScheme
from .search import search_scheme

logger = logging.getLogger(__name__)

MAXIMAL_CLASS_LCS = [6, 4, 3, 2, 1, 0]


@dataclass
class CatalogEntry:
    presentation: object
    fingerprint: Fingerprint
    report: SeriesReport
    key: tuple = ()
    orbit_size: int = 0

    @property
    def name(self):
        return self.presentation.name

    @property
    def flags(self):
        derived = self.report.derived_exps
        return {
            "metabelian": self.report.metabelian,
            "two_small": self.report.two_small,
            "class": self.report.nilpotency_class,
            "second_derived_exponent": derived[2] if len(derived) > 2 else 0,
        }

    def to_dict(self):
        return {
            "name": self.name,
            "presentation": format_presentation(self.presentation),
            "fingerprint": self.fingerprint.to_dict(),
            "flags": self.flags,
            "report": self.report.to_dict(),
            "scheme_key": list(self.key),
            "orbit_size": self.orbit_size,
        }

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(
                presentation=parse_presentation(data["presentation"], name=data.get("name")),
                fingerprint=Fingerprint.from_dict(data["fingerprint"]),
                report=SeriesReport.from_dict(data["report"]),
                key=tuple(data.get("scheme_key", ())),
                orbit_size=data.get("orbit_size", 0),
            )
        except (KeyError, TypeError, AttributeError) as e:
            raise InputError(f"malformed catalog entry: {e}") from e


@dataclass
class EnumerationOptions:
    jobs: int = DEFAULT_JOBS
    max_nodes: int = DEFAULT_MAX_NODES
    budget_seconds: float = DEFAULT_BUDGET_SECONDS
    max_prime: int = DEFAULT_MAX_PRIME
    two_step: bool = True
    progress: bool = False

    @classmethod
    def from_config(cls, config, progress=False):
        return cls(
            jobs=config.jobs,
            max_nodes=config.max_nodes,
            budget_seconds=config.budget_seconds,
            max_prime=config.max_prime,
            progress=progress,
        )


def _check_prime(p, max_prime):
    if not isprime(p):
        raise InputError(f"{p} is not a prime")
    if p == 2:
        raise DomainError("the maximal-class scheme is set up for odd primes")
    if p > max_prime:
        raise DomainError(f"p={p} exceeds the configured maximum {max_prime}")


def catalog_entry(pres, key=(), orbit_size=0):
    group = PcGroup(pres)
    report = small_quotient_scan(group)
    if report.lcs_exps != MAXIMAL_CLASS_LCS:
        raise ClassificationError(f"{pres!r} has lower central profile {report.lcs_exps}")
    return CatalogEntry(pres, fingerprint(group), report, tuple(key), orbit_size)


def enumerate_maxclass_p6(p, options=None):
    """One CatalogEntry per isomorphism class of maximal-class groups of order p^6."""
    options = options or EnumerationOptions()
    _check_prime(p, options.max_prime)
    started = time.time()
    deadline = started + options.budget_seconds
    scheme = MaximalClassScheme(p, two_step=options.two_step)
    keys = search_scheme(
        scheme,
        jobs=options.jobs,
        max_nodes=options.max_nodes,
        progress=options.progress,
        deadline=deadline,
    )
    classes = classify_keys(scheme, keys, deadline=deadline, progress=options.progress)
    entries = [catalog_entry(c.presentation, c.key, c.orbit_size) for c in classes]
    confirm_distinct(entries, deadline=deadline, progress=options.progress)
    logger.info(
        "p=%d: %d classes (%d two-small) in %.1fs",
        p, len(entries), sum(e.report.two_small for e in entries), time.time() - started,
    )
    return entries


def catalog_digest(entries):
    """Entry counts per flag combination."""
    counts = Counter()
    for entry in entries:
        flags = entry.flags
        counts[
            f"class={flags['class']} metabelian={'yes' if flags['metabelian'] else 'no'} "
            f"two_small={'yes' if flags['two_small'] else 'no'}"
        ] += 1
    return {"total": len(entries), "by_flags": dict(sorted(counts.items()))}


def digest_path(path):
    path = Path(path)
    return path.with_name(path.stem + ".digest.json")


def save_catalog(entries, path):
    """Write the catalog JSON and its digest next to it."""
    path = Path(path)
    path.write_text(json.dumps([e.to_dict() for e in entries], indent=2, sort_keys=True) + "\n")
    digest_path(path).write_text(json.dumps(catalog_digest(entries), indent=2, sort_keys=True) + "\n")
    return path


def load_catalog(path):
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as e:
        raise InputError(f"cannot read catalog {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(data, list):
        raise InputError(f"{path} must contain a JSON array of entries")
    return [CatalogEntry.from_dict(item) for item in data]


@dataclass
class SearchHit:
    name: Optional[str]
    d: int
    quotient_exp: int
    chain_class: str = ""
    extra: dict = field(default_factory=dict)


def search_small(entries, d_min=2):
    """Small derived quotients at d >= d_min among catalog entries.

    Whether G^(2)/G^(3) can be small for odd p is open; hits are reported,
    never judged.
    """
    hits = []
    for entry in entries:
        report = entry.report
        for d in report.small_ds:
            if d >= d_min:
                hits.append(SearchHit(
                    entry.name, d, report.quotient_exps.get(d, 0), report.chain_classes.get(d, ""),
                    {"p": report.p, "order_exp": report.order_exp},
                ))
    logger.info("search for small quotients at d >= %d: %d hits in %d entries", d_min, len(hits), len(entries))
    return hits


__all__ = [
    "CatalogEntry",
    "EnumerationOptions",
    "SearchHit",
    "catalog_digest",
    "catalog_entry",
    "enumerate_maxclass_p6",
    "load_catalog",
    "save_catalog",
    "search_small",
]
