"""Split consistent scheme keys into isomorphism classes.

Keys are visited in increasing order. The first key not yet covered names
a new class; re-presenting its group on every admissible generating pair
yields all keys of that group at once, each with the pair as witness.
The resulting classes are then split into fingerprint blocks and every
pair inside a block goes through a witness search, which must fail.
"""
import logging
import time
from collections import defaultdict
from dataclasses import dataclass

from tqdm import tqdm

from ..errors import BudgetExceededError, ClassificationError
from ..pcgroup.group import PcGroup
from .isomorphism import is_isomorphic

logger = logging.getLogger(__name__)


@dataclass
class SchemeClass:
    key: tuple
    presentation: object
    orbit_size: int


def classify_keys(scheme, keys, deadline=None, progress=False):
    """One SchemeClass per isomorphism class, ordered by least key."""
    raw = set(keys)
    covered = set()
    classes = []
    bar = tqdm(total=len(raw), desc=f"classify p={scheme.prime}", unit="key", disable=not progress)
    for key in sorted(raw):
        if key in covered:
            continue
        if deadline and time.time() > deadline:
            bar.close()
            raise BudgetExceededError(
                "classification stopped: time budget exhausted",
                progress={"classes": len(classes), "keys_covered": len(covered), "keys_total": len(raw)},
            )
        name = f"maxclass{scheme.prime}_{len(classes) + 1}"
        pres = scheme.presentation(key, name=name)
        orbit = scheme.orbit(PcGroup(pres))
        if key not in orbit:
            raise ClassificationError(f"{name}: the defining pair does not reproduce its own key")
        stray = [k for k in orbit if k not in raw]
        if stray:
            raise ClassificationError(f"{name}: {len(stray)} re-presentations missing from the search")
        if any(k in covered for k in orbit):
            raise ClassificationError(f"{name}: orbit overlaps an earlier class")
        covered.update(orbit)
        classes.append(SchemeClass(key, pres, len(orbit)))
        bar.update(len(orbit))
        logger.debug("%s: orbit of %d keys", name, len(orbit))
    bar.close()
    logger.info("%r: %d keys fall into %d classes", scheme, len(raw), len(classes))
    return classes


def fingerprint_blocks(entries):
    """Entries grouped by fingerprint, in first-seen order."""
    blocks = defaultdict(list)
    for entry in entries:
        blocks[entry.fingerprint].append(entry)
    return list(blocks.values())


def confirm_distinct(entries, deadline=None, progress=False):
    """Witness search between every two entries sharing a fingerprint.

    Raises ClassificationError when a search succeeds. Returns the number
    of searches run.
    """
    all_blocks = fingerprint_blocks(entries)
    blocks = [b for b in all_blocks if len(b) > 1]
    pairs = [(a, b) for block in blocks for i, a in enumerate(block) for b in block[i + 1:]]
    for a, b in tqdm(pairs, desc="confirm distinct", unit="pair", disable=not progress):
        remaining = None
        if deadline:
            remaining = deadline - time.time()
            if remaining <= 0:
                raise BudgetExceededError(
                    "distinctness check stopped: time budget exhausted",
                    progress={"blocks": len(blocks), "pairs_total": len(pairs)},
                )
        found, witness = is_isomorphic(a.presentation, b.presentation, budget_seconds=remaining)
        if found:
            raise ClassificationError(
                f"{a.name} and {b.name} are isomorphic (images {list(witness.images)})"
            )
    logger.info("%d entries in %d fingerprint blocks, %d witness searches", len(entries), len(all_blocks), len(pairs))
    return len(pairs)
