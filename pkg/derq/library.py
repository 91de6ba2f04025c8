"""Named example presentations bundled with derq."""
import logging
from pathlib import Path

import yaml

from .errors import InputError
from .pcgroup import parse_presentation

logger = logging.getLogger(__name__)

LIBRARY_FILE = Path(__file__).parent / "data" / "library.yaml"


class GroupLibrary:
    def __init__(self, path=LIBRARY_FILE):
        self.path = Path(path)
        self._entries = None

    @property
    def entries(self):
        if self._entries is None:
            with open(self.path, "r") as f:
                self._entries = yaml.safe_load(f) or {}
        return self._entries

    def names(self):
        return sorted(self.entries)

    def describe(self, name):
        return self._entry(name).get("description", "")

    def _entry(self, name):
        if name not in self.entries:
            raise InputError(f"unknown group {name!r}; choose from {', '.join(self.names())}")
        return self.entries[name]

    def get(self, name, p=None):
        """The named presentation at prime p (pinned entries ignore p if it agrees)."""
        entry = self._entry(name)
        pinned = entry.get("p")
        if pinned is not None:
            if p is not None and p != pinned:
                raise InputError(f"{name} is only defined for p={pinned}")
            p = pinned
        if p is None:
            raise InputError(f"{name} needs a prime")
        if entry.get("primes") == "odd" and p == 2:
            raise InputError(f"{name} is only defined for odd p")
        label = name if pinned is not None else f"{name}{p}"
        return parse_presentation(f"p {p}\n" + entry["text"], name=label)
