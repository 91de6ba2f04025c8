from .config import load_config
from .library import GroupLibrary
from .resources.catalogs import Catalogs
from .resources.permutations import Permutations
from .resources.presentations import Presentations
from .resources.scans import Scans


class Workbench:
    """Entry point wiring run configuration into every derq module."""

    def __init__(self, config=None, progress=False, **overrides):
        self.config = config or load_config(**overrides)
        self.progress = progress
        self.library = GroupLibrary()

        self.presentations = Presentations(self)
        self.permutations = Permutations(self)
        self.scans = Scans(self)
        self.catalogs = Catalogs(self)

    def pc(self, pres):
        """PcGroup engine for a presentation, a file path or a library name."""
        if isinstance(pres, str):
            if pres in self.library.entries:
                pres = self.library.get(pres, self.config.prime)
            else:
                pres = self.presentations.load(pres)
        return self.presentations.group(pres)

    def sylow2(self, m):
        return self.permutations.sylow2(m)

    def scan(self, group):
        return self.scans.run(group)

    def enumerate(self, p):
        return self.catalogs.enumerate(p)

    def verify(self, p, samples=0):
        return self.catalogs.verify(p, samples)
