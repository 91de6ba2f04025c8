from ..enumeration import (
    EnumerationOptions,
    count_formula,
    enumerate_maxclass_p6,
    is_isomorphic,
    load_catalog,
    save_catalog,
    search_small,
    verify_theorem_main,
)


class Catalogs:
    def __init__(self, workbench):
        self.workbench = workbench

    def _options(self):
        return EnumerationOptions.from_config(self.workbench.config, progress=self.workbench.progress)

    def enumerate(self, p):
        """Maximal-class groups of order p^6, one entry per class."""
        return enumerate_maxclass_p6(p, self._options())

    def verify(self, p, samples=0):
        """Census report; ``samples`` classes get an isomorphism spot check."""
        return verify_theorem_main(p, self._options(), samples=samples, seed=self.workbench.config.seed)

    def count(self, p):
        return count_formula(p)

    def isomorphic(self, A, B):
        config = self.workbench.config
        for pres in (A, B):
            self.workbench.presentations.require_consistent(pres)
        return is_isomorphic(A, B, budget_seconds=config.budget_seconds)

    def save(self, entries, path):
        return save_catalog(entries, path)

    def load(self, path):
        return load_catalog(path)

    def search(self, entries, d_min=2):
        return search_small(entries, d_min)
