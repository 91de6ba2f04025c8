from .catalogs import Catalogs
from .permutations import Permutations
from .presentations import Presentations
from .scans import Scans

__all__ = ["Catalogs", "Permutations", "Presentations", "Scans"]
