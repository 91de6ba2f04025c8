from .catalog import (
    CatalogEntry,
    EnumerationOptions,
    SearchHit,
    catalog_digest,
    catalog_entry,
    enumerate_maxclass_p6,
    load_catalog,
    save_catalog,
    search_small,
)
from .census import CensusReport, count_formula, verify_theorem_main
from .classify import confirm_distinct, fingerprint_blocks
from .descendants import DescendantClass, central_extensions, maximal_class_descendants
from .fingerprint import Fingerprint, fingerprint
from .isomorphism import (
    IsoWitness,
    compose_witness,
    direct_product,
    invert_witness,
    is_isomorphic,
    verify_witness,
)
from .scheme import MaximalClassScheme

__all__ = [
    "CatalogEntry",
    "CensusReport",
    "DescendantClass",
    "EnumerationOptions",
    "Fingerprint",
    "IsoWitness",
    "MaximalClassScheme",
    "SearchHit",
    "catalog_digest",
    "catalog_entry",
    "central_extensions",
    "confirm_distinct",
    "compose_witness",
    "count_formula",
    "direct_product",
    "enumerate_maxclass_p6",
    "fingerprint",
    "fingerprint_blocks",
    "invert_witness",
    "is_isomorphic",
    "load_catalog",
    "maximal_class_descendants",
    "save_catalog",
    "search_small",
    "verify_theorem_main",
    "verify_witness",
]
