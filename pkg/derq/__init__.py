from .client import Workbench
from .engine import GroupEngine, SubgroupHandle, abelian_invariants, frattini
from .enumeration import (
    CatalogEntry,
    IsoWitness,
    count_formula,
    enumerate_maxclass_p6,
    is_isomorphic,
    verify_theorem_main,
)
from .errors import (
    BudgetExceededError,
    DerqError,
    DomainError,
    InputError,
    PreconditionError,
)
from .pcgroup import PcPresentation, consistency_check, load_presentation, parse_presentation
from .pcgroup.group import PcGroup
from .permgroup import PermGroup, schreier_sims, sylow2_sym
from .report import SeriesReport
from .series import (
    chain_classify,
    derived_series,
    hall_check,
    lower_central_series,
    order_lower_bound,
    small_quotient_scan,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CatalogEntry",
    "DerqError",
    "DomainError",
    "GroupEngine",
    "InputError",
    "IsoWitness",
    "PcGroup",
    "PcPresentation",
    "PermGroup",
    "PreconditionError",
    "SeriesReport",
    "SubgroupHandle",
    "Workbench",
    "abelian_invariants",
    "chain_classify",
    "consistency_check",
    "count_formula",
    "derived_series",
    "enumerate_maxclass_p6",
    "frattini",
    "hall_check",
    "is_isomorphic",
    "load_presentation",
    "lower_central_series",
    "order_lower_bound",
    "parse_presentation",
    "schreier_sims",
    "small_quotient_scan",
    "sylow2_sym",
    "verify_theorem_main",
]
