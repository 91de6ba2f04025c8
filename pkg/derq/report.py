import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional


@dataclass
class SeriesReport:
    """Series orders, small derived quotients and named checks of one group."""

    p: Optional[int]
    order_exp: int
    derived_exps: List[int]
    lcs_exps: List[int]
    small_ds: List[int] = field(default_factory=list)
    chain_classes: Dict[int, str] = field(default_factory=dict)
    quotient_exps: Dict[int, int] = field(default_factory=dict)
    nilpotency_class: int = 0
    metabelian: bool = True
    checks: Dict[str, str] = field(default_factory=dict)

    @property
    def two_small(self):
        return len(self.small_ds) == 2

    def failed_checks(self):
        return sorted(name for name, status in self.checks.items() if status != "pass")

    def to_dict(self):
        return {
            "p": self.p,
            "order_exp": self.order_exp,
            "derived_exps": list(self.derived_exps),
            "lcs_exps": list(self.lcs_exps),
            "small_ds": list(self.small_ds),
            "chain_classes": {str(d): c for d, c in sorted(self.chain_classes.items())},
            "quotient_exps": {str(d): q for d, q in sorted(self.quotient_exps.items())},
            "class": self.nilpotency_class,
            "metabelian": self.metabelian,
            "checks": dict(sorted(self.checks.items())),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            p=data["p"],
            order_exp=data["order_exp"],
            derived_exps=list(data["derived_exps"]),
            lcs_exps=list(data["lcs_exps"]),
            small_ds=list(data["small_ds"]),
            chain_classes={int(d): c for d, c in data.get("chain_classes", {}).items()},
            quotient_exps={int(d): q for d, q in data.get("quotient_exps", {}).items()},
            nilpotency_class=data["class"],
            metabelian=data["metabelian"],
            checks=dict(data.get("checks", {})),
        )

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def summary_lines(self):
        lines = [
            f"order: p^{self.order_exp} (p={self.p})",
            f"derived series exponents: {self.derived_exps}",
            f"lower central series exponents: {self.lcs_exps}",
            f"nilpotency class: {self.nilpotency_class}",
            f"metabelian: {'yes' if self.metabelian else 'no'}",
            f"small derived quotients: {self.small_ds or 'none'}",
        ]
        for d in self.small_ds:
            lines.append(
                f"  d={d}: {self.chain_classes.get(d, '?')}, "
                f"|G^({d})/[G^({d}),G]| = p^{self.quotient_exps.get(d, '?')}"
            )
        for name, status in sorted(self.checks.items()):
            lines.append(f"  {'✅' if status == 'pass' else '❌'} {name}")
        return lines
