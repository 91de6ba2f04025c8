from ..engine import GroupEngine
from ..pcgroup import PcPresentation
from ..pcgroup.group import PcGroup
from ..series import order_lower_bound, small_quotient_scan


class Scans:
    def __init__(self, workbench):
        self.workbench = workbench

    def run(self, group):
        """SeriesReport of a presentation or of any engine."""
        if isinstance(group, PcPresentation):
            group = PcGroup(group)
        if not isinstance(group, GroupEngine):
            group = self.workbench.permutations.group(group)
        return small_quotient_scan(group)

    def bound(self, d, variant="hall"):
        return order_lower_bound(d, variant)
