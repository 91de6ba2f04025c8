from ..errors import InconsistentPresentationError
from ..pcgroup import consistency_check, load_presentation
from ..pcgroup.group import PcGroup


class Presentations:
    def __init__(self, workbench):
        self.workbench = workbench

    def load(self, path):
        """Read a presentation file."""
        return load_presentation(path)

    def named(self, name, p=None):
        """A presentation from the bundled library."""
        return self.workbench.library.get(name, p)

    def check(self, pres):
        """Names of the failing consistency tests."""
        return consistency_check(pres)

    def require_consistent(self, pres):
        violations = consistency_check(pres)
        if violations:
            raise InconsistentPresentationError(
                f"{pres.name or 'presentation'} is inconsistent: {', '.join(violations)}", violations
            )
        return pres

    def group(self, pres):
        return PcGroup(self.require_consistent(pres))
