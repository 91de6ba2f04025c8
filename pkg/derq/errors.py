"""Exception hierarchy shared by every derq module.

The CLI maps these onto exit codes; library code raises them and never
prints.
"""


class DerqError(Exception):
    """Base class for all errors raised by derq."""

    exit_code = 3


class InputError(DerqError):
    """Malformed input: bad files, wrong ranks, foreign elements."""


class PresentationParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SupportViolationError(InputError):
    """A stored tail mentions generators it is not allowed to."""


class InconsistentPresentationError(InputError):
    """A presentation failed its consistency tests and defines no group of the stated order."""

    def __init__(self, message, violations=()):
        self.violations = list(violations)
        super().__init__(message)


class RankMismatchError(InputError):
    pass


class DegreeMismatchError(InputError):
    pass


class MembershipError(InputError):
    """An element was expected to lie in a given group but does not."""


class PreconditionError(DerqError):
    """An operation was called outside its documented preconditions."""

    def __init__(self, message, reason=None):
        self.reason = reason
        super().__init__(message)


class DomainError(DerqError):
    """A formula was evaluated outside the range it is asserted for."""


class CollectionLimitError(DerqError):
    """The collector exceeded its step cap; the presentation is inconsistent."""


class BudgetExceededError(DerqError):
    """A search ran out of wall-clock time or nodes.

    ``progress`` carries whatever was finished before the breach so callers
    can report partial results.
    """

    def __init__(self, message, progress=None):
        self.progress = progress or {}
        super().__init__(message)


class ClassificationError(DerqError):
    """Scheme orbits and the enumerated presentations disagree."""
