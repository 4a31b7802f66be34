"""Exception hierarchy shared across the package.

Everything user-facing derives from DomainError so the CLI can map the whole
family to a single exit code.
"""


class DomainError(Exception):
    """A precondition or domain restriction was violated."""


class EmptyOperandError(DomainError):
    """The empty set was passed where sumset arithmetic forbids it."""


class CapacityError(DomainError):
    """An element or sweep parameter exceeds the configured bound."""


class BaseMismatchError(DomainError):
    """Two lunar numbers with different bases were combined."""


class BudgetError(DomainError):
    """A brute-force enumeration would exceed its configured budget."""


class PreconditionError(DomainError):
    """Generic precondition failure (bad roles, non-divisor input, ...)."""


class ParseError(DomainError):
    """Malformed textual input; the message points at the offending spot."""
