"""Shared exception types.

All inherit from ValueError so callers that only care about "bad input"
can catch one base class; the subclasses exist so tests and the CLI can
tell geometry problems apart from state-precondition problems.
"""


class DomainError(ValueError):
    """A geometric or parameter precondition fails (support, margins, ranges)."""


class SpaceMismatchError(ValueError):
    """Operands live on different grids or spaces, or shapes disagree."""


class PreconditionError(ValueError):
    """A state-level precondition fails (e.g. input not a core-zone state)."""
