"""Shared error taxonomy.

The CLI maps these onto exit codes: format and domain errors are input
errors (exit 1), size refusals exit 2, internal-bug signals exit 3.
"""


class GraphFormatError(ValueError):
    """Malformed input text (graph6, multigraph listing, interval data)."""


class DomainError(ValueError):
    """Operation called outside its stated precondition."""


class SizeLimitError(RuntimeError):
    """Instance exceeds a documented size guard. Limits may be lowered, never raised."""


class InternalBugError(AssertionError):
    """A proven invariant failed at runtime. Always a bug, never an input error."""
