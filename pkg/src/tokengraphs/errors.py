"""Exception types shared by all tokengraphs modules."""


class TokenGraphError(Exception):
    """Base class for all library-specific errors."""


class GraphTooLargeError(TokenGraphError):
    """A construction or solver guard was exceeded.

    Guards exist so accidental exponential blowups fail fast; pass
    ``force=True`` to the offending call to override.
    """


class DisconnectedGraphError(TokenGraphError):
    """A distance-based operation was called on a disconnected graph."""


class PropertyViolationError(TokenGraphError):
    """A structural property that must hold was violated.

    Signals either a bug in a construction or a genuine counterexample
    to a theorem the library relies on.
    """


class FormulaInconsistencyError(TokenGraphError):
    """A closed-form formula produced a non-integral or impossible value."""
