"""Exception types shared across the package."""


class DomDelayError(Exception):
    """Base class for package-specific errors."""


class GraphFormatError(DomDelayError, ValueError):
    """Malformed graph or formula input text."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotInClassError(DomDelayError, ValueError):
    """Input graph violates the graph-class contract of an operation."""


class DisconnectedGraphError(NotInClassError):
    """Enumeration entry points require connected input graphs."""


class NotTriviallyPerfectError(NotInClassError):
    """No tree order exists; carries an induced P4 or C4 witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SizeLimitError(DomDelayError, ValueError):
    """Instance exceeds the configured size limit of an exponential oracle."""


class BudgetExceededError(DomDelayError, RuntimeError):
    """Exact search exceeded its node budget."""


class MalformedInstanceError(DomDelayError, ValueError):
    """Extension-problem instance fields do not satisfy their contracts."""


class DegenerateFormulaError(DomDelayError, ValueError):
    """3-CNF formula violates the non-degeneracy requirements."""
