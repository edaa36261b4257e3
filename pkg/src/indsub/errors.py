"""Exception hierarchy shared by every module; the CLI maps each class to an exit code."""


class IndSubError(Exception):
    """Base class for all package errors."""


class GraphFormatError(IndSubError, ValueError):
    """Edge-list text that cannot be parsed into a valid graph."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParameterError(IndSubError, ValueError):
    """A parameter is outside the range an operation accepts."""


class BudgetExceeded(IndSubError, RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""


class GraphKindMismatch(IndSubError, TypeError):
    """A directed property was applied to an undirected graph, or vice versa."""
