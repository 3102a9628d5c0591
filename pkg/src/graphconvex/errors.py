"""Exception types shared across the package."""


class GraphConvexError(Exception):
    """Base class for all errors raised by graphconvex."""


class ParseError(GraphConvexError, ValueError):
    """Malformed input text. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UsageError(GraphConvexError, ValueError):
    """An argument violates an operation's precondition."""


class InfeasibleError(GraphConvexError, RuntimeError):
    """An exact solver was asked to run above its configured size cap."""

    def __init__(self, message: str, cap: int | None = None):
        self.cap = cap
        super().__init__(message)
