"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """Raised when an edge-list input cannot be parsed.

    Carries the 1-based line number of the offending line when one exists.
    """

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class GuardError(RuntimeError):
    """Raised when an exact routine is asked to exceed its size guard.

    The exhaustive oracles are deliberately capped; callers that need larger
    instances should use the sampling estimators instead.
    """
