"""Exception types shared across the package."""


class UsageError(ValueError):
    """A precondition on user-supplied input was violated."""


class ContextMismatchError(ValueError):
    """Operands live in different polynomial rings."""


class ResourceLimitError(RuntimeError):
    """A configured resource cap (pair queue, block size, wall clock) was hit."""

    def __init__(self, message, **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics


class DimensionError(RuntimeError):
    """A quotient expected to be finite dimensional is not."""


class EquivarianceError(RuntimeError):
    """Symmetric-group equivariance that a construction relies on failed."""
