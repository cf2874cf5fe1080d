"""Error types shared across the package."""


class FracPiaError(Exception):
    """Base class for all errors raised by this package."""


class CapacityError(FracPiaError):
    """A polynomial grew past the configured term cap."""


class PoleError(FracPiaError, ZeroDivisionError):
    """The gamma function was evaluated at a non-positive integer."""


class DivergenceError(FracPiaError):
    """A numerical integration produced a non-finite state.

    Carries the index of the offending step in ``step_index``.
    """

    def __init__(self, message, step_index=None):
        super().__init__(message)
        self.step_index = step_index


class ProblemError(FracPiaError):
    """A problem file failed to parse or validate."""
