"""Exception types shared across the package."""

from __future__ import annotations


class InvalidPattern(ValueError):
    """Raised when a pattern is empty or otherwise unusable."""


class InvalidArguments(ValueError):
    """Raised when an operation receives out-of-range arguments."""


class OracleMismatch(RuntimeError):
    """Raised when cross-checked algorithms disagree on match offsets.

    Carries the seed that reproduces the failing trial.
    """

    def __init__(self, message: str, seed: int):
        super().__init__(message)
        self.seed = seed
