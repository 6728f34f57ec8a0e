"""Exception types shared across the package."""
from __future__ import annotations


class EngelError(Exception):
    """Base class for all package-specific errors."""


class ExpressionSyntaxError(EngelError):
    """Raised by the expression parser; carries the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ContextMismatch(EngelError):
    """Two extension scalars with incompatible square-root contexts were combined."""


class DegenerateGraph(EngelError):
    """The graph determinant vanishes identically; no tangential generator exists."""


class NotClassII(EngelError):
    """The four canonical fields fail to span: the manifold is not of Engel type."""


class ConsistencyError(EngelError):
    """An identity that must hold for every valid input failed: an internal bug."""


class DenominatorFloor(EngelError):
    """A numeric jet division hit a denominator below the configured magnitude floor."""
