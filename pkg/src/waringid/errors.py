"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class WaringError(Exception):
    """Base class for every error raised by this package."""


class InputError(WaringError, ValueError):
    """Malformed or out-of-contract input."""


class NumericalRangeError(WaringError, OverflowError):
    """A rational entry cannot be represented as a finite float."""


class CBNotSatisfied(WaringError):
    """A point set was expected to satisfy CB(i) but does not."""


class WrongRank(WaringError):
    """Decomposition length does not match the test's required length."""


class RankOutOfRange(WaringError):
    """Decomposition length lies outside the reshaped Kruskal range."""
