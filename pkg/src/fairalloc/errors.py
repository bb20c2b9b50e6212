"""Typed errors raised on domain violations.

Every arithmetic precondition that user data can break maps to its own
exception class, so callers (and the CLI) can report the violated rule by
name instead of guessing from a message string.
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for violations of a metric's or operation's domain."""

    @property
    def name(self) -> str:
        """Bare error name, e.g. ``ZeroElement`` for ``ZeroElementError``."""
        return type(self).__name__.removesuffix("Error")


class ZeroSumError(DomainError):
    """Vector sums to zero where a share-based metric needs a positive total."""


class ZeroMeanError(DomainError):
    """Vector mean is zero where a mean-relative metric is undefined."""


class ZeroElementError(DomainError):
    """A zero element appears where strictly positive values are required."""


class ZeroInputError(DomainError):
    """An agent with zero input makes an input-relative ratio undefined."""


class ZeroBottomShareError(DomainError):
    """Bottom-40% share is zero, so the top/bottom ratio diverges."""


class DegeneratePopulationError(DomainError):
    """Population too small for the requested metric (e.g. n = 1)."""


class WeightMismatchError(DomainError):
    """Weight vector length does not match the utility vector."""


class OffFrontierError(DomainError):
    """Shares do not exhaust the divisible total."""


class UnsupportedPopulationError(DomainError):
    """Continuous optimization supports two agents only."""


class CombinatorialBlowupError(DomainError):
    """Discrete enumeration would exceed the configured cap."""


class NonFiniteScoreError(DomainError):
    """A NaN or infinite score cannot be ranked."""


class AllZeroWeightsError(DomainError):
    """Rank aggregation needs at least one positive principle weight."""


class ScoringError(DomainError):
    """A domain error raised while scoring one candidate under one principle.

    Wraps the underlying :class:`DomainError` and remembers which principle
    and candidate triggered it.
    """

    def __init__(self, principle: str, candidate: str, cause: DomainError):
        self.principle = principle
        self.candidate = candidate
        self.cause = cause
        super().__init__(
            f"principle '{principle}' on candidate '{candidate}': "
            f"{cause.name}: {cause}"
        )


class ConfigError(Exception):
    """Invalid problem configuration; message carries the offending path."""
