"""Population data model and the elementary statistics built on it.

A decision process maps each individual's input ``x_i`` (initial situation)
to an output ``y_i`` (allocated resource) and a utility ``u_i = f(y_i)``.
All three live in :class:`ValueVector`; one candidate allocation over one
population is an :class:`AllocationContext`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ZeroInputError


class ValueVector:
    """Immutable vector of nonnegative, finite per-individual values.

    Nonnegativity is enforced at construction because every downstream
    statistic (dispersion metrics, welfare functions) is defined on
    nonnegative values only.
    """

    __slots__ = ("values",)

    values: tuple[float, ...]

    def __init__(self, values: Iterable[float]):
        vals = tuple(float(v) for v in values)
        if not vals:
            raise ValueError("ValueVector needs at least one element")
        for v in vals:
            if not math.isfinite(v):
                raise ValueError(f"ValueVector element {v!r} is not finite")
            if v < 0.0:
                raise ValueError(f"ValueVector element {v!r} is negative")
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("ValueVector is immutable")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, ValueVector) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"ValueVector({list(self.values)!r})"


@dataclass(frozen=True)
class Agent:
    """One individual: opaque id, input x_i, and welfare weight alpha_i."""

    id: str
    input: float
    weight: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.input) or self.input < 0.0:
            raise ValueError(f"agent {self.id!r}: input must be finite and >= 0")
        if not math.isfinite(self.weight) or self.weight <= 0.0:
            raise ValueError(f"agent {self.id!r}: weight must be finite and > 0")


@dataclass(frozen=True)
class AllocationContext:
    """The (x, y, u) triple describing one allocation over one population."""

    inputs: ValueVector
    outputs: ValueVector
    utilities: ValueVector

    def __post_init__(self):
        n = len(self.inputs)
        if len(self.outputs) != n or len(self.utilities) != n:
            raise ValueError(
                "inputs, outputs and utilities must have identical length"
            )

    @property
    def size(self) -> int:
        return len(self.inputs)


def mean(v: ValueVector) -> float:
    """Arithmetic mean of the elements."""
    return math.fsum(v.values) / len(v)


def min_value(v: ValueVector) -> float:
    """Smallest element (the worst-off individual's value)."""
    return min(v.values)


def threshold_share(v: ValueVector, threshold: float) -> float:
    """Fraction of elements at or above ``threshold``.

    The comparison is inclusive: an element exactly at the threshold counts
    as sufficient.
    """
    if not math.isfinite(threshold):
        raise ValueError("threshold must be finite")
    return sum(1 for x in v.values if x >= threshold) / len(v)


def ratio_vector(y: ValueVector, x: ValueVector) -> ValueVector:
    """Element-wise y_i / x_i, the per-individual output/input ratio.

    Raises :class:`ZeroInputError` if any x_i is zero: the proportion of an
    output to a zero contribution is undefined.
    """
    if len(y) != len(x):
        raise ValueError("ratio_vector needs vectors of identical length")
    if any(xi == 0.0 for xi in x.values):
        raise ZeroInputError("ratio undefined for zero-input individuals")
    return ValueVector(yi / xi for yi, xi in zip(y.values, x.values))
