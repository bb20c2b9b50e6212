"""Statistical dispersion and economic concentration metrics.

All metrics are pure functions of a nonnegative :class:`ValueVector`.
Except for the standard deviation they are scale invariant, return zero on
constant vectors, and respect the Pigou-Dalton transfer principle (a
rich-to-poor transfer never increases them).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .core import ValueVector, mean
from .errors import (
    DegeneratePopulationError,
    ZeroBottomShareError,
    ZeroElementError,
    ZeroMeanError,
    ZeroSumError,
)

METRIC_KINDS = (
    "gini",
    "atkinson",
    "herfindahl",
    "hoover",
    "palma",
    "std_dev",
    "theil_t",
    "theil_l",
)

_METRIC_RE = re.compile(r"atkinson\((?P<eps>[^)]+)\)")


@dataclass(frozen=True)
class DispersionMetric:
    """A metric choice; ``epsilon`` is the Atkinson inequality aversion."""

    kind: str
    epsilon: float | None = None

    def __post_init__(self):
        if self.kind not in METRIC_KINDS:
            raise ValueError(f"unknown dispersion metric {self.kind!r}")
        if self.kind == "atkinson":
            if self.epsilon is None:
                raise ValueError("atkinson metric needs an epsilon parameter")
            if math.isnan(self.epsilon) or self.epsilon < 0.0:
                raise ValueError("atkinson epsilon must be >= 0")
        elif self.epsilon is not None:
            raise ValueError(f"{self.kind} metric takes no parameter")

    @classmethod
    def parse(cls, text: str) -> "DispersionMetric":
        """Parse a metric name such as ``gini`` or ``atkinson(0.5)``."""
        name = text.strip().lower()
        m = _METRIC_RE.fullmatch(name)
        if m:
            try:
                eps = float(m.group("eps"))
            except ValueError:
                raise ValueError(f"invalid atkinson parameter in {text!r}") from None
            return cls("atkinson", eps)
        return cls(name)

    def __str__(self) -> str:
        if self.kind == "atkinson":
            return f"atkinson({self.epsilon:g})"
        return self.kind


GINI = DispersionMetric("gini")
HERFINDAHL = DispersionMetric("herfindahl")
HOOVER = DispersionMetric("hoover")
PALMA = DispersionMetric("palma")
STD_DEV = DispersionMetric("std_dev")
THEIL_T = DispersionMetric("theil_t")
THEIL_L = DispersionMetric("theil_l")


def gini(v: ValueVector) -> float:
    """Gini coefficient: mean absolute pairwise difference over 2n*sum.

    Computed from the sorted vector in O(n log n); equals the O(n^2)
    pairwise-sum definition.
    """
    total = math.fsum(v.values)
    if total == 0.0:
        raise ZeroSumError("gini undefined for an all-zero vector")
    n = len(v)
    ordered = sorted(v.values)
    weighted = math.fsum((i + 1) * x for i, x in enumerate(ordered))
    return max(0.0, 2.0 * weighted / (n * total) - (n + 1) / n)


def _power_mean(values: tuple[float, ...], p: float) -> float:
    # Normalize by max (p > 0) or min (p < 0) so x**p cannot overflow.
    if p > 0:
        ref = max(values)
        if ref == 0.0:
            return 0.0
    else:
        ref = min(values)
    acc = math.fsum((x / ref) ** p for x in values) / len(values)
    return ref * acc ** (1.0 / p)


def atkinson(v: ValueVector, epsilon: float) -> float:
    """Atkinson index: one minus the ratio of a generalized mean to the mean.

    epsilon = 0 gives 0 everywhere, epsilon = 1 uses the geometric mean,
    epsilon = inf uses the minimum; other epsilon use the power mean of
    order 1 - epsilon. For epsilon >= 1 all elements must be positive.
    """
    if math.isnan(epsilon) or epsilon < 0.0:
        raise ValueError("atkinson epsilon must be >= 0")
    m = mean(v)
    if m == 0.0:
        raise ZeroMeanError("atkinson undefined for a zero-mean vector")
    if epsilon == 0.0:
        return 0.0
    if math.isinf(epsilon):
        return 1.0 - min(v.values) / m
    if epsilon >= 1.0 and any(x == 0.0 for x in v.values):
        raise ZeroElementError(
            f"atkinson with epsilon={epsilon:g} needs strictly positive values"
        )
    if epsilon == 1.0:
        log_gm = math.fsum(math.log(x) for x in v.values) / len(v)
        return 1.0 - math.exp(log_gm) / m
    return max(0.0, 1.0 - _power_mean(v.values, 1.0 - epsilon) / m)


def herfindahl_normalized(v: ValueVector) -> float:
    """Normalized Herfindahl index: (HH - 1/n) / (1 - 1/n), HH = sum of share^2."""
    n = len(v)
    if n < 2:
        raise DegeneratePopulationError("normalized Herfindahl needs n >= 2")
    total = math.fsum(v.values)
    if total == 0.0:
        raise ZeroSumError("Herfindahl undefined for an all-zero vector")
    hh = math.fsum((x / total) ** 2 for x in v.values)
    return max(0.0, (hh - 1.0 / n) / (1.0 - 1.0 / n))


def hoover(v: ValueVector) -> float:
    """Hoover index: half the relative mean absolute deviation.

    Equals the share of the total that would have to move to reach equality.
    """
    total = math.fsum(v.values)
    if total == 0.0:
        raise ZeroSumError("Hoover undefined for an all-zero vector")
    m = total / len(v)
    return 0.5 * math.fsum(abs(x - m) for x in v.values) / total


def _cumulative_share(ordered: list[float], total: float, fraction: float) -> float:
    # Share of the total held by the poorest `fraction` of the population,
    # linearly interpolating the Lorenz polyline between rank points.
    pos = fraction * len(ordered)
    k = int(math.floor(pos))
    if k >= len(ordered):
        return 1.0
    held = math.fsum(ordered[:k]) + (pos - k) * ordered[k]
    return held / total


def palma_shares(v: ValueVector) -> tuple[float, float]:
    """(bottom-40% share, top-10% share) of the total, sorted ascending."""
    total = math.fsum(v.values)
    if total == 0.0:
        raise ZeroSumError("Palma shares undefined for an all-zero vector")
    ordered = sorted(v.values)
    bottom = _cumulative_share(ordered, total, 0.40)
    top = 1.0 - _cumulative_share(ordered, total, 0.90)
    return bottom, top


def palma(v: ValueVector) -> float:
    """Palma ratio: share of the top 10% over share of the bottom 40%."""
    bottom, top = palma_shares(v)
    if bottom == 0.0:
        raise ZeroBottomShareError("bottom 40% holds nothing; Palma diverges")
    return top / bottom


def std_dev(v: ValueVector) -> float:
    """Population standard deviation (square root of the biased variance)."""
    m = mean(v)
    return math.sqrt(math.fsum((x - m) ** 2 for x in v.values) / len(v))


def theil_t(v: ValueVector) -> float:
    """Theil T index: (1/n) * sum (x/mean) ln(x/mean); 0 ln 0 taken as 0."""
    m = mean(v)
    if m == 0.0:
        raise ZeroMeanError("Theil T undefined for a zero-mean vector")
    acc = math.fsum(
        (x / m) * math.log(x / m) for x in v.values if x > 0.0
    )
    return max(0.0, acc / len(v))


def theil_l(v: ValueVector) -> float:
    """Theil L index (mean log deviation): (1/n) * sum ln(mean/x)."""
    if any(x == 0.0 for x in v.values):
        raise ZeroElementError("Theil L diverges on zero elements")
    m = mean(v)
    acc = math.fsum(math.log(m / x) for x in v.values)
    return max(0.0, acc / len(v))


def dispersion(metric: DispersionMetric, v: ValueVector) -> float:
    """Evaluate the metric selected by ``metric.kind`` on ``v``."""
    if metric.kind == "atkinson":
        return atkinson(v, metric.epsilon)
    return _FUNCTIONS[metric.kind](v)


_FUNCTIONS = {
    "gini": gini,
    "herfindahl": herfindahl_normalized,
    "hoover": hoover,
    "palma": palma,
    "std_dev": std_dev,
    "theil_t": theil_t,
    "theil_l": theil_l,
}
