"""Social welfare functions: scalar societal scores of an allocation.

Three families: resource-based (a dispersion metric applied to inputs,
negated so that larger is better), utility-based Bergson-Samuelson forms
(isoelastic and its Benthamite / Rawlsian / Bernoulli-Nash special cases),
and income-based capability forms (Sen, Foster).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import AllocationContext, ValueVector, mean
from .dispersion import DispersionMetric, dispersion, gini, theil_t
from .errors import WeightMismatchError, ZeroElementError

RHO_INF = math.inf

WELFARE_KINDS = (
    "isoelastic",
    "benthamite",
    "rawlsian",
    "bernoulli_nash",
    "sen",
    "foster",
    "leontief_dispersion",
)


def _checked_weights(u: ValueVector, weights: Sequence[float] | None) -> tuple[float, ...]:
    if weights is None:
        return (1.0,) * len(u)
    w = tuple(float(x) for x in weights)
    if len(w) != len(u):
        raise WeightMismatchError(
            f"{len(w)} weights for {len(u)} utilities"
        )
    if any(not math.isfinite(x) or x <= 0.0 for x in w):
        raise ValueError("welfare weights must be finite and > 0")
    return w


def isoelastic(u: ValueVector, weights: Sequence[float] | None, rho: float) -> float:
    """Isoelastic welfare sum(alpha_i * u_i^(1-rho)) / (1-rho).

    rho = 0 reduces to the weighted Benthamite sum, rho = 1 to the
    logarithmic form sum(alpha_i ln u_i) (ordinally the Nash product), and
    rho = math.inf to the Rawlsian minimum. rho >= 1 requires strictly
    positive utilities.
    """
    if math.isnan(rho) or rho < 0.0:
        raise ValueError("rho must be >= 0")
    w = _checked_weights(u, weights)
    if rho == RHO_INF:
        return min(u.values)
    if rho == 0.0:
        return math.fsum(wi * xi for wi, xi in zip(w, u.values))
    if rho >= 1.0 and any(x == 0.0 for x in u.values):
        raise ZeroElementError(
            f"isoelastic welfare with rho={rho:g} needs positive utilities"
        )
    if rho == 1.0:
        return math.fsum(wi * math.log(xi) for wi, xi in zip(w, u.values))
    p = 1.0 - rho
    return math.fsum(wi * xi**p for wi, xi in zip(w, u.values)) / p


def benthamite(u: ValueVector) -> float:
    """Utilitarian welfare: the plain sum of utilities."""
    return math.fsum(u.values)


def rawlsian(u: ValueVector) -> float:
    """Maximin welfare: the utility of the worst-off individual."""
    return min(u.values)


def bernoulli_nash(u: ValueVector, weights: Sequence[float] | None = None) -> float:
    """Nash welfare as the weighted product prod(alpha_i * u_i)."""
    w = _checked_weights(u, weights)
    return math.prod(wi * xi for wi, xi in zip(w, u.values))


def sen(y: ValueVector) -> float:
    """Sen welfare: mean output discounted by inequality, mean * (1 - Gini)."""
    return mean(y) * (1.0 - gini(y))


def foster(y: ValueVector) -> float:
    """Foster welfare: mean output discounted by Theil T, mean * exp(-T)."""
    return mean(y) * math.exp(-theil_t(y))


@dataclass(frozen=True)
class WelfareFunction:
    """A welfare-function choice plus its parameters."""

    kind: str
    rho: float | None = None
    weights: tuple[float, ...] | None = None
    metric: DispersionMetric | None = None

    def __post_init__(self):
        if self.kind not in WELFARE_KINDS:
            raise ValueError(f"unknown welfare function {self.kind!r}")
        if self.kind == "isoelastic" and self.rho is None:
            raise ValueError("isoelastic welfare needs rho")
        if self.kind == "leontief_dispersion" and self.metric is None:
            raise ValueError("leontief_dispersion welfare needs a metric")


def welfare(fn: WelfareFunction, ctx: AllocationContext) -> float:
    """Evaluate ``fn`` on the appropriate vector of ``ctx``.

    Bergson-Samuelson kinds read utilities, Sen/Foster read outputs, and
    leontief_dispersion reads inputs. Dispersion-based welfare is negated so
    every welfare score is maximized.
    """
    kind = fn.kind
    if kind == "isoelastic":
        return isoelastic(ctx.utilities, fn.weights, fn.rho)
    if kind == "benthamite":
        return benthamite(ctx.utilities)
    if kind == "rawlsian":
        return rawlsian(ctx.utilities)
    if kind == "bernoulli_nash":
        return bernoulli_nash(ctx.utilities, fn.weights)
    if kind == "sen":
        return sen(ctx.outputs)
    if kind == "foster":
        return foster(ctx.outputs)
    value = dispersion(fn.metric, ctx.inputs)
    return 0.0 if value == 0.0 else -value
