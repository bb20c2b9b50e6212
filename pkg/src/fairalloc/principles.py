"""The six guiding principles and their quantitative scoring.

Each principle can be scored in two modes: dianemetic (a statistic of the
allocation, suited to a central allocator) or diorthotic (a welfare
function, suited to transactions between individuals). A principle is
scored on a basis vector: outputs y, utilities u, or, for equality of
opportunity, always inputs x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import AllocationContext, ValueVector, mean, min_value, ratio_vector, threshold_share
from .dispersion import STD_DEV, DispersionMetric, dispersion
from .welfare import benthamite, foster, isoelastic, rawlsian, sen

DIFFERENCE = "difference"
EQUALITY = "equality"
EQUALITY_OF_OPPORTUNITY = "equality_of_opportunity"
GREATER_GOOD = "greater_good"
PROPORTION = "proportion"
SUFFICIENCY = "sufficiency"

PRINCIPLES = (
    DIFFERENCE,
    EQUALITY,
    EQUALITY_OF_OPPORTUNITY,
    GREATER_GOOD,
    PROPORTION,
    SUFFICIENCY,
)

DIANEMETIC = "dianemetic"
DIORTHOTIC = "diorthotic"

MAXIMIZE = "maximize"
MINIMIZE = "minimize"

BASIS_OUTPUT = "output"
BASIS_UTILITY = "utility"

# Principles that score a dispersion metric and therefore minimize in
# dianemetic mode.
_DISPERSION_PRINCIPLES = (EQUALITY, EQUALITY_OF_OPPORTUNITY, PROPORTION)

_DEFAULT_BASIS = {
    DIFFERENCE: BASIS_OUTPUT,
    EQUALITY: BASIS_OUTPUT,
    GREATER_GOOD: BASIS_UTILITY,
    PROPORTION: BASIS_OUTPUT,
    SUFFICIENCY: BASIS_OUTPUT,
}

_VARIANTS = {
    DIFFERENCE: ("rawlsian", "harsanyian"),
    EQUALITY: ("foster", "sen"),
    PROPORTION: ("dispersion", "noop"),
}


@dataclass(frozen=True)
class PrincipleSpec:
    """One guiding principle plus the parameters needed to score it."""

    principle: str
    mode: str = DIANEMETIC
    variant: str | None = None
    basis: str | None = None
    metric: DispersionMetric | None = None
    threshold: float | None = None
    rho: float | None = None
    weights: tuple[float, ...] | None = None

    def __post_init__(self):
        p = self.principle
        if p not in PRINCIPLES:
            raise ValueError(f"unknown principle {p!r}")
        if self.mode not in (DIANEMETIC, DIORTHOTIC):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.variant is not None and self.variant not in _VARIANTS.get(p, ()):
            raise ValueError(f"principle {p!r} has no variant {self.variant!r}")
        if self.basis is not None:
            if p == EQUALITY_OF_OPPORTUNITY:
                raise ValueError("equality_of_opportunity is always input-based")
            if self.basis not in (BASIS_OUTPUT, BASIS_UTILITY):
                raise ValueError(f"unknown basis {self.basis!r}")
        if (self.threshold is not None) != (p == SUFFICIENCY):
            raise ValueError("threshold is required for sufficiency and only there")
        if self.threshold is not None and not math.isfinite(self.threshold):
            raise ValueError("threshold must be finite")
        if self.metric is not None and p not in _DISPERSION_PRINCIPLES:
            raise ValueError(f"principle {p!r} takes no dispersion metric")
        if self.rho is not None or self.weights is not None:
            if not (p == GREATER_GOOD and self.mode == DIORTHOTIC):
                raise ValueError(
                    "rho/weights apply to the diorthotic greater-good principle only"
                )
        if self.rho is not None and (math.isnan(self.rho) or self.rho < 0.0):
            raise ValueError("rho must be >= 0")

    def resolved_basis(self) -> str:
        if self.principle == EQUALITY_OF_OPPORTUNITY:
            return "input"
        return self.basis or _DEFAULT_BASIS[self.principle]

    def resolved_metric(self) -> DispersionMetric:
        return self.metric or STD_DEV

    def resolved_variant(self) -> str | None:
        defaults = {DIFFERENCE: "rawlsian", EQUALITY: "foster", PROPORTION: "dispersion"}
        return self.variant or defaults.get(self.principle)


@dataclass(frozen=True)
class PrincipleScore:
    """A principle's value for one allocation plus its optimization direction."""

    spec: PrincipleSpec
    value: float
    direction: str


def direction(spec: PrincipleSpec) -> str:
    """Optimization direction: dianemetic dispersion principles minimize."""
    if spec.mode == DIANEMETIC and spec.principle in _DISPERSION_PRINCIPLES:
        return MINIMIZE
    return MAXIMIZE


def _basis_vector(spec: PrincipleSpec, ctx: AllocationContext) -> ValueVector:
    if spec.principle == EQUALITY_OF_OPPORTUNITY:
        return ctx.inputs
    if spec.resolved_basis() == BASIS_UTILITY:
        return ctx.utilities
    return ctx.outputs


def _negated(value: float) -> float:
    return 0.0 if value == 0.0 else -value


def _dianemetic_value(spec: PrincipleSpec, ctx: AllocationContext) -> float:
    p = spec.principle
    basis = _basis_vector(spec, ctx)
    if p == DIFFERENCE:
        return mean(basis) if spec.resolved_variant() == "harsanyian" else min_value(basis)
    if p == EQUALITY:
        return dispersion(spec.resolved_metric(), basis)
    if p == EQUALITY_OF_OPPORTUNITY:
        return dispersion(spec.resolved_metric(), ctx.inputs)
    if p == GREATER_GOOD:
        return math.fsum(basis.values)
    if p == PROPORTION:
        return dispersion(spec.resolved_metric(), ratio_vector(basis, ctx.inputs))
    return threshold_share(basis, spec.threshold)


def _diorthotic_value(spec: PrincipleSpec, ctx: AllocationContext) -> float:
    p = spec.principle
    basis = _basis_vector(spec, ctx)
    if p == DIFFERENCE:
        return mean(basis) if spec.resolved_variant() == "harsanyian" else rawlsian(basis)
    if p == EQUALITY:
        return sen(basis) if spec.resolved_variant() == "sen" else foster(basis)
    if p == EQUALITY_OF_OPPORTUNITY:
        return _negated(dispersion(spec.resolved_metric(), ctx.inputs))
    if p == GREATER_GOOD:
        if spec.rho is not None or spec.weights is not None:
            return isoelastic(basis, spec.weights, spec.rho if spec.rho is not None else 0.0)
        return benthamite(basis)
    if p == PROPORTION:
        if spec.resolved_variant() == "noop":
            # Free-transaction stance: every allocation is equally fair.
            return 0.0
        return _negated(dispersion(spec.resolved_metric(), ratio_vector(basis, ctx.inputs)))
    return threshold_share(basis, spec.threshold)


def score(spec: PrincipleSpec, ctx: AllocationContext) -> PrincipleScore:
    """Score one allocation context under one principle spec."""
    if spec.mode == DIANEMETIC:
        value = _dianemetic_value(spec, ctx)
    else:
        value = _diorthotic_value(spec, ctx)
    return PrincipleScore(spec=spec, value=value, direction=direction(spec))


def score_dianemetic(spec: PrincipleSpec, ctx: AllocationContext) -> PrincipleScore:
    """Score with the dianemetic (statistic-based) mapping."""
    if spec.mode != DIANEMETIC:
        raise ValueError("spec mode must be dianemetic")
    return PrincipleScore(spec, _dianemetic_value(spec, ctx), direction(spec))


def score_diorthotic(spec: PrincipleSpec, ctx: AllocationContext) -> PrincipleScore:
    """Score with the diorthotic (welfare-function) mapping; always maximize."""
    if spec.mode != DIORTHOTIC:
        raise ValueError("spec mode must be diorthotic")
    return PrincipleScore(spec, _diorthotic_value(spec, ctx), MAXIMIZE)
