"""Division problems, candidate generation, and allocation ranking.

Two problem shapes are supported: a discrete problem (indivisible pieces
with per-agent feature bonuses, all candidates enumerable) and a continuous
problem (one divisible total split between two agents along the efficient
frontier). Candidates are scored under every configured principle, ranked
per principle, and the rankings are combined with a weighted Borda count.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import Agent, AllocationContext, ValueVector
from .errors import (
    AllZeroWeightsError,
    CombinatorialBlowupError,
    DomainError,
    NonFiniteScoreError,
    OffFrontierError,
    ScoringError,
    UnsupportedPopulationError,
)
from .principles import MINIMIZE, PrincipleSpec, direction as principle_direction, score

ENUMERATION_CAP = 1_000_000

_FRONTIER_TOLERANCE = 1e-9


def _checked_agents(agents: Sequence[Agent]) -> tuple[Agent, ...]:
    out = tuple(agents)
    if not out:
        raise ValueError("a problem needs at least one agent")
    ids = [a.id for a in out]
    if len(set(ids)) != len(ids):
        raise ValueError("agent ids must be unique")
    return out


@dataclass(frozen=True)
class Piece:
    """An indivisible piece: resource amount plus per-agent feature bonus."""

    amount: float
    bonus: Mapping[str, float]

    def __post_init__(self):
        if not math.isfinite(self.amount) or self.amount < 0.0:
            raise ValueError("piece amount must be finite and >= 0")
        for agent_id, b in self.bonus.items():
            if not math.isfinite(b) or b < 0.0:
                raise ValueError(f"piece bonus for {agent_id!r} must be finite and >= 0")


@dataclass(frozen=True)
class DiscreteProblem:
    """Indivisible pieces to hand out; amounts sum to one whole resource.

    An agent's utility is the total amount received plus the bonuses the
    received pieces carry for that agent.
    """

    agents: tuple[Agent, ...]
    pieces: tuple[Piece, ...]

    def __post_init__(self):
        object.__setattr__(self, "agents", _checked_agents(self.agents))
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if not self.pieces:
            raise ValueError("a discrete problem needs at least one piece")
        ids = {a.id for a in self.agents}
        for i, piece in enumerate(self.pieces):
            unknown = set(piece.bonus) - ids
            if unknown:
                raise ValueError(f"piece {i}: bonus for unknown agents {sorted(unknown)}")
        total = math.fsum(p.amount for p in self.pieces)
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"piece amounts must sum to 1, got {total!r}")

    @property
    def inputs(self) -> ValueVector:
        return ValueVector(a.input for a in self.agents)


@dataclass(frozen=True)
class DiscreteAllocation:
    """A complete assignment: piece index -> agent index."""

    assignment: tuple[int, ...]


@dataclass(frozen=True)
class ContinuousProblem:
    """A divisible total split between agents; utility is retention * share.

    The retention factor models per-agent losses between allocation and
    consumption (a factor of 1 means nothing is lost).
    """

    agents: tuple[Agent, ...]
    total: float
    retention: Mapping[str, float]

    def __post_init__(self):
        object.__setattr__(self, "agents", _checked_agents(self.agents))
        if not math.isfinite(self.total) or self.total <= 0.0:
            raise ValueError("total must be finite and > 0")
        for agent in self.agents:
            r = self.retention.get(agent.id)
            if r is None:
                raise ValueError(f"missing retention for agent {agent.id!r}")
            if not math.isfinite(r) or not 0.0 < r <= 1.0:
                raise ValueError(f"retention for {agent.id!r} must be in (0, 1]")
        unknown = set(self.retention) - {a.id for a in self.agents}
        if unknown:
            raise ValueError(f"retention for unknown agents {sorted(unknown)}")

    @property
    def inputs(self) -> ValueVector:
        return ValueVector(a.input for a in self.agents)

    def retention_factors(self) -> tuple[float, ...]:
        return tuple(self.retention[a.id] for a in self.agents)


def enumerate_discrete(
    problem: DiscreteProblem, cap: int = ENUMERATION_CAP
) -> list[DiscreteAllocation]:
    """All complete assignments in lexicographic order of assignment vectors."""
    n_agents = len(problem.agents)
    n_pieces = len(problem.pieces)
    count = n_agents**n_pieces
    if count > cap:
        raise CombinatorialBlowupError(
            f"{n_agents}^{n_pieces} = {count} allocations exceed the cap of {cap}"
        )
    return [
        DiscreteAllocation(assignment)
        for assignment in itertools.product(range(n_agents), repeat=n_pieces)
    ]


def evaluate_discrete(
    problem: DiscreteProblem, allocation: DiscreteAllocation
) -> AllocationContext:
    """Outputs and utilities of one assignment; inputs pass through."""
    if len(allocation.assignment) != len(problem.pieces):
        raise ValueError("allocation must assign every piece")
    n = len(problem.agents)
    outputs = [0.0] * n
    utilities = [0.0] * n
    for piece, owner in zip(problem.pieces, allocation.assignment):
        if not 0 <= owner < n:
            raise ValueError(f"agent index {owner} out of range")
        outputs[owner] += piece.amount
        utilities[owner] += piece.amount + piece.bonus.get(problem.agents[owner].id, 0.0)
    return AllocationContext(
        inputs=problem.inputs,
        outputs=ValueVector(outputs),
        utilities=ValueVector(utilities),
    )


def frontier_context(problem: ContinuousProblem, shares: ValueVector) -> AllocationContext:
    """Context for shares on the efficient frontier (shares exhaust the total)."""
    if len(shares) != len(problem.agents):
        raise ValueError("one share per agent required")
    total = math.fsum(shares.values)
    if abs(total - problem.total) > _FRONTIER_TOLERANCE:
        raise OffFrontierError(
            f"shares sum to {total!r}, expected {problem.total!r}"
        )
    retention = problem.retention_factors()
    return AllocationContext(
        inputs=problem.inputs,
        outputs=shares,
        utilities=ValueVector(r * y for r, y in zip(retention, shares.values)),
    )


def _square_context(
    problem: ContinuousProblem, shares: tuple[float, float]
) -> AllocationContext:
    # Off-frontier evaluation for heatmaps: no sum constraint.
    retention = problem.retention_factors()
    return AllocationContext(
        inputs=problem.inputs,
        outputs=ValueVector(shares),
        utilities=ValueVector(r * y for r, y in zip(retention, shares)),
    )


def optimize_frontier(
    problem: ContinuousProblem, spec: PrincipleSpec, resolution: int
) -> tuple[ValueVector, float]:
    """Best frontier split for one principle, via grid search plus refinement.

    The frontier of a two-agent problem is one-dimensional: shares are
    (t, total - t). The grid has ``resolution`` equally spaced points
    including both endpoints; the best grid cell is refined with a ternary
    search. Grid ties go to the smaller t, and the refined point replaces
    the grid optimum only if it scores strictly better.
    """
    if len(problem.agents) != 2:
        raise UnsupportedPopulationError(
            "frontier optimization supports exactly two agents"
        )
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    total = problem.total
    sign = -1.0 if principle_direction(spec) == MINIMIZE else 1.0

    def objective(t: float) -> float:
        ctx = _square_context(problem, (t, total - t))
        return sign * score(spec, ctx).value

    best_i = 0
    best_val = objective(0.0)
    step = total / (resolution - 1)
    for i in range(1, resolution):
        t = total if i == resolution - 1 else i * step
        val = objective(t)
        if val > best_val:
            best_val = val
            best_i = i
    best_t = total if best_i == resolution - 1 else best_i * step

    lo = max(0.0, (best_i - 1) * step)
    hi = min(total, (best_i + 1) * step)
    for _ in range(100):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if objective(m1) >= objective(m2):
            hi = m2
        else:
            lo = m1
    refined_t = 0.5 * (lo + hi)
    if objective(refined_t) > best_val:
        best_t = refined_t

    shares = ValueVector((best_t, total - best_t))
    return shares, score(spec, _square_context(problem, (best_t, total - best_t))).value


@dataclass(frozen=True)
class HeatmapCell:
    """One sample of a principle score over the allocation square."""

    y_a: float
    y_b: float
    score: float | None
    on_frontier: bool


def heatmap(
    problem: ContinuousProblem, spec: PrincipleSpec, grid: int
) -> list[HeatmapCell]:
    """Principle scores over the full [0, total]^2 square, row-major.

    Off-frontier points are scored too, so contour plots can show welfare
    level sets crossing the frontier. Cells whose score raises a domain
    error carry ``None`` instead of aborting the sweep.
    """
    if len(problem.agents) != 2:
        raise UnsupportedPopulationError("heatmaps support exactly two agents")
    if grid < 1:
        raise ValueError("grid must be >= 1")
    total = problem.total
    band = total / grid
    cells = []
    for i in range(grid + 1):
        y_a = total if i == grid else i * total / grid
        for j in range(grid + 1):
            y_b = total if j == grid else j * total / grid
            try:
                value = score(spec, _square_context(problem, (y_a, y_b))).value
            except DomainError:
                value = None
            cells.append(
                HeatmapCell(y_a, y_b, value, abs(y_a + y_b - total) <= band)
            )
    return cells


def rank_scores(values: Sequence[float], direction: str) -> list[int]:
    """Competition ranks (1 = best) of scores under the given direction.

    Ties share the smallest applicable rank and the next rank is skipped.
    """
    for v in values:
        if not math.isfinite(v):
            raise NonFiniteScoreError(f"cannot rank non-finite score {v!r}")
    reverse = direction != MINIMIZE
    order = sorted(range(len(values)), key=lambda i: values[i], reverse=reverse)
    ranks = [0] * len(values)
    for pos, i in enumerate(order):
        if pos > 0 and values[i] == values[order[pos - 1]]:
            ranks[i] = ranks[order[pos - 1]]
        else:
            ranks[i] = pos + 1
    return ranks


def aggregate_ranks(
    per_principle_ranks: Sequence[Sequence[int]],
    weights: Sequence[float],
    labels: Sequence[str],
) -> tuple[list[float], list[int]]:
    """Weighted Borda combination of per-principle rankings.

    Each candidate earns ``weight * (k - rank)`` points per principle; the
    combined order is by points descending with ties broken by candidate
    label. Returns (borda points, combined rank per candidate).
    """
    if any(w < 0 or not math.isfinite(w) for w in weights):
        raise ValueError("aggregation weights must be finite and >= 0")
    if not any(w > 0 for w in weights):
        raise AllZeroWeightsError("at least one aggregation weight must be positive")
    if len(per_principle_ranks) != len(weights):
        raise ValueError("one weight per principle required")
    k = len(labels)
    borda = [0.0] * k
    for ranks, weight in zip(per_principle_ranks, weights):
        if len(ranks) != k:
            raise ValueError("one rank per candidate required")
        for c, r in enumerate(ranks):
            borda[c] += weight * (k - r)
    order = sorted(range(k), key=lambda c: (-borda[c], labels[c]))
    combined = [0] * k
    for pos, c in enumerate(order):
        combined[c] = pos + 1
    return borda, combined


@dataclass(frozen=True)
class RankingTable:
    """Scores, per-principle ranks, and the combined ranking of candidates."""

    candidates: tuple[str, ...]
    contexts: tuple[AllocationContext, ...]
    principles: tuple[str, ...]
    specs: tuple[PrincipleSpec, ...]
    directions: tuple[str, ...]
    scores: tuple[tuple[float, ...], ...]  # [principle][candidate]
    ranks: tuple[tuple[int, ...], ...]
    weights: tuple[float, ...]
    borda: tuple[float, ...]
    combined: tuple[int, ...]

    def combined_order(self) -> list[int]:
        """Candidate indices from best to worst combined rank."""
        return sorted(range(len(self.candidates)), key=lambda c: self.combined[c])


def build_ranking(
    candidates: Sequence[str],
    contexts: Sequence[AllocationContext],
    principle_labels: Sequence[str],
    specs: Sequence[PrincipleSpec],
    weights: Sequence[float],
) -> RankingTable:
    """Score every candidate under every principle and rank them."""
    scores: list[tuple[float, ...]] = []
    directions: list[str] = []
    ranks: list[tuple[int, ...]] = []
    for label, spec in zip(principle_labels, specs):
        row = []
        for candidate, ctx in zip(candidates, contexts):
            try:
                result = score(spec, ctx)
            except DomainError as err:
                raise ScoringError(label, candidate, err) from err
            row.append(result.value)
        directions.append(principle_direction(spec))
        scores.append(tuple(row))
        ranks.append(tuple(rank_scores(row, directions[-1])))
    borda, combined = aggregate_ranks(ranks, weights, candidates)
    return RankingTable(
        candidates=tuple(candidates),
        contexts=tuple(contexts),
        principles=tuple(principle_labels),
        specs=tuple(specs),
        directions=tuple(directions),
        scores=tuple(scores),
        ranks=tuple(ranks),
        weights=tuple(weights),
        borda=tuple(borda),
        combined=tuple(combined),
    )


def discrete_ranking(
    problem: DiscreteProblem,
    principle_labels: Sequence[str],
    specs: Sequence[PrincipleSpec],
    weights: Sequence[float],
    labels: Sequence[str] | None = None,
) -> RankingTable:
    """Rank every possible assignment of a discrete problem."""
    allocations = enumerate_discrete(problem)
    if labels is None:
        labels = [f"scenario {i + 1}" for i in range(len(allocations))]
    elif len(labels) != len(allocations):
        raise ValueError(
            f"{len(allocations)} allocations need {len(allocations)} labels, "
            f"got {len(labels)}"
        )
    contexts = [evaluate_discrete(problem, a) for a in allocations]
    return build_ranking(labels, contexts, principle_labels, specs, weights)


def continuous_ranking(
    problem: ContinuousProblem,
    principle_labels: Sequence[str],
    specs: Sequence[PrincipleSpec],
    weights: Sequence[float],
    resolution: int,
) -> RankingTable:
    """Rank the per-principle frontier optima of a continuous problem.

    Each principle proposes its optimal split; the deduplicated proposals
    form the candidate set, which is then scored under every principle.
    """
    optima: list[float] = []
    for label, spec in zip(principle_labels, specs):
        try:
            shares, _ = optimize_frontier(problem, spec, resolution)
        except DomainError as err:
            raise ScoringError(label, "frontier", err) from err
        optima.append(shares[0])
    by_label: dict[str, float] = {}
    for t in sorted(set(optima)):
        by_label.setdefault(f"t={t:.9g}", t)
    labels = list(by_label)
    contexts = [
        frontier_context(problem, ValueVector((t, problem.total - t)))
        for t in by_label.values()
    ]
    return build_ranking(labels, contexts, principle_labels, specs, weights)
