"""Shared machinery for the adaptive sampling estimators.

All three estimators (betweenness, coverage, k-path) follow the same scheme:
draw cheap per-sample contributions bounded by a known fraction, keep a
running mean, and stop as soon as either a fallback sample budget is
exhausted or two concentration gap terms around the running mean both drop
below the requested tolerance. The budget alone guarantees the additive
error with half the failure probability; the two gap terms spend a quarter
each, so a run that stops early keeps the overall guarantee.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "EstimatorConfig",
    "Estimate",
    "CompensatedSum",
    "compute_sample_budget",
    "stopping_terms",
    "run_sampling_loop",
    "make_rng",
]


@dataclass(frozen=True)
class EstimatorConfig:
    """Accuracy target and run options for the pair-sampling estimators.

    ``tolerance`` is the additive error bound, ``failure_prob`` the total
    probability with which the bound may be missed. The failure budget is
    split as half for the fallback sample count and a quarter for each of
    the two adaptive gap terms; the split is fixed because the guarantee's
    union bound depends on it.

    ``mode="baseline"`` samples endpoints from all vertices except the root
    instead of the root's upstream/downstream sets; it exists for sample
    count comparisons, not for accuracy (its per-sample scaling follows the
    unrestricted convention, which normalizes by n-1 rather than n).

    ``fixed_samples`` disables the adaptive rule and runs exactly that many
    samples.
    """

    tolerance: float
    failure_prob: float
    budget_constant: float = 0.5
    seed: int | None = None
    mode: str = "restricted"
    fixed_samples: int | None = None
    diameter_mode: str = "domain"

    def __post_init__(self):
        if not (0.0 < self.tolerance < 1.0):
            raise ValueError("tolerance must be in (0, 1)")
        if not (0.0 < self.failure_prob < 1.0):
            raise ValueError("failure_prob must be in (0, 1)")
        if self.budget_constant <= 0.0:
            raise ValueError("budget_constant must be positive")
        if self.mode not in ("restricted", "baseline"):
            raise ValueError(f"mode must be 'restricted' or 'baseline', got {self.mode!r}")
        if self.fixed_samples is not None and self.fixed_samples < 1:
            raise ValueError("fixed_samples must be >= 1")

    @property
    def gap_risk(self) -> float:
        """Failure probability spent on each of the two gap terms."""
        return self.failure_prob / 4.0


@dataclass(frozen=True)
class Estimate:
    """Result of one estimator run.

    ``contribution_bound`` is the upper end of the per-sample contribution
    range (the pair fraction for betweenness/coverage, the source fraction
    for k-path), so ``0 <= value <= contribution_bound`` always holds.
    ``lower_conf``/``upper_conf`` are ``value`` minus/plus the final gap
    terms; they are None when the run had no gap terms to evaluate (fixed
    sample counts, degenerate zeros). ``hits`` counts samples with nonzero
    contribution, a cheap diagnostic for how often the root was actually
    seen.
    """

    value: float
    samples: int
    sample_budget: int
    contribution_bound: float
    stop_reason: str
    lower_conf: float | None
    upper_conf: float | None
    seed: int
    wall_time: float
    hits: int


class CompensatedSum:
    """Neumaier-compensated accumulator for long streams of small terms."""

    __slots__ = ("_sum", "_comp")

    def __init__(self):
        self._sum = 0.0
        self._comp = 0.0

    def add(self, x: float) -> None:
        s = self._sum
        t = s + x
        if abs(s) >= abs(x):
            self._comp += (s - t) + x
        else:
            self._comp += (x - t) + s
        self._sum = t

    @property
    def value(self) -> float:
        return self._sum + self._comp


def compute_sample_budget(
    tolerance: float,
    failure_prob: float,
    diameter_vertex_bound: int,
    budget_constant: float = 0.5,
) -> int:
    """Fallback sample count sufficient for the (tolerance, failure) target.

    Scales with the squared inverse tolerance and, weakly, with the number
    of BFS levels a shortest path can span (the floor-log term, clamped to
    zero for bounds below 4 where it would go negative).
    """
    vd = diameter_vertex_bound
    level_term = (vd - 2).bit_length() - 1 if vd >= 4 else 0
    raw = (budget_constant / tolerance**2) * (
        level_term + 1 + math.log(2.0 / failure_prob)
    )
    return math.ceil(raw)


def stopping_terms(
    mean: float,
    samples: int,
    budget: int,
    fraction: float,
    risk_lower: float,
    risk_upper: float,
) -> tuple[float, float]:
    """Concentration gap terms around the running mean after ``samples`` draws.

    The first term bounds how far the mean can sit above the true value,
    the second how far below, each with its own risk share. Both shrink as
    samples accumulate; the lower term is additionally damped through the
    ``budget * fraction`` product, which upper-bounds the total variance
    mass of the stream.
    """
    if samples < 1:
        raise ValueError("gap terms need at least one sample")
    mass = budget * fraction
    ratio = mass / samples
    log_lo = math.log(1.0 / risk_lower)
    log_hi = math.log(1.0 / risk_upper)
    inner_lo = 1.0 / 3.0 - ratio
    inner_hi = 1.0 / 3.0 + ratio
    a = (log_lo / samples) * (
        inner_lo + math.sqrt(inner_lo * inner_lo + 2.0 * mean * mass / log_lo)
    )
    b = (log_hi / samples) * (
        inner_hi + math.sqrt(inner_hi * inner_hi + 2.0 * mean * mass / log_hi)
    )
    return a, b


def make_rng(seed: int | None) -> tuple[np.random.Generator, int]:
    """Generator plus the concrete seed actually used (drawn when absent)."""
    if seed is None:
        seed = int(np.random.SeedSequence().entropy)
    return np.random.default_rng(seed), seed


def run_sampling_loop(
    draw: Callable[[], float],
    sample_budget: int,
    tolerance: float,
    gap_terms: Callable[[float, int], tuple[float, float]] | None,
) -> tuple[float, int, int, str, float | None, float | None]:
    """Drive one estimation run to its stopping point.

    ``draw`` produces one per-sample contribution. ``gap_terms(mean, tau)``
    evaluates the two adaptive gap terms, or is None when only the budget
    should stop the run (fixed sample counts, plain concentration budgets).

    Returns (mean, samples, hits, stop_reason, final_lower_gap,
    final_upper_gap). The adaptive check runs before every draw from the
    second sample on, so a stop at the budget means the gaps were still too
    wide at budget - 1.
    """
    acc = CompensatedSum()
    tau = 0
    hits = 0
    stop_reason = "budget-reached"
    a = b = None
    while True:
        if tau >= sample_budget:
            break
        if tau >= 1 and gap_terms is not None:
            a, b = gap_terms(acc.value / tau, tau)
            if a <= tolerance and b <= tolerance:
                stop_reason = "bounds-satisfied"
                break
        c = draw()
        if c != 0.0:
            acc.add(c)
            hits += 1
        tau += 1
    mean = acc.value / tau if tau > 0 else 0.0
    if gap_terms is not None and tau > 0:
        a, b = gap_terms(mean, tau)
    return mean, tau, hits, stop_reason, a, b


def degenerate_estimate(seed: int, started: float) -> Estimate:
    """Zero-valued result for roots that cannot lie on any counted path."""
    return Estimate(
        value=0.0,
        samples=0,
        sample_budget=0,
        contribution_bound=0.0,
        stop_reason="degenerate-zero",
        lower_conf=0.0,
        upper_conf=0.0,
        seed=seed,
        wall_time=time.perf_counter() - started,
        hits=0,
    )
