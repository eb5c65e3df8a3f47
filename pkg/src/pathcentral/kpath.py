"""k-path centrality estimation via restricted random simple paths.

The estimator draws a start vertex from the root's upstream set and a walk
length from 1..k, then grows a self-avoiding random walk that never leaves
the root's domain (no path through the root can touch anything else, so the
restriction discards only irrelevant mass). A walk that reaches its target
length and touched the root contributes the ratio of the walk's actual draw
probability to its weight under the configured weighting, scaled by the
upstream share; everything else contributes zero.

Both the draw probability and the weight are products of reciprocals of
small integers, so they are carried as integer denominator products and
only combined at the end: the per-sample contribution is an exact integer
ratio and the bound contribution <= upstream share holds by construction.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .adaptive import (
    Estimate,
    degenerate_estimate,
    make_rng,
    run_sampling_loop,
    stopping_terms,
)
from .graph import DirectedGraph
from .reachability import ReachabilityInfo, compute_reachability

__all__ = [
    "KPathConfig",
    "WalkSample",
    "compute_walk_budget",
    "sample_walk",
    "estimate_kpath_centrality",
]


@dataclass(frozen=True)
class KPathConfig:
    """Options for the k-path estimator.

    ``weight="original"`` counts all unvisited out-neighbors in the walk
    weight's denominators, ``"restricted"`` only those inside the root's
    domain (making the weight equal to the draw probability, so every
    complete hit contributes exactly the upstream share).

    ``stopping`` picks the run length: ``"fixed"`` runs ``fixed_samples``
    draws, ``"hoeffding"`` runs a precomputed concentration budget, and
    ``"adaptive"`` stops early once two gap terms drop below the tolerance,
    with a slightly larger fallback budget covering the remaining risk.

    ``count_sink_roots=True`` lets a root with no outgoing edges be
    estimated (paths may end at the root, so its score can be positive);
    the default returns zero for such roots, matching the pair-sampling
    convention. ``stopping_variant="legacy"`` swaps in an older pair of gap
    expressions that are never positive, so the adaptive rule fires on the
    first check; it is kept only for comparison runs and offers no
    guarantee. ``conservative_budget=True`` floors the sample budget at its
    upstream-share-of-1 value instead of letting it shrink quadratically
    with the share.
    """

    k: int
    tolerance: float = 0.05
    failure_prob: float = 0.1
    seed: int | None = None
    weight: str = "original"
    stopping: str = "adaptive"
    fixed_samples: int | None = None
    count_sink_roots: bool = False
    stopping_variant: str = "two-sided"
    conservative_budget: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if not (0.0 < self.tolerance < 1.0):
            raise ValueError("tolerance must be in (0, 1)")
        if not (0.0 < self.failure_prob < 1.0):
            raise ValueError("failure_prob must be in (0, 1)")
        if self.weight not in ("original", "restricted"):
            raise ValueError(f"weight must be 'original' or 'restricted', got {self.weight!r}")
        if self.stopping not in ("fixed", "hoeffding", "adaptive"):
            raise ValueError(
                f"stopping must be 'fixed', 'hoeffding' or 'adaptive', got {self.stopping!r}"
            )
        if self.stopping == "fixed" and (self.fixed_samples is None or self.fixed_samples < 1):
            raise ValueError("stopping='fixed' needs fixed_samples >= 1")
        if self.stopping_variant not in ("two-sided", "legacy"):
            raise ValueError(
                f"stopping_variant must be 'two-sided' or 'legacy', got {self.stopping_variant!r}"
            )


@dataclass(frozen=True)
class WalkSample:
    """One drawn walk with its exact probability and weight bookkeeping.

    ``probability_denominator`` is the product of candidate-set sizes along
    the walk (the draw probability is its reciprocal); ``weight_denominator``
    the product of the configured weight denominators. The former never
    exceeds the latter because the candidate sets are subsets of the weight
    sets. ``completed`` is False when the candidate set emptied before the
    target length was reached.
    """

    vertices: tuple[int, ...]
    target_length: int
    completed: bool
    contains_mark: bool
    probability_denominator: int
    weight_denominator: int

    @property
    def probability(self) -> Fraction:
        return Fraction(1, self.probability_denominator)

    @property
    def weight(self) -> Fraction:
        return Fraction(1, self.weight_denominator)


class _WalkSpace:
    """Reusable scratch: domain bitmap plus epoch-stamped visited marks.

    Stamping makes clearing the visited set O(1) per walk, which keeps the
    per-sample memory footprint at one integer per vertex regardless of how
    many walks a run draws.
    """

    __slots__ = ("in_domain", "stamp", "epoch")

    def __init__(self, g: DirectedGraph, domain):
        self.in_domain = bytearray(g.vertex_count)
        for v in domain:
            self.in_domain[v] = 1
        self.stamp = [0] * g.vertex_count
        self.epoch = 0


def compute_walk_budget(
    tolerance: float,
    failure_prob: float,
    source_fraction: float,
    adaptive: bool = False,
    conservative: bool = False,
) -> int:
    """Sample count sufficient for the target accuracy at the given range.

    Plain two-sided concentration over samples bounded by the source
    fraction; the adaptive variant spends only half the failure budget here
    (the gap terms get the other half). ``conservative=True`` ignores the
    quadratic shrinkage with the source fraction and keeps the full-range
    budget as a floor.
    """
    risk = failure_prob / 2.0 if adaptive else failure_prob
    base = math.log(2.0 / risk) / (2.0 * tolerance**2)
    budget = math.ceil(source_fraction**2 * base)
    if conservative:
        budget = max(budget, math.ceil(base))
    return max(budget, 1)


def sample_walk(
    g: DirectedGraph,
    reach: ReachabilityInfo,
    source: int,
    target_length: int,
    rng,
    weight: str = "original",
    space: _WalkSpace | None = None,
) -> WalkSample:
    """Grow one self-avoiding random walk of up to ``target_length`` steps.

    Starts at ``source`` (which must be upstream of the reachability root)
    and repeatedly steps to a uniformly drawn unvisited out-neighbor inside
    the root's domain. Stops short, with ``completed=False``, when no such
    neighbor exists.
    """
    if target_length < 1:
        raise ValueError("target_length must be >= 1")
    if source not in reach.upstream:
        raise ValueError("walk sources must lie in the root's upstream set")
    if space is None:
        space = _WalkSpace(g, reach.domain)
    space.epoch += 1
    epoch = space.epoch
    stamp = space.stamp
    in_domain = space.in_domain
    root = reach.root

    stamp[source] = epoch
    path = [source]
    current = source
    prob_den = 1
    weight_den = 1
    contains = False
    completed = True
    restricted = weight == "restricted"

    for _ in range(target_length):
        neighbors = g._fwd[current]
        candidates = [v for v in neighbors if in_domain[v] and stamp[v] != epoch]
        if not candidates:
            completed = False
            break
        if restricted:
            step_weight = len(candidates)
        else:
            step_weight = sum(1 for v in neighbors if stamp[v] != epoch)
        prob_den *= len(candidates)
        weight_den *= step_weight
        if len(candidates) == 1:
            current = candidates[0]
        else:
            current = candidates[int(rng.integers(len(candidates)))]
        stamp[current] = epoch
        path.append(current)
        if current == root:
            contains = True

    return WalkSample(
        vertices=tuple(path),
        target_length=target_length,
        completed=completed,
        contains_mark=contains,
        probability_denominator=prob_den,
        weight_denominator=weight_den,
    )


def estimate_kpath_centrality(g: DirectedGraph, root: int, cfg: KPathConfig) -> Estimate:
    """Estimate the root's k-path centrality.

    Scores, per sample, the upstream share scaled by the ratio of draw
    probability to walk weight, for complete walks that touched the root;
    stuck walks and misses contribute zero but still count, which is what
    keeps the estimator unbiased over the walk space.
    """
    started = time.perf_counter()
    rng, seed = make_rng(cfg.seed)

    if g.in_degree(root) == 0:
        return degenerate_estimate(seed, started)
    if g.out_degree(root) == 0 and not cfg.count_sink_roots:
        return degenerate_estimate(seed, started)

    reach = compute_reachability(g, root)
    sources = tuple(sorted(reach.upstream))
    bound = float(reach.source_fraction)

    if cfg.stopping == "fixed":
        budget = cfg.fixed_samples
        gap_terms = None
    elif cfg.stopping == "hoeffding":
        budget = compute_walk_budget(
            cfg.tolerance, cfg.failure_prob, bound, adaptive=False,
            conservative=cfg.conservative_budget,
        )
        gap_terms = None
    else:
        budget = compute_walk_budget(
            cfg.tolerance, cfg.failure_prob, bound, adaptive=True,
            conservative=cfg.conservative_budget,
        )
        risk = cfg.failure_prob / 4.0
        if cfg.stopping_variant == "two-sided":

            def gap_terms(mean: float, tau: int) -> tuple[float, float]:
                return stopping_terms(mean, tau, budget, bound, risk, risk)

        else:

            def gap_terms(mean: float, tau: int) -> tuple[float, float]:
                return _legacy_gap_terms(mean, tau, budget, bound, risk)

    n = g.vertex_count
    n_src = len(sources)
    space = _WalkSpace(g, reach.domain)
    k = cfg.k
    weighting = cfg.weight

    def draw() -> float:
        s = sources[int(rng.integers(n_src))]
        length = int(rng.integers(1, k + 1))
        walk = sample_walk(g, reach, s, length, rng, weight=weighting, space=space)
        assert walk.probability_denominator <= walk.weight_denominator
        if walk.completed and walk.contains_mark:
            return n_src * walk.probability_denominator / (n * walk.weight_denominator)
        return 0.0

    mean, tau, hits, reason, gap_lo, gap_hi = run_sampling_loop(
        draw, budget, cfg.tolerance, gap_terms
    )
    if gap_terms is None and cfg.stopping == "hoeffding":
        lower, upper = mean - cfg.tolerance, mean + cfg.tolerance
    elif gap_lo is not None:
        lower, upper = mean - gap_lo, mean + gap_hi
    else:
        lower = upper = None
    return Estimate(
        value=mean,
        samples=tau,
        sample_budget=budget,
        contribution_bound=bound,
        stop_reason=reason,
        lower_conf=lower,
        upper_conf=upper,
        seed=seed,
        wall_time=time.perf_counter() - started,
        hits=hits,
    )


def _legacy_gap_terms(
    mean: float, tau: int, budget: int, fraction: float, risk: float
) -> tuple[float, float]:
    """Older gap pair kept for comparison runs.

    Both terms are the negation of a nonnegative quantity, so they can
    never exceed a positive tolerance: a run under this variant stops at
    the very first check and its result carries no accuracy guarantee.
    """
    log_r = math.log(1.0 / risk)
    mass = budget * fraction
    inner = 1.0 / 3.0 - mass / tau
    value = (-log_r / tau) * (
        inner + math.sqrt(inner * inner + 2.0 * mean * mass / log_r)
    )
    return value, value
