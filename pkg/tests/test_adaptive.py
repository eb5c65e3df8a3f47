import math

import pytest

from pathcentral.adaptive import (
    CompensatedSum,
    Estimate,
    EstimatorConfig,
    compute_sample_budget,
    make_rng,
    run_sampling_loop,
    stopping_terms,
)

import oracles


class TestSampleBudget:
    def test_frozen_values(self):
        assert compute_sample_budget(0.1, 0.1, 4) == oracles.BUDGET_TOL01_FAIL01_VD4
        assert compute_sample_budget(0.1, 0.1, 3) == oracles.BUDGET_TOL01_FAIL01_VD3
        # below 4 the level term clamps to zero, so 2 behaves like 3
        assert compute_sample_budget(0.1, 0.1, 2) == oracles.BUDGET_TOL01_FAIL01_VD3

    def test_matches_direct_formula(self):
        for vd in range(4, 40):
            for tol, fail in [(0.1, 0.1), (0.05, 0.1), (0.02, 0.01), (0.3, 0.5)]:
                level = math.floor(math.log2(vd - 2))
                raw = (0.5 / tol**2) * (level + 1 + math.log(2 / fail))
                assert compute_sample_budget(tol, fail, vd) == math.ceil(raw)

    def test_growth_directions(self):
        base = compute_sample_budget(0.1, 0.1, 6)
        assert compute_sample_budget(0.05, 0.1, 6) > base
        assert compute_sample_budget(0.1, 0.05, 6) > base
        assert compute_sample_budget(0.1, 0.1, 60) > base
        assert compute_sample_budget(0.1, 0.1, 6, budget_constant=1.0) > base


class TestStoppingTerms:
    def test_frozen_reference_point(self):
        args = oracles.GAP_REFERENCE_ARGS
        a, b = stopping_terms(
            args["mean"], args["samples"], args["budget"], args["fraction"],
            args["risk"], args["risk"],
        )
        assert abs(a - oracles.GAP_LOWER_REFERENCE) < 1e-6
        assert abs(b - oracles.GAP_UPPER_REFERENCE) < 1e-6

    def test_zero_fraction_collapses(self):
        for tau in (1, 7, 100, 5000):
            for risk in (0.025, 0.2):
                a, b = stopping_terms(0.3, tau, 10**6, 0.0, risk, risk)
                closed_form = (2.0 / (3.0 * tau)) * math.log(1.0 / risk)
                assert math.isclose(a, closed_form, rel_tol=1e-12)
                assert math.isclose(b, closed_form, rel_tol=1e-12)

    def test_distinct_risks_split(self):
        a_tight, b_loose = stopping_terms(0.1, 50, 1000, 0.2, 0.001, 0.2)
        a_loose, b_tight = stopping_terms(0.1, 50, 1000, 0.2, 0.2, 0.001)
        assert a_tight > a_loose
        assert b_loose < b_tight

    def test_upper_term_shrinks_from_the_start(self):
        # the upper term is monotone in the sample count everywhere
        for mass in (0.5, 10, 400):
            tau = 1
            _, prev = stopping_terms(0.05, tau, 1000, mass / 1000, 0.025, 0.025)
            for _ in range(14):
                tau *= 2
                _, cur = stopping_terms(0.05, tau, 1000, mass / 1000, 0.025, 0.025)
                assert cur <= prev
                prev = cur

    def test_lower_term_shrinks_past_the_hump(self):
        # the lower term is only guaranteed monotone once the sample count
        # clears a multiple of the variance mass; start doubling there
        for budget, fraction in [(10**5, 1e-3), (1000, 0.3), (400, 1.0)]:
            mass = budget * fraction
            tau = max(1, math.ceil(6 * mass))
            for mean in (0.0, 0.01, 0.4):
                prev, _ = stopping_terms(mean, tau, budget, fraction, 0.025, 0.025)
                t = tau
                for _ in range(12):
                    t *= 2
                    cur, _ = stopping_terms(mean, t, budget, fraction, 0.025, 0.025)
                    assert cur <= prev
                    prev = cur

    def test_lower_term_hump_exists_below_the_safe_region(self):
        # documents why the doubling check above cannot start at one sample:
        # with few samples relative to the mass, the lower term can grow
        a_small, _ = stopping_terms(0.01, 50, 10**5, 1e-3, 0.025, 0.025)
        a_big, _ = stopping_terms(0.01, 100, 10**5, 1e-3, 0.025, 0.025)
        assert a_small < a_big

    def test_needs_a_sample(self):
        with pytest.raises(ValueError):
            stopping_terms(0.0, 0, 100, 0.1, 0.025, 0.025)


class TestConfig:
    def test_gap_risk_is_a_quarter(self):
        cfg = EstimatorConfig(tolerance=0.05, failure_prob=0.2)
        assert cfg.gap_risk == 0.05

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(tolerance=0.0, failure_prob=0.1),
            dict(tolerance=1.0, failure_prob=0.1),
            dict(tolerance=0.05, failure_prob=0.0),
            dict(tolerance=0.05, failure_prob=1.5),
            dict(tolerance=0.05, failure_prob=0.1, budget_constant=0.0),
            dict(tolerance=0.05, failure_prob=0.1, mode="turbo"),
            dict(tolerance=0.05, failure_prob=0.1, fixed_samples=0),
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            EstimatorConfig(**kwargs)


class TestCompensatedSum:
    def test_catastrophic_cancellation_survives(self):
        acc = CompensatedSum()
        for x in [1e16, 1.0, -1e16]:
            acc.add(x)
        assert acc.value == 1.0
        assert sum([1e16, 1.0, -1e16]) != 1.0

    def test_matches_fsum_on_long_small_stream(self):
        xs = [1 / 6] * 10_000 + [1e-9] * 10_000
        acc = CompensatedSum()
        for x in xs:
            acc.add(x)
        assert acc.value == math.fsum(xs)


class TestRng:
    def test_seeded_reproducibility(self):
        g1, s1 = make_rng(1234)
        g2, s2 = make_rng(1234)
        assert s1 == s2 == 1234
        assert g1.integers(10**9) == g2.integers(10**9)

    def test_unseeded_reports_concrete_seed(self):
        g1, s1 = make_rng(None)
        g2, s2 = make_rng(None)
        assert isinstance(s1, int)
        assert s1 != s2
        replay, _ = make_rng(s1)
        assert replay.integers(10**9) == g1.integers(10**9)


class TestSamplingLoop:
    def test_fixed_budget_runs_to_the_end(self):
        draws = iter([0.5, 0.0, 0.5, 0.5, 0.0])
        mean, tau, hits, reason, a, b = run_sampling_loop(
            lambda: next(draws), 5, 0.05, None
        )
        assert tau == 5
        assert hits == 3
        assert reason == "budget-reached"
        assert a is None and b is None
        assert math.isclose(mean, 0.3)

    def test_immediate_stop_when_gaps_are_tight(self):
        mean, tau, hits, reason, a, b = run_sampling_loop(
            lambda: 1.0, 1000, 0.05, lambda m, t: (0.0, 0.0)
        )
        assert reason == "bounds-satisfied"
        assert tau == 1
        assert (a, b) == (0.0, 0.0)

    def test_final_gaps_reevaluated_at_exit(self):
        def gaps(mean, tau):
            return (1.0 / tau, 2.0 / tau)

        mean, tau, hits, reason, a, b = run_sampling_loop(lambda: 0.0, 7, 0.05, gaps)
        assert reason == "budget-reached"
        assert tau == 7
        assert (a, b) == (1.0 / 7, 2.0 / 7)

    def test_zero_budget_never_draws(self):
        mean, tau, hits, reason, a, b = run_sampling_loop(lambda: 1.0, 0, 0.05, None)
        assert (mean, tau, hits) == (0.0, 0, 0)
        assert reason == "budget-reached"

    def test_stop_requires_both_gaps(self):
        calls = []

        def gaps(mean, tau):
            calls.append(tau)
            return (0.0, 0.06) if tau < 3 else (0.0, 0.0)

        _, tau, _, reason, _, _ = run_sampling_loop(lambda: 0.5, 100, 0.05, gaps)
        assert reason == "bounds-satisfied"
        assert tau == 3


def test_estimate_is_frozen():
    est = Estimate(
        value=0.1, samples=5, sample_budget=10, contribution_bound=0.2,
        stop_reason="budget-reached", lower_conf=0.05, upper_conf=0.15,
        seed=1, wall_time=0.0, hits=3,
    )
    with pytest.raises(AttributeError):
        est.value = 0.2
