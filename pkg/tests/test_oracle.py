"""Unit tests for the brute-force oracle: grid argmax, Monte Carlo, bisection."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from splab import (
    GridSpec,
    ModelParams,
    ParameterError,
    Quality,
    best_pooling_candidate,
    bisect_threshold,
    build_wtp_schedule,
    check_no_separation,
    demand_by_enumeration,
    expected_demand,
    grid_argmax,
    simulate_market,
)

hs = st.floats(min_value=0.5, max_value=1.0, allow_nan=False)
lams = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
vbs = st.floats(min_value=0.0, max_value=0.99, allow_nan=False)


class TestEnumeration:
    @settings(max_examples=150)
    @given(h=hs, lam=lams, v=vbs, p=st.floats(0.0, 1.0))
    def test_matches_schedule_demand(self, h, lam, v, p):
        # Independent 8-cell summation agrees with the WTP-schedule route.
        params = ModelParams(h=h, lam=lam, v_B=v)
        sched = build_wtp_schedule(params)
        for quality in Quality:
            direct = float(demand_by_enumeration(params, quality, p))
            assert direct == pytest.approx(
                expected_demand(sched, p, quality), abs=1e-12
            )

    def test_vectorized_prices(self):
        params = ModelParams(h=0.8, lam=0.5, v_B=0.1)
        grid = np.linspace(0.0, 1.0, 11)
        out = demand_by_enumeration(params, Quality.G, grid)
        assert out.shape == grid.shape
        assert np.all(np.diff(out) <= 1e-15)  # demand is non-increasing in price

    def test_price_domain_enforced(self):
        params = ModelParams(h=0.8, lam=0.5, v_B=0.1)
        with pytest.raises(ParameterError):
            demand_by_enumeration(params, Quality.G, 1.2)


class TestGridArgmax:
    def test_worked_example(self):
        params = ModelParams(h=0.7, lam=1.0, v_B=0.1)
        price, profit = grid_argmax(params, Quality.G)
        assert price == 0.55  # exact: candidate prices are injected into the grid
        assert profit == pytest.approx(0.4675, abs=1e-12)

    def test_agrees_with_candidate_search(self):
        rng = np.random.default_rng(42)
        for _ in range(25):
            params = ModelParams(
                h=float(rng.uniform(0.5, 1.0)),
                lam=float(rng.uniform(0.0, 1.0)),
                v_B=float(rng.uniform(0.0, 0.9)),
            )
            cand = best_pooling_candidate(params)
            price, profit = grid_argmax(params, Quality.G)
            assert price == cand.price
            assert profit == pytest.approx(cand.profit_G, abs=1e-12)

    def test_respects_grid_bounds(self):
        params = ModelParams(h=0.7, lam=1.0, v_B=0.1)
        price, _ = grid_argmax(params, Quality.G, grid=GridSpec(0.0, 0.5, 5001))
        assert price <= 0.5

    def test_rejects_bad_spec(self):
        params = ModelParams(h=0.7, lam=1.0, v_B=0.1)
        with pytest.raises(ParameterError):
            grid_argmax(params, Quality.G, grid=GridSpec(0.7, 0.2, 100))


class TestSimulation:
    def test_everyone_buys_at_lowest_wtp(self):
        params = ModelParams(h=0.8, lam=0.0, v_B=0.1)
        report = simulate_market(params, Quality.G, 0.415, draws=100_000, seed=11)
        assert report.est_demand == 1.0
        assert report.se_demand == 0.0

    def test_nobody_buys_above_top_wtp(self):
        params = ModelParams(h=1.0, lam=1.0, v_B=0.1)
        report = simulate_market(params, Quality.B, 0.9, draws=100_000, seed=12)
        assert report.est_demand == 0.0

    def test_interior_point_within_four_se(self):
        params = ModelParams(h=0.8, lam=0.5, v_B=0.1)
        report = simulate_market(params, Quality.G, 0.55, draws=400_000, seed=13)
        assert abs(report.est_demand - 0.775) <= 4 * report.se_demand

    def test_profit_is_price_times_demand(self):
        params = ModelParams(h=0.8, lam=0.5, v_B=0.1)
        report = simulate_market(params, Quality.G, 0.55, draws=50_000, seed=14)
        assert report.est_profit == pytest.approx(0.55 * report.est_demand, abs=1e-15)

    def test_se_is_sample_std_over_sqrt_n(self):
        params = ModelParams(h=0.8, lam=0.5, v_B=0.1)
        n = 50_000
        report = simulate_market(params, Quality.G, 0.55, draws=n, seed=15)
        m = report.est_demand
        expected_se = math.sqrt(m * (1 - m) * n / (n - 1)) / math.sqrt(n)
        assert report.se_demand == pytest.approx(expected_se, rel=1e-12)

    def test_same_seed_byte_identical(self):
        params = ModelParams(h=0.73, lam=0.42, v_B=0.18)
        a = simulate_market(params, Quality.B, 0.31, draws=200_000, seed=99)
        b = simulate_market(params, Quality.B, 0.31, draws=200_000, seed=99)
        assert a.to_json() == b.to_json()

    def test_different_seed_differs(self):
        params = ModelParams(h=0.73, lam=0.42, v_B=0.18)
        a = simulate_market(params, Quality.B, 0.5, draws=200_000, seed=1)
        b = simulate_market(params, Quality.B, 0.5, draws=200_000, seed=2)
        assert a.est_demand != b.est_demand


class TestBisect:
    def test_finds_linear_root(self):
        root = bisect_threshold(lambda x: x - 0.37, (0.0, 1.0))
        assert root == pytest.approx(0.37, abs=1e-9)

    def test_certificate_bound(self):
        # |f(root)| <= 10 * tol * scale for monotone f.
        tol = 1e-10
        for f, bracket in [
            (lambda x: x - 0.37, (0.0, 1.0)),
            (lambda x: math.exp(x) - 2.0, (0.0, 1.0)),
            (lambda x: x**3 - 0.2, (0.0, 1.0)),
        ]:
            root = bisect_threshold(f, bracket, tol=tol)
            scale = max(1.0, abs(f(bracket[0])), abs(f(bracket[1])))
            assert abs(f(root)) <= 10 * tol * scale

    def test_no_sign_change_returns_none(self):
        assert bisect_threshold(lambda x: x + 1.0, (0.0, 1.0)) is None

    def test_degenerate_bracket_rejected(self):
        with pytest.raises(ParameterError):
            bisect_threshold(lambda x: x, (0.3, 0.3))

    def test_non_monotone_probe_rejected(self):
        with pytest.raises(ParameterError):
            bisect_threshold(lambda x: x * x - 0.25, (-1.0, 1.0))

    def test_non_finite_bracket_rejected(self):
        with pytest.raises(ParameterError):
            bisect_threshold(lambda x: x, (0.0, float("nan")))


class TestNoSeparation:
    @settings(max_examples=30, deadline=None)
    @given(h=hs, lam=lams, v=st.floats(0.01, 0.95))
    def test_mimicry_is_always_profitable(self, h, lam, v):
        report = check_no_separation(ModelParams(h=h, lam=lam, v_B=v))
        assert not report.separation_possible
        assert report.min_margin > 0.0
        assert len(report.mimic_profits) == len(report.prices)
        assert all(v < p <= 1.0 + 1e-15 for p in report.prices)
