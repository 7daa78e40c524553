"""Unit tests for the signal technology and posterior machinery."""

import math

import pytest
from hypothesis import given, strategies as st

from splab import (
    ConsumerType,
    ModelParams,
    ParameterError,
    Precision,
    Quality,
    SIGNALS,
    Signal,
    UnsupportedVariantError,
    Valence,
    belief_profile,
    posterior_naive,
    posterior_sophisticated,
    posterior_with_prior,
    signal_distribution,
    w_bar,
    wtp_from_posterior,
)

GH = Signal(Valence.GOOD, Precision.HIGH)
BH = Signal(Valence.BAD, Precision.HIGH)
GL = Signal(Valence.GOOD, Precision.LOW)
BL = Signal(Valence.BAD, Precision.LOW)

hs = st.floats(min_value=0.5, max_value=1.0, allow_nan=False)
gammas = st.floats(min_value=0.01, max_value=0.99, allow_nan=False)
mu0s = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


def base(h, lam=0.0, v_B=0.0, **kw):
    return ModelParams(h=h, lam=lam, v_B=v_B, **kw)


class TestSignalDistribution:
    def test_h08_good_quality(self):
        dist = signal_distribution(base(0.8), Quality.G)
        assert dist[GH] == pytest.approx(0.40, abs=1e-15)
        assert dist[BH] == pytest.approx(0.10, abs=1e-15)
        assert dist[GL] == pytest.approx(0.25, abs=1e-15)
        assert dist[BL] == pytest.approx(0.25, abs=1e-15)

    def test_uninformative_at_half(self):
        dist = signal_distribution(base(0.5), Quality.G)
        assert all(abs(p - 0.25) <= 1e-15 for p in dist.values())

    def test_perfect_high_signal_for_bad_quality(self):
        dist = signal_distribution(base(1.0), Quality.B)
        assert dist[BH] == pytest.approx(0.5, abs=1e-15)
        assert dist[GH] == 0.0

    @given(h=hs, gamma=gammas)
    def test_distribution_sums_to_one(self, h, gamma):
        for quality in Quality:
            dist = signal_distribution(base(h, gamma=gamma), quality)
            assert abs(sum(dist.values()) - 1.0) <= 1e-15


class TestPosteriors:
    def test_sophisticated_examples(self):
        p = base(0.8)
        assert posterior_sophisticated(p, GH) == pytest.approx(0.8, abs=1e-15)
        assert posterior_sophisticated(p, BL) == pytest.approx(0.5, abs=1e-15)

    def test_naive_examples(self):
        assert posterior_naive(base(0.8), Valence.GOOD) == pytest.approx(0.65, abs=1e-15)
        assert posterior_naive(base(0.9), Valence.BAD) == pytest.approx(0.30, abs=1e-15)
        assert posterior_naive(base(0.9, gamma=0.8), Valence.GOOD) == pytest.approx(0.82, abs=1e-15)

    def test_prior_weighted_naive(self):
        p = base(0.8, mu0=0.7)
        got = posterior_with_prior(p, ConsumerType.NAIVE, GH)
        assert got == pytest.approx(0.8125, abs=1e-12)

    def test_degenerate_priors_absorb(self):
        for signal in SIGNALS:
            for consumer in ConsumerType:
                assert posterior_with_prior(base(0.8, mu0=0.0), consumer, signal) == 0.0
                assert posterior_with_prior(base(0.8, mu0=1.0), consumer, signal) == 1.0

    @given(h=hs, gamma=gammas, mu0=mu0s)
    def test_posterior_is_martingale(self, h, gamma, mu0):
        # Unconditionally, the expected posterior equals the prior.
        params = base(h, gamma=gamma, mu0=mu0)
        dist_G = signal_distribution(params, Quality.G)
        dist_B = signal_distribution(params, Quality.B)
        for consumer in ConsumerType:
            mean = sum(
                (mu0 * dist_G[s] + (1 - mu0) * dist_B[s])
                * posterior_with_prior(params, consumer, s)
                for s in SIGNALS
            )
            assert mean == pytest.approx(mu0, abs=1e-12)

    @given(h=hs, gamma=gammas)
    def test_valence_symmetry_at_even_prior(self, h, gamma):
        # With a 50/50 prior the good and bad posteriors mirror each other.
        params = base(h, gamma=gamma)
        for prec in Precision:
            good = posterior_sophisticated(params, Signal(Valence.GOOD, prec))
            bad = posterior_sophisticated(params, Signal(Valence.BAD, prec))
            assert good + bad == pytest.approx(1.0, abs=1e-12)
        assert posterior_naive(params, Valence.GOOD) + posterior_naive(
            params, Valence.BAD
        ) == pytest.approx(1.0, abs=1e-12)

    def test_monotone_in_h(self):
        grid = [0.5 + 0.05 * k for k in range(11)]
        soph = [posterior_sophisticated(base(h), GH) for h in grid]
        naive = [posterior_naive(base(h), Valence.GOOD) for h in grid]
        assert all(a < b for a, b in zip(soph, soph[1:]))
        assert all(a < b for a, b in zip(naive, naive[1:]))

    def test_everything_collapses_at_half(self):
        params = base(0.5, gamma=0.37)
        for s in SIGNALS:
            assert abs(posterior_sophisticated(params, s) - 0.5) <= 1e-15
        for valence in Valence:
            assert abs(posterior_naive(params, valence) - 0.5) <= 1e-15


class TestBeliefProfile:
    def test_eight_cells_and_naive_ignores_precision(self):
        params = base(0.85)
        profile = belief_profile(params)
        assert len(profile) == 2 * len(SIGNALS)
        for valence in Valence:
            hi = profile[(ConsumerType.NAIVE, Signal(valence, Precision.HIGH))]
            lo = profile[(ConsumerType.NAIVE, Signal(valence, Precision.LOW))]
            assert hi == lo


class TestWtpAndWbar:
    @given(h=hs, gamma=gammas)
    def test_w_bar_closed_form(self, h, gamma):
        params = base(h, gamma=gamma)
        assert w_bar(params) == pytest.approx(gamma * h + (1 - gamma) * 0.5, abs=1e-15)

    def test_wtp_endpoints(self):
        params = base(0.8, v_B=0.3)
        assert wtp_from_posterior(0.0, params) == pytest.approx(0.3, abs=1e-15)
        assert wtp_from_posterior(1.0, params) == pytest.approx(1.0, abs=1e-15)

    @given(mu=st.floats(0.0, 1.0), v=st.floats(0.0, 0.99))
    def test_wtp_is_linear_and_bounded(self, mu, v):
        params = base(0.8, v_B=v)
        w = wtp_from_posterior(mu, params)
        assert v - 1e-15 <= w <= 1.0 + 1e-15
        assert w == pytest.approx(mu + (1 - mu) * v, abs=1e-15)


class TestValidation:
    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(h=0.49, lam=0.0, v_B=0.0),
            dict(h=1.01, lam=0.0, v_B=0.0),
            dict(h=0.8, lam=-0.1, v_B=0.0),
            dict(h=0.8, lam=1.1, v_B=0.0),
            dict(h=0.8, lam=0.0, v_B=1.0),
            dict(h=0.8, lam=0.0, v_B=-0.01),
            dict(h=0.8, lam=0.0, v_B=0.0, gamma=0.0),
            dict(h=0.8, lam=0.0, v_B=0.0, gamma=1.0),
            dict(h=0.8, lam=0.0, v_B=0.0, mu0=1.5),
        ],
    )
    def test_parameter_errors(self, kwargs):
        with pytest.raises(ParameterError):
            ModelParams(**kwargs)

    def test_pinned_constants_rejected(self):
        with pytest.raises(ParameterError):
            ModelParams(h=0.8, lam=0.0, v_B=0.0, l=0.4)
        with pytest.raises(ParameterError):
            ModelParams(h=0.8, lam=0.0, v_B=0.0, v_G=0.9)

    def test_to_dict_uses_lambda_key(self):
        d = ModelParams(h=0.8, lam=0.25, v_B=0.1).to_dict()
        assert d["lambda"] == 0.25 and "lam" not in d
