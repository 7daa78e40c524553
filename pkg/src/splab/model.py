"""Primitives for a market where buyers learn product quality from noisy reviews.

A monopolist sells a product of binary quality ``Q`` (good ``G`` with value
``v_G = 1`` or bad ``B`` with value ``v_B < 1``).  Each consumer privately
observes one signal about quality.  A signal has a valence (good/bad news)
and a precision ``w``: with probability ``gamma`` the precision is high
(``w = h``) and otherwise low (``w = l = 0.5``, pure noise).  A signal of
precision ``w`` carries the correct valence with probability ``w``.

Consumers differ in what they can see.  A *sophisticated* consumer observes
both valence and precision and updates beliefs on the pair.  A *naive*
consumer observes only the valence and updates as if every signal had the
average precision ``w_bar = gamma*h + (1-gamma)*l``.  A fraction ``lambda``
of the population is sophisticated.

Everything downstream (demand schedules, equilibrium pricing, oracles) is
built on the posterior functions defined here, so all modules share one
floating-point path for each belief value.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple


class ParameterError(ValueError):
    """A model parameter is outside its admissible domain."""


class UnsupportedVariantError(ValueError):
    """The operation does not cover this model variant (e.g. gamma != 0.5)."""


class Quality(enum.Enum):
    """True product quality."""

    G = "G"
    B = "B"


class Valence(enum.Enum):
    """Direction of a signal: good or bad news about the product."""

    GOOD = "g"
    BAD = "b"


class Precision(enum.Enum):
    """Reliability tier of a signal: high (w = h) or low (w = l = 0.5)."""

    HIGH = "h"
    LOW = "l"


class ConsumerType(enum.Enum):
    """Whether the consumer can observe a signal's precision."""

    SOPHISTICATED = "sophisticated"
    NAIVE = "naive"


class Signal(NamedTuple):
    """A (valence, precision) pair as seen by a sophisticated consumer."""

    valence: Valence
    precision: Precision

    def label(self) -> str:
        return f"{self.valence.value}{self.precision.value}"


#: The four possible signals, in a fixed canonical order.
SIGNALS: tuple[Signal, ...] = (
    Signal(Valence.GOOD, Precision.HIGH),
    Signal(Valence.BAD, Precision.HIGH),
    Signal(Valence.GOOD, Precision.LOW),
    Signal(Valence.BAD, Precision.LOW),
)


@dataclass(frozen=True)
class ModelParams:
    """Market parameters.

    h      -- high signal precision, in [0.5, 1].  h = 0.5 is the degenerate
              uninformative boundary: admitted so callers can evaluate the
              no-dispersion limit, though strict-ordering results need h > 0.5.
    lam    -- fraction of sophisticated consumers, in [0, 1].
    v_B    -- value of the bad-quality product, in [0, 1).
    gamma  -- probability a signal has high precision, in (0, 1).
    mu0    -- common prior that quality is good, in [0, 1].
    l      -- low signal precision; the solvable model pins l = 0.5.
    v_G    -- value of the good-quality product; pinned to 1.
    """

    h: float
    lam: float
    v_B: float
    gamma: float = 0.5
    mu0: float = 0.5
    l: float = 0.5
    v_G: float = 1.0

    def __post_init__(self) -> None:
        for name in ("h", "lam", "v_B", "gamma", "mu0", "l", "v_G"):
            value = getattr(self, name)
            object.__setattr__(self, name, float(value))
            if not math.isfinite(getattr(self, name)):
                raise ParameterError(f"{name} must be finite, got {value!r}")
        if self.l != 0.5:
            raise ParameterError(
                f"low precision is pinned to l = 0.5 (no closed forms exist "
                f"for l = {self.l})"
            )
        if self.v_G != 1.0:
            raise ParameterError(f"v_G is pinned to 1.0, got {self.v_G}")
        if not 0.5 <= self.h <= 1.0:
            raise ParameterError(f"h must lie in [0.5, 1], got {self.h}")
        if not 0.0 <= self.lam <= 1.0:
            raise ParameterError(f"lam must lie in [0, 1], got {self.lam}")
        if not 0.0 <= self.v_B < self.v_G:
            raise ParameterError(f"v_B must lie in [0, 1), got {self.v_B}")
        if not 0.0 < self.gamma < 1.0:
            raise ParameterError(f"gamma must lie in (0, 1), got {self.gamma}")
        if not 0.0 <= self.mu0 <= 1.0:
            raise ParameterError(f"mu0 must lie in [0, 1], got {self.mu0}")

    @property
    def is_base_variant(self) -> bool:
        """True for the symmetric baseline gamma = 0.5, mu0 = 0.5."""
        return self.gamma == 0.5 and self.mu0 == 0.5

    def to_dict(self) -> dict:
        return {
            "h": self.h,
            "lambda": self.lam,
            "v_B": self.v_B,
            "gamma": self.gamma,
            "mu0": self.mu0,
        }


def w_bar(params: ModelParams) -> float:
    """Average signal precision, gamma*h + (1-gamma)*l.

    This is both the precision a naive consumer imputes to every signal and
    the unconditional probability that a signal's valence matches quality.
    At gamma = 0.5 it equals (1 + 2h)/4.
    """
    return params.gamma * params.h + (1.0 - params.gamma) * params.l


def signal_distribution(params: ModelParams, quality: Quality) -> dict[Signal, float]:
    """Pr(signal | quality) over the four (valence, precision) pairs.

    Pr(sigma_{q,w} | Q) = Pr(valence | Q; w) * Pr(w), where the valence
    matches quality with probability w.
    """
    out: dict[Signal, float] = {}
    for signal in SIGNALS:
        p_prec = params.gamma if signal.precision is Precision.HIGH else 1.0 - params.gamma
        w = params.h if signal.precision is Precision.HIGH else params.l
        matches = (signal.valence is Valence.GOOD) == (quality is Quality.G)
        out[signal] = p_prec * (w if matches else 1.0 - w)
    return out


def _bayes(mu0: float, like_G: float, like_B: float) -> float:
    """Posterior Pr(G | evidence) from prior mu0 and the two likelihoods.

    A zero denominator can only occur at a degenerate prior combined with an
    impossible signal; the prior is returned unchanged (it is absorbing).
    """
    num = mu0 * like_G
    den = num + (1.0 - mu0) * like_B
    if den == 0.0:
        return mu0
    return num / den


def posterior_sophisticated(params: ModelParams, signal: Signal) -> float:
    """Belief Pr(G | signal) of a consumer who sees valence and precision.

    At mu0 = 0.5 this is h for (good, high), 1-h for (bad, high), and 0.5
    for either low-precision signal (l = 0.5 is uninformative).
    """
    w = params.h if signal.precision is Precision.HIGH else params.l
    if signal.valence is Valence.GOOD:
        like_G, like_B = w, 1.0 - w
    else:
        like_G, like_B = 1.0 - w, w
    return _bayes(params.mu0, like_G, like_B)


def posterior_naive(params: ModelParams, valence: Valence) -> float:
    """Belief Pr(G | valence) of a consumer who cannot see precision.

    The naive consumer treats every signal as having the average precision
    w_bar, so at mu0 = 0.5 the posterior is (1 + gamma*(2h-1))/2 after good
    news and (1 - gamma*(2h-1))/2 after bad news.
    """
    wb = w_bar(params)
    if valence is Valence.GOOD:
        like_G, like_B = wb, 1.0 - wb
    else:
        like_G, like_B = 1.0 - wb, wb
    return _bayes(params.mu0, like_G, like_B)


def posterior_with_prior(
    params: ModelParams, consumer: ConsumerType, signal: Signal
) -> float:
    """General-prior posterior for either consumer type.

    Naive consumers ignore the signal's precision field; sophisticated ones
    use it.  Both reduce to the base-model tables at mu0 = 0.5.
    """
    if consumer is ConsumerType.NAIVE:
        return posterior_naive(params, signal.valence)
    return posterior_sophisticated(params, signal)


# Posterior of every (consumer type, signal) cell.
BeliefProfile = dict[tuple[ConsumerType, Signal], float]


def belief_profile(params: ModelParams) -> BeliefProfile:
    """Posterior of every (consumer type, signal) cell."""
    return {
        (consumer, signal): posterior_with_prior(params, consumer, signal)
        for consumer in ConsumerType
        for signal in SIGNALS
    }


def wtp_from_posterior(mu: float, params: ModelParams) -> float:
    """Willingness to pay of a consumer with belief mu: mu*v_G + (1-mu)*v_B.

    All modules derive prices from posteriors through this one function so
    that analytically equal willingness-to-pay values are bitwise equal.
    """
    return mu * params.v_G + (1.0 - mu) * params.v_B
