"""Equilibrium solvers and comparative-statics thresholds.

Price signalling collapses here: no separating price pair survives the low
type's incentive to mimic, so equilibria are pooling (both qualities charge
one price) or, in a corner of the parameter space, partially separating with
the low type mixing between the pooling-like high price and the revealing
price v_B.

The pooling price maximizes the high type's expected profit over the
candidate prices (the five WTP levels plus v_B); the equilibrium exists when
the low type's profit at that price is at least the sure deviation payoff
v_B.  Off the equilibrium path consumers keep their signal-based beliefs,
except at prices only a low type could gain from, which are attributed to
the low type and therefore yield at most v_B -- that is what reduces the
deviation audit to the single profit_B >= v_B comparison.

Comparative-statics thresholds (the switch points of profit in h, lambda,
gamma, and the prior) are computed by bisection on profit differences; the
few closed forms available are reserved for tests.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, NamedTuple, Optional

from .demand import WtpSchedule, build_wtp_schedule, expected_demand
from .model import (
    ConsumerType,
    ModelParams,
    ParameterError,
    Quality,
    UnsupportedVariantError,
    Valence,
    posterior_naive,
    w_bar,
    wtp_from_posterior,
)
from .oracle import bisect_threshold

KIND_POOLING = "pooling"
KIND_MIXED = "mixed"
KIND_NONE = "none"

_TOL = 1e-10


@dataclass(frozen=True)
class EquilibriumOutcome:
    """Solver result.  kind is one of pooling / mixed / none.

    For pooling: price, profits, region R1..R4 and the WTP level the price
    sits on.  For mixed: the high price, the low type's weight alpha on it,
    and low_price = v_B.  For none: only a diagnostic note.
    """

    kind: str
    price: Optional[float] = None
    low_price: Optional[float] = None
    alpha: Optional[float] = None
    profit_G: Optional[float] = None
    profit_B: Optional[float] = None
    region: Optional[str] = None
    candidate_level: Optional[int] = None
    note: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "price": self.price,
            "low_price": self.low_price,
            "alpha": self.alpha,
            "profit_G": self.profit_G,
            "profit_B": self.profit_B,
            "region": self.region,
            "candidate_level": self.candidate_level,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class PoolingCandidate(NamedTuple):
    """Best candidate price for the high type, before the existence check."""

    price: float
    level: Optional[int]  # WTP level 1..5, or None if the price is v_B itself
    profit_G: float
    profit_B: float


def _require_base(params: ModelParams, op: str) -> None:
    if params.gamma != 0.5 or params.mu0 != 0.5:
        raise UnsupportedVariantError(
            f"{op} covers the symmetric baseline only (gamma=0.5, mu0=0.5); "
            f"got gamma={params.gamma}, mu0={params.mu0}"
        )


def best_pooling_candidate(params: ModelParams) -> PoolingCandidate:
    """Argmax of the high type's profit over the six candidate prices.

    Candidates are the five WTP levels plus v_B.  Ties break toward the
    lower price; at equal prices (degenerate h = 0.5, or v_B touching the
    bottom WTP at h = 1) toward the lower level, keeping region labels
    deterministic.  This argmax is well defined whether or not the pooling
    equilibrium ultimately exists, which is what the threshold machinery
    relies on.
    """
    schedule = build_wtp_schedule(params)
    candidates: list[tuple[float, Optional[int]]] = [
        (lvl.wtp, lvl.level) for lvl in schedule.levels
    ]
    candidates.append((params.v_B, None))
    candidates.sort(key=lambda c: (c[0], 6 if c[1] is None else c[1]))

    best: Optional[PoolingCandidate] = None
    for price, level in candidates:
        pg = price * expected_demand(schedule, price, Quality.G)
        pb = price * expected_demand(schedule, price, Quality.B)
        if best is None or pg > best.profit_G:
            best = PoolingCandidate(price, level, pg, pb)
    assert best is not None
    return best


def solve_pooling(params: ModelParams) -> EquilibriumOutcome:
    """Pooling equilibrium of the baseline model, or kind=none.

    The price is the high type's candidate argmax; the equilibrium stands
    iff the low type weakly prefers it to the sure full-coverage deviation
    payoff v_B (see the module docstring for why that is the only binding
    deviation).
    """
    _require_base(params, "solve_pooling")
    cand = best_pooling_candidate(params)
    if cand.profit_B >= params.v_B:
        level = cand.level if cand.level is not None else 1
        return EquilibriumOutcome(
            kind=KIND_POOLING,
            price=cand.price,
            profit_G=cand.profit_G,
            profit_B=cand.profit_B,
            region=f"R{level}",
            candidate_level=level,
        )
    return EquilibriumOutcome(
        kind=KIND_NONE,
        note=(
            f"pooling fails: low-type profit {cand.profit_B:.6g} at the "
            f"candidate price {cand.price:.6g} is below the deviation "
            f"payoff v_B={params.v_B:.6g}"
        ),
    )


def solve_mixed(params: ModelParams) -> EquilibriumOutcome:
    """Partially separating equilibrium of the fully naive market (lam = 0).

    The low type mixes between the revealing price v_B (weight 1 - alpha)
    and the high price p_bar charged by the high type.  Indifference pins
    p_bar * (3-2h)/4 = v_B, and belief consistency at p_bar pins
    alpha = 1/v_B - 4/(3-2h).  Feasible exactly when that alpha lands in
    (0, 1), i.e. v_B inside ((3-2h)/(7-2h), (3-2h)/4).
    """
    if params.lam != 0.0:
        raise UnsupportedVariantError(
            f"solve_mixed covers the fully naive market (lam=0) only; got "
            f"lam={params.lam}"
        )
    _require_base(params, "solve_mixed")
    h, v = params.h, params.v_B
    lo = (3.0 - 2.0 * h) / (7.0 - 2.0 * h)
    hi = (3.0 - 2.0 * h) / 4.0
    if v <= 0.0:
        return EquilibriumOutcome(
            kind=KIND_NONE,
            note=f"mixing requires v_B in ({lo:.6g}, {hi:.6g}); got v_B={v}",
        )
    alpha = 1.0 / v - 4.0 / (3.0 - 2.0 * h)
    if not 0.0 < alpha < 1.0:
        return EquilibriumOutcome(
            kind=KIND_NONE,
            note=(
                f"mixing weight {alpha:.6g} falls outside (0, 1); the "
                f"feasibility band is v_B in ({lo:.6g}, {hi:.6g})"
            ),
        )
    p_bar = 4.0 * v / (3.0 - 2.0 * h)
    return EquilibriumOutcome(
        kind=KIND_MIXED,
        price=p_bar,
        low_price=v,
        alpha=alpha,
        profit_G=p_bar * (1.0 + 2.0 * h) / 4.0,
        profit_B=v,
    )


# ---------------------------------------------------------------------------
# Profit helpers shared by the threshold machinery.
# ---------------------------------------------------------------------------


def _schedule(h: float, lam: float, v_B: float) -> WtpSchedule:
    return build_wtp_schedule(ModelParams(h=h, lam=lam, v_B=v_B))


def _level_profit_G(h: float, lam: float, v_B: float, level: int) -> float:
    """High-type profit from pricing at WTP level `level` (1..5)."""
    sched = _schedule(h, lam, v_B)
    return sched.levels[level - 1].wtp * sched.coverage_G[level - 1]


def _argmax_level(h: float, lam: float, v_B: float) -> int:
    cand = best_pooling_candidate(ModelParams(h=h, lam=lam, v_B=v_B))
    return cand.level if cand.level is not None else 1


def _level_boundary(lam: float, v_B: float, max_level: int, tol: float = _TOL) -> float:
    """Largest h at which the profit argmax still sits at or below max_level.

    The argmax level is non-decreasing in h (the price ladder is climbed
    monotonically), so the set {h : level <= max_level} is an interval
    [0.5, boundary] and a predicate bisection finds its edge.  This stays
    well defined when intermediate levels are skipped, which is exactly what
    makes it the right engine for h*.
    """
    if _argmax_level(1.0, lam, v_B) <= max_level:
        return 1.0
    lo, hi = 0.5, 1.0  # level at h=0.5 is 1: predicate true at lo
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _argmax_level(mid, lam, v_B) <= max_level:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _tie_h(lam: float, v_B: float, low: int, high: int) -> Optional[float]:
    """h at which the level-`high` profit overtakes the level-`low` profit."""
    return bisect_threshold(
        lambda h: _level_profit_G(h, lam, v_B, low) - _level_profit_G(h, lam, v_B, high),
        (0.5, 1.0),
    )


def _tie_lambda(h: float, v_B: float, low: int, high: int) -> Optional[float]:
    """lambda at which the level-`low` and level-`high` profits cross."""
    return bisect_threshold(
        lambda lam: _level_profit_G(h, lam, v_B, low) - _level_profit_G(h, lam, v_B, high),
        (0.0, 1.0),
    )


class _StructureConstants(NamedTuple):
    lambda_hat1: Optional[float]
    lambda_hat2: Optional[float]
    lambda_hat3: Optional[float]
    h_knee1: Optional[float]  # peak of the R1 boundary, at lambda_hat3
    h_knee2: Optional[float]  # peak of the R2 boundary, at lambda_hat1


@lru_cache(maxsize=256)
def _structure_constants(v_B: float) -> _StructureConstants:
    """The lambda-axis tie points and the two interior peaks of the region map.

    lambda_hat2: at h=1, where the mid-price (level 3) overtakes the
        naive-good price (level 4).
    lambda_hat1: where levels 2, 3, 4 tie three ways -- located by sliding
        along the level-3/4 tie curve until level 2 stops dominating.
    lambda_hat3: where levels 1, 2, 3 tie three ways -- same idea on the
        level-1/2 tie curve.
    """
    eps = 1e-6
    lambda_hat2 = _tie_lambda(1.0, v_B, 3, 4)

    def excess_2_over_34(lam: float) -> float:
        t = _tie_h(lam, v_B, 3, 4)
        assert t is not None
        return _level_profit_G(t, lam, v_B, 2) - _level_profit_G(t, lam, v_B, 3)

    def excess_1_over_3_at_12(lam: float) -> float:
        t = _tie_h(lam, v_B, 1, 2)
        assert t is not None
        return _level_profit_G(t, lam, v_B, 1) - _level_profit_G(t, lam, v_B, 3)

    lambda_hat1 = None
    if lambda_hat2 is not None:
        lambda_hat1 = bisect_threshold(
            excess_2_over_34, (eps, lambda_hat2 - eps)
        )
    lambda_hat3 = bisect_threshold(excess_1_over_3_at_12, (eps, 1.0 - eps))

    h_knee1 = _tie_h(lambda_hat3, v_B, 1, 2) if lambda_hat3 is not None else None
    h_knee2 = _tie_h(lambda_hat1, v_B, 3, 4) if lambda_hat1 is not None else None
    return _StructureConstants(lambda_hat1, lambda_hat2, lambda_hat3, h_knee1, h_knee2)


def _lambda_bar(h: float, v_B: float, consts: _StructureConstants) -> Optional[float]:
    """Entry point of the profit trough in lambda at fixed h.

    Below the first knee the trough begins where the full-coverage price
    (level 1) catches the partial-coverage price (level 2); in the middle
    band where level 2 catches level 3; at the top where level 3 catches the
    naive-good price (level 4).  Each pairwise profit difference is linear
    in lambda, so the bisection brackets are honest.
    """
    if h <= 0.5:
        return 0.0
    for knee, pair in (
        (consts.h_knee1, (1, 2)),
        (consts.h_knee2, (2, 3)),
        (1.0, (3, 4)),
    ):
        if knee is not None and h <= knee:
            root = _tie_lambda(h, v_B, *pair)
            if root is not None:
                return root
    return _tie_lambda(h, v_B, 3, 4)


@dataclass(frozen=True)
class ThresholdSet:
    """Comparative-statics switch points, evaluated at one parameter set.

    h_star, h_hat1..3 are evaluated at the given lambda; lambda_bar at the
    given h; v_bar, h_underline, h_overline depend only on v_B.  Absent
    thresholds (the defining profit difference never changes sign on the
    bracket) are None.
    """

    h_star: Optional[float]
    h_hat1: Optional[float]
    h_hat2: Optional[float]
    h_hat3: Optional[float]
    lambda_hat1: Optional[float]
    lambda_hat2: Optional[float]
    lambda_hat3: Optional[float]
    lambda_bar: Optional[float]
    v_bar: Optional[float]
    h_underline: Optional[float]
    h_overline: Optional[float]
    v_bar_prime: float = field(default=5.0 / 9.0)

    def to_dict(self) -> dict:
        return {
            "h_star": self.h_star,
            "h_hat1": self.h_hat1,
            "h_hat2": self.h_hat2,
            "h_hat3": self.h_hat3,
            "lambda_hat1": self.lambda_hat1,
            "lambda_hat2": self.lambda_hat2,
            "lambda_hat3": self.lambda_hat3,
            "lambda_bar": self.lambda_bar,
            "v_bar": self.v_bar,
            "h_underline": self.h_underline,
            "h_overline": self.h_overline,
            "v_bar_prime": self.v_bar_prime,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@lru_cache(maxsize=256)
def _v_bar() -> Optional[float]:
    """Existence boundary for v_B: where the worst-case low-type pooling
    profit at h=1 (over lambda) exactly equals the deviation payoff v_B.

    The worst case over lambda sits at the level-3/4 switch lambda_hat2, on
    the level-4 side, so the margin is that branch's profit minus v_B;
    bisection on the margin gives the boundary.
    """

    def margin(v: float) -> float:
        lh2 = _tie_lambda(1.0, v, 3, 4)
        assert lh2 is not None
        sched = _schedule(1.0, lh2, v)
        return sched.levels[3].wtp * sched.coverage_B[3] - v

    return bisect_threshold(margin, (1e-9, 0.25))


def _h_underline(v_B: float) -> Optional[float]:
    """h where the naive market's full-coverage profit meets the
    sophisticated market's mid-price profit (1+h)(1+v_B)/4."""

    def diff(h: float) -> float:
        sched = _schedule(h, 0.0, v_B)
        return sched.levels[1].wtp - (1.0 + h) * (1.0 + v_B) / 4.0

    return bisect_threshold(diff, (0.5, 1.0))


def _h_overline(v_B: float) -> Optional[float]:
    """h where the naive market's high-price profit overtakes the
    sophisticated market's mid-price profit: the root of
    4(1+h)(1+v_B) = (1+2h)(1+2h+v_B(3-2h))."""

    def diff(h: float) -> float:
        return 4.0 * (1.0 + h) * (1.0 + v_B) - (1.0 + 2.0 * h) * (
            1.0 + 2.0 * h + v_B * (3.0 - 2.0 * h)
        )

    return bisect_threshold(diff, (0.5, 1.0))


def thresholds(params: ModelParams) -> ThresholdSet:
    """All comparative-statics thresholds at this parameter set.

    The h-axis thresholds use the argmax-level switch, which exists whether
    or not the pooling equilibrium survives the deviation check -- so the
    set is well defined even for v_B above v_bar, where a sliver of the
    (h, lambda) square has no pure-strategy equilibrium.
    """
    _require_base(params, "thresholds")
    lam, v = params.lam, params.v_B
    consts = _structure_constants(v)

    h_star = _level_boundary(lam, v, 2)
    h_hat1 = _level_boundary(lam, v, 1)
    h_hat2 = _with_existence(_level_boundary(lam, v, 2), lam, v, level=2)
    h_hat3 = _with_existence(_level_boundary(lam, v, 3), lam, v, level=3)

    return ThresholdSet(
        h_star=h_star,
        h_hat1=h_hat1,
        h_hat2=h_hat2,
        h_hat3=h_hat3,
        lambda_hat1=consts.lambda_hat1,
        lambda_hat2=consts.lambda_hat2,
        lambda_hat3=consts.lambda_hat3,
        lambda_bar=_lambda_bar(params.h, v, consts),
        v_bar=_v_bar(),
        h_underline=_h_underline(v),
        h_overline=_h_overline(v),
    )


def _with_existence(
    boundary: float, lam: float, v_B: float, level: int
) -> Optional[float]:
    """Keep a level boundary only if that level actually occurs below it.

    With lambda past a knee the region for an intermediate level is empty;
    its boundary then coincides with a lower level's and is reported absent.
    """
    probe = max(0.5, boundary - 1e-8)
    if _argmax_level(probe, lam, v_B) == level:
        return boundary
    return None


# ---------------------------------------------------------------------------
# Extension solvers.
# ---------------------------------------------------------------------------


def solve_gamma(params: ModelParams) -> EquilibriumOutcome:
    """Pooling equilibrium when the share of high-precision signals varies.

    Covers the fully naive, worthless-bad-product corner (lam = 0, v_B = 0)
    with any gamma in (0, 1).  Only two candidate prices matter: the
    bad-signal WTP 1 - w_bar (full coverage, region label R2) and the
    good-signal WTP w_bar (sell to good-signal holders only, label R4).
    The solver performs the honest profit comparison; the resulting policy
    is constant-p1 below h = (sqrt(5)-1)/2, constant-p2 above
    h = sqrt(5)-1.5 for gamma >= 0.5, and switches at the root of
    1 - w_bar = w_bar^2 in between.
    """
    if params.lam != 0.0 or params.v_B != 0.0 or params.mu0 != 0.5:
        raise UnsupportedVariantError(
            "solve_gamma covers lam=0, v_B=0, mu0=0.5 with free gamma; got "
            f"lam={params.lam}, v_B={params.v_B}, mu0={params.mu0}"
        )
    p1 = wtp_from_posterior(posterior_naive(params, Valence.BAD), params)
    p2 = wtp_from_posterior(posterior_naive(params, Valence.GOOD), params)
    wb = w_bar(params)
    profit1 = p1  # full coverage
    profit2 = p2 * wb  # only good-signal consumers buy
    if profit1 >= profit2:
        return EquilibriumOutcome(
            kind=KIND_POOLING,
            price=p1,
            profit_G=profit1,
            profit_B=p1,
            region="R2",
            candidate_level=2,
        )
    return EquilibriumOutcome(
        kind=KIND_POOLING,
        price=p2,
        profit_G=profit2,
        profit_B=p2 * (1.0 - wb),
        region="R4",
        candidate_level=4,
    )


def gamma_switch(h: float) -> Optional[float]:
    """gamma at which the good-signal price overtakes full coverage (v_B=0).

    Root of w_bar^2 = 1 - w_bar in gamma; absent (None) when full coverage
    dominates for every gamma, i.e. h at or below (sqrt(5)-1)/2.
    """
    if not 0.5 <= h <= 1.0:
        raise ParameterError(f"h must lie in [0.5, 1], got {h}")

    def diff(gamma: float) -> float:
        wb = gamma * h + (1.0 - gamma) * 0.5
        return wb * wb - (1.0 - wb)

    return bisect_threshold(diff, (0.0, 1.0))


def gamma_thresholds() -> tuple[float, float]:
    """(h_low, h_high) for the gamma extension at v_B = 0.

    Below h_low the full-coverage price wins for every gamma; above h_high
    the good-signal price wins for every gamma >= 0.5.  These are the roots
    of 1 - h = h^2 and (3-2h)/4 = ((1+2h)/4)^2.
    """
    h_low = bisect_threshold(lambda h: (1.0 - h) - h * h, (0.5, 1.0))
    h_high = bisect_threshold(
        lambda h: (3.0 - 2.0 * h) / 4.0 - ((1.0 + 2.0 * h) / 4.0) ** 2, (0.5, 1.0)
    )
    assert h_low is not None and h_high is not None
    return h_low, h_high


def solve_prior(params: ModelParams) -> EquilibriumOutcome:
    """Pooling equilibrium of the naive market under an asymmetric prior.

    Two candidate prices: the bad-signal WTP (full coverage) and the
    good-signal WTP.  At mu0 = 0.5 this is exactly the baseline lam = 0
    problem, so the call is delegated to solve_pooling and the outputs are
    bitwise identical.  Outside the deviation-safe region the result is
    kind=none with a diagnostic, not an exception.
    """
    if params.lam != 0.0 or params.gamma != 0.5:
        raise UnsupportedVariantError(
            "solve_prior covers the naive market (lam=0) at gamma=0.5; got "
            f"lam={params.lam}, gamma={params.gamma}"
        )
    if params.mu0 == 0.5:
        return solve_pooling(params)

    p_low = wtp_from_posterior(posterior_naive(params, Valence.BAD), params)
    p_high = wtp_from_posterior(posterior_naive(params, Valence.GOOD), params)
    wb = w_bar(params)  # Pr(good valence | G); Pr(good valence | B) = 1 - wb
    profit_low = p_low
    profit_high = p_high * wb
    if profit_low >= profit_high:
        price, level, dem_B = p_low, 2, 1.0
        profit_G = profit_low
    else:
        price, level, dem_B = p_high, 4, 1.0 - wb
        profit_G = profit_high
    profit_B = price * dem_B
    if profit_B >= params.v_B:
        return EquilibriumOutcome(
            kind=KIND_POOLING,
            price=price,
            profit_G=profit_G,
            profit_B=profit_B,
            region=f"R{level}",
            candidate_level=level,
        )
    return EquilibriumOutcome(
        kind=KIND_NONE,
        note=(
            f"prior mu0={params.mu0:.6g} is inside the deviation region: "
            f"low-type profit {profit_B:.6g} at price {price:.6g} is below "
            f"v_B={params.v_B:.6g}"
        ),
    )


def hstar_prior(v_B: float, mu0: float) -> Optional[float]:
    """Precision at which the prior-model profit switches from falling to
    rising: where the good-signal price's profit catches full coverage."""

    def diff(h: float) -> float:
        p = ModelParams(h=h, lam=0.0, v_B=v_B, mu0=mu0)
        p_low = wtp_from_posterior(posterior_naive(p, Valence.BAD), p)
        p_high = wtp_from_posterior(posterior_naive(p, Valence.GOOD), p)
        return p_high * w_bar(p) - p_low

    return bisect_threshold(diff, (0.5, 1.0))


def prior_mu_lower(h: float, v_B: float, scan_points: int = 2001) -> float:
    """Smallest prior above which pooling survives for every larger prior.

    The existence margin profit_B - v_B can dip negative on an interior
    band of priors (the high-price region with thin good-signal demand).
    There is no closed form; locate the margin's minimum by scanning, then
    bisect on the increasing side.  Returns 0.0 when pooling holds for every
    prior.
    """

    def margin(mu0: float) -> float:
        out = solve_prior(ModelParams(h=h, lam=0.0, v_B=v_B, mu0=mu0))
        if out.kind == KIND_POOLING:
            assert out.profit_B is not None
            return out.profit_B - v_B
        # Reconstruct the failing margin from the diagnostic path.
        p = ModelParams(h=h, lam=0.0, v_B=v_B, mu0=mu0)
        p_low = wtp_from_posterior(posterior_naive(p, Valence.BAD), p)
        p_high = wtp_from_posterior(posterior_naive(p, Valence.GOOD), p)
        wb = w_bar(p)
        if p_low >= p_high * wb:
            return p_low - v_B
        return p_high * (1.0 - wb) - v_B

    grid = [k / (scan_points - 1) for k in range(scan_points)]
    margins = [margin(m) for m in grid]
    if all(m >= 0.0 for m in margins):
        return 0.0
    worst = min(range(scan_points), key=lambda k: margins[k])
    root = bisect_threshold(margin, (grid[worst], 1.0))
    assert root is not None  # margin at mu0=1 is 1 - v_B > 0
    return root


# ---------------------------------------------------------------------------
# Market comparison and sweep classification.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComparisonReport:
    """Profit comparison between a fully naive and a fully sophisticated
    market at identical (h, v_B)."""

    preferred_by_G: str  # "naive" | "sophisticated" | "equal"
    preferred_by_B: str
    profit_gaps: dict  # quality -> naive profit minus sophisticated profit
    naive: EquilibriumOutcome
    sophisticated: EquilibriumOutcome

    def to_dict(self) -> dict:
        return {
            "preferred_by_G": self.preferred_by_G,
            "preferred_by_B": self.preferred_by_B,
            "profit_gaps": dict(self.profit_gaps),
            "naive": self.naive.to_dict(),
            "sophisticated": self.sophisticated.to_dict(),
        }


def compare_markets(
    params_naive: ModelParams, params_soph: ModelParams
) -> ComparisonReport:
    """Corollary-style comparison of the two extreme market compositions."""
    if params_naive.lam != 0.0 or params_soph.lam != 1.0:
        raise ParameterError(
            "compare_markets expects the naive market (lam=0) first and the "
            f"sophisticated market (lam=1) second; got lam={params_naive.lam} "
            f"and lam={params_soph.lam}"
        )
    same = (
        params_naive.h == params_soph.h
        and params_naive.v_B == params_soph.v_B
        and params_naive.gamma == params_soph.gamma
        and params_naive.mu0 == params_soph.mu0
    )
    if not same:
        raise ParameterError("compare_markets needs identical (h, v_B) across markets")

    naive = solve_pooling(params_naive)
    soph = solve_pooling(params_soph)

    def preference(quality: str) -> tuple[str, Optional[float]]:
        pn = getattr(naive, f"profit_{quality}")
        ps = getattr(soph, f"profit_{quality}")
        if pn is None or ps is None:
            return "undefined", None
        gap = pn - ps
        if gap > 0.0:
            return "naive", gap
        if gap < 0.0:
            return "sophisticated", gap
        return "equal", gap

    pref_G, gap_G = preference("G")
    pref_B, gap_B = preference("B")
    return ComparisonReport(
        preferred_by_G=pref_G,
        preferred_by_B=pref_B,
        profit_gaps={"G": gap_G, "B": gap_B},
        naive=naive,
        sophisticated=soph,
    )


def classify_equilibrium(params: ModelParams) -> tuple[str, EquilibriumOutcome]:
    """Region label for sweeps: R1..R4, 'mixed', or 'none'.

    Baseline parameters route through solve_pooling with a solve_mixed
    fallback in the fully naive market; a non-baseline gamma routes to the
    gamma solver and a non-baseline prior to the prior solver.
    """
    if params.gamma != 0.5:
        outcome = solve_gamma(params)
    elif params.mu0 != 0.5:
        outcome = solve_prior(params)
    else:
        outcome = solve_pooling(params)
        if outcome.kind == KIND_NONE and params.lam == 0.0:
            mixed = solve_mixed(params)
            if mixed.kind == KIND_MIXED:
                outcome = mixed
    if outcome.kind == KIND_POOLING:
        assert outcome.region is not None
        return outcome.region, outcome
    return outcome.kind, outcome
