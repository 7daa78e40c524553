"""splab command line: parameter sweeps, region maps, and verification.

Subcommands:
    solve       equilibrium at a single parameter point
    sweep       equilibrium at every point of a parameter grid
    regions     classification map (R1..R4 / mixed / none) over a grid
    compare     naive-vs-sophisticated profit curves along an h sweep
    thresholds  comparative-statics threshold dump at one parameter point
    verify      run the oracle verification suite (exit 3 on failure)

Parameters are given as flags (``--h``, ``--lambda``, ``--vb``, ``--gamma``,
``--mu0``), each either a scalar (``--h 0.7``) or an axis ``min:max:steps``
(``--h 0.5:1:51``, steps >= 2).  A JSON config file (``--config``) may supply
the same keys; explicit flags override it.  Output goes to ``--out`` or
stdout as CSV (default) or JSON; floats are fixed at 12 significant digits so
identical runs are byte-identical.

Examples:
    splab solve --h 0.7 --lambda 1 --vb 0.1
    splab regions --h 0.5:1:51 --lambda 0:1:51 --vb 0.1 --out map.csv
    splab compare --h 0.5:1:501 --vb 0.1 --format json
    splab thresholds --h 0.7 --lambda 0.3 --vb 0.1
    splab verify --seed 0 --draws 200000
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from typing import Iterable, Optional, Sequence

import numpy as np

from .demand import build_wtp_schedule, expected_demand, piecewise_profit
from .equilibrium import (
    _level_profit_G,
    classify_equilibrium,
    compare_markets,
    solve_pooling,
    thresholds,
)
from .model import (
    ModelParams,
    ParameterError,
    Quality,
    UnsupportedVariantError,
)
from .oracle import (
    check_no_separation,
    demand_by_enumeration,
    grid_argmax,
    simulate_market,
)


class UsageError(Exception):
    """Bad flags, config, or axis syntax; maps to exit code 2."""


AXIS_ORDER = ("h", "lambda", "v_B", "gamma", "mu0")
AXIS_DEFAULTS = {"lambda": 0.0, "v_B": 0.1, "gamma": 0.5, "mu0": 0.5}
CONFIG_KEYS = set(AXIS_ORDER) | {"format", "out", "seed", "draws"}

SOLVE_COLUMNS = (
    "h", "lambda", "v_B", "gamma", "mu0",
    "kind", "price", "low_price", "alpha",
    "profit_G", "profit_B", "region", "candidate_level",
)
REGION_COLUMNS = (
    "h", "lambda", "v_B", "gamma", "mu0",
    "classification", "price", "profit_G", "profit_B",
)
COMPARE_COLUMNS = (
    "h", "profit_G_naive", "profit_G_soph", "profit_B_naive", "profit_B_soph",
)


def fmt(value) -> str:
    """Fixed 12-significant-digit float formatting; None becomes ''."""
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    return format(float(value), ".12g")


def _json_value(value):
    """JSON cell: floats rounded to the same 12 digits the CSV prints."""
    if value is None or isinstance(value, (str, int)):
        return value
    return float(format(float(value), ".12g"))


def parse_axis(raw, name: str) -> list[float]:
    """A scalar or a 'min:max:steps' range, as a list of grid values."""
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        return [float(raw)]
    text = str(raw).strip()
    if ":" not in text:
        try:
            return [float(text)]
        except ValueError as exc:
            raise UsageError(f"cannot parse --{name} value {text!r}") from exc
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"--{name} range must be min:max:steps, got {text!r}")
    try:
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise UsageError(f"--{name} range must be min:max:steps, got {text!r}") from exc
    if steps < 2:
        raise UsageError(f"--{name}: swept axis needs steps >= 2, got {steps}")
    if not lo < hi:
        raise UsageError(f"--{name}: range needs min < max, got {text!r}")
    return [float(v) for v in np.linspace(lo, hi, steps)]


def _load_config(path: Optional[str]) -> dict:
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(config, dict):
        raise UsageError(f"config {path} must hold a JSON object")
    unknown = set(config) - CONFIG_KEYS
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return config


def _resolve_axes(args, config: dict) -> dict[str, list[float]]:
    """Merge flags over config over defaults into per-axis value lists."""
    flag_names = {"h": "h", "lambda": "lam", "v_B": "vb", "gamma": "gamma", "mu0": "mu0"}
    axes: dict[str, list[float]] = {}
    for axis in AXIS_ORDER:
        raw = getattr(args, flag_names[axis])
        if raw is None:
            raw = config.get(axis)
        if raw is None:
            if axis == "h":
                raise UsageError("--h is required (scalar or min:max:steps)")
            raw = AXIS_DEFAULTS[axis]
        axes[axis] = parse_axis(raw, axis)
    return axes


def _grid_points(axes: dict[str, list[float]]) -> Iterable[dict[str, float]]:
    lists = [axes[a] for a in AXIS_ORDER]
    for combo in itertools.product(*lists):
        yield dict(zip(AXIS_ORDER, combo))


def _params_at(point: dict[str, float]) -> ModelParams:
    return ModelParams(
        h=point["h"],
        lam=point["lambda"],
        v_B=point["v_B"],
        gamma=point["gamma"],
        mu0=point["mu0"],
    )


def _solve_rows(axes: dict[str, list[float]]) -> list[dict]:
    rows = []
    for point in _grid_points(axes):
        label, out = classify_equilibrium(_params_at(point))
        rows.append(
            {
                **point,
                "kind": out.kind,
                "price": out.price,
                "low_price": out.low_price,
                "alpha": out.alpha,
                "profit_G": out.profit_G,
                "profit_B": out.profit_B,
                "region": out.region,
                "candidate_level": out.candidate_level,
            }
        )
    return rows


def _region_rows(axes: dict[str, list[float]]) -> list[dict]:
    rows = []
    for point in _grid_points(axes):
        label, out = classify_equilibrium(_params_at(point))
        rows.append(
            {
                **point,
                "classification": label,
                "price": out.price,
                "profit_G": out.profit_G,
                "profit_B": out.profit_B,
            }
        )
    return rows


def _compare_rows(axes: dict[str, list[float]]) -> list[dict]:
    for fixed in ("gamma", "mu0"):
        if len(axes[fixed]) != 1:
            raise UsageError(f"compare does not sweep --{fixed}")
    if len(axes["v_B"]) != 1:
        raise UsageError("compare needs a scalar --vb")
    gamma, mu0, v_B = axes["gamma"][0], axes["mu0"][0], axes["v_B"][0]
    rows = []
    for h in axes["h"]:
        naive = ModelParams(h=h, lam=0.0, v_B=v_B, gamma=gamma, mu0=mu0)
        soph = ModelParams(h=h, lam=1.0, v_B=v_B, gamma=gamma, mu0=mu0)
        report = compare_markets(naive, soph)
        rows.append(
            {
                "h": h,
                "profit_G_naive": report.naive.profit_G,
                "profit_G_soph": report.sophisticated.profit_G,
                "profit_B_naive": report.naive.profit_B,
                "profit_B_soph": report.sophisticated.profit_B,
            }
        )
    return rows


def _threshold_rows(axes: dict[str, list[float]]) -> list[dict]:
    for axis in AXIS_ORDER:
        if len(axes[axis]) != 1:
            raise UsageError("thresholds takes scalar parameters only")
    point = next(iter(_grid_points(axes)))
    ts = thresholds(_params_at(point))
    row = {"h": point["h"], "lambda": point["lambda"], "v_B": point["v_B"]}
    row.update(ts.to_dict())
    return [row]


def _write_rows(rows: Sequence[dict], columns: Sequence[str], args) -> None:
    out_format = args.format or "csv"
    if out_format == "csv":
        text_rows = [[fmt(row.get(col)) for col in columns] for row in rows]
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(columns)
                writer.writerows(text_rows)
        else:
            writer = csv.writer(sys.stdout, lineterminator="\n")
            writer.writerow(columns)
            writer.writerows(text_rows)
        return
    payload = [
        {col: _json_value(row.get(col)) for col in columns} for row in rows
    ]
    text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# Verification suite (the `verify` subcommand).
# ---------------------------------------------------------------------------


def _random_base_params(rng: np.random.Generator) -> ModelParams:
    return ModelParams(
        h=float(rng.uniform(0.5, 1.0)),
        lam=float(rng.uniform(0.0, 1.0)),
        v_B=float(rng.uniform(0.0, 0.95)),
    )


def _check_oracle_agreement(rng: np.random.Generator) -> tuple[bool, str]:
    mismatches = 0
    checked = 0
    for _ in range(200):
        params = _random_base_params(rng)
        out = solve_pooling(params)
        if out.kind != "pooling":
            continue
        checked += 1
        for quality in (Quality.G, Quality.B):
            price, _ = grid_argmax(params, quality)
            if quality is Quality.G and price != out.price:
                mismatches += 1
    return mismatches == 0, f"{checked} pooling points, {mismatches} price mismatches"


def _check_piecewise_identity(rng: np.random.Generator) -> tuple[bool, str]:
    worst = 0.0
    for _ in range(2000):
        params = _random_base_params(rng)
        schedule = build_wtp_schedule(params)
        for quality in (Quality.G, Quality.B):
            profile = piecewise_profit(params, quality)
            for price in rng.uniform(0.0, 1.0, size=5):
                p = float(price)
                gap = abs(profile.profit(p) - p * expected_demand(schedule, p, quality))
                worst = max(worst, gap)
    return worst <= 1e-12, f"max |piecewise - p*demand| = {worst:.3g}"


def _check_no_separation(rng: np.random.Generator) -> tuple[bool, str]:
    worst = float("inf")
    for _ in range(20):
        params = _random_base_params(rng)
        report = check_no_separation(params)
        if report.separation_possible:
            return False, f"separation witness failed at {params.to_dict()}"
        worst = min(worst, report.min_margin)
    return True, f"min mimicry margin over deviations = {worst:.3g}"


def _check_threshold_certificates() -> tuple[bool, str]:
    params = ModelParams(h=0.7, lam=0.3, v_B=0.1)
    ts = thresholds(params)
    failures = []

    def tie_gap(value: Optional[float], lam: float, low: int, high: int, name: str):
        if value is None:
            return
        gap = abs(
            _level_profit_G(value, lam, params.v_B, low)
            - _level_profit_G(value, lam, params.v_B, high)
        )
        if gap > 1e-7:
            failures.append(f"{name}: residual {gap:.3g}")

    # Region boundaries at this lambda tie adjacent optimal levels.
    tie_gap(ts.h_hat1, params.lam, 1, 2, "h_hat1")
    tie_gap(ts.h_hat2, params.lam, 2, 3, "h_hat2")
    tie_gap(ts.h_hat3, params.lam, 3, 4, "h_hat3")
    if ts.lambda_bar is not None and not 0.0 <= ts.lambda_bar <= 1.0:
        failures.append(f"lambda_bar out of range: {ts.lambda_bar}")
    star_soph = thresholds(ModelParams(h=0.7, lam=1.0, v_B=params.v_B)).h_star
    star_naive = thresholds(ModelParams(h=0.7, lam=0.0, v_B=params.v_B)).h_star
    order = [0.5, star_soph, ts.h_underline, star_naive, ts.h_overline, 1.0]
    if any(v is None for v in order) or any(
        a > b + 1e-12 for a, b in zip(order, order[1:])
    ):
        failures.append(f"threshold ordering violated: {order}")
    if failures:
        return False, "; ".join(failures)
    return True, "tie residuals <= 1e-7 and ordering holds at v_B=0.1"


def _check_monte_carlo(rng: np.random.Generator, draws: int, seed: int) -> tuple[bool, str]:
    worst_sigma = 0.0
    for k in range(6):
        params = _random_base_params(rng)
        quality = Quality.G if k % 2 == 0 else Quality.B
        price = float(rng.uniform(0.0, 1.0))
        report = simulate_market(params, quality, price, draws=draws, seed=seed + k)
        analytic = float(demand_by_enumeration(params, quality, price))
        gap = abs(report.est_demand - analytic)
        if report.se_demand == 0.0:
            # Degenerate cell (all draws buy or none do): analytic value may
            # still carry float-summation dust, so allow a strict tolerance.
            if gap > 1e-12:
                return False, f"zero-variance cell missed analytic demand by {gap:.3g}"
            continue
        worst_sigma = max(worst_sigma, gap / report.se_demand)
        twin = simulate_market(params, quality, price, draws=draws, seed=seed + k)
        if twin.to_json() != report.to_json():
            return False, "identical seeds produced different reports"
    return worst_sigma <= 4.0, f"max |error|/SE = {worst_sigma:.2f} over 6 runs"


def _run_verify(args) -> int:
    seed = args.seed if args.seed is not None else 0
    draws = args.draws if args.draws is not None else 200000
    rng = np.random.default_rng(seed)
    checks = [
        ("oracle-vs-solver price agreement", lambda: _check_oracle_agreement(rng)),
        ("piecewise profit identity", lambda: _check_piecewise_identity(rng)),
        ("no-separation witnesses", lambda: _check_no_separation(rng)),
        ("threshold certificates", _check_threshold_certificates),
        ("Monte-Carlo demand", lambda: _check_monte_carlo(rng, draws, seed)),
    ]
    all_ok = True
    for name, runner in checks:
        ok, detail = runner()
        all_ok = all_ok and ok
        print(f"{'PASS' if ok else 'FAIL'}: {name} ({detail})")
    print("verification " + ("passed" if all_ok else "FAILED"))
    return 0 if all_ok else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splab",
        description="equilibrium solver and sweep tool for the signal-pricing market",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("solve", "equilibrium at one parameter point"),
        ("sweep", "equilibria over a parameter grid"),
        ("regions", "region classification map over a grid"),
        ("compare", "naive vs sophisticated profit curves over h"),
        ("thresholds", "threshold dump at one parameter point"),
        ("verify", "run the oracle verification suite"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--config", help="JSON file with parameter/output keys")
        p.add_argument("--h", dest="h", help="precision: scalar or min:max:steps")
        p.add_argument("--lambda", dest="lam", help="sophisticated share: scalar or range")
        p.add_argument("--vb", dest="vb", help="bad-quality value: scalar or range")
        p.add_argument("--gamma", dest="gamma", help="high-precision share: scalar or range")
        p.add_argument("--mu0", dest="mu0", help="prior Pr(G): scalar or range")
        p.add_argument("--out", help="output file (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), help="output format (default csv)")
        p.add_argument("--seed", type=int, help="seed for the verification suite")
        if name == "verify":
            p.add_argument("--draws", type=int, help="Monte-Carlo draws per check")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _run_verify(args)
        config = _load_config(args.config)
        if args.format is None:
            config_format = config.get("format")
            if config_format is not None:
                if config_format not in ("csv", "json"):
                    raise UsageError(f"config format must be csv or json, got {config_format!r}")
                args.format = config_format
        if args.out is None:
            args.out = config.get("out")
        axes = _resolve_axes(args, config)
        if args.command == "solve":
            if any(len(values) > 1 for values in axes.values()):
                raise UsageError("solve takes scalar parameters; use sweep for grids")
            rows, columns = _solve_rows(axes), SOLVE_COLUMNS
        elif args.command == "sweep":
            rows, columns = _solve_rows(axes), SOLVE_COLUMNS
        elif args.command == "regions":
            rows, columns = _region_rows(axes), REGION_COLUMNS
        elif args.command == "compare":
            rows, columns = _compare_rows(axes), COMPARE_COLUMNS
        else:  # thresholds
            rows = _threshold_rows(axes)
            columns = tuple(rows[0].keys())
        _write_rows(rows, columns, args)
        return 0
    except (UsageError, ParameterError, UnsupportedVariantError) as exc:
        print(f"splab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
