"""Monte Carlo experiments for estimator quality and decoder block error rate.

Work is split into fixed-size chunks of trials whose boundaries do not depend
on the worker count; chunk partials are merged in chunk order with math.fsum.
Together with per-trial RNG streams keyed by (experiment tag, p, trial index)
this makes every report, and hence every CSV byte, identical for any number
of workers and any scheduling.
"""

from __future__ import annotations

import csv
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from multiprocessing import get_context

import numpy as np

from .channel import RngStream, derive_stream_index, sample_bsc_error
from .decoder import build_tanner, sum_product_decode
from .estimator import estimate_noise
from .gf2core import BitMatrix, syndrome, weight

TRIAL_CHUNK = 128
# sum_product_decode requires 0 < prior < 1/2 while true p and p_hat may sit
# on either boundary; the clamp is far below any probability the experiments
# can distinguish
PRIOR_FLOOR = 1e-6
PRIOR_CEIL = 0.5 - 1e-6

MSE_COLUMNS = (
    "p", "trials", "mse_phat", "se_mse_phat", "mse_perfect_ref",
    "mean_ratio", "se_mean_ratio", "zero_weight_trials", "mse_vs_true_p",
)
BLER_COLUMNS = (
    "p", "scenario", "trials", "block_errors", "bler", "se_bler",
    "bler_upper95", "bler_depolarizing",
)


@dataclass(frozen=True)
class Scenario:
    """Decoder knowledge model: what prior the decoder is handed.

    fixed runs with a constant assumed probability, perfect with the true
    channel p, estimated with the per-syndrome estimate.
    """

    kind: str
    p_assumed: float | None = None

    def __post_init__(self):
        if self.kind not in ("fixed", "perfect", "estimated"):
            raise ValueError(f"unknown scenario kind {self.kind!r}")
        if self.kind == "fixed":
            if self.p_assumed is None or not 0.0 < self.p_assumed < 0.5:
                raise ValueError("fixed scenario needs 0 < p_assumed < 1/2")
        elif self.p_assumed is not None:
            raise ValueError(f"{self.kind} scenario takes no assumed probability")

    @classmethod
    def parse(cls, token: str) -> "Scenario":
        token = token.strip()
        if token in ("perfect", "estimated"):
            return cls(token)
        if token.startswith("fixed:"):
            try:
                value = float(token[len("fixed:"):])
            except ValueError:
                raise ValueError(f"bad scenario token {token!r}") from None
            return cls("fixed", value)
        raise ValueError(f"bad scenario token {token!r}")

    def __str__(self) -> str:
        if self.kind == "fixed":
            return f"fixed:{self.p_assumed!r}"
        return self.kind


@dataclass(frozen=True)
class MseRow:
    p: float
    trials: int
    mse_phat: float
    se_mse_phat: float
    mse_perfect_ref: float
    mean_ratio: float | None
    se_mean_ratio: float | None
    zero_weight_trials: int
    mse_vs_true_p: float


@dataclass(frozen=True)
class MseReport:
    rows: tuple[MseRow, ...]


@dataclass(frozen=True)
class BlerRow:
    p: float
    scenario: str
    trials: int
    block_errors: int
    bler: float
    se_bler: float
    bler_upper95: float | None
    bler_depolarizing: float


@dataclass(frozen=True)
class BlerReport:
    rows: tuple[BlerRow, ...]


def _uniform_row_weight(h: BitMatrix) -> int:
    weights = np.bitwise_count(h.words).sum(axis=1)
    r = int(weights[0])
    if not (weights == r).all():
        raise ValueError("matrix row weight is not uniform; estimator undefined")
    return r


def _chunks(trials: int):
    return [(lo, min(lo + TRIAL_CHUNK, trials)) for lo in range(0, trials, TRIAL_CHUNK)]


def _mean_and_se(total: float, total_sq: float, count: int):
    mean = total / count
    if count < 2:
        return mean, 0.0
    var = max(total_sq - count * mean * mean, 0.0) / (count - 1)
    return mean, math.sqrt(var / count)


# worker state is inherited through fork at pool creation; chunk tasks then
# carry only indices
_CTX = None


def _mse_chunk(task):
    p, lo, hi = task
    h, master_seed = _CTX["h"], _CTX["seed"]
    m, n, r = h.rows, h.cols, _CTX["r"]
    sq_real, sq_true, ratios = [], [], []
    zero_weight = 0
    for t in range(lo, hi):
        rng = RngStream(master_seed, derive_stream_index("mse", p, t))
        e = sample_bsc_error(n, p, rng)
        est = estimate_noise(weight(syndrome(h, e)), m, r)
        wt_e = weight(e)
        sq_real.append((est.p_hat - wt_e / n) ** 2)
        sq_true.append((est.p_hat - p) ** 2)
        if wt_e == 0:
            zero_weight += 1
        else:
            ratios.append(n * est.p_hat / wt_e)
    return (
        math.fsum(sq_real), math.fsum(x * x for x in sq_real),
        math.fsum(sq_true),
        math.fsum(ratios), math.fsum(x * x for x in ratios), len(ratios),
        zero_weight,
    )


def _bler_chunk(task):
    p, lo, hi = task
    h, master_seed = _CTX["h"], _CTX["seed"]
    graph, scenarios, max_iters = _CTX["graph"], _CTX["scenarios"], _CTX["max_iters"]
    m, n, r = h.rows, h.cols, _CTX["r"]
    errors = [0] * len(scenarios)
    for t in range(lo, hi):
        rng = RngStream(master_seed, derive_stream_index("bler", p, t))
        e = sample_bsc_error(n, p, rng)
        s = syndrome(h, e)
        p_hat = estimate_noise(weight(s), m, r).p_hat
        for k, scenario in enumerate(scenarios):
            if scenario.kind == "fixed":
                prior = scenario.p_assumed
            elif scenario.kind == "perfect":
                prior = p
            else:
                prior = p_hat
            prior = min(max(prior, PRIOR_FLOOR), PRIOR_CEIL)
            res = sum_product_decode(graph, s, prior, max_iters)
            if not res.converged or res.error_estimate != e:
                errors[k] += 1
    return tuple(errors)


def _run_chunks(fn, tasks, workers):
    global _CTX
    if workers <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    ctx = get_context("fork")
    with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
        return list(pool.map(fn, tasks, chunksize=1))


def _progress(tag: str, p: float, trials: int):
    print(f"[{tag}] p={p!r}: {trials} trials done", file=sys.stderr, flush=True)


def run_mse_experiment(
    h: BitMatrix,
    p_list,
    trials: int,
    master_seed: int,
    workers: int = 1,
) -> MseReport:
    """Estimate per-trial noise from syndromes alone and score the estimates.

    mse_phat compares p_hat against the realized error fraction wt(e)/n of
    the same trial; mse_vs_true_p compares against the channel parameter p.
    mean_ratio averages n*p_hat / wt(e) over trials with wt(e) > 0.
    """
    global _CTX
    if trials < 1:
        raise ValueError("trials must be >= 1")
    r = _uniform_row_weight(h)
    _CTX = {"h": h, "seed": master_seed, "r": r}
    rows = []
    try:
        for p in sorted(p_list):
            tasks = [(p, lo, hi) for lo, hi in _chunks(trials)]
            parts = _run_chunks(_mse_chunk, tasks, workers)
            sq_real = math.fsum(c[0] for c in parts)
            sq_real_sq = math.fsum(c[1] for c in parts)
            sq_true = math.fsum(c[2] for c in parts)
            ratio_sum = math.fsum(c[3] for c in parts)
            ratio_sq = math.fsum(c[4] for c in parts)
            ratio_count = sum(c[5] for c in parts)
            zero_weight = sum(c[6] for c in parts)
            mse_phat, se_mse = _mean_and_se(sq_real, sq_real_sq, trials)
            if ratio_count > 0:
                mean_ratio, se_ratio = _mean_and_se(ratio_sum, ratio_sq, ratio_count)
            else:
                mean_ratio = se_ratio = None
            rows.append(MseRow(
                p=p, trials=trials, mse_phat=mse_phat, se_mse_phat=se_mse,
                mse_perfect_ref=p * (1.0 - p) / h.cols,
                mean_ratio=mean_ratio, se_mean_ratio=se_ratio,
                zero_weight_trials=zero_weight,
                mse_vs_true_p=sq_true / trials,
            ))
            _progress("mse", p, trials)
    finally:
        _CTX = None
    return MseReport(tuple(rows))


def run_bler_experiment(
    h: BitMatrix,
    p_list,
    scenarios,
    trials: int,
    max_iters: int,
    master_seed: int,
    workers: int = 1,
) -> BlerReport:
    """Paired block-error-rate comparison across decoder knowledge scenarios.

    Every scenario decodes the same error and syndrome within a trial, so
    scenario differences are not diluted by sampling noise. A block error is
    a decode that fails to converge or converges to a different error vector.
    """
    global _CTX
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if max_iters < 1:
        raise ValueError("max_iters must be >= 1")
    scenarios = tuple(scenarios)
    if not scenarios:
        raise ValueError("at least one scenario required")
    r = _uniform_row_weight(h)
    _CTX = {
        "h": h, "seed": master_seed, "r": r,
        "graph": build_tanner(h), "scenarios": scenarios, "max_iters": max_iters,
    }
    rows = []
    try:
        for p in sorted(p_list):
            tasks = [(p, lo, hi) for lo, hi in _chunks(trials)]
            parts = _run_chunks(_bler_chunk, tasks, workers)
            for k, scenario in enumerate(scenarios):
                block_errors = sum(part[k] for part in parts)
                bler = block_errors / trials
                rows.append(BlerRow(
                    p=p, scenario=str(scenario), trials=trials,
                    block_errors=block_errors, bler=bler,
                    se_bler=math.sqrt(bler * (1.0 - bler) / trials),
                    bler_upper95=3.0 / trials if block_errors == 0 else None,
                    bler_depolarizing=1.0 - (1.0 - bler) ** 2,
                ))
            _progress("bler", p, trials)
    finally:
        _CTX = None
    return BlerReport(tuple(rows))


def two_proportion_sigma(
    errors_a: int, trials_a: int, errors_b: int, trials_b: int
) -> float:
    """Absolute z-statistic for a difference of two binomial proportions.

    Pooled-variance form; degenerate pools (both rates 0 or both 1) give 0.
    """
    if trials_a < 1 or trials_b < 1:
        raise ValueError("trials must be >= 1")
    if not 0 <= errors_a <= trials_a or not 0 <= errors_b <= trials_b:
        raise ValueError("error counts must lie in [0, trials]")
    pooled = (errors_a + errors_b) / (trials_a + trials_b)
    variance = pooled * (1.0 - pooled) * (1.0 / trials_a + 1.0 / trials_b)
    if variance == 0.0:
        return 0.0
    return abs(errors_a / trials_a - errors_b / trials_b) / math.sqrt(variance)


def _format(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(report, path) -> None:
    """Write a report as CSV: header, then rows ordered p-ascending (and
    scenario in declared order for BLER). Floats use repr so parsing the file
    back recovers the exact values."""
    if isinstance(report, MseReport):
        columns = MSE_COLUMNS
    elif isinstance(report, BlerReport):
        columns = BLER_COLUMNS
    else:
        raise TypeError(f"cannot serialize {type(report).__name__}")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for row in report.rows:
            writer.writerow([_format(getattr(row, name)) for name in columns])
