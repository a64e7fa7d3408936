"""Maximum likelihood noise estimation from syndrome weight.

For a parity-check matrix whose rows all have weight r, each syndrome bit of
a BSC(p) error flips with probability q = (1 - (1-2p)^r)/2. Treating the m
syndrome bits as independent makes wt(s) binomial, and maximizing the
likelihood in p inverts that relation at the observed syndrome fraction:

    p_hat = 1/2 - (1/2) (1 - 2 s/m)^(1/r)   if s/m <= 1/2, else 1/2.

The analytic mean and mean squared error of p_hat under the binomial model
are exact sums over the syndrome-weight distribution, evaluated here in log
domain because C(1420, 710) overflows any fixed-width float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def _check_count(value: int, name: str, minimum: int) -> int:
    if not isinstance(value, (int,)) or isinstance(value, bool):
        raise ValueError(f"{name} must be an integer")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}")
    return value


def _check_probability(p: float, name: str = "p") -> float:
    if not 0.0 <= p < 0.5:
        raise ValueError(f"{name} must satisfy 0 <= {name} < 1/2")
    return float(p)


@dataclass(frozen=True)
class NoiseEstimate:
    """Result of inverting one observed syndrome weight."""

    p_hat: float
    syndrome_weight: int
    m: int
    r: int

    def error_count(self, n: int) -> int:
        """Estimated number of flipped bits in a length-n error vector."""
        return estimated_error_count(self.p_hat, n)


@dataclass(frozen=True)
class EstimatorStats:
    mean_mu: float
    mse: float


def syndrome_flip_prob(r: int, p: float) -> float:
    """Probability q that a parity over r independent BSC(p) bits is odd.

    Closed form of the odd-term binomial sum: (1 - (1-2p)^r) / 2.
    """
    _check_count(r, "r", 1)
    _check_probability(p)
    return 0.5 * (1.0 - (1.0 - 2.0 * p) ** r)


def estimate_noise(syndrome_weight: int, m: int, r: int) -> NoiseEstimate:
    """ML noise level given an observed syndrome weight on m weight-r checks."""
    _check_count(m, "m", 1)
    _check_count(r, "r", 1)
    _check_count(syndrome_weight, "syndrome_weight", 0)
    if syndrome_weight > m:
        raise ValueError("syndrome_weight cannot exceed m")
    ratio = syndrome_weight / m
    if ratio > 0.5:
        p_hat = 0.5
    else:
        p_hat = 0.5 - 0.5 * (1.0 - 2.0 * ratio) ** (1.0 / r)
    return NoiseEstimate(p_hat, syndrome_weight, m, r)


def estimated_error_count(p_hat: float, n: int) -> int:
    """Nearest integer to n * p_hat, rounding halves away from zero."""
    if not 0.0 <= p_hat <= 0.5:
        raise ValueError("p_hat must lie in [0, 1/2]")
    _check_count(n, "n", 0)
    return int(math.floor(n * p_hat + 0.5))


def estimator_stats(m: int, r: int, p: float) -> EstimatorStats:
    """Mean and MSE of the estimator under the binomial syndrome-weight model.

    mu  = 1/2 - (1/2) sum_{i=0}^{floor(m/2)} C(m,i) q^i (1-q)^(m-i) g_i
    mse = p^2 - 2 p mu + 1/4
          + (1/4) sum_{i=0}^{floor(m/2)} C(m,i) q^i (1-q)^(m-i) (g_i^2 - 2 g_i)

    with g_i = (1 - 2i/m)^(1/r); weights above m/2 contribute the constant
    1/2 (resp. 1/4), which the leading terms already account for.
    """
    _check_count(m, "m", 1)
    _check_count(r, "r", 1)
    _check_probability(p)
    q = syndrome_flip_prob(r, p)
    if q == 0.0:
        # p = 0: the syndrome is always empty and p_hat is exactly 0
        return EstimatorStats(0.0, 0.0)
    log_q = math.log(q)
    log_1q = math.log1p(-q)
    lg_m = math.lgamma(m + 1)
    mean_terms = []
    mse_terms = []
    for i in range(m // 2 + 1):
        log_pmf = (
            lg_m
            - math.lgamma(i + 1)
            - math.lgamma(m - i + 1)
            + i * log_q
            + (m - i) * log_1q
        )
        w = math.exp(log_pmf)
        g = (1.0 - 2.0 * i / m) ** (1.0 / r)
        mean_terms.append(w * g)
        mse_terms.append(w * (g * g - 2.0 * g))
    mu = 0.5 - 0.5 * math.fsum(mean_terms)
    mse = p * p - 2.0 * p * mu + 0.25 + 0.25 * math.fsum(mse_terms)
    return EstimatorStats(mu, mse)


def estimator_mean(m: int, r: int, p: float) -> float:
    return estimator_stats(m, r, p).mean_mu


def estimator_mse(m: int, r: int, p: float) -> float:
    return estimator_stats(m, r, p).mse
