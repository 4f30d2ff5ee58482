"""Seeded Monte Carlo verification of the analytic results.

Samples the full generative model (intensity L ~ Gamma, count N | L ~
Poisson) and the shift-allocation null (drawing a nurse's shifts without
replacement), so every closed-form tail and exact p-value can be checked
against an estimate that shares none of its code path.

Reproducibility contract: the random source is SplitMix64 and every
replication draws from its own substream, derived from (seed,
replication index).  An estimate is therefore a pure function of its
SimConfig, bit for bit, on either kernel backend, regardless of how
replications might be batched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from ._backend import kernels
from .distributions import HypergeomParams
from .mixture import MixedPoissonModel

__all__ = [
    "SimConfig",
    "SimEstimate",
    "MomentEstimates",
    "simulate_mixture_tail",
    "simulate_mixture_moments",
    "simulate_rate_ratio",
    "simulate_allocation",
]

_MASK64 = 0xFFFFFFFFFFFFFFFF


@dataclass(frozen=True)
class SimConfig:
    """Replication count, seed, and the model under simulation (a
    MixedPoissonModel for mixture/rate-ratio runs, HypergeomParams for
    allocation runs)."""

    replications: int
    seed: int
    model: Union[MixedPoissonModel, HypergeomParams]

    def __post_init__(self):
        if self.replications < 1:
            raise ValueError(f"replications must be >= 1, got {self.replications}")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must fit in 64 unsigned bits")


@dataclass(frozen=True)
class SimEstimate:
    """A binary-outcome estimate: hit fraction and its binomial standard
    error sqrt(p(1-p)/reps)."""

    point: float
    std_error: float
    replications: int


@dataclass(frozen=True)
class MomentEstimates:
    """Sample mean and variance of the simulated counts, each with a
    moment-based standard error (the variance band uses the fourth
    central moment)."""

    mean: float
    mean_std_error: float
    variance: float
    variance_std_error: float
    replications: int


def _estimate(hits: int, reps: int) -> SimEstimate:
    p = hits / reps
    return SimEstimate(
        point=p,
        std_error=math.sqrt(p * (1.0 - p) / reps),
        replications=reps,
    )


def _require_mixture(config: SimConfig) -> MixedPoissonModel:
    if not isinstance(config.model, MixedPoissonModel):
        raise TypeError("this simulation needs a MixedPoissonModel config")
    return config.model


def simulate_mixture_tail(config: SimConfig, n: int) -> SimEstimate:
    """Estimate P(N >= n) by sampling L ~ Gamma(rho, scale mu/rho) and
    N ~ Poisson(L * t) per replication."""
    model = _require_mixture(config)
    if n != int(n) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n}")
    hits = kernels.mixture_tail_hits(
        model.rho, model.mu, model.t, int(n), config.replications, config.seed
    )
    return _estimate(hits, config.replications)


def simulate_mixture_moments(config: SimConfig) -> MomentEstimates:
    """Sample mean and variance of N, for checking the overdispersion
    formula t*mu + (t*mu)^2/rho."""
    model = _require_mixture(config)
    reps = config.replications
    s1, s2, s3, s4 = kernels.mixture_moment_sums(
        model.rho, model.mu, model.t, reps, config.seed
    )
    mean = s1 / reps
    # central moments from raw power sums
    m2 = s2 / reps - mean * mean
    m4 = (
        s4 / reps
        - 4.0 * mean * s3 / reps
        + 6.0 * mean * mean * s2 / reps
        - 3.0 * mean**4
    )
    variance = m2 * reps / (reps - 1) if reps > 1 else 0.0
    mean_se = math.sqrt(max(m2, 0.0) / reps)
    # var(s^2) ~ (m4 - m2^2 (reps-3)/(reps-1)) / reps
    var_of_var = max(m4 - m2 * m2 * (reps - 3) / (reps - 1), 0.0) / reps if reps > 1 else 0.0
    return MomentEstimates(
        mean=mean,
        mean_std_error=mean_se,
        variance=variance,
        variance_std_error=math.sqrt(var_of_var),
        replications=reps,
    )


def simulate_rate_ratio(config: SimConfig, k: float) -> SimEstimate:
    """Estimate the probability that one of two independent
    exponential-intensity nurses has at least k times the other's rate.

    Only defined for rho = 1 (exponential intensities)."""
    model = _require_mixture(config)
    if model.rho != 1.0:
        raise ValueError(
            f"rate-ratio simulation requires rho = 1 (exponential intensities), "
            f"got rho = {model.rho}"
        )
    k = float(k)
    if not k >= 1.0:
        raise ValueError(f"k must be >= 1, got {k}")
    hits = kernels.rate_ratio_hits(model.mu, k, config.replications, config.seed)
    return _estimate(hits, config.replications)


def simulate_allocation(config: SimConfig, observed: int) -> SimEstimate:
    """Estimate P(count >= observed) by drawing the suspect's shifts
    without replacement from the shift population each replication."""
    if not isinstance(config.model, HypergeomParams):
        raise TypeError("allocation simulation needs a HypergeomParams config")
    params = config.model
    if observed != int(observed) or observed < 0:
        raise ValueError(f"observed must be a nonnegative integer, got {observed}")
    hits = kernels.allocation_hits(
        params.population,
        params.successes,
        params.draws,
        int(observed),
        config.replications,
        config.seed,
    )
    return _estimate(hits, config.replications)
