"""Poisson, negative binomial and hypergeometric mass/tail functions.

Tail probabilities are never formed as 1 - CDF when they are small:
upper-support terms are summed directly in log space, which is what keeps
p-values near 1e-7 (ratios of binomial coefficients like C(1029, 142))
at full double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numerics import log_binomial, log_gamma, log_sum_exp, reg_lower_incomplete_gamma

__all__ = [
    "PoissonParams",
    "NegBinomialParams",
    "HypergeomParams",
    "poisson_pmf",
    "poisson_tail",
    "neg_binomial_pmf",
    "neg_binomial_tail",
    "hypergeom_support",
    "hypergeom_log_pmf",
    "hypergeom_pmf",
    "hypergeom_tail",
]


@dataclass(frozen=True)
class PoissonParams:
    """Poisson count distribution; `mean` is the expected number of
    incidents over the observation window."""

    mean: float

    def __post_init__(self):
        if not self.mean > 0.0 or math.isinf(self.mean):
            raise ValueError(f"Poisson mean must be finite and > 0, got {self.mean}")


@dataclass(frozen=True)
class NegBinomialParams:
    """Negative binomial in (shape, success_prob) form.

    A Poisson count whose mean is Gamma-distributed with shape `shape`
    marginalizes to this distribution with
    success_prob = shape / (shape + gamma_mean); shape 1 is geometric.
    """

    shape: float
    success_prob: float

    def __post_init__(self):
        if not self.shape > 0.0 or math.isinf(self.shape):
            raise ValueError(f"shape must be finite and > 0, got {self.shape}")
        if not 0.0 < self.success_prob < 1.0:
            raise ValueError(
                f"success_prob must lie in (0, 1), got {self.success_prob}"
            )


@dataclass(frozen=True)
class HypergeomParams:
    """Sampling-without-replacement null: `draws` shifts taken uniformly
    from `population` shifts of which `successes` carry an incident."""

    population: int
    successes: int
    draws: int

    def __post_init__(self):
        if self.population < 0:
            raise ValueError(f"population must be >= 0, got {self.population}")
        if not 0 <= self.successes <= self.population:
            raise ValueError(
                f"successes must lie in [0, population], got {self.successes}"
            )
        if not 0 <= self.draws <= self.population:
            raise ValueError(f"draws must lie in [0, population], got {self.draws}")


def _check_count(n: int, name: str = "n") -> int:
    if n != int(n) or n < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {n}")
    return int(n)


# --- Poisson ---------------------------------------------------------------


def poisson_pmf(params: PoissonParams, k: int) -> float:
    """P(N = k)."""
    k = _check_count(k, "k")
    m = params.mean
    return math.exp(k * math.log(m) - m - log_gamma(k + 1.0))


def poisson_tail(params: PoissonParams, n: int) -> float:
    """P(N >= n), via the incomplete-gamma identity
    P(N >= n) = P(n, mean)."""
    n = _check_count(n)
    if n == 0:
        return 1.0
    return reg_lower_incomplete_gamma(float(n), params.mean)


# --- Negative binomial ------------------------------------------------------


def neg_binomial_log_pmf(params: NegBinomialParams, k: int) -> float:
    k = _check_count(k, "k")
    r = params.shape
    p = params.success_prob
    return (
        log_gamma(r + k)
        - log_gamma(r)
        - log_gamma(k + 1.0)
        + r * math.log(p)
        + k * math.log1p(-p)
    )


def neg_binomial_pmf(params: NegBinomialParams, k: int) -> float:
    """P(N = k)."""
    return math.exp(neg_binomial_log_pmf(params, k))


def neg_binomial_tail(params: NegBinomialParams, n: int) -> float:
    """P(N >= n).

    Shape 1 is the geometric closed form (1 - success_prob)^n; other
    shapes sum the upper support in log space until the geometric
    remainder bound is negligible.
    """
    n = _check_count(n)
    if n == 0:
        return 1.0
    r = params.shape
    p = params.success_prob
    q = 1.0 - p
    if r == 1.0:
        return math.pow(q, n)
    # online log-sum-exp over pmf(n), pmf(n+1), ...
    log_term = neg_binomial_log_pmf(params, n)
    m = log_term
    s = 1.0
    j = n
    while True:
        ratio = q * (r + j) / (j + 1.0)
        log_term += math.log(ratio)
        j += 1
        if log_term <= m:
            s += math.exp(log_term - m)
        else:
            s = s * math.exp(m - log_term) + 1.0
            m = log_term
        # once past the mode the term ratios only shrink toward q, so the
        # remainder is bounded by a geometric series
        if ratio < 1.0:
            bound = max(ratio, q)
            remainder = math.exp(log_term - m) * bound / (1.0 - bound)
            if remainder <= s * 1e-16:
                break
    tail = math.exp(m) * s
    return min(tail, 1.0)


# --- Hypergeometric ---------------------------------------------------------


def hypergeom_support(params: HypergeomParams) -> tuple[int, int]:
    """Inclusive (low, high) bounds of the nonzero-probability counts."""
    lo = max(0, params.draws + params.successes - params.population)
    hi = min(params.draws, params.successes)
    return lo, hi


def hypergeom_log_pmf(params: HypergeomParams, k: int) -> float:
    """ln P(X = k); -inf outside the support."""
    k = _check_count(k, "k")
    lo, hi = hypergeom_support(params)
    if k < lo or k > hi:
        return -math.inf
    return (
        log_binomial(params.successes, k)
        + log_binomial(params.population - params.successes, params.draws - k)
        - log_binomial(params.population, params.draws)
    )


def hypergeom_pmf(params: HypergeomParams, k: int) -> float:
    """P(X = k); zero (not an error) outside the support."""
    return math.exp(hypergeom_log_pmf(params, k))


def hypergeom_tail(params: HypergeomParams, k: int) -> float:
    """P(X >= k): the one-sided exact-test p-value for an observed count k.

    Sums log-pmf terms over the upper support with log-sum-exp.
    """
    k = _check_count(k, "k")
    lo, hi = hypergeom_support(params)
    if k <= lo:
        return 1.0
    if k > hi:
        return 0.0
    terms = [hypergeom_log_pmf(params, j) for j in range(k, hi + 1)]
    return min(math.exp(log_sum_exp(terms)), 1.0)
