"""Gamma-mixed Poisson incident model.

A nurse's per-shift incident intensity L is Gamma(rho, scale mu/rho), so
E[L] = mu regardless of rho; the incident count over t shifts is Poisson
with mean L*t.  Marginally the count is negative binomial with shape rho
and success probability 1/(1 + t*mu/rho); rho = 1 gives the geometric
tail P(N >= n) = (t*mu / (1 + t*mu))^n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .distributions import NegBinomialParams, neg_binomial_tail

__all__ = [
    "MixedPoissonModel",
    "TailCurve",
    "VarianceComponents",
    "expected_count",
    "tail_probability",
    "tail_curve",
    "count_variance",
    "variance_components",
    "rate_ratio_exceedance",
    "tail_probability_quadrature",
]


@dataclass(frozen=True)
class MixedPoissonModel:
    """Model parameters: Gamma shape `rho`, mean intensity `mu` per shift,
    exposure `t` in shifts."""

    rho: float
    mu: float
    t: float

    def __post_init__(self):
        for name in ("rho", "mu", "t"):
            v = getattr(self, name)
            if not v > 0.0 or math.isinf(v):
                raise ValueError(f"{name} must be finite and > 0, got {v}")

    @classmethod
    def from_scenario(cls, scenario, rho: float = 1.0) -> "MixedPoissonModel":
        """Moment-estimate model from a case scenario: mu is the ratio of
        total incidents to total shifts (one double-precision division),
        t the suspect's shift count."""
        return cls(
            rho=rho,
            mu=scenario.total_incidents / scenario.total_shifts,
            t=float(scenario.suspect_shifts),
        )

    @property
    def mean_count(self) -> float:
        return self.t * self.mu

    def marginal_count_params(self) -> NegBinomialParams:
        """The (shape, success_prob) of the marginal count distribution."""
        return NegBinomialParams(
            shape=self.rho,
            success_prob=1.0 / (1.0 + self.t * self.mu / self.rho),
        )


@dataclass(frozen=True)
class TailCurve:
    """P(N >= k) for k = 1..K: the data behind the incident-count bar plot."""

    k_values: tuple[int, ...]
    probabilities: tuple[float, ...]

    def __post_init__(self):
        if len(self.k_values) != len(self.probabilities):
            raise ValueError("k_values and probabilities must have equal length")
        for p in self.probabilities:
            if not 0.0 < p <= 1.0:
                raise ValueError(f"tail probabilities must lie in (0, 1], got {p}")
        for a, b in zip(self.probabilities, self.probabilities[1:]):
            if not b < a:
                raise ValueError("tail probabilities must be strictly decreasing")

    def __iter__(self):
        return iter(zip(self.k_values, self.probabilities))


class VarianceComponents(NamedTuple):
    expected_conditional_variance: float  # E[var(N | L)] = t*mu
    variance_of_conditional_mean: float  # var(E[N | L]) = (t*mu)^2 / rho


def expected_count(model: MixedPoissonModel) -> float:
    """E[N] = t * mu."""
    return model.t * model.mu


def tail_probability(model: MixedPoissonModel, n: int) -> float:
    """P(N >= n) for the marginal count.

    rho = 1 uses the geometric closed form (t*mu/(1 + t*mu))^n; other
    shapes delegate to the negative binomial tail.
    """
    if n != int(n) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n}")
    n = int(n)
    if n == 0:
        return 1.0
    tmu = model.t * model.mu
    if model.rho == 1.0:
        return math.pow(tmu / (1.0 + tmu), n)
    return neg_binomial_tail(model.marginal_count_params(), n)


def tail_curve(model: MixedPoissonModel, k_max: int) -> TailCurve:
    """Tail probabilities for k = 1..k_max."""
    if k_max != int(k_max) or k_max < 1:
        raise ValueError(f"k_max must be a positive integer, got {k_max}")
    k_max = int(k_max)
    ks = tuple(range(1, k_max + 1))
    return TailCurve(
        k_values=ks,
        probabilities=tuple(tail_probability(model, k) for k in ks),
    )


def count_variance(model: MixedPoissonModel) -> float:
    """var(N) = t*mu + (t*mu)^2 / rho.

    Always exceeds the mean for finite rho: the overdispersion signature
    of a mixed Poisson.  At rho = 1 this is t*mu + (t*mu)^2.
    """
    tmu = model.t * model.mu
    return tmu + tmu * tmu / model.rho


def variance_components(model: MixedPoissonModel) -> VarianceComponents:
    """The law-of-total-variance split of count_variance."""
    tmu = model.t * model.mu
    return VarianceComponents(
        expected_conditional_variance=tmu,
        variance_of_conditional_mean=tmu * tmu / model.rho,
    )


def rate_ratio_exceedance(k: float) -> float:
    """Probability that one of two independent exponential-intensity
    nurses has at least k times the incident rate of the other: 2/(k+1).

    Applies to the rho = 1 (exponential intensity) case; k >= 1.
    """
    k = float(k)
    if not k >= 1.0:
        raise ValueError(f"k must be >= 1, got {k}")
    return 2.0 / (k + 1.0)


def _poisson_tail_direct(n: int, mean: float) -> float:
    """P(N >= n) by direct finite summation of the Poisson pmf.

    Deliberately independent of the incomplete-gamma kernel; used only
    inside the quadrature cross-check.
    """
    if n == 0:
        return 1.0
    term = math.exp(-mean)
    total = 0.0
    for k in range(n):
        total += term
        term *= mean / (k + 1)
    tail = 1.0 - total
    return min(max(tail, 0.0), 1.0)


def tail_probability_quadrature(model: MixedPoissonModel, n: int) -> float:
    """P(N >= n) by adaptive quadrature of the mixing integral

        integral_0^inf P(N >= n | L = l) * gamma_pdf(l; rho, mu/rho) dl,

    an independent cross-check on the closed form (the integrand's Poisson
    tail is a direct finite sum, not the incomplete-gamma kernel).
    """
    from scipy.integrate import quad

    if n != int(n) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n}")
    n = int(n)
    if n == 0:
        return 1.0
    rho = model.rho
    scale = model.mu / rho  # Gamma scale; substitute l = scale * y
    lgr = math.lgamma(rho)

    def integrand(y: float) -> float:
        if y <= 0.0:
            return 0.0
        weight = math.exp((rho - 1.0) * math.log(y) - y - lgr)
        return _poisson_tail_direct(n, model.t * scale * y) * weight

    value, _ = quad(integrand, 0.0, math.inf, epsabs=1e-12, epsrel=1e-12, limit=500)
    return value
