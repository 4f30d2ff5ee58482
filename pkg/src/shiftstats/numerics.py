"""Special-function kernel: log-gamma, regularized incomplete gamma and
log binomial coefficients.

Everything downstream (Poisson, negative binomial and hypergeometric
tails) is built from these three functions plus log-sum-exp.  Values that
would overflow a double (C(1029, 142), p-values near 1e-7 from ratios
of such coefficients) are carried as natural logs in plain floats, with
``-inf`` encoding an exact zero.
"""

from __future__ import annotations

import math

from ._backend import kernels

__all__ = [
    "log_gamma",
    "reg_lower_incomplete_gamma",
    "log_binomial",
    "log_sum_exp",
]


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for x > 0.

    Lanczos approximation (g=7, 9 terms); relative error below 1e-13
    over [0.5, 1e6].
    """
    x = float(x)
    if not x > 0.0 or math.isinf(x):
        raise ValueError(f"log_gamma requires finite x > 0, got {x}")
    return kernels.log_gamma(x)


def reg_lower_incomplete_gamma(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.

    Power series for x < a + 1, continued fraction for the complement
    otherwise; relative error below 1e-12.  Monotone nondecreasing in x,
    with P(a, 0) = 0 and P(a, inf) = 1.
    """
    a = float(a)
    x = float(x)
    if not a > 0.0 or math.isinf(a):
        raise ValueError(f"reg_lower_incomplete_gamma requires finite a > 0, got a={a}")
    if not x >= 0.0:
        raise ValueError(f"reg_lower_incomplete_gamma requires x >= 0, got x={x}")
    p = kernels.reg_lower_incomplete_gamma(a, x)
    # clamp float noise at the boundaries
    if p < 0.0:
        return 0.0
    if p > 1.0:
        return 1.0
    return p


def log_binomial(n: int, k: int) -> float:
    """ln C(n, k) for integers 0 <= k <= n, via log_gamma."""
    if n != int(n) or k != int(k):
        raise ValueError(f"log_binomial requires integers, got n={n}, k={k}")
    n = int(n)
    k = int(k)
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"log_binomial requires 0 <= k <= n, got n={n}, k={k}")
    return kernels.log_binomial(n, k)


def log_sum_exp(log_values) -> float:
    """ln(sum(exp(v))) over an iterable of log-domain floats.

    Empty input and all -inf both return -inf (a sum of zeros).
    """
    values = list(log_values)
    if not values:
        return -math.inf
    m = max(values)
    if m == -math.inf:
        return -math.inf
    return m + math.log(math.fsum(math.exp(v - m) for v in values))
