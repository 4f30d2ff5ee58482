"""Pure-Python kernel backend.

Scalar special functions and Monte Carlo inner loops, written to be
operation-for-operation identical to the compiled backend in
``_core.pyx``: both use IEEE-754 doubles, the same libm calls and the
same evaluation order, so results agree bit for bit.  Keep the two
files in sync when changing either.

Log-domain convention: probabilities and coefficients are carried as
natural logs in plain floats, with ``-inf`` encoding zero.
"""

from __future__ import annotations

import math

__all__ = [
    "log_gamma",
    "reg_lower_incomplete_gamma",
    "log_binomial",
    "mixture_tail_hits",
    "mixture_moment_sums",
    "rate_ratio_hits",
    "allocation_hits",
]

# Lanczos approximation, g=7, 9-term coefficient set (Godfrey/GSL).
# Relative error below 3e-15 over [0.5, 1e6].
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LN_SQRT_2PI = 0.91893853320467274178
_LOG_ZERO_CUTOFF = -745.0  # below this exp() underflows to 0


def log_gamma(x):
    """ln Gamma(x) for x > 0 (callers validate the domain)."""
    if x < 0.5:
        # reflection keeps the Lanczos sum in its accurate range
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)
    z = x - 1.0
    s = _LANCZOS[0]
    for i in range(1, 9):
        s += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _LN_SQRT_2PI + (z + 0.5) * math.log(t) - t + math.log(s)


def reg_lower_incomplete_gamma(a, x):
    """Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.

    Power series for x < a + 1, Lentz continued fraction for the
    complement otherwise.
    """
    if x == 0.0:
        return 0.0
    ax = a * math.log(x) - x - log_gamma(a)
    if ax < _LOG_ZERO_CUTOFF:
        return 0.0 if x < a + 1.0 else 1.0
    scale = math.exp(ax)
    if x < a + 1.0:
        term = 1.0 / a
        total = term
        n = a
        while True:
            n += 1.0
            term *= x / n
            total += term
            if term <= total * 1e-17:
                break
        return total * scale
    # modified Lentz for the continued fraction of Q(a, x)
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b if b != 0.0 else 1.0 / tiny
    h = d
    for i in range(1, 10000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    q = scale * h
    return 1.0 - q


def log_binomial(n, k):
    """ln C(n, k) for integers 0 <= k <= n (callers validate).

    Canonicalized to min(k, n-k) so the k <-> n-k symmetry is exact.
    """
    if k == 0 or k == n:
        return 0.0
    if k > n - k:
        k = n - k
    return (
        log_gamma(n + 1.0)
        - log_gamma(k + 1.0)
        - log_gamma((n - k) + 1.0)
    )


# ---------------------------------------------------------------------------
# Monte Carlo kernels.
#
# Random source: SplitMix64.  Replication i of a run seeded with s draws
# from its own substream whose initial state is mix64((s + i*GOLDEN) mod
# 2^64); successive draws advance the state by GOLDEN and hash it.  Because
# every replication owns an independent substream, an estimate is a pure
# function of (seed, replications) regardless of how replications are
# partitioned into batches.
# ---------------------------------------------------------------------------

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB
_TWO_NEG53 = 2.0 ** -53
_TWO_PI = 6.283185307179586476925287


def _mix64(z):
    z = ((z ^ (z >> 30)) * _MIX_A) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX_B) & _MASK64
    return z ^ (z >> 31)


def _substream_state(seed, index):
    return _mix64((seed + index * _GOLDEN) & _MASK64)


class _Stream:
    """One replication's SplitMix64 substream."""

    __slots__ = ("state",)

    def __init__(self, seed, index):
        self.state = _substream_state(seed, index)

    def next_uniform(self):
        """Uniform double in [0, 1) with 53 random bits."""
        s = (self.state + _GOLDEN) & _MASK64
        self.state = s
        z = ((s ^ (s >> 30)) * _MIX_A) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX_B) & _MASK64
        z ^= z >> 31
        return (z >> 11) * _TWO_NEG53

    def next_exponential(self):
        """Unit-mean exponential via inverse transform."""
        return -math.log(1.0 - self.next_uniform())

    def next_normal(self):
        """Standard normal via one Box-Muller draw (no caching)."""
        u1 = self.next_uniform()
        u2 = self.next_uniform()
        return math.sqrt(2.0 * -math.log(1.0 - u1)) * math.cos(_TWO_PI * u2)

    def next_gamma(self, shape):
        """Gamma(shape, scale 1).

        shape == 1 uses the inverse-transform exponential; other shapes use
        the Marsaglia-Tsang squeeze-rejection method (boosted from shape+1
        when shape < 1).
        """
        if shape == 1.0:
            return self.next_exponential()
        if shape < 1.0:
            g = self.next_gamma(shape + 1.0)
            u = self.next_uniform()
            return g * math.pow(1.0 - u, 1.0 / shape)
        d = shape - 1.0 / 3.0
        c = 1.0 / math.sqrt(9.0 * d)
        while True:
            x = self.next_normal()
            v = 1.0 + c * x
            if v <= 0.0:
                continue
            v = v * v * v
            u = self.next_uniform()
            x2 = x * x
            if u < 1.0 - 0.0331 * x2 * x2:
                return d * v
            if math.log(u) < 0.5 * x2 + d * (1.0 - v + math.log(v)):
                return d * v

    def next_poisson(self, lam):
        """Poisson(lam) by counting unit-rate arrivals before time lam."""
        count = 0
        acc = -math.log(1.0 - self.next_uniform())
        while acc <= lam:
            count += 1
            acc += -math.log(1.0 - self.next_uniform())
        return count


def mixture_tail_hits(rho, mu, t, n, reps, seed):
    """Count replications with N >= n under L ~ Gamma(rho, scale mu/rho),
    N | L ~ Poisson(L * t)."""
    scale = mu / rho
    hits = 0
    for i in range(reps):
        stream = _Stream(seed, i)
        lam = stream.next_gamma(rho) * scale * t
        if stream.next_poisson(lam) >= n:
            hits += 1
    return hits


def mixture_moment_sums(rho, mu, t, reps, seed):
    """Raw power sums (sum N, sum N^2, sum N^3, sum N^4) of simulated counts."""
    scale = mu / rho
    s1 = 0.0
    s2 = 0.0
    s3 = 0.0
    s4 = 0.0
    for i in range(reps):
        stream = _Stream(seed, i)
        lam = stream.next_gamma(rho) * scale * t
        x = float(stream.next_poisson(lam))
        x2 = x * x
        s1 += x
        s2 += x2
        s3 += x2 * x
        s4 += x2 * x2
    return s1, s2, s3, s4


def rate_ratio_hits(mu, k, reps, seed):
    """Count pairs of independent Exp(mu) intensities where one is at least
    k times the other."""
    hits = 0
    for i in range(reps):
        stream = _Stream(seed, i)
        a = mu * stream.next_exponential()
        b = mu * stream.next_exponential()
        if a >= k * b or b >= k * a:
            hits += 1
    return hits


def allocation_hits(population, successes, draws, observed, reps, seed):
    """Count replications where drawing `draws` shifts without replacement
    from a population with `successes` incident shifts yields at least
    `observed` incident shifts."""
    hits = 0
    for i in range(reps):
        stream = _Stream(seed, i)
        remaining = population
        good = successes
        got = 0
        for _ in range(draws):
            if stream.next_uniform() * remaining < good:
                got += 1
                good -= 1
            remaining -= 1
        if got >= observed:
            hits += 1
    return hits
