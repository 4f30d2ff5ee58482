# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Operation-for-operation twin of ``_purepy.py``: same libm calls, same
evaluation order, same SplitMix64 substreams, so the two backends agree
bit for bit (the extension is built with -ffp-contract=off to keep the
C arithmetic identical to CPython's).  Keep both files in sync.
"""

from libc.math cimport cos, exp, fabs, log, pow, sin, sqrt
from libc.stdint cimport int64_t, uint64_t

__all__ = [
    "log_gamma",
    "reg_lower_incomplete_gamma",
    "log_binomial",
    "mixture_tail_hits",
    "mixture_moment_sums",
    "rate_ratio_hits",
    "allocation_hits",
]

cdef double _LANCZOS_G = 7.0
cdef double[9] _LANCZOS
_LANCZOS[0] = 0.99999999999980993
_LANCZOS[1] = 676.5203681218851
_LANCZOS[2] = -1259.1392167224028
_LANCZOS[3] = 771.32342877765313
_LANCZOS[4] = -176.61502916214059
_LANCZOS[5] = 12.507343278686905
_LANCZOS[6] = -0.13857109526572012
_LANCZOS[7] = 9.9843695780195716e-6
_LANCZOS[8] = 1.5056327351493116e-7

cdef double _LN_SQRT_2PI = 0.91893853320467274178
cdef double _PI = 3.14159265358979323846264338327950288
cdef double _LOG_ZERO_CUTOFF = -745.0


cdef double _log_gamma(double x) noexcept nogil:
    cdef double z, s, t
    cdef int i
    if x < 0.5:
        return log(_PI / sin(_PI * x)) - _log_gamma(1.0 - x)
    z = x - 1.0
    s = _LANCZOS[0]
    for i in range(1, 9):
        s += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _LN_SQRT_2PI + (z + 0.5) * log(t) - t + log(s)


cdef double _reg_lower_incomplete_gamma(double a, double x) noexcept nogil:
    cdef double ax, scale, term, total, n
    cdef double tiny, b, c, d, h, an, delta, q
    cdef int i
    if x == 0.0:
        return 0.0
    ax = a * log(x) - x - _log_gamma(a)
    if ax < _LOG_ZERO_CUTOFF:
        return 0.0 if x < a + 1.0 else 1.0
    scale = exp(ax)
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
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b if b != 0.0 else 1.0 / tiny
    h = d
    for i in range(1, 10000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if fabs(d) < tiny:
            d = tiny
        c = b + an / c
        if fabs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if fabs(delta - 1.0) < 1e-16:
            break
    q = scale * h
    return 1.0 - q


cdef double _log_binomial(double n, double k) noexcept nogil:
    if k == 0.0 or k == n:
        return 0.0
    if k > n - k:
        k = n - k
    return (
        _log_gamma(n + 1.0)
        - _log_gamma(k + 1.0)
        - _log_gamma((n - k) + 1.0)
    )


def log_gamma(double x):
    """ln Gamma(x) for x > 0 (callers validate the domain)."""
    return _log_gamma(x)


def reg_lower_incomplete_gamma(double a, double x):
    """Regularized lower incomplete gamma P(a, x), a > 0, x >= 0."""
    return _reg_lower_incomplete_gamma(a, x)


def log_binomial(n, k):
    """ln C(n, k) for integers 0 <= k <= n (callers validate).

    Canonicalized to min(k, n-k) so the k <-> n-k symmetry is exact.
    """
    return _log_binomial(<double> n, <double> k)


# ---------------------------------------------------------------------------
# Monte Carlo kernels: SplitMix64, one substream per replication (see
# _purepy.py for the substream contract).
# ---------------------------------------------------------------------------

cdef uint64_t _GOLDEN = <uint64_t> 0x9E3779B97F4A7C15
cdef uint64_t _MIX_A = <uint64_t> 0xBF58476D1CE4E5B9
cdef uint64_t _MIX_B = <uint64_t> 0x94D049BB133111EB
cdef double _TWO_NEG53 = 1.1102230246251565404236316680908203125e-16
cdef double _TWO_PI = 6.283185307179586476925287


cdef inline uint64_t _mix64(uint64_t z) noexcept nogil:
    z = (z ^ (z >> 30)) * _MIX_A
    z = (z ^ (z >> 27)) * _MIX_B
    return z ^ (z >> 31)


cdef inline uint64_t _substream_state(uint64_t seed, uint64_t index) noexcept nogil:
    return _mix64(seed + index * _GOLDEN)


cdef inline double _next_uniform(uint64_t *state) noexcept nogil:
    cdef uint64_t s = state[0] + _GOLDEN
    cdef uint64_t z
    state[0] = s
    z = (s ^ (s >> 30)) * _MIX_A
    z = (z ^ (z >> 27)) * _MIX_B
    z = z ^ (z >> 31)
    return <double> (z >> 11) * _TWO_NEG53


cdef inline double _next_exponential(uint64_t *state) noexcept nogil:
    return -log(1.0 - _next_uniform(state))


cdef inline double _next_normal(uint64_t *state) noexcept nogil:
    cdef double u1 = _next_uniform(state)
    cdef double u2 = _next_uniform(state)
    return sqrt(2.0 * -log(1.0 - u1)) * cos(_TWO_PI * u2)


cdef double _next_gamma(uint64_t *state, double shape) noexcept nogil:
    cdef double g, u, d, c, x, v, x2
    if shape == 1.0:
        return _next_exponential(state)
    if shape < 1.0:
        g = _next_gamma(state, shape + 1.0)
        u = _next_uniform(state)
        return g * pow(1.0 - u, 1.0 / shape)
    d = shape - 1.0 / 3.0
    c = 1.0 / sqrt(9.0 * d)
    while True:
        x = _next_normal(state)
        v = 1.0 + c * x
        if v <= 0.0:
            continue
        v = v * v * v
        u = _next_uniform(state)
        x2 = x * x
        if u < 1.0 - 0.0331 * x2 * x2:
            return d * v
        if log(u) < 0.5 * x2 + d * (1.0 - v + log(v)):
            return d * v


cdef int64_t _next_poisson(uint64_t *state, double lam) noexcept nogil:
    cdef int64_t count = 0
    cdef double acc = -log(1.0 - _next_uniform(state))
    while acc <= lam:
        count += 1
        acc += -log(1.0 - _next_uniform(state))
    return count


def mixture_tail_hits(double rho, double mu, double t, long n, long reps, seed):
    """Count replications with N >= n under L ~ Gamma(rho, scale mu/rho),
    N | L ~ Poisson(L * t)."""
    cdef uint64_t s = <uint64_t> seed
    cdef double scale = mu / rho
    cdef int64_t hits = 0
    cdef int64_t i
    cdef uint64_t state
    cdef double lam
    with nogil:
        for i in range(reps):
            state = _substream_state(s, <uint64_t> i)
            lam = _next_gamma(&state, rho) * scale * t
            if _next_poisson(&state, lam) >= n:
                hits += 1
    return hits


def mixture_moment_sums(double rho, double mu, double t, long reps, seed):
    """Raw power sums (sum N, sum N^2, sum N^3, sum N^4) of simulated counts."""
    cdef uint64_t s = <uint64_t> seed
    cdef double scale = mu / rho
    cdef double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0
    cdef int64_t i
    cdef uint64_t state
    cdef double lam, x, x2
    with nogil:
        for i in range(reps):
            state = _substream_state(s, <uint64_t> i)
            lam = _next_gamma(&state, rho) * scale * t
            x = <double> _next_poisson(&state, lam)
            x2 = x * x
            s1 += x
            s2 += x2
            s3 += x2 * x
            s4 += x2 * x2
    return s1, s2, s3, s4


def rate_ratio_hits(double mu, double k, long reps, seed):
    """Count pairs of independent Exp(mu) intensities where one is at least
    k times the other."""
    cdef uint64_t s = <uint64_t> seed
    cdef int64_t hits = 0
    cdef int64_t i
    cdef uint64_t state
    cdef double a, b
    with nogil:
        for i in range(reps):
            state = _substream_state(s, <uint64_t> i)
            a = mu * _next_exponential(&state)
            b = mu * _next_exponential(&state)
            if a >= k * b or b >= k * a:
                hits += 1
    return hits


def allocation_hits(long population, long successes, long draws,
                    long observed, long reps, seed):
    """Count replications where drawing `draws` shifts without replacement
    from a population with `successes` incident shifts yields at least
    `observed` incident shifts."""
    cdef uint64_t s = <uint64_t> seed
    cdef int64_t hits = 0
    cdef int64_t i, j, remaining, good, got
    cdef uint64_t state
    with nogil:
        for i in range(reps):
            state = _substream_state(s, <uint64_t> i)
            remaining = population
            good = successes
            got = 0
            for j in range(draws):
                if _next_uniform(&state) * remaining < good:
                    got += 1
                    good -= 1
                remaining -= 1
            if got >= observed:
                hits += 1
    return hits
