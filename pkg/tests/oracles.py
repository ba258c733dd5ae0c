"""Independent oracles and random-instance generators shared by the tests.

Everything here deliberately avoids the code paths it is used to check:
quadrature integrates the density directly, discrete CDFs are brute-force
mass sums, the error function comes from its Taylor series, and samplers
invert the CDF by plain vectorized bisection.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate, special

from statsteps import distributions as dist

CONTINUOUS_TAGS = (
    "beta",
    "cauchy",
    "chi_square",
    "exponential",
    "fisher",
    "gamma",
    "logistic",
    "log_normal",
    "normal",
    "student_t",
    "weibull",
)

DISCRETE_TAGS = (
    "binomial",
    "geometric_trials",
    "geometric_failures",
    "hypergeometric",
    "negative_binomial_size_prob",
    "negative_binomial_mean_size",
    "poisson",
)


def quad_between(spec, a: float, b: float) -> float:
    """Adaptive quadrature of the density between a and b."""
    value, _err = integrate.quad(
        lambda t: dist.pdf_or_pmf(spec, t), a, b, epsabs=1e-12, epsrel=1e-12, limit=300
    )
    return value


def erf_taylor(x: float, terms: int = 20) -> float:
    """erf via its Maclaurin series (accurate for |x| <= ~2)."""
    total = 0.0
    for n in range(terms):
        total += (-1) ** n * x ** (2 * n + 1) / (math.factorial(n) * (2 * n + 1))
    return 2.0 / math.sqrt(math.pi) * total


def brute_force_discrete_cdf(spec, x: float) -> float:
    """Sum of the mass function over support points <= x."""
    lo, _hi = spec.support()
    k_max = math.floor(x)
    if k_max < lo:
        return 0.0
    ks = np.arange(lo, k_max + 1, dtype=float)
    return float(math.fsum(dist.pdf_or_pmf(spec, ks)))


def bisect_quantile_on(cdf_fn, p: float, lo: float, hi: float, iters: int = 200) -> float:
    """Scalar bisection against an arbitrary CDF callable."""
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if cdf_fn(mid) < p:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def inversion_sample(spec, u: np.ndarray, iters: int = 56) -> np.ndarray:
    """Inversion-sample through the module's own CDF (vectorized)."""
    if spec.is_discrete:
        lo, _ = spec.support()
        hi = dist.quantile(spec, 1.0 - 1e-12)
        ks = np.arange(lo, hi + 1.0)
        grid = dist.cdf(spec, ks)
        idx = np.searchsorted(grid, u, side="left")
        idx = np.clip(idx, 0, len(ks) - 1)
        return ks[idx]
    lo = dist.quantile(spec, 1e-9)
    hi = dist.quantile(spec, 1.0 - 1e-9)
    uc = np.clip(u, 2e-9, 1.0 - 2e-9)
    lo_arr = np.full(uc.shape, lo)
    hi_arr = np.full(uc.shape, hi)
    for _ in range(iters):
        mid = 0.5 * (lo_arr + hi_arr)
        below = spec._cdf(mid) < uc
        lo_arr = np.where(below, mid, lo_arr)
        hi_arr = np.where(below, hi_arr, mid)
    return 0.5 * (lo_arr + hi_arr)


# ---------------------------------------------------------------------------
# random instances
# ---------------------------------------------------------------------------


def random_spec(tag: str, rng: np.random.Generator):
    """A validated random instance with parameters kept in oracle-friendly ranges."""
    u = rng.uniform
    if tag == "beta":
        return dist.Beta(alpha=u(0.4, 8.0), beta=u(0.4, 8.0))
    if tag == "binomial":
        return dist.Binomial(n=int(rng.integers(1, 200)), p=u(0.02, 0.98))
    if tag == "cauchy":
        return dist.Cauchy(location=u(-5, 5), scale=u(0.2, 4.0))
    if tag == "chi_square":
        return dist.ChiSquare(df=u(0.6, 40.0))
    if tag == "exponential":
        return dist.Exponential(rate=u(0.1, 8.0))
    if tag == "fisher":
        return dist.Fisher(df1=u(1.0, 30.0), df2=u(1.0, 30.0))
    if tag == "gamma":
        return dist.Gamma(shape=u(0.4, 20.0), rate=u(0.1, 6.0))
    if tag == "geometric_trials":
        return dist.GeometricTrials(p=u(0.05, 0.95))
    if tag == "geometric_failures":
        return dist.GeometricFailures(p=u(0.05, 0.95))
    if tag == "hypergeometric":
        N = int(rng.integers(2, 300))
        K = int(rng.integers(0, N + 1))
        n = int(rng.integers(1, N + 1))
        return dist.Hypergeometric(population=N, successes=K, draws=n)
    if tag == "logistic":
        return dist.Logistic(location=u(-5, 5), scale=u(0.2, 3.0))
    if tag == "log_normal":
        return dist.LogNormal(mu_log=u(-2, 2), sigma_log=u(0.2, 1.5))
    if tag == "negative_binomial_size_prob":
        return dist.NegBinomialSizeProb(size=u(0.5, 30.0), prob=u(0.08, 0.95))
    if tag == "negative_binomial_mean_size":
        return dist.NegBinomialMeanSize(mu=u(0.3, 40.0), size=u(0.5, 30.0))
    if tag == "normal":
        return dist.Normal(mu=u(-10, 10), sigma=u(0.2, 5.0))
    if tag == "poisson":
        return dist.Poisson(lam=u(0.2, 60.0))
    if tag == "student_t":
        return dist.StudentT(df=u(1.5, 40.0))
    if tag == "weibull":
        return dist.Weibull(shape=u(0.5, 6.0), scale=u(0.3, 8.0))
    raise ValueError(tag)


# representative finite-moment instances for the moment Monte Carlo
MOMENT_SPECS = [
    dist.Beta(alpha=2.3, beta=3.1),
    dist.Binomial(n=23, p=0.37),
    dist.ChiSquare(df=6.5),
    dist.Exponential(rate=1.7),
    dist.Fisher(df1=6.0, df2=10.0),
    dist.Gamma(shape=3.2, rate=1.4),
    dist.GeometricTrials(p=0.35),
    dist.GeometricFailures(p=0.35),
    dist.Hypergeometric(population=60, successes=25, draws=12),
    dist.Logistic(location=-1.0, scale=1.3),
    dist.LogNormal(mu_log=0.4, sigma_log=0.5),
    dist.NegBinomialSizeProb(size=4.0, prob=0.45),
    dist.NegBinomialMeanSize(mu=6.0, size=3.0),
    dist.Normal(mu=2.0, sigma=3.0),
    dist.Poisson(lam=4.2),
    dist.StudentT(df=7.0),
    dist.Weibull(shape=1.8, scale=2.0),
]
