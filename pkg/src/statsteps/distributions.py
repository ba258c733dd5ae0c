"""The 18 probability distributions of the teaching engine.

Each family validates its parameters at construction, exposes density /
mass, CDF, quantile and closed-form moments, and knows its own display
notation (TeX templates with named ``{{placeholder}}`` slots).

CDFs are expressed through the special-function kernels in
:mod:`statsteps.specfun`; quantiles use closed-form inverses where they
exist and monotone bisection otherwise.  `pdf` / `cdf` accept scalars or
numpy arrays; `quantile` is scalar.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import ClassVar

import numpy as np
from scipy import special as _sp

from . import specfun
from .display import fmt
from .errors import (
    DomainError,
    InputError,
    IntervalOrderError,
    SingularityError,
    UnknownTagError,
)

# Validation caps: count-like parameters stay small enough for bounded
# grid/CDF work, and real parameters stay inside ranges where quantiles,
# densities and plot grids cannot overflow double precision.
MAX_COUNT_PARAM = 10**8
MAX_DRAWS = 10**6
MAX_DISCRETE_GRID = 200_001
MAX_SCALE_PARAM = 1e6
MIN_SCALE_PARAM = 1e-6
MAX_LOCATION = 1e12
MIN_DF = 0.05
MIN_EVENT_PROB = 1e-9  # geometric / negative binomial success probability

PLOT_GRID_POINTS = 512
PLOT_TAIL_PROB = 0.0005


@dataclass(frozen=True)
class Moments:
    """Mean / sd / variance, with None where mathematically undefined."""

    mean: float | None
    sd: float | None
    variance: float | None


@dataclass(frozen=True)
class ProbabilityQuery:
    """Tail-probability query: lower_tail(x), upper_tail(x) or interval(a, b)."""

    kind: str
    x: float | None = None
    a: float | None = None
    b: float | None = None

    def __post_init__(self):
        if self.kind not in ("lower_tail", "upper_tail", "interval"):
            raise InputError(f"unknown query kind {self.kind!r}", field="query.kind")
        if self.kind == "interval":
            if self.a is None or self.b is None:
                raise InputError("interval query needs both bounds a and b", field="query")
            _finite("a", self.a)
            _finite("b", self.b)
            if self.a > self.b:
                raise IntervalOrderError(
                    f"interval bounds out of order: a={self.a} > b={self.b}", field="query"
                )
        else:
            if self.x is None:
                raise InputError(f"{self.kind} query needs a bound x", field="query.x")
            _finite("x", self.x)

    @staticmethod
    def lower_tail(x: float) -> "ProbabilityQuery":
        return ProbabilityQuery("lower_tail", x=float(x))

    @staticmethod
    def upper_tail(x: float) -> "ProbabilityQuery":
        return ProbabilityQuery("upper_tail", x=float(x))

    @staticmethod
    def interval(a: float, b: float) -> "ProbabilityQuery":
        return ProbabilityQuery("interval", a=float(a), b=float(b))

    def bounds(self) -> list[float]:
        if self.kind == "interval":
            return [float(self.a), float(self.b)]
        return [float(self.x)]


@dataclass
class PlotData:
    """Density/mass curve with the queried region marked.

    ``shaded`` holds closed sub-ranges of the grid (in x units) covering
    the query event; ``marker`` is used by rejection-region plots for the
    observed statistic.
    """

    grid: list[float]
    values: list[float]
    shaded: list[tuple[float, float]]
    is_discrete: bool
    marker: float | None = None


@dataclass
class ProbabilityResult:
    value: float
    display_value: str
    derivation: object  # narrative.DerivationDocument
    plot: PlotData


def _finite(name: str, v: float) -> float:
    v = float(v)
    if not math.isfinite(v):
        raise DomainError(f"{name} must be finite, got {v!r}", field=name)
    return v


def _positive(
    name: str,
    v: float,
    minimum: float = MIN_SCALE_PARAM,
    maximum: float = MAX_SCALE_PARAM,
) -> float:
    v = _finite(name, v)
    if v <= 0:
        raise DomainError(f"{name} must be > 0, got {v}", field=name)
    if not (minimum <= v <= maximum):
        raise DomainError(
            f"{name} must lie in [{minimum:g}, {maximum:g}], got {v}", field=name
        )
    return v


def _location(name: str, v: float) -> float:
    v = _finite(name, v)
    if abs(v) > MAX_LOCATION:
        raise DomainError(f"|{name}| must be <= {MAX_LOCATION:g}, got {v}", field=name)
    return v


def _df(name: str, v: float) -> float:
    return _positive(name, v, minimum=MIN_DF, maximum=MAX_SCALE_PARAM)


def _event_prob(name: str, v: float) -> float:
    v = _finite(name, v)
    if not (MIN_EVENT_PROB <= v <= 1.0):
        raise DomainError(
            f"{name} must lie in [{MIN_EVENT_PROB:g}, 1], got {v}", field=name
        )
    return v


def _integer(name: str, v: float, minimum: int = 0, maximum: int = MAX_COUNT_PARAM) -> int:
    v = _finite(name, v)
    if v != int(v):
        raise InputError(f"{name} must be an integer, got {v}", field=name)
    iv = int(v)
    if iv < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {iv}", field=name)
    if iv > maximum:
        raise DomainError(f"{name} must be <= {maximum}, got {iv}", field=name)
    return iv


class Distribution:
    """Base class; families override the underscore hooks."""

    tag: ClassVar[str]
    name: ClassVar[str]
    is_discrete: ClassVar[bool] = False
    # (param, description, constraint) triples for the public catalog
    param_info: ClassVar[tuple[tuple[str, str, str], ...]] = ()
    support_text: ClassVar[str] = ""

    # -- hooks -----------------------------------------------------------
    def support(self) -> tuple[float, float]:
        raise NotImplementedError

    def _pdf(self, x: np.ndarray) -> np.ndarray:
        """Density/mass on finite, pole-free input; 0 off support."""
        raise NotImplementedError

    def _cdf(self, x: np.ndarray) -> np.ndarray:
        """CDF on finite input (discrete: integer-floored by caller)."""
        raise NotImplementedError

    def _cdf_scalar(self, x: float) -> float:
        return float(self._cdf(np.asarray([x], dtype=float))[0])

    def _quantile(self, p: float) -> float:
        lo, hi = self._quantile_bracket()
        return specfun.invert_cdf_monotone(self._cdf_scalar, p, (lo, hi))

    def _quantile_bracket(self) -> tuple[float, float]:
        raise NotImplementedError

    def moments(self) -> Moments:
        raise NotImplementedError

    def params(self) -> dict[str, float]:
        """Canonical parameter name -> value, in catalog order."""
        raise NotImplementedError

    def pole_points(self) -> tuple[float, ...]:
        """Support points where the density is infinite."""
        return ()

    # -- display knowledge ------------------------------------------------
    def notation_tex(self) -> str:
        raise NotImplementedError

    def density_tex(self) -> str:
        """PDF/PMF template with parameter placeholders."""
        raise NotImplementedError

    def density_values(self) -> dict[str, float]:
        """Values bound into density_tex (defaults to params())."""
        return self.params()

    def int_params(self) -> tuple[str, ...]:
        """Parameter names displayed without decimals."""
        return ()


def _moments(mean, variance) -> Moments:
    # moments that overflow double precision are reported as undefined
    if mean is not None and not math.isfinite(mean):
        mean = None
    if variance is None or not math.isfinite(variance):
        return Moments(mean=mean, sd=None, variance=None)
    return Moments(mean=mean, sd=math.sqrt(variance), variance=float(variance))


# ---------------------------------------------------------------------------
# continuous families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Beta(Distribution):
    alpha: float
    beta: float

    tag: ClassVar[str] = "beta"
    name: ClassVar[str] = "Beta"
    param_info: ClassVar = (
        ("alpha", "first shape parameter", "alpha > 0"),
        ("beta", "second shape parameter", "beta > 0"),
    )
    support_text: ClassVar[str] = "0 < x < 1"

    def __post_init__(self):
        _positive("alpha", self.alpha)
        _positive("beta", self.beta)

    def support(self):
        return (0.0, 1.0)

    def pole_points(self):
        poles = []
        if self.alpha < 1:
            poles.append(0.0)
        if self.beta < 1:
            poles.append(1.0)
        return tuple(poles)

    def _pdf(self, x):
        a, b = self.alpha, self.beta
        inside = (x > 0) & (x < 1)
        out = np.zeros_like(x)
        xs = x[inside]
        out[inside] = np.exp(
            (a - 1) * np.log(xs) + (b - 1) * np.log1p(-xs) - _sp.betaln(a, b)
        )
        # finite boundary values for the exponent-zero cases
        if a == 1:
            out[x == 0] = b
        if b == 1:
            out[x == 1] = a
        return out

    def _cdf(self, x):
        return _sp.betainc(self.alpha, self.beta, np.clip(x, 0.0, 1.0))

    def _quantile_bracket(self):
        return (0.0, 1.0)

    def moments(self):
        a, b = self.alpha, self.beta
        return _moments(a / (a + b), a * b / ((a + b) ** 2 * (a + b + 1)))

    def params(self):
        return {"alpha": self.alpha, "beta": self.beta}

    def notation_tex(self):
        return r"X \sim \mathrm{Beta}(\alpha = {{alpha}},\ \beta = {{beta}})"

    def density_tex(self):
        return (
            r"f(x) = \frac{x^{\, {{alpha}} - 1} (1 - x)^{\, {{beta}} - 1}}"
            r"{B({{alpha}},\, {{beta}})}"
        )


@dataclass(frozen=True)
class Cauchy(Distribution):
    location: float
    scale: float

    tag: ClassVar[str] = "cauchy"
    name: ClassVar[str] = "Cauchy"
    param_info: ClassVar = (
        ("location", "center of the distribution", "real"),
        ("scale", "half-width at half-maximum", "scale > 0"),
    )
    support_text: ClassVar[str] = "all real x"

    def __post_init__(self):
        _location("location", self.location)
        _positive("scale", self.scale)

    def support(self):
        return (-math.inf, math.inf)

    def _pdf(self, x):
        z = (x - self.location) / self.scale
        return 1.0 / (math.pi * self.scale * (1.0 + z * z))

    def _cdf(self, x):
        z = (x - self.location) / self.scale
        return 0.5 + np.arctan(z) / math.pi

    def _quantile(self, p):
        return self.location + self.scale * math.tan(math.pi * (p - 0.5))

    def moments(self):
        return Moments(mean=None, sd=None, variance=None)

    def params(self):
        return {"location": self.location, "scale": self.scale}

    def notation_tex(self):
        return r"X \sim \mathrm{Cauchy}(x_0 = {{location}},\ \gamma = {{scale}})"

    def density_tex(self):
        return (
            r"f(x) = \frac{1}{\pi \cdot {{scale}} \left[1 + "
            r"\left(\frac{x - {{location}}}{ {{scale}} }\right)^{2}\right]}"
        )


@dataclass(frozen=True)
class ChiSquare(Distribution):
    df: float

    tag: ClassVar[str] = "chi_square"
    name: ClassVar[str] = "Chi-square"
    param_info: ClassVar = (("df", "degrees of freedom", "df > 0"),)
    support_text: ClassVar[str] = "x >= 0"

    def __post_init__(self):
        _df("df", self.df)

    def support(self):
        return (0.0, math.inf)

    def pole_points(self):
        return (0.0,) if self.df < 2 else ()

    def _pdf(self, x):
        k = self.df
        out = np.zeros_like(x)
        pos = x > 0
        xs = x[pos]
        out[pos] = np.exp(
            (k / 2 - 1) * np.log(xs) - xs / 2 - (k / 2) * math.log(2) - _sp.gammaln(k / 2)
        )
        if k == 2:
            out[x == 0] = 0.5
        return out

    def _cdf(self, x):
        return _sp.gammainc(self.df / 2, np.maximum(x, 0.0) / 2)

    def _quantile_bracket(self):
        return (0.0, self.df + 12 * math.sqrt(2 * self.df) + 12)

    def moments(self):
        return _moments(self.df, 2 * self.df)

    def params(self):
        return {"df": self.df}

    def notation_tex(self):
        return r"X \sim \chi^2(k = {{df}})"

    def density_tex(self):
        return (
            r"f(x) = \frac{1}{2^{ {{df}}/2 } \, \Gamma\!\left({{df}}/2\right)} \,"
            r" x^{\, {{df}}/2 - 1} e^{-x/2}"
        )


@dataclass(frozen=True)
class Exponential(Distribution):
    rate: float

    tag: ClassVar[str] = "exponential"
    name: ClassVar[str] = "Exponential"
    param_info: ClassVar = (("rate", "rate parameter lambda", "rate > 0"),)
    support_text: ClassVar[str] = "x >= 0"

    def __post_init__(self):
        _positive("rate", self.rate)

    def support(self):
        return (0.0, math.inf)

    def _pdf(self, x):
        out = np.zeros_like(x)
        ok = x >= 0
        out[ok] = self.rate * np.exp(-self.rate * x[ok])
        return out

    def _cdf(self, x):
        return -np.expm1(-self.rate * np.maximum(x, 0.0))

    def _quantile(self, p):
        return -math.log1p(-p) / self.rate

    def moments(self):
        return _moments(1 / self.rate, 1 / self.rate**2)

    def params(self):
        return {"rate": self.rate}

    def notation_tex(self):
        return r"X \sim \mathrm{Exp}(\lambda = {{rate}})"

    def density_tex(self):
        return r"f(x) = {{rate}} \, e^{-{{rate}} \, x}"


@dataclass(frozen=True)
class Fisher(Distribution):
    df1: float
    df2: float

    tag: ClassVar[str] = "fisher"
    name: ClassVar[str] = "Fisher (F)"
    param_info: ClassVar = (
        ("df1", "numerator degrees of freedom", "df1 > 0"),
        ("df2", "denominator degrees of freedom", "df2 > 0"),
    )
    support_text: ClassVar[str] = "x >= 0"

    def __post_init__(self):
        _df("df1", self.df1)
        _df("df2", self.df2)

    def support(self):
        return (0.0, math.inf)

    def pole_points(self):
        return (0.0,) if self.df1 < 2 else ()

    def _pdf(self, x):
        d1, d2 = self.df1, self.df2
        out = np.zeros_like(x)
        pos = x > 0
        xs = x[pos]
        out[pos] = np.exp(
            0.5 * (d1 * np.log(d1 * xs) + d2 * math.log(d2) - (d1 + d2) * np.log(d1 * xs + d2))
            - np.log(xs)
            - _sp.betaln(d1 / 2, d2 / 2)
        )
        if d1 == 2:
            out[x == 0] = 1.0
        return out

    def _cdf(self, x):
        # the upper branch keeps tail resolution: w = d1*x/(d1*x + d2)
        # saturates to 1.0 in floats long before the cdf reaches 1
        d1x = self.df1 * np.maximum(x, 0.0)
        w = d1x / (d1x + self.df2)
        u = self.df2 / (d1x + self.df2)
        lower = _sp.betainc(self.df1 / 2, self.df2 / 2, w)
        upper = 1.0 - _sp.betainc(self.df2 / 2, self.df1 / 2, u)
        return np.where(w <= 0.5, lower, upper)

    def _quantile_bracket(self):
        return (0.0, 50.0)

    def moments(self):
        d1, d2 = self.df1, self.df2
        mean = d2 / (d2 - 2) if d2 > 2 else None
        if d2 > 4:
            var = 2 * d2**2 * (d1 + d2 - 2) / (d1 * (d2 - 2) ** 2 * (d2 - 4))
        else:
            var = None
        if var is None:
            return Moments(mean=mean, sd=None, variance=None)
        return _moments(mean, var)

    def params(self):
        return {"df1": self.df1, "df2": self.df2}

    def notation_tex(self):
        return r"X \sim F(d_1 = {{df1}},\ d_2 = {{df2}})"

    def density_tex(self):
        return (
            r"f(x) = \frac{\sqrt{\dfrac{({{df1}} x)^{ {{df1}} } \cdot {{df2}}^{ {{df2}} }}"
            r"{({{df1}} x + {{df2}})^{ {{df1}} + {{df2}} }}}}"
            r"{x \, B\!\left(\frac{ {{df1}} }{2}, \frac{ {{df2}} }{2}\right)}"
        )


@dataclass(frozen=True)
class Gamma(Distribution):
    shape: float
    rate: float

    tag: ClassVar[str] = "gamma"
    name: ClassVar[str] = "Gamma"
    param_info: ClassVar = (
        ("shape", "shape parameter alpha", "shape > 0"),
        ("rate", "rate parameter beta", "rate > 0"),
    )
    support_text: ClassVar[str] = "x >= 0"

    def __post_init__(self):
        _positive("shape", self.shape)
        _positive("rate", self.rate)

    def support(self):
        return (0.0, math.inf)

    def pole_points(self):
        return (0.0,) if self.shape < 1 else ()

    def _pdf(self, x):
        a, r = self.shape, self.rate
        out = np.zeros_like(x)
        pos = x > 0
        xs = x[pos]
        out[pos] = np.exp(a * math.log(r) + (a - 1) * np.log(xs) - r * xs - _sp.gammaln(a))
        if a == 1:
            out[x == 0] = r
        return out

    def _cdf(self, x):
        return _sp.gammainc(self.shape, self.rate * np.maximum(x, 0.0))

    def _quantile_bracket(self):
        m = self.shape / self.rate
        sd = math.sqrt(self.shape) / self.rate
        return (0.0, m + 12 * sd + 12 / self.rate)

    def moments(self):
        return _moments(self.shape / self.rate, self.shape / self.rate**2)

    def params(self):
        return {"shape": self.shape, "rate": self.rate}

    def notation_tex(self):
        return r"X \sim \mathrm{Gamma}(\alpha = {{shape}},\ \beta = {{rate}})"

    def density_tex(self):
        return (
            r"f(x) = \frac{ {{rate}}^{ {{shape}} } }{\Gamma({{shape}})} \,"
            r" x^{\, {{shape}} - 1} e^{-{{rate}} \, x}"
        )


@dataclass(frozen=True)
class Logistic(Distribution):
    location: float
    scale: float

    tag: ClassVar[str] = "logistic"
    name: ClassVar[str] = "Logistic"
    param_info: ClassVar = (
        ("location", "center of the distribution", "real"),
        ("scale", "scale parameter", "scale > 0"),
    )
    support_text: ClassVar[str] = "all real x"

    def __post_init__(self):
        _location("location", self.location)
        _positive("scale", self.scale)

    def support(self):
        return (-math.inf, math.inf)

    def _pdf(self, x):
        z = np.abs(x - self.location) / self.scale
        e = np.exp(-z)
        return e / (self.scale * (1.0 + e) ** 2)

    def _cdf(self, x):
        return _sp.expit((x - self.location) / self.scale)

    def _quantile(self, p):
        return self.location + self.scale * math.log(p / (1.0 - p))

    def moments(self):
        return _moments(self.location, (self.scale * math.pi) ** 2 / 3)

    def params(self):
        return {"location": self.location, "scale": self.scale}

    def notation_tex(self):
        return r"X \sim \mathrm{Logistic}(\mu = {{location}},\ s = {{scale}})"

    def density_tex(self):
        return (
            r"f(x) = \frac{e^{-(x - {{location}})/{{scale}}}}"
            r"{ {{scale}} \left(1 + e^{-(x - {{location}})/{{scale}}}\right)^{2}}"
        )


@dataclass(frozen=True)
class LogNormal(Distribution):
    mu_log: float
    sigma_log: float

    tag: ClassVar[str] = "log_normal"
    name: ClassVar[str] = "Log-normal"
    param_info: ClassVar = (
        ("mu_log", "mean of log(X)", "real"),
        ("sigma_log", "standard deviation of log(X)", "sigma_log > 0"),
    )
    support_text: ClassVar[str] = "x > 0"

    def __post_init__(self):
        v = _finite("mu_log", self.mu_log)
        if abs(v) > 200.0:
            raise DomainError(f"|mu_log| must be <= 200, got {v}", field="mu_log")
        _positive("sigma_log", self.sigma_log, maximum=100.0)

    def support(self):
        return (0.0, math.inf)

    def _pdf(self, x):
        m, s = self.mu_log, self.sigma_log
        out = np.zeros_like(x)
        pos = x > 0
        xs = x[pos]
        z = (np.log(xs) - m) / s
        out[pos] = np.exp(-0.5 * z * z) / (xs * s * math.sqrt(2 * math.pi))
        return out

    def _cdf(self, x):
        out = np.zeros_like(x)
        pos = x > 0
        z = (np.log(x[pos]) - self.mu_log) / self.sigma_log
        out[pos] = 0.5 * (1.0 + _sp.erf(z / math.sqrt(2)))
        return out

    def _quantile(self, p):
        return math.exp(self.mu_log + self.sigma_log * float(_sp.ndtri(p)))

    def moments(self):
        m, s2 = self.mu_log, self.sigma_log**2
        return _moments(math.exp(m + s2 / 2), math.expm1(s2) * math.exp(2 * m + s2))

    def params(self):
        return {"mu_log": self.mu_log, "sigma_log": self.sigma_log}

    def notation_tex(self):
        return r"X \sim \mathrm{Lognormal}(\mu = {{mu_log}},\ \sigma = {{sigma_log}})"

    def density_tex(self):
        return (
            r"f(x) = \frac{1}{x \cdot {{sigma_log}} \sqrt{2\pi}} \,"
            r" e^{-\frac{(\ln x - {{mu_log}})^2}{2 \cdot {{sigma_log}}^2}}"
        )


@dataclass(frozen=True)
class Normal(Distribution):
    mu: float
    sigma: float  # standard deviation; construct via var or sd

    tag: ClassVar[str] = "normal"
    name: ClassVar[str] = "Normal"
    param_info: ClassVar = (
        ("mu", "mean", "real"),
        ("var", "variance (or give sd instead)", "var > 0"),
    )
    support_text: ClassVar[str] = "all real x"

    def __post_init__(self):
        _location("mu", self.mu)
        _positive("sigma", self.sigma)

    def support(self):
        return (-math.inf, math.inf)

    def _pdf(self, x):
        z = (x - self.mu) / self.sigma
        return np.exp(-0.5 * z * z) / (self.sigma * math.sqrt(2 * math.pi))

    def _cdf(self, x):
        z = (x - self.mu) / self.sigma
        return 0.5 * (1.0 + _sp.erf(z / math.sqrt(2)))

    def _quantile(self, p):
        return self.mu + self.sigma * float(_sp.ndtri(p))

    def moments(self):
        return _moments(self.mu, self.sigma**2)

    def params(self):
        return {"mu": self.mu, "var": self.sigma**2}

    def notation_tex(self):
        return r"X \sim \mathcal{N}(\mu = {{mu}},\ \sigma^2 = {{var}})"

    def density_tex(self):
        return (
            r"f(x) = \frac{1}{\sqrt{2\pi \cdot {{var}}}} \,"
            r" e^{-\frac{(x - {{mu}})^2}{2 \cdot {{var}}}}"
        )


@dataclass(frozen=True)
class StudentT(Distribution):
    df: float

    tag: ClassVar[str] = "student_t"
    name: ClassVar[str] = "Student's t"
    param_info: ClassVar = (("df", "degrees of freedom", "df > 0"),)
    support_text: ClassVar[str] = "all real x"

    def __post_init__(self):
        _df("df", self.df)

    def support(self):
        return (-math.inf, math.inf)

    def _pdf(self, x):
        v = self.df
        return np.exp(
            _sp.gammaln((v + 1) / 2)
            - _sp.gammaln(v / 2)
            - 0.5 * math.log(v * math.pi)
            - (v + 1) / 2 * np.log1p(x * x / v)
        )

    def _cdf(self, x):
        # two-branch evaluation: w = v/(v + x^2) saturates to 1.0 for
        # tiny |x| (losing the 1e-12 CDF contract near the median) while
        # u = x^2/(v + x^2) saturates for huge |x|; use whichever is small
        v = self.df
        x2 = x * x
        w = v / (v + x2)
        u = x2 / (v + x2)
        half = np.where(
            x2 <= v,
            0.5 * (1.0 - _sp.betainc(0.5, v / 2, u)),
            0.5 * _sp.betainc(v / 2, 0.5, w),
        )
        return np.where(x > 0, 1.0 - half, np.where(x < 0, half, 0.5))

    def _quantile_bracket(self):
        return (-20.0, 20.0)

    def moments(self):
        v = self.df
        mean = 0.0 if v > 1 else None
        var = v / (v - 2) if v > 2 else None
        if var is None:
            return Moments(mean=mean, sd=None, variance=None)
        return _moments(mean, var)

    def params(self):
        return {"df": self.df}

    def notation_tex(self):
        return r"X \sim t(\nu = {{df}})"

    def density_tex(self):
        return (
            r"f(x) = \frac{\Gamma\!\left(\frac{ {{df}} + 1}{2}\right)}"
            r"{\sqrt{ {{df}} \pi} \, \Gamma\!\left(\frac{ {{df}} }{2}\right)}"
            r" \left(1 + \frac{x^2}{ {{df}} }\right)^{-\frac{ {{df}} + 1}{2}}"
        )


@dataclass(frozen=True)
class Weibull(Distribution):
    shape: float
    scale: float

    tag: ClassVar[str] = "weibull"
    name: ClassVar[str] = "Weibull"
    param_info: ClassVar = (
        ("shape", "shape parameter k", "shape > 0"),
        ("scale", "scale parameter lambda", "scale > 0"),
    )
    support_text: ClassVar[str] = "x >= 0"

    def __post_init__(self):
        _positive("shape", self.shape, minimum=MIN_DF)
        _positive("scale", self.scale)

    def support(self):
        return (0.0, math.inf)

    def pole_points(self):
        return (0.0,) if self.shape < 1 else ()

    def _pdf(self, x):
        k, lam = self.shape, self.scale
        out = np.zeros_like(x)
        pos = x > 0
        z = x[pos] / lam
        out[pos] = (k / lam) * z ** (k - 1) * np.exp(-(z**k))
        if k == 1:
            out[x == 0] = 1.0 / lam
        return out

    def _cdf(self, x):
        z = np.maximum(x, 0.0) / self.scale
        return -np.expm1(-(z**self.shape))

    def _quantile(self, p):
        return self.scale * (-math.log1p(-p)) ** (1.0 / self.shape)

    def moments(self):
        k, lam = self.shape, self.scale
        g1 = math.gamma(1 + 1 / k)
        g2 = math.gamma(1 + 2 / k)
        return _moments(lam * g1, lam**2 * (g2 - g1**2))

    def params(self):
        return {"shape": self.shape, "scale": self.scale}

    def notation_tex(self):
        return r"X \sim \mathrm{Weibull}(k = {{shape}},\ \lambda = {{scale}})"

    def density_tex(self):
        return (
            r"f(x) = \frac{ {{shape}} }{ {{scale}} }"
            r" \left(\frac{x}{ {{scale}} }\right)^{ {{shape}} - 1}"
            r" e^{-(x/{{scale}})^{ {{shape}} }}"
        )


# ---------------------------------------------------------------------------
# discrete families
# ---------------------------------------------------------------------------


def _lchoose(n, k):
    return _sp.gammaln(n + 1) - _sp.gammaln(k + 1) - _sp.gammaln(n - k + 1)


class DiscreteDistribution(Distribution):
    is_discrete: ClassVar[bool] = True

    def _pmf_int(self, k: np.ndarray) -> np.ndarray:
        """Mass at integer support points (caller guarantees integrality)."""
        raise NotImplementedError

    def _cdf_int(self, k: np.ndarray) -> np.ndarray:
        """CDF at integer points clamped to support by the implementation."""
        raise NotImplementedError

    def _pdf(self, x):
        lo, hi = self.support()
        k = np.floor(x)
        on_support = (x == k) & (k >= lo) & (k <= hi)
        out = np.zeros_like(x)
        out[on_support] = self._pmf_int(k[on_support])
        return out

    def _cdf(self, x):
        return self._cdf_int(np.floor(x))

    def _cdf_at(self, k: float) -> float:
        return float(self._cdf_int(np.asarray([k], dtype=float))[0])

    def _quantile(self, p):
        """Smallest support point k with cdf(k) >= p."""
        lo, hi = self.support()
        if self._cdf_at(lo) >= p:
            return float(lo)
        # exponential search, then binary search for the minimal point
        step = 1.0
        a = lo
        b = min(lo + step, hi)
        while self._cdf_at(b) < p:
            if b >= hi:
                return float(hi)
            a = b
            step *= 2.0
            b = min(b + step, hi)
        while b - a > 1:
            mid = math.floor((a + b) / 2)
            if self._cdf_at(mid) >= p:
                b = mid
            else:
                a = mid
        return float(b)


@dataclass(frozen=True)
class Binomial(DiscreteDistribution):
    n: int
    p: float

    tag: ClassVar[str] = "binomial"
    name: ClassVar[str] = "Binomial"
    param_info: ClassVar = (
        ("n", "number of trials", "positive integer"),
        ("p", "success probability", "0 <= p <= 1"),
    )
    support_text: ClassVar[str] = "k = 0, 1, ..., n"

    def __post_init__(self):
        object.__setattr__(self, "n", _integer("n", self.n, minimum=1))
        pv = _finite("p", self.p)
        if not (0.0 <= pv <= 1.0):
            raise DomainError(f"p must lie in [0, 1], got {pv}", field="p")

    def support(self):
        return (0.0, float(self.n))

    def _pmf_int(self, k):
        n, p = self.n, self.p
        if p == 0.0:
            return (k == 0).astype(float)
        if p == 1.0:
            return (k == n).astype(float)
        return np.exp(_lchoose(n, k) + k * math.log(p) + (n - k) * math.log1p(-p))

    def _cdf_int(self, k):
        n, p = self.n, self.p
        k = np.asarray(k, dtype=float)
        if p == 0.0:
            return (k >= 0).astype(float)
        if p == 1.0:
            return (k >= n).astype(float)
        out = np.zeros(k.shape)
        out[k >= n] = 1.0
        mid = (k >= 0) & (k < n)
        km = k[mid]
        out[mid] = _sp.betainc(n - km, km + 1.0, 1.0 - p)
        return out

    def moments(self):
        return _moments(self.n * self.p, self.n * self.p * (1 - self.p))

    def params(self):
        return {"n": float(self.n), "p": self.p}

    def int_params(self):
        return ("n",)

    def notation_tex(self):
        return r"X \sim \mathrm{Bin}(n = {{n}},\ p = {{p}})"

    def density_tex(self):
        return r"P(X = k) = \binom{ {{n}} }{k} \, {{p}}^{\,k} \, (1 - {{p}})^{\, {{n}} - k}"


@dataclass(frozen=True)
class GeometricTrials(DiscreteDistribution):
    """Trial count of the first success; support 1, 2, ..."""

    p: float

    tag: ClassVar[str] = "geometric_trials"
    name: ClassVar[str] = "Geometric (number of trials)"
    param_info: ClassVar = (("p", "success probability", "0 < p <= 1"),)
    support_text: ClassVar[str] = "k = 1, 2, 3, ..."

    def __post_init__(self):
        _event_prob("p", self.p)

    def support(self):
        return (1.0, math.inf)

    def _pmf_int(self, k):
        if self.p == 1.0:
            return (k == 1).astype(float)
        return np.exp(math.log(self.p) + (k - 1) * math.log1p(-self.p))

    def _cdf_int(self, k):
        kc = np.maximum(k, 0.0)
        if self.p == 1.0:
            return (kc >= 1).astype(float)
        return np.where(kc < 1, 0.0, -np.expm1(kc * math.log1p(-self.p)))

    def _quantile(self, p):
        if self.p == 1.0:
            return 1.0
        k = max(1.0, math.ceil(math.log1p(-p) / math.log1p(-self.p)))
        # float-guard: enforce "smallest k with cdf(k) >= p" against our cdf
        while k > 1 and self._cdf_at(k - 1) >= p:
            k -= 1
        while self._cdf_at(k) < p:
            k += 1
        return float(k)

    def moments(self):
        return _moments(1 / self.p, (1 - self.p) / self.p**2)

    def params(self):
        return {"p": self.p}

    def notation_tex(self):
        return r"X \sim \mathrm{Geom}(p = {{p}}) \quad \text{(trial of first success)}"

    def density_tex(self):
        return r"P(X = k) = (1 - {{p}})^{\,k - 1} \, {{p}}"


@dataclass(frozen=True)
class GeometricFailures(DiscreteDistribution):
    """Failures before the first success; support 0, 1, ..."""

    p: float

    tag: ClassVar[str] = "geometric_failures"
    name: ClassVar[str] = "Geometric (number of failures)"
    param_info: ClassVar = (("p", "success probability", "0 < p <= 1"),)
    support_text: ClassVar[str] = "k = 0, 1, 2, ..."

    def __post_init__(self):
        _event_prob("p", self.p)

    def support(self):
        return (0.0, math.inf)

    def _pmf_int(self, k):
        if self.p == 1.0:
            return (k == 0).astype(float)
        return np.exp(math.log(self.p) + k * math.log1p(-self.p))

    def _cdf_int(self, k):
        if self.p == 1.0:
            return (k >= 0).astype(float)
        return np.where(k < 0, 0.0, -np.expm1((k + 1.0) * math.log1p(-self.p)))

    def _quantile(self, p):
        if self.p == 1.0:
            return 0.0
        k = max(0.0, math.ceil(math.log1p(-p) / math.log1p(-self.p)) - 1)
        while k > 0 and self._cdf_at(k - 1) >= p:
            k -= 1
        while self._cdf_at(k) < p:
            k += 1
        return float(k)

    def moments(self):
        return _moments((1 - self.p) / self.p, (1 - self.p) / self.p**2)

    def params(self):
        return {"p": self.p}

    def notation_tex(self):
        return r"X \sim \mathrm{Geom}(p = {{p}}) \quad \text{(failures before first success)}"

    def density_tex(self):
        return r"P(X = k) = (1 - {{p}})^{\,k} \, {{p}}"


@dataclass(frozen=True)
class Hypergeometric(DiscreteDistribution):
    population: int
    successes: int
    draws: int

    tag: ClassVar[str] = "hypergeometric"
    name: ClassVar[str] = "Hypergeometric"
    param_info: ClassVar = (
        ("population", "population size N", "positive integer"),
        ("successes", "number of success states K", "0 <= K <= N"),
        ("draws", "number of draws n", "0 <= n <= N"),
    )
    support_text: ClassVar[str] = "k = max(0, n - (N - K)), ..., min(n, K)"

    def __post_init__(self):
        N = _integer("population", self.population, minimum=1)
        object.__setattr__(self, "population", N)
        object.__setattr__(
            self, "successes", _integer("successes", self.successes, minimum=0, maximum=N)
        )
        object.__setattr__(
            self, "draws", _integer("draws", self.draws, minimum=0, maximum=min(N, MAX_DRAWS))
        )

    def support(self):
        lo = max(0, self.draws - (self.population - self.successes))
        hi = min(self.draws, self.successes)
        return (float(lo), float(hi))

    def _pmf_int(self, k):
        N, K, n = self.population, self.successes, self.draws
        return np.exp(_lchoose(K, k) + _lchoose(N - K, n - k) - _lchoose(N, n))

    def _cdf_int(self, k):
        lo, hi = self.support()
        ks = np.arange(lo, hi + 1)
        csum = np.cumsum(self._pmf_int(ks))
        csum[-1] = 1.0  # exact upper limit despite rounding
        idx = np.clip(np.floor(k - lo).astype(int), -1, len(ks) - 1)
        with_zero = np.concatenate(([0.0], csum))
        return with_zero[idx + 1]

    def moments(self):
        N, K, n = self.population, self.successes, self.draws
        ratio = K / N
        mean = n * ratio
        var = 0.0 if N == 1 else n * ratio * (1 - ratio) * (N - n) / (N - 1)
        return _moments(mean, var)

    def params(self):
        return {
            "population": float(self.population),
            "successes": float(self.successes),
            "draws": float(self.draws),
        }

    def int_params(self):
        return ("population", "successes", "draws")

    def notation_tex(self):
        return (
            r"X \sim \mathrm{Hypergeom}(N = {{population}},"
            r"\ K = {{successes}},\ n = {{draws}})"
        )

    def density_tex(self):
        return (
            r"P(X = k) = \frac{\binom{ {{successes}} }{k}"
            r" \binom{ {{population}} - {{successes}} }{ {{draws}} - k}}"
            r"{\binom{ {{population}} }{ {{draws}} }}"
        )


@dataclass(frozen=True)
class NegBinomialSizeProb(DiscreteDistribution):
    """Failures before the ``size``-th success."""

    size: float
    prob: float

    tag: ClassVar[str] = "negative_binomial_size_prob"
    name: ClassVar[str] = "Negative binomial (size, prob)"
    param_info: ClassVar = (
        ("size", "target number of successes r", "size > 0"),
        ("prob", "success probability", "0 < prob <= 1"),
    )
    support_text: ClassVar[str] = "k = 0, 1, 2, ..."

    def __post_init__(self):
        _positive("size", self.size)
        _event_prob("prob", self.prob)

    def support(self):
        return (0.0, math.inf)

    def _pmf_int(self, k):
        r, p = self.size, self.prob
        if p == 1.0:
            return (k == 0).astype(float)
        return np.exp(
            _sp.gammaln(k + r)
            - _sp.gammaln(r)
            - _sp.gammaln(k + 1)
            + r * math.log(p)
            + k * math.log1p(-p)
        )

    def _cdf_int(self, k):
        r, p = self.size, self.prob
        if p == 1.0:
            return (k >= 0).astype(float)
        return np.where(k < 0, 0.0, _sp.betainc(r, np.maximum(k, 0.0) + 1.0, p))

    def moments(self):
        r, p = self.size, self.prob
        return _moments(r * (1 - p) / p, r * (1 - p) / p**2)

    def params(self):
        return {"size": self.size, "prob": self.prob}

    def notation_tex(self):
        return r"X \sim \mathrm{NB}(r = {{size}},\ p = {{prob}})"

    def density_tex(self):
        return (
            r"P(X = k) = \binom{k + {{size}} - 1}{k} \,"
            r" {{prob}}^{\, {{size}} } (1 - {{prob}})^{\,k}"
        )


@dataclass(frozen=True)
class NegBinomialMeanSize(DiscreteDistribution):
    """Negative binomial parameterised by mean and size; prob = size/(size+mu)."""

    mu: float
    size: float

    tag: ClassVar[str] = "negative_binomial_mean_size"
    name: ClassVar[str] = "Negative binomial (mean, size)"
    param_info: ClassVar = (
        ("mu", "mean", "mu > 0"),
        ("size", "dispersion parameter r", "size > 0"),
    )
    support_text: ClassVar[str] = "k = 0, 1, 2, ..."

    def __post_init__(self):
        _positive("mu", self.mu, maximum=MAX_COUNT_PARAM)
        _positive("size", self.size)

    def _prob(self) -> float:
        return self.size / (self.size + self.mu)

    def _base(self) -> NegBinomialSizeProb:
        return NegBinomialSizeProb(size=self.size, prob=self._prob())

    def support(self):
        return (0.0, math.inf)

    def _pmf_int(self, k):
        return self._base()._pmf_int(k)

    def _cdf_int(self, k):
        return self._base()._cdf_int(k)

    def moments(self):
        return _moments(self.mu, self.mu + self.mu**2 / self.size)

    def params(self):
        return {"mu": self.mu, "size": self.size}

    def density_values(self):
        return {"mu": self.mu, "size": self.size, "prob": self._prob()}

    def notation_tex(self):
        return r"X \sim \mathrm{NB}(\mu = {{mu}},\ r = {{size}})"

    def density_tex(self):
        return (
            r"P(X = k) = \binom{k + {{size}} - 1}{k} \, p^{\, {{size}} } (1 - p)^{\,k},"
            r" \quad p = \frac{ {{size}} }{ {{size}} + {{mu}} } = {{prob}}"
        )


@dataclass(frozen=True)
class Poisson(DiscreteDistribution):
    lam: float

    tag: ClassVar[str] = "poisson"
    name: ClassVar[str] = "Poisson"
    param_info: ClassVar = (("lambda", "rate parameter", "lambda > 0"),)
    support_text: ClassVar[str] = "k = 0, 1, 2, ..."

    def __post_init__(self):
        _positive("lambda", self.lam, maximum=MAX_COUNT_PARAM)

    def support(self):
        return (0.0, math.inf)

    def _pmf_int(self, k):
        return np.exp(k * math.log(self.lam) - self.lam - _sp.gammaln(k + 1))

    def _cdf_int(self, k):
        return np.where(k < 0, 0.0, _sp.gammaincc(np.maximum(k, 0.0) + 1.0, self.lam))

    def moments(self):
        return _moments(self.lam, self.lam)

    def params(self):
        return {"lambda": self.lam}

    def notation_tex(self):
        return r"X \sim \mathrm{Pois}(\lambda = {{lambda}})"

    def density_tex(self):
        return r"P(X = k) = \frac{ {{lambda}}^{\,k} \, e^{-{{lambda}} } }{k!}"


# ---------------------------------------------------------------------------
# registry and module-level operations
# ---------------------------------------------------------------------------

# catalog order: alphabetical by tag
FAMILIES: tuple[type[Distribution], ...] = (
    Beta,
    Binomial,
    Cauchy,
    ChiSquare,
    Exponential,
    Fisher,
    Gamma,
    GeometricFailures,
    GeometricTrials,
    Hypergeometric,
    LogNormal,
    Logistic,
    NegBinomialMeanSize,
    NegBinomialSizeProb,
    Normal,
    Poisson,
    StudentT,
    Weibull,
)

_BY_TAG = {cls.tag: cls for cls in FAMILIES}

# constructor keyword for each catalog parameter name, where they differ
_PARAM_TO_KW = {"lambda": "lam"}


def make_distribution(tag: str, params: dict[str, float]) -> Distribution:
    """Build a validated distribution from its tag and catalog parameters."""
    cls = _BY_TAG.get(tag)
    if cls is None:
        raise UnknownTagError(f"unknown distribution tag {tag!r}", field="distribution")
    names = [p[0] for p in cls.param_info]
    given = dict(params)

    kwargs = {}
    if cls is Normal:
        # exactly one of var / sd
        has_var = "var" in given
        has_sd = "sd" in given
        if has_var == has_sd:
            raise InputError("normal requires exactly one of 'var' or 'sd'", field="params")
        if "mu" not in given:
            raise InputError("missing parameter 'mu'", field="mu")
        mu = _number("mu", given.pop("mu"))
        if has_var:
            var = _number("var", given.pop("var"))
            if var <= 0:
                raise DomainError(f"var must be > 0, got {var}", field="var")
            sigma = math.sqrt(var)
        else:
            sigma = _number("sd", given.pop("sd"))
            if sigma <= 0:
                raise DomainError(f"sd must be > 0, got {sigma}", field="sd")
        if given:
            raise InputError(f"unexpected parameter(s): {sorted(given)}", field="params")
        return Normal(mu=mu, sigma=sigma)

    for name in names:
        if name not in given:
            raise InputError(f"missing parameter {name!r}", field=name)
        kwargs[_PARAM_TO_KW.get(name, name)] = _number(name, given.pop(name))
    if given:
        raise InputError(f"unexpected parameter(s): {sorted(given)}", field="params")
    return cls(**kwargs)


def _number(name: str, v) -> float:
    try:
        out = float(v)
    except (TypeError, ValueError):
        raise InputError(f"parameter {name!r} is not a number: {v!r}", field=name) from None
    if not math.isfinite(out):
        raise DomainError(f"parameter {name!r} must be finite", field=name)
    return out


def catalog() -> list[dict]:
    """Public descriptors for the 18 families (tags, parameters, support)."""
    entries = []
    for cls in FAMILIES:
        entries.append(
            {
                "tag": cls.tag,
                "name": cls.name,
                "discrete": cls.is_discrete,
                "params": [
                    {"name": n, "description": d, "constraint": c} for n, d, c in cls.param_info
                ],
                "support": cls.support_text,
            }
        )
    return entries


def _prepare(x, allow_inf: bool):
    arr = np.asarray(x, dtype=float)
    if np.any(np.isnan(arr)):
        raise DomainError("x must not be NaN", field="x")
    if not allow_inf and not np.all(np.isfinite(arr)):
        raise DomainError("x must be finite", field="x")
    return arr


def pdf_or_pmf(spec: Distribution, x):
    """Density (continuous) or mass (discrete, 0 off support) at x."""
    arr = _prepare(x, allow_inf=False)
    flat = np.atleast_1d(arr)
    for pole in spec.pole_points():
        if np.any(flat == pole):
            raise SingularityError(
                f"{spec.tag} density is infinite at x = {pole}", field="x"
            )
    out = spec._pdf(flat)
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def cdf(spec: Distribution, x):
    """P(X <= x); accepts +-inf with limits 1/0."""
    arr = _prepare(x, allow_inf=True)
    flat = np.atleast_1d(arr).astype(float)
    out = np.empty_like(flat)
    neg, pos = np.isneginf(flat), np.isposinf(flat)
    out[neg] = 0.0
    out[pos] = 1.0
    mid = ~(neg | pos)
    if np.any(mid):
        out[mid] = np.clip(spec._cdf(flat[mid]), 0.0, 1.0)
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def quantile(spec: Distribution, p: float) -> float:
    """Inverse CDF: continuous root of cdf(x)=p, or the smallest support
    point with cdf >= p for discrete families."""
    p = float(p)
    if not (0.0 < p < 1.0):
        raise DomainError(f"p must lie strictly in (0, 1), got {p}", field="p")
    return float(spec._quantile(p))


def moments(spec: Distribution) -> Moments:
    return spec.moments()


def probability(spec: Distribution, query: ProbabilityQuery) -> ProbabilityResult:
    """Evaluate a tail-probability query with derivation steps and plot data."""
    value = _query_value(spec, query)
    plot = plot_data(spec, query)
    from .narrative.distribution_doc import distribution_document

    doc = distribution_document(spec, query, value, spec.moments())
    return ProbabilityResult(value=value, display_value=fmt(value), derivation=doc, plot=plot)


def _query_value(spec: Distribution, query: ProbabilityQuery) -> float:
    if query.kind == "lower_tail":
        value = cdf(spec, query.x)
    elif query.kind == "upper_tail":
        value = 1.0 - cdf(spec, query.x)
    else:
        if spec.is_discrete:
            # P(a <= X <= b) keeps the atom at a: F(b) - F(ceil(a) - 1)
            value = cdf(spec, query.b) - cdf(spec, math.ceil(query.a) - 1.0)
        else:
            value = cdf(spec, query.b) - cdf(spec, query.a)
    return min(max(value, 0.0), 1.0)


def plot_data(spec: Distribution, query: ProbabilityQuery) -> PlotData:
    """Density/mass curve spanning the central 99.9% of the distribution,
    extended to cover the query bounds, with the query region shaded."""
    bounds = query.bounds()
    if spec.is_discrete:
        return _discrete_plot(spec, query, bounds)
    return _continuous_plot(spec, query, bounds)


def _continuous_plot(spec, query, bounds):
    lo = quantile(spec, PLOT_TAIL_PROB)
    hi = quantile(spec, 1.0 - PLOT_TAIL_PROB)
    lo = min(lo, *bounds)
    hi = max(hi, *bounds)
    if hi <= lo:
        hi = lo + 1.0
    grid = np.linspace(lo, hi, PLOT_GRID_POINTS)
    step = (hi - lo) / (PLOT_GRID_POINTS - 1)
    supp_lo, supp_hi = spec.support()
    for pole in spec.pole_points():
        hit = grid == pole
        if np.any(hit):
            inward = 1.0 if pole <= supp_lo else -1.0
            grid[hit] = pole + inward * step * 1e-6
    values = spec._pdf(grid)

    glo, ghi = float(grid[0]), float(grid[-1])
    if query.kind == "lower_tail":
        shaded = [(glo, min(float(query.x), ghi))]
    elif query.kind == "upper_tail":
        shaded = [(max(float(query.x), glo), ghi)]
    else:
        shaded = [(max(float(query.a), glo), min(float(query.b), ghi))]
    shaded = [(a, b) for a, b in shaded if a <= b]
    return PlotData(
        grid=[float(g) for g in grid],
        values=[float(v) for v in values],
        shaded=shaded,
        is_discrete=False,
    )


def _discrete_plot(spec, query, bounds):
    supp_lo, supp_hi = spec.support()
    k_lo = quantile(spec, PLOT_TAIL_PROB)
    k_hi = quantile(spec, 1.0 - PLOT_TAIL_PROB)
    finite_bounds = [b for b in bounds if math.isfinite(b)]
    if finite_bounds:
        k_lo = min(k_lo, math.floor(min(finite_bounds)))
        k_hi = max(k_hi, math.ceil(max(finite_bounds)))
    k_lo = max(k_lo, supp_lo)
    k_hi = min(k_hi, supp_hi)
    span = k_hi - k_lo
    stride = max(1, math.ceil((span + 1) / MAX_DISCRETE_GRID))
    ks = np.arange(k_lo, k_hi + 1, stride, dtype=float)
    values = spec._pmf_int(ks)

    if query.kind == "lower_tail":
        shade_hi = math.floor(query.x)
        ranges = [(k_lo, min(shade_hi, k_hi))]
    elif query.kind == "upper_tail":
        # strictly greater than x
        shade_lo = math.floor(query.x) + 1 if query.x == math.floor(query.x) else math.ceil(query.x)
        ranges = [(max(shade_lo, k_lo), k_hi)]
    else:
        ranges = [(max(math.ceil(query.a), k_lo), min(math.floor(query.b), k_hi))]
    shaded = [(float(a), float(b)) for a, b in ranges if a <= b]
    return PlotData(
        grid=[float(k) for k in ks],
        values=[float(v) for v in values],
        shaded=shaded,
        is_discrete=True,
    )
