"""Simple linear regression: y = b0 + b1*x fitted by ordinary least squares.

The slope is computed from the classical textbook formula
(sum(x*y) - n*xbar*ybar) / sum((x - xbar)^2), with compensated summation
(math.fsum) protecting the cancellation-prone numerator, and the intercept
follows as ybar - b1*xbar.  Inference on the coefficients uses the
Student-t family from :mod:`statsteps.distributions`.

Perfect fits (zero residual error) are valid fits whose inference fields
are flagged degenerate instead of becoming NaN.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import distributions as dist
from .display import fmt, fmt_p
from .errors import DegenerateDataError, InputError
from .narrative.document import DerivationDocument, Section, Step

BAND_GRID_POINTS = 128


@dataclass(frozen=True)
class RegressionInput:
    x: tuple[float, ...]
    y: tuple[float, ...]
    x_label: str = "x"
    y_label: str = "y"
    confidence_level: float = 0.95
    include_band: bool = True

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(float(v) for v in self.x))
        object.__setattr__(self, "y", tuple(float(v) for v in self.y))
        if not (0.0 < self.confidence_level < 1.0):
            raise InputError(
                "confidence_level must lie in (0, 1)", field="confidence_level"
            )


def validate(inp: RegressionInput) -> RegressionInput:
    """Check lengths, finiteness, sample size and a non-degenerate x."""
    if len(inp.x) != len(inp.y):
        raise InputError(
            f"x and y must have the same length ({len(inp.x)} vs {len(inp.y)})",
            field="y",
        )
    if len(inp.x) < 3:
        raise InputError("regression needs at least 3 observations", field="x")
    if not all(math.isfinite(v) for v in inp.x):
        raise InputError("x values must all be finite", field="x")
    if not all(math.isfinite(v) for v in inp.y):
        raise InputError("y values must all be finite", field="y")
    if len(set(inp.x)) < 2:
        raise InputError("x must contain more than one distinct value", field="x")
    return inp


@dataclass
class RegressionFit:
    n: int
    beta0: float
    beta1: float
    x_mean: float
    y_mean: float
    sum_xy: float
    sxx: float
    numerator: float  # sum_xy - n * x_mean * y_mean
    sse: float
    sst: float
    sigma_hat: float
    df_resid: int
    r_squared: float
    adj_r_squared: float
    fitted: tuple[float, ...]
    residuals: tuple[float, ...]
    degenerate: bool
    se_beta0: float | None = None
    se_beta1: float | None = None
    t0: float | None = None
    t1: float | None = None
    p0: float | None = None
    p1: float | None = None


def fit(inp: RegressionInput) -> RegressionFit:
    """Ordinary least squares via the explicit slope/intercept formulas."""
    validate(inp)
    x, y = inp.x, inp.y
    n = len(x)
    x_mean = math.fsum(x) / n
    y_mean = math.fsum(y) / n
    sum_xy = math.fsum(xi * yi for xi, yi in zip(x, y))
    sxx = math.fsum((xi - x_mean) ** 2 for xi in x)
    numerator = sum_xy - n * x_mean * y_mean
    beta1 = numerator / sxx
    beta0 = y_mean - beta1 * x_mean

    fitted = tuple(beta0 + beta1 * xi for xi in x)
    residuals = tuple(yi - fi for yi, fi in zip(y, fitted))
    sse = math.fsum(e * e for e in residuals)
    sst = math.fsum((yi - y_mean) ** 2 for yi in y)
    if not all(map(math.isfinite, (beta0, beta1, sse, sst))):
        raise InputError(
            "data magnitudes overflow double precision; rescale x or y", field="x"
        )
    df_resid = n - 2
    sigma_hat = math.sqrt(sse / df_resid)
    r_squared = 1.0 if sst == 0.0 else 1.0 - sse / sst
    adj_r_squared = 1.0 - (1.0 - r_squared) * (n - 1) / (n - 2)

    out = RegressionFit(
        n=n,
        beta0=beta0,
        beta1=beta1,
        x_mean=x_mean,
        y_mean=y_mean,
        sum_xy=sum_xy,
        sxx=sxx,
        numerator=numerator,
        sse=sse,
        sst=sst,
        sigma_hat=sigma_hat,
        df_resid=df_resid,
        r_squared=r_squared,
        adj_r_squared=adj_r_squared,
        fitted=fitted,
        residuals=residuals,
        degenerate=(sigma_hat == 0.0),
    )
    if not out.degenerate:
        t_dist = dist.StudentT(df=float(df_resid))
        out.se_beta1 = sigma_hat / math.sqrt(sxx)
        out.se_beta0 = sigma_hat * math.sqrt(1.0 / n + x_mean**2 / sxx)
        out.t1 = beta1 / out.se_beta1
        out.t0 = beta0 / out.se_beta0
        out.p1 = min(2.0 * (1.0 - dist.cdf(t_dist, abs(out.t1))), 1.0)
        out.p0 = min(2.0 * (1.0 - dist.cdf(t_dist, abs(out.t0))), 1.0)
    return out


def derivation(inp: RegressionInput, f: RegressionFit) -> DerivationDocument:
    """The four-step slope/intercept derivation on the user's own data."""
    steps = [
        Step(
            template=r"n = {{n}}, \quad \bar{x} = {{xbar}}, \quad \bar{y} = {{ybar}}",
            values={"n": float(f.n), "xbar": f.x_mean, "ybar": f.y_mean},
            formats={"n": "int"},
        ),
        Step(
            template=(
                r"\sum_{i=1}^{n} x_i y_i = {{sxy}}, \quad"
                r" \sum_{i=1}^{n} (x_i - \bar{x})^2 = {{sxx}}"
            ),
            values={"sxy": f.sum_xy, "sxx": f.sxx},
        ),
        Step(
            template=(
                r"\hat{\beta}_1 = \frac{\left(\sum_{i=1}^{n} x_i y_i\right)"
                r" - n \bar{x} \bar{y}}{\sum_{i=1}^{n} (x_i - \bar{x})^2}"
                r" = \frac{ {{num}} }{ {{sxx}} } = {{beta1}}"
            ),
            values={"num": f.numerator, "sxx": f.sxx, "beta1": f.beta1},
        ),
        Step(
            template=(
                r"\hat{\beta}_0 = \bar{y} - \hat{\beta}_1 \bar{x}"
                r" = {{ybar}} - {{beta1}} \times {{xbar}} = {{beta0}}"
            ),
            values={
                "ybar": f.y_mean,
                "beta1": f.beta1,
                "xbar": f.x_mean,
                "beta0": f.beta0,
            },
        ),
    ]
    return DerivationDocument(sections=[Section(title="Step-by-step derivation", steps=steps)])


def summary_table(f: RegressionFit) -> dict:
    """Coefficient table plus the usual fit statistics."""
    rows = [
        {
            "term": "intercept",
            "estimate": f.beta0,
            "std_error": f.se_beta0,
            "t": f.t0,
            "p": f.p0,
        },
        {
            "term": "slope",
            "estimate": f.beta1,
            "std_error": f.se_beta1,
            "t": f.t1,
            "p": f.p1,
        },
    ]
    return {
        "rows": rows,
        "sigma_hat": f.sigma_hat,
        "df_resid": f.df_resid,
        "r_squared": f.r_squared,
        "adj_r_squared": f.adj_r_squared,
        "degenerate": f.degenerate,
    }


@dataclass
class ConfidenceBand:
    grid: list[float]
    fit: list[float]
    lower: list[float]
    upper: list[float]
    level: float


def confidence_band(inp: RegressionInput, f: RegressionFit) -> ConfidenceBand:
    """Pointwise mean-response band around the fitted line."""
    if f.degenerate:
        raise DegenerateDataError(
            "perfect fit: the confidence band has zero width and is not drawn"
        )
    level = inp.confidence_level
    alpha = 1.0 - level
    t_crit = dist.quantile(dist.StudentT(df=float(f.df_resid)), 1.0 - alpha / 2.0)
    lo, hi = min(inp.x), max(inp.x)
    grid = [lo + (hi - lo) * i / (BAND_GRID_POINTS - 1) for i in range(BAND_GRID_POINTS)]
    center, lower, upper = [], [], []
    for x0 in grid:
        yhat = f.beta0 + f.beta1 * x0
        half = t_crit * f.sigma_hat * math.sqrt(1.0 / f.n + (x0 - f.x_mean) ** 2 / f.sxx)
        center.append(yhat)
        lower.append(yhat - half)
        upper.append(yhat + half)
    return ConfidenceBand(grid=grid, fit=center, lower=lower, upper=upper, level=level)


@dataclass
class DiagnosticsBundle:
    residuals_vs_fitted: list[tuple[float, float]]
    qq_points: list[tuple[float, float]]
    scale_location: list[tuple[float, float]]
    leverage: list[float]
    cooks_distance: list[float | None]
    standardized_residuals: list[float | None]


def diagnostics(inp: RegressionInput, f: RegressionFit) -> DiagnosticsBundle:
    """Data behind the four classical assumption plots."""
    if f.degenerate:
        raise DegenerateDataError("perfect fit: residual diagnostics are undefined")
    leverage = [1.0 / f.n + (xi - f.x_mean) ** 2 / f.sxx for xi in inp.x]
    standardized: list[float | None] = []
    cooks: list[float | None] = []
    for e, h in zip(f.residuals, leverage):
        if h >= 1.0:  # isolated design point fits itself exactly
            standardized.append(None)
            cooks.append(None)
            continue
        r = e / (f.sigma_hat * math.sqrt(1.0 - h))
        standardized.append(r)
        cooks.append(r * r * h / (2.0 * (1.0 - h)))
    normal = dist.Normal(mu=0.0, sigma=1.0)
    valid = sorted(r for r in standardized if r is not None)
    m = len(valid)
    qq = [
        (dist.quantile(normal, (i + 0.5) / m), valid[i])
        for i in range(m)
    ]
    scale_loc = [
        (fi, math.sqrt(abs(r)) if r is not None else 0.0)
        for fi, r in zip(f.fitted, standardized)
    ]
    return DiagnosticsBundle(
        residuals_vs_fitted=[(fi, e) for fi, e in zip(f.fitted, f.residuals)],
        qq_points=qq,
        scale_location=scale_loc,
        leverage=leverage,
        cooks_distance=cooks,
        standardized_residuals=standardized,
    )


def interpret_fit(
    f: RegressionFit, x_label: str, y_label: str, alpha: float = 0.05
) -> str:
    """Slope and intercept read in plain language, using the axis labels."""
    if f.degenerate:
        return (
            f"The data lie exactly on the fitted line: for each one-unit increase in "
            f"{x_label}, {y_label} changes by {fmt(f.beta1)} exactly, and the predicted "
            f"{y_label} at {x_label} = 0 is {fmt(f.beta0)}. With zero residual error the "
            f"usual significance tests do not apply."
        )
    pct = f"{alpha:.0%}"
    if f.p1 < alpha:
        slope = (
            f"For each one-unit increase in {x_label}, {y_label} changes by "
            f"{fmt(f.beta1)} on average; the slope is significantly different from zero "
            f"at the {pct} level (p = {fmt_p(f.p1)})."
        )
    else:
        slope = (
            f"For each one-unit increase in {x_label}, {y_label} changes by "
            f"{fmt(f.beta1)} on average, but there is no evidence at the {pct} level "
            f"that the slope differs from zero (p = {fmt_p(f.p1)})."
        )
    if f.p0 < alpha:
        intercept = (
            f"When {x_label} is 0, the predicted {y_label} is {fmt(f.beta0)}, "
            f"which is significantly different from zero at the {pct} level "
            f"(p = {fmt_p(f.p0)})."
        )
    else:
        intercept = (
            f"When {x_label} is 0, the predicted {y_label} is {fmt(f.beta0)}, "
            f"which is not significantly different from zero at the {pct} level "
            f"(p = {fmt_p(f.p0)})."
        )
    return f"{slope} {intercept}"
