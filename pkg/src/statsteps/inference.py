"""Confidence intervals and hypothesis tests for the seven course settings.

Settings: one_mean, two_means_independent, two_means_paired,
one_proportion, two_proportions, one_variance, two_variances.  Samples
arrive as raw observations or summary statistics; every request yields the
test statistic, critical value(s), p-value, confidence interval, decision,
a four-section narrative and rejection-region plot data.

Raw data is always reduced to summary statistics first, so a raw request
and its summarised twin produce identical results field for field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import distributions as dist
from .display import fmt
from .distributions import PlotData
from .errors import DegenerateDataError, DomainError, InputError, UnknownTagError

SETTINGS = (
    "one_mean",
    "two_means_independent",
    "two_means_paired",
    "one_proportion",
    "two_proportions",
    "one_variance",
    "two_variances",
)

ALTERNATIVES = ("two_sided", "greater", "less")

# small-count rule of thumb for the normal approximation to proportions
PROPORTION_WARN_COUNT = 5

_H0_DEFAULTS = {
    "one_mean": 0.0,
    "two_means_independent": 0.0,
    "two_means_paired": 0.0,
    "one_proportion": 0.5,
    "two_proportions": 0.0,
    "one_variance": 1.0,
    "two_variances": 1.0,
}


# ---------------------------------------------------------------------------
# inputs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RawSample:
    observations: tuple[float, ...]

    def __post_init__(self):
        obs = tuple(float(v) for v in self.observations)
        if len(obs) == 0:
            raise InputError("raw sample has no observations", field="observations")
        if not all(math.isfinite(v) for v in obs):
            raise InputError("raw observations must all be finite", field="observations")
        object.__setattr__(self, "observations", obs)


@dataclass(frozen=True)
class MeanSummary:
    n: int
    mean: float
    variance: float | None = None
    sd: float | None = None

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise InputError(f"n must be an integer >= 2, got {self.n}", field="n")
        object.__setattr__(self, "n", int(self.n))
        if not math.isfinite(self.mean):
            raise InputError("mean must be finite", field="mean")
        if (self.variance is None) == (self.sd is None):
            raise InputError("give exactly one of variance or sd", field="variance")
        if self.variance is not None:
            if not math.isfinite(self.variance) or self.variance < 0:
                raise InputError("variance must be >= 0", field="variance")
        else:
            if not math.isfinite(self.sd) or self.sd < 0:
                raise InputError("sd must be >= 0", field="sd")


@dataclass(frozen=True)
class ProportionSummary:
    n: int
    successes: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise InputError(f"n must be an integer >= 1, got {self.n}", field="n")
        if int(self.successes) != self.successes:
            raise InputError("successes must be an integer", field="successes")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "successes", int(self.successes))
        if not (0 <= self.successes <= self.n):
            raise InputError(
                f"successes must lie in [0, n], got {self.successes}", field="successes"
            )


@dataclass(frozen=True)
class VarianceSummary:
    n: int
    variance: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise InputError(f"n must be an integer >= 2, got {self.n}", field="n")
        object.__setattr__(self, "n", int(self.n))
        if not math.isfinite(self.variance) or self.variance <= 0:
            raise DegenerateDataError("variance must be > 0", field="variance")


SampleInput = RawSample | MeanSummary | ProportionSummary | VarianceSummary


@dataclass(frozen=True)
class TestConfig:
    alpha: float = 0.05
    h0_value: float | None = None
    alternative: str = "two_sided"
    sigma_known: float | None = None
    sigma2_known: float | None = None
    equal_variances: bool = False
    pooled_se: bool = False

    def __post_init__(self):
        if not (0.0 < self.alpha < 0.5):
            raise DomainError(
                f"alpha must lie strictly in (0, 0.5), got {self.alpha}", field="alpha"
            )
        if self.alternative not in ALTERNATIVES:
            raise InputError(
                f"alternative must be one of {ALTERNATIVES}, got {self.alternative!r}",
                field="alternative",
            )
        if self.h0_value is not None and not math.isfinite(self.h0_value):
            raise DomainError("h0_value must be finite", field="h0_value")
        for name in ("sigma_known", "sigma2_known"):
            v = getattr(self, name)
            if v is not None and (not math.isfinite(v) or v <= 0):
                raise DomainError(f"{name} must be > 0", field=name)


@dataclass(frozen=True)
class InferenceRequest:
    setting: str
    samples: tuple[SampleInput, ...]
    config: TestConfig

    def __post_init__(self):
        if self.setting not in SETTINGS:
            raise UnknownTagError(f"unknown inference setting {self.setting!r}", field="setting")
        object.__setattr__(self, "samples", tuple(self.samples))


# ---------------------------------------------------------------------------
# outputs
# ---------------------------------------------------------------------------


@dataclass
class SampleStats:
    kind: str  # mean | proportion | variance
    n: int
    mean: float | None = None
    sd: float | None = None
    variance: float | None = None
    p_hat: float | None = None
    successes: int | None = None
    observations: tuple[float, ...] | None = None


@dataclass
class ConfidenceInterval:
    lower: float
    upper: float
    level: float
    sidedness: str  # two_sided | greater | less


@dataclass(frozen=True)
class StatisticFamily:
    kind: str  # normal | student_t | chi_square | f
    df: float | None = None
    df1: float | None = None
    df2: float | None = None

    def distribution(self) -> dist.Distribution:
        if self.kind == "normal":
            return dist.Normal(mu=0.0, sigma=1.0)
        if self.kind == "student_t":
            return dist.StudentT(df=self.df)
        if self.kind == "chi_square":
            return dist.ChiSquare(df=self.df)
        return dist.Fisher(df1=self.df1, df2=self.df2)

    def label(self) -> str:
        if self.kind == "normal":
            return "z"
        if self.kind == "student_t":
            return "t"
        if self.kind == "chi_square":
            return "chi2"
        return "F"


@dataclass
class InferenceResult:
    setting: str
    request: InferenceRequest
    summary_stats: list[SampleStats]
    diff_stats: SampleStats | None
    ci: ConfidenceInterval
    statistic: float
    statistic_family: StatisticFamily
    critical_values: list[float]
    p_value: float
    decision: str  # reject | fail_to_reject
    h0_value: float
    estimate: float | None
    std_error: float | None
    warnings: list[str] = field(default_factory=list)
    interpretation: str = ""
    narrative: object = None  # DerivationDocument
    plot: PlotData | None = None

    @property
    def rejected(self) -> bool:
        return self.decision == "reject"


# ---------------------------------------------------------------------------
# summarisation
# ---------------------------------------------------------------------------


def summarize(sample: SampleInput, kind: str) -> SampleStats:
    """Reduce a sample to the statistics the given analysis kind needs."""
    if kind not in ("mean", "proportion", "variance"):
        raise InputError(f"unknown summary kind {kind!r}", field="kind")

    if isinstance(sample, RawSample):
        obs = sample.observations
        if kind == "proportion":
            if any(v not in (0.0, 1.0) for v in obs):
                raise InputError(
                    "proportion settings need 0/1 raw data", field="observations"
                )
            successes = int(sum(obs))
            return SampleStats(
                kind=kind,
                n=len(obs),
                p_hat=successes / len(obs),
                successes=successes,
                observations=obs,
            )
        if len(obs) < 2:
            raise InputError(
                "mean and variance settings need at least 2 observations",
                field="observations",
            )
        n = len(obs)
        mean = math.fsum(obs) / n
        var = math.fsum((v - mean) ** 2 for v in obs) / (n - 1)
        if kind == "variance" and var == 0.0:
            raise DegenerateDataError(
                "sample variance is 0; variance tests need spread in the data",
                field="observations",
            )
        return SampleStats(
            kind=kind, n=n, mean=mean, sd=math.sqrt(var), variance=var, observations=obs
        )

    if isinstance(sample, MeanSummary):
        if kind != "mean":
            raise InputError("mean summary given for a non-mean setting", field="samples")
        var = sample.variance if sample.variance is not None else sample.sd**2
        sd = sample.sd if sample.sd is not None else math.sqrt(var)
        return SampleStats(kind=kind, n=sample.n, mean=sample.mean, sd=sd, variance=var)

    if isinstance(sample, ProportionSummary):
        if kind != "proportion":
            raise InputError(
                "proportion summary given for a non-proportion setting", field="samples"
            )
        return SampleStats(
            kind=kind, n=sample.n, p_hat=sample.successes / sample.n, successes=sample.successes
        )

    if isinstance(sample, VarianceSummary):
        if kind != "variance":
            raise InputError(
                "variance summary given for a non-variance setting", field="samples"
            )
        return SampleStats(
            kind=kind, n=sample.n, variance=sample.variance, sd=math.sqrt(sample.variance)
        )

    raise InputError(f"unsupported sample type {type(sample).__name__}", field="samples")


def _expect_samples(req: InferenceRequest, count: int):
    if len(req.samples) != count:
        raise InputError(
            f"{req.setting} needs exactly {count} sample(s), got {len(req.samples)}",
            field="samples",
        )


# ---------------------------------------------------------------------------
# the engine
# ---------------------------------------------------------------------------


def _guard_finite(result: InferenceResult):
    """Inputs are validated individually, but extreme magnitudes can still
    overflow the arithmetic; refuse to emit non-finite results."""
    values = [result.statistic, *result.critical_values]
    if result.std_error is not None:
        values.append(result.std_error)
    if math.isnan(result.ci.lower) or math.isnan(result.ci.upper):
        values.append(math.nan)
    if not all(math.isfinite(v) for v in values):
        raise DomainError(
            "computation overflowed double precision; rescale the inputs or use "
            "a less extreme alpha"
        )


def run_test(req: InferenceRequest) -> InferenceResult:
    """Run the requested CI + hypothesis test and assemble the full result."""
    handler = _HANDLERS[req.setting]
    result = handler(req)
    _guard_finite(result)
    result.decision = "reject" if result.p_value < req.config.alpha else "fail_to_reject"
    result.interpretation = interpret(result, req.config.alpha)
    from .narrative.test_doc import test_document

    result.narrative = test_document(result)
    result.plot = rejection_plot(result)
    return result


def confidence_interval(req: InferenceRequest):
    """The interval alone, with its derivation section."""
    from .narrative.document import DerivationDocument

    result = run_test(req)
    section = result.narrative.section("Confidence interval")
    return result.ci, DerivationDocument(sections=[section])


def _h0(req: InferenceRequest) -> float:
    h0 = req.config.h0_value
    return _H0_DEFAULTS[req.setting] if h0 is None else float(h0)


def _symmetric_test(estimate, se, h0, family, config):
    """z/t machinery shared by every mean and proportion setting."""
    d = family.distribution()
    stat = (estimate - h0) / se
    alt = config.alternative
    alpha = config.alpha
    if alt == "two_sided":
        crit = dist.quantile(d, 1 - alpha / 2)
        p = min(2.0 * (1.0 - dist.cdf(d, abs(stat))), 1.0)
        crits = [-crit, crit]
        ci = ConfidenceInterval(
            estimate - crit * se, estimate + crit * se, 1 - alpha, "two_sided"
        )
    elif alt == "greater":
        crit = dist.quantile(d, 1 - alpha)
        p = 1.0 - dist.cdf(d, stat)
        crits = [crit]
        ci = ConfidenceInterval(estimate - crit * se, math.inf, 1 - alpha, "greater")
    else:
        crit = dist.quantile(d, alpha)
        p = dist.cdf(d, stat)
        crits = [crit]
        upper = estimate + dist.quantile(d, 1 - alpha) * se
        ci = ConfidenceInterval(-math.inf, upper, 1 - alpha, "less")
    return stat, p, crits, ci


def _scaled_chi_f_test(stat, scale, family, config, positive_floor=0.0):
    """chi-square / F machinery: stat is the test statistic, scale maps
    quantiles to CI bounds (CI = [scale/q_hi, scale/q_lo])."""
    d = family.distribution()
    alpha = config.alpha
    alt = config.alternative
    F = dist.cdf(d, stat)
    if alt == "two_sided":
        q_lo = dist.quantile(d, alpha / 2)
        q_hi = dist.quantile(d, 1 - alpha / 2)
        p = min(2.0 * min(F, 1.0 - F), 1.0)
        crits = [q_lo, q_hi]
        ci = ConfidenceInterval(scale / q_hi, scale / q_lo, 1 - alpha, "two_sided")
    elif alt == "greater":
        q = dist.quantile(d, 1 - alpha)
        p = 1.0 - F
        crits = [q]
        ci = ConfidenceInterval(scale / q, math.inf, 1 - alpha, "greater")
    else:
        q = dist.quantile(d, alpha)
        p = F
        crits = [q]
        ci = ConfidenceInterval(positive_floor, scale / q, 1 - alpha, "less")
    return p, crits, ci


def _one_mean_core(req: InferenceRequest, stats: SampleStats):
    cfg = req.config
    h0 = _h0(req)
    n = stats.n
    if cfg.sigma_known is not None:
        family = StatisticFamily(kind="normal")
        se = cfg.sigma_known / math.sqrt(n)
    else:
        family = StatisticFamily(kind="student_t", df=float(n - 1))
        if stats.sd == 0.0:
            raise DegenerateDataError(
                "sample standard deviation is 0; the t statistic is undefined",
                field="observations",
            )
        se = stats.sd / math.sqrt(n)
    stat, p, crits, ci = _symmetric_test(stats.mean, se, h0, family, cfg)
    return family, se, stat, p, crits, ci, h0


def _run_one_mean(req: InferenceRequest) -> InferenceResult:
    _expect_samples(req, 1)
    stats = summarize(req.samples[0], "mean")
    family, se, stat, p, crits, ci, h0 = _one_mean_core(req, stats)
    return InferenceResult(
        setting=req.setting,
        request=req,
        summary_stats=[stats],
        diff_stats=None,
        ci=ci,
        statistic=stat,
        statistic_family=family,
        critical_values=crits,
        p_value=p,
        decision="",
        h0_value=h0,
        estimate=stats.mean,
        std_error=se,
    )


def _run_two_means_independent(req: InferenceRequest) -> InferenceResult:
    _expect_samples(req, 2)
    cfg = req.config
    s1 = summarize(req.samples[0], "mean")
    s2 = summarize(req.samples[1], "mean")
    h0 = _h0(req)
    n1, n2 = s1.n, s2.n
    if (cfg.sigma_known is None) != (cfg.sigma2_known is None):
        raise InputError(
            "two-sample z needs both sigma_known and sigma2_known", field="sigma_known"
        )
    if cfg.sigma_known is not None:
        family = StatisticFamily(kind="normal")
        se = math.sqrt(cfg.sigma_known**2 / n1 + cfg.sigma2_known**2 / n2)
    elif cfg.equal_variances:
        df = n1 + n2 - 2
        sp2 = ((n1 - 1) * s1.variance + (n2 - 1) * s2.variance) / df
        if sp2 == 0.0:
            raise DegenerateDataError("pooled variance is 0", field="samples")
        family = StatisticFamily(kind="student_t", df=float(df))
        se = math.sqrt(sp2) * math.sqrt(1 / n1 + 1 / n2)
    else:
        a, b = s1.variance / n1, s2.variance / n2
        if a + b == 0.0:
            raise DegenerateDataError("both sample variances are 0", field="samples")
        df = (a + b) ** 2 / (a**2 / (n1 - 1) + b**2 / (n2 - 1))
        family = StatisticFamily(kind="student_t", df=df)
        se = math.sqrt(a + b)
    estimate = s1.mean - s2.mean
    stat, p, crits, ci = _symmetric_test(estimate, se, h0, family, cfg)
    return InferenceResult(
        setting=req.setting,
        request=req,
        summary_stats=[s1, s2],
        diff_stats=None,
        ci=ci,
        statistic=stat,
        statistic_family=family,
        critical_values=crits,
        p_value=p,
        decision="",
        h0_value=h0,
        estimate=estimate,
        std_error=se,
    )


def _run_two_means_paired(req: InferenceRequest) -> InferenceResult:
    _expect_samples(req, 2)
    a, b = req.samples
    if not (isinstance(a, RawSample) and isinstance(b, RawSample)):
        raise InputError("paired samples must both be raw data", field="samples")
    if len(a.observations) != len(b.observations):
        raise InputError(
            "paired samples must have the same length", field="samples"
        )
    if len(a.observations) < 2:
        raise InputError("paired test needs at least 2 pairs", field="samples")
    diffs = tuple(x - y for x, y in zip(a.observations, b.observations))
    s1 = summarize(a, "mean")
    s2 = summarize(b, "mean")
    dstats = summarize(RawSample(diffs), "mean")
    family, se, stat, p, crits, ci, h0 = _one_mean_core(req, dstats)
    return InferenceResult(
        setting=req.setting,
        request=req,
        summary_stats=[s1, s2],
        diff_stats=dstats,
        ci=ci,
        statistic=stat,
        statistic_family=family,
        critical_values=crits,
        p_value=p,
        decision="",
        h0_value=h0,
        estimate=dstats.mean,
        std_error=se,
    )


def _proportion_warnings(stats: SampleStats, label: str = "") -> list[str]:
    n, ph = stats.n, stats.p_hat
    tag = f" in sample {label}" if label else ""
    if n * ph < PROPORTION_WARN_COUNT or n * (1 - ph) < PROPORTION_WARN_COUNT:
        return [
            f"normal approximation may be poor{tag}: "
            f"n*p_hat = {fmt(n * ph)}, n*(1 - p_hat) = {fmt(n * (1 - ph))}"
        ]
    return []


def _run_one_proportion(req: InferenceRequest) -> InferenceResult:
    _expect_samples(req, 1)
    cfg = req.config
    stats = summarize(req.samples[0], "proportion")
    h0 = _h0(req)
    if not (0.0 < h0 < 1.0):
        raise DomainError("null proportion must lie in (0, 1)", field="h0_value")
    ph, n = stats.p_hat, stats.n
    if ph in (0.0, 1.0):
        raise DegenerateDataError(
            "sample proportion is 0 or 1; the z statistic is undefined", field="samples"
        )
    se = math.sqrt(ph * (1 - ph) / n)
    family = StatisticFamily(kind="normal")
    stat, p, crits, ci = _symmetric_test(ph, se, h0, family, cfg)
    return InferenceResult(
        setting=req.setting,
        request=req,
        summary_stats=[stats],
        diff_stats=None,
        ci=ci,
        statistic=stat,
        statistic_family=family,
        critical_values=crits,
        p_value=p,
        decision="",
        h0_value=h0,
        estimate=ph,
        std_error=se,
        warnings=_proportion_warnings(stats),
    )


def _run_two_proportions(req: InferenceRequest) -> InferenceResult:
    _expect_samples(req, 2)
    cfg = req.config
    s1 = summarize(req.samples[0], "proportion")
    s2 = summarize(req.samples[1], "proportion")
    h0 = _h0(req)
    p1, p2 = s1.p_hat, s2.p_hat
    n1, n2 = s1.n, s2.n
    se_unpooled = math.sqrt(p1 * (1 - p1) / n1 + p2 * (1 - p2) / n2)
    if cfg.pooled_se:
        pbar = (s1.successes + s2.successes) / (n1 + n2)
        if pbar in (0.0, 1.0):
            raise DegenerateDataError(
                "pooled proportion is 0 or 1; the z statistic is undefined", field="samples"
            )
        se_stat = math.sqrt(pbar * (1 - pbar) * (1 / n1 + 1 / n2))
    else:
        if se_unpooled == 0.0:
            raise DegenerateDataError(
                "both sample proportions are degenerate (0 or 1)", field="samples"
            )
        se_stat = se_unpooled
    if se_unpooled == 0.0:
        raise DegenerateDataError(
            "both sample proportions are degenerate (0 or 1)", field="samples"
        )
    estimate = p1 - p2
    d = dist.Normal(mu=0.0, sigma=1.0)
    family = StatisticFamily(kind="normal")
    stat = (estimate - h0) / se_stat
    alpha, alt = cfg.alpha, cfg.alternative
    # the CI always uses the unpooled standard error
    if alt == "two_sided":
        crit = dist.quantile(d, 1 - alpha / 2)
        p = min(2.0 * (1.0 - dist.cdf(d, abs(stat))), 1.0)
        crits = [-crit, crit]
        ci = ConfidenceInterval(
            estimate - crit * se_unpooled, estimate + crit * se_unpooled, 1 - alpha, alt
        )
    elif alt == "greater":
        crit = dist.quantile(d, 1 - alpha)
        p = 1.0 - dist.cdf(d, stat)
        crits = [crit]
        ci = ConfidenceInterval(estimate - crit * se_unpooled, math.inf, 1 - alpha, alt)
    else:
        crit = dist.quantile(d, alpha)
        p = dist.cdf(d, stat)
        crits = [crit]
        ci = ConfidenceInterval(
            -math.inf, estimate + dist.quantile(d, 1 - alpha) * se_unpooled, 1 - alpha, alt
        )
    warnings = _proportion_warnings(s1, "1") + _proportion_warnings(s2, "2")
    return InferenceResult(
        setting=req.setting,
        request=req,
        summary_stats=[s1, s2],
        diff_stats=None,
        ci=ci,
        statistic=stat,
        statistic_family=family,
        critical_values=crits,
        p_value=p,
        decision="",
        h0_value=h0,
        estimate=estimate,
        std_error=se_stat,
        warnings=warnings,
    )


def _run_one_variance(req: InferenceRequest) -> InferenceResult:
    _expect_samples(req, 1)
    stats = summarize(req.samples[0], "variance")
    h0 = _h0(req)
    if h0 <= 0:
        raise DomainError("null variance must be > 0", field="h0_value")
    n = stats.n
    family = StatisticFamily(kind="chi_square", df=float(n - 1))
    stat = (n - 1) * stats.variance / h0
    scale = (n - 1) * stats.variance  # CI bounds are scale / chi2 quantiles
    p, crits, ci = _scaled_chi_f_test(stat, scale, family, req.config)
    return InferenceResult(
        setting=req.setting,
        request=req,
        summary_stats=[stats],
        diff_stats=None,
        ci=ci,
        statistic=stat,
        statistic_family=family,
        critical_values=crits,
        p_value=p,
        decision="",
        h0_value=h0,
        estimate=stats.variance,
        std_error=None,
    )


def _run_two_variances(req: InferenceRequest) -> InferenceResult:
    _expect_samples(req, 2)
    s1 = summarize(req.samples[0], "variance")
    s2 = summarize(req.samples[1], "variance")
    h0 = _h0(req)
    if h0 <= 0:
        raise DomainError("null variance ratio must be > 0", field="h0_value")
    ratio = s1.variance / s2.variance
    stat = ratio / h0
    family = StatisticFamily(kind="f", df1=float(s1.n - 1), df2=float(s2.n - 1))
    p, crits, ci = _scaled_chi_f_test(stat, ratio, family, req.config)
    return InferenceResult(
        setting=req.setting,
        request=req,
        summary_stats=[s1, s2],
        diff_stats=None,
        ci=ci,
        statistic=stat,
        statistic_family=family,
        critical_values=crits,
        p_value=p,
        decision="",
        h0_value=h0,
        estimate=ratio,
        std_error=None,
    )


_HANDLERS = {
    "one_mean": _run_one_mean,
    "two_means_independent": _run_two_means_independent,
    "two_means_paired": _run_two_means_paired,
    "one_proportion": _run_one_proportion,
    "two_proportions": _run_two_proportions,
    "one_variance": _run_one_variance,
    "two_variances": _run_two_variances,
}


# ---------------------------------------------------------------------------
# interpretation and plot
# ---------------------------------------------------------------------------

def interpret(result: InferenceResult, alpha: float) -> str:
    """Plain-language conclusion at the chosen significance level."""
    from .narrative.test_doc import interpretation_step

    return interpretation_step(result, alpha).display


def rejection_plot(result: InferenceResult) -> PlotData:
    """Sampling-distribution curve with the rejection region shaded and the
    observed statistic marked."""
    d = result.statistic_family.distribution()
    stat = result.statistic
    crits = result.critical_values
    lo_q = dist.quantile(d, dist.PLOT_TAIL_PROB)
    hi_q = dist.quantile(d, 1 - dist.PLOT_TAIL_PROB)
    lo = min([lo_q, stat, *crits])
    hi = max([hi_q, stat, *crits])
    pad = 0.08 * (hi - lo)
    lo -= pad
    hi += pad
    supp_lo, _ = d.support()
    if supp_lo == 0.0:
        lo = 0.0  # chi-square / F curves start at the support edge
    grid = np.linspace(lo, hi, dist.PLOT_GRID_POINTS)
    step = (hi - lo) / (dist.PLOT_GRID_POINTS - 1)
    for pole in d.pole_points():
        hit = grid == pole
        if np.any(hit):
            grid[hit] = pole + step * 1e-6
    values = d._pdf(grid)

    glo, ghi = float(grid[0]), float(grid[-1])
    alt = result.request.config.alternative
    if alt == "two_sided":
        c_lo, c_hi = min(crits), max(crits)
        shaded = [(glo, c_lo), (c_hi, ghi)]
    elif alt == "greater":
        shaded = [(crits[0], ghi)]
    else:
        shaded = [(glo, crits[0])]
    shaded = [(a, b) for a, b in shaded if a <= b]
    return PlotData(
        grid=[float(g) for g in grid],
        values=[float(v) for v in values],
        shaded=shaded,
        is_discrete=False,
        marker=stat,
    )
