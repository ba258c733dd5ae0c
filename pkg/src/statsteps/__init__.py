"""statsteps: a teaching-oriented statistics engine.

Probability computations over 18 distributions, seven confidence-interval
and hypothesis-test settings, and simple linear regression, each returned
as full-precision numbers paired with step-by-step derivations.
"""

__version__ = "0.1.0"

from . import distributions, inference, narrative, regression, specfun
from .distributions import (
    Moments,
    PlotData,
    ProbabilityQuery,
    ProbabilityResult,
    catalog,
    cdf,
    make_distribution,
    moments,
    pdf_or_pmf,
    plot_data,
    probability,
    quantile,
)
from .inference import (
    InferenceRequest,
    InferenceResult,
    MeanSummary,
    ProportionSummary,
    RawSample,
    TestConfig,
    VarianceSummary,
    confidence_interval,
    interpret,
    rejection_plot,
    run_test,
    summarize,
)
from .regression import (
    ConfidenceBand,
    DiagnosticsBundle,
    RegressionFit,
    RegressionInput,
    confidence_band,
    derivation,
    diagnostics,
    fit,
    interpret_fit,
    summary_table,
    validate,
)
from .narrative import DerivationDocument, regression_report, tex_to_text
from .narrative.report import ReportRequest

__all__ = [
    "__version__",
    "distributions",
    "inference",
    "narrative",
    "regression",
    "specfun",
    "Moments",
    "PlotData",
    "ProbabilityQuery",
    "ProbabilityResult",
    "catalog",
    "cdf",
    "make_distribution",
    "moments",
    "pdf_or_pmf",
    "plot_data",
    "probability",
    "quantile",
    "InferenceRequest",
    "InferenceResult",
    "MeanSummary",
    "ProportionSummary",
    "RawSample",
    "TestConfig",
    "VarianceSummary",
    "confidence_interval",
    "interpret",
    "rejection_plot",
    "run_test",
    "summarize",
    "ConfidenceBand",
    "DiagnosticsBundle",
    "RegressionFit",
    "RegressionInput",
    "confidence_band",
    "derivation",
    "diagnostics",
    "fit",
    "interpret_fit",
    "summary_table",
    "validate",
    "DerivationDocument",
    "regression_report",
    "tex_to_text",
    "ReportRequest",
]
