"""Stateless HTTP/JSON API over the engine, plus shared input parsing.

The payload-builder functions below are plain dict producers used by both
the FastAPI handlers and the CLI's JSON mode, so the two surfaces emit
identical documents.  All headline scalars are serialized at full
precision together with their 4-decimal display strings; open interval
ends and undefined moments serialize as null.

Configuration (environment):
    STATSTEPS_HOST             bind address for ``serve`` (default 127.0.0.1)
    STATSTEPS_PORT             port (default 8000)
    STATSTEPS_MAX_OBS          per-sample observation cap (default 100000)
    STATSTEPS_MAX_BODY_BYTES   request body cap (default 2000000)
    STATSTEPS_ALLOWED_ORIGINS  comma-separated CORS origins (default none)
"""

from __future__ import annotations

import json
import logging
import math
import os
import re
import sys
import time
from typing import Literal

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import HTMLResponse, JSONResponse
from pydantic import BaseModel, ConfigDict

from . import __version__, distributions, inference, regression
from .display import fmt, fmt_p
from .errors import ParseError, StatsError, UnknownTagError
from .narrative.report import ReportRequest, regression_report

log = logging.getLogger("statsteps.service")

DEFAULT_MAX_OBS = 100_000
DEFAULT_MAX_BODY_BYTES = 2_000_000


def max_observations() -> int:
    return int(os.environ.get("STATSTEPS_MAX_OBS", DEFAULT_MAX_OBS))


class PayloadTooLarge(StatsError):
    code = "payload_too_large"


# ---------------------------------------------------------------------------
# numeric-list parsing (shared with the CLI)
# ---------------------------------------------------------------------------

_SEPARATORS = re.compile(r"[,;\n]")


def parse_numeric_list(text: str) -> list[float]:
    """Parse comma-separated numbers; newlines and semicolons also separate.

    Whitespace around items is ignored, the decimal separator is the
    point, and empty items are an error reported with their 1-based index.
    """
    if not isinstance(text, str):
        raise ParseError("expected a string of comma-separated numbers")
    stripped = text.strip()
    if not stripped:
        raise ParseError("no numbers given", item_index=1)
    out = []
    for i, item in enumerate(_SEPARATORS.split(stripped), start=1):
        tok = item.strip()
        if not tok:
            raise ParseError(f"empty item at position {i}", item_index=i)
        if "_" in tok:
            raise ParseError(f"item {i} is not a number: {tok!r}", item_index=i)
        try:
            v = float(tok)
        except ValueError:
            raise ParseError(f"item {i} is not a number: {tok!r}", item_index=i) from None
        if not math.isfinite(v):
            raise ParseError(f"item {i} must be finite: {tok!r}", item_index=i)
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# payload helpers
# ---------------------------------------------------------------------------


def _num(v: float | None) -> dict | None:
    """Full-precision value with its 4-dp display twin."""
    if v is None:
        return None
    if not math.isfinite(v):
        return {"value": None, "display": fmt(v)}
    return {"value": float(v), "display": fmt(v)}


def _num_p(v: float) -> dict:
    return {"value": float(v), "display": fmt_p(v)}


def _plot(plot: distributions.PlotData) -> dict:
    clip = lambda v: float(min(max(v, 0.0), 1e308))
    return {
        "grid": [float(g) for g in plot.grid],
        "values": [clip(v) for v in plot.values],
        "shaded": [[float(a), float(b)] for a, b in plot.shaded],
        "is_discrete": plot.is_discrete,
        "marker": None if plot.marker is None else float(plot.marker),
    }


def _check_obs_cap(count: int):
    cap = max_observations()
    if count > cap:
        raise PayloadTooLarge(f"at most {cap} observations per sample (got {count})")


# ---------------------------------------------------------------------------
# builders (shared by HTTP handlers and the CLI JSON mode)
# ---------------------------------------------------------------------------


def catalog_payload() -> dict:
    entries = distributions.catalog()
    for e in entries:
        if e["tag"] == "normal":
            e["notes"] = "give exactly one of 'var' or 'sd' for the spread"
    return {"distributions": entries}


_SETTING_INFO = {
    "one_mean": {
        "name": "One mean",
        "samples": 1,
        "sample_kinds": ["raw", "mean_summary"],
        "options": ["sigma_known"],
        "h0": "null mean (mu0)",
    },
    "two_means_independent": {
        "name": "Two means, independent samples",
        "samples": 2,
        "sample_kinds": ["raw", "mean_summary"],
        "options": ["sigma_known", "sigma2_known", "equal_variances"],
        "h0": "null difference in means (default 0)",
    },
    "two_means_paired": {
        "name": "Two means, paired samples",
        "samples": 2,
        "sample_kinds": ["raw"],
        "options": ["sigma_known"],
        "h0": "null mean difference (default 0)",
    },
    "one_proportion": {
        "name": "One proportion",
        "samples": 1,
        "sample_kinds": ["raw", "proportion_summary"],
        "options": [],
        "h0": "null proportion (in (0, 1))",
    },
    "two_proportions": {
        "name": "Two proportions",
        "samples": 2,
        "sample_kinds": ["raw", "proportion_summary"],
        "options": ["pooled_se"],
        "h0": "null difference in proportions (default 0)",
    },
    "one_variance": {
        "name": "One variance",
        "samples": 1,
        "sample_kinds": ["raw", "variance_summary"],
        "options": [],
        "h0": "null variance (> 0)",
    },
    "two_variances": {
        "name": "Two variances",
        "samples": 2,
        "sample_kinds": ["raw", "variance_summary"],
        "options": [],
        "h0": "null variance ratio (default 1)",
    },
}


def settings_payload() -> dict:
    return {
        "settings": [
            {"tag": tag, **info, "alternatives": list(inference.ALTERNATIVES)}
            for tag, info in _SETTING_INFO.items()
        ]
    }


def health_payload() -> dict:
    return {"name": "statsteps", "version": __version__, "status": "ok"}


def probability_payload(tag: str, params: dict, query: dict) -> dict:
    spec = distributions.make_distribution(tag, params)
    q = _query_from_dict(query)
    result = distributions.probability(spec, q)
    m = distributions.moments(spec)
    return {
        "distribution": {"tag": spec.tag, "params": spec.params()},
        "query": {k: v for k, v in query.items() if v is not None},
        "probability": {"value": result.value, "display": result.display_value},
        "moments": {
            "mean": _num(m.mean),
            "sd": _num(m.sd),
            "variance": _num(m.variance),
        },
        "derivation": result.derivation.to_dict(),
        "plot": _plot(result.plot),
    }


def _query_from_dict(query: dict) -> distributions.ProbabilityQuery:
    if not isinstance(query, dict) or "kind" not in query:
        raise StatsError("query must carry a 'kind'", field="query")
    kind = query["kind"]
    return distributions.ProbabilityQuery(
        kind=kind,
        x=query.get("x"),
        a=query.get("a"),
        b=query.get("b"),
    )


def _sample_from_dict(d: dict) -> inference.SampleInput:
    kind = d.get("kind")
    if kind == "raw":
        obs = d.get("observations")
        if obs is None and d.get("text") is not None:
            obs = parse_numeric_list(d["text"])
        if obs is None:
            raise StatsError("raw sample needs 'observations' or 'text'", field="samples")
        _check_obs_cap(len(obs))
        return inference.RawSample(tuple(obs))
    if kind == "mean_summary":
        return inference.MeanSummary(
            n=d.get("n"), mean=d.get("mean"), variance=d.get("variance"), sd=d.get("sd")
        )
    if kind == "proportion_summary":
        return inference.ProportionSummary(n=d.get("n"), successes=d.get("successes"))
    if kind == "variance_summary":
        return inference.VarianceSummary(n=d.get("n"), variance=d.get("variance"))
    raise StatsError(f"unknown sample kind {kind!r}", field="samples")


def _stats_dict(s: inference.SampleStats | None) -> dict | None:
    if s is None:
        return None
    out = {"kind": s.kind, "n": s.n}
    if s.mean is not None:
        out["mean"] = _num(s.mean)
        out["sd"] = _num(s.sd)
        out["variance"] = _num(s.variance)
    if s.kind == "variance" and s.mean is None:
        out["variance"] = _num(s.variance)
        out["sd"] = _num(s.sd)
    if s.p_hat is not None:
        out["p_hat"] = _num(s.p_hat)
        out["successes"] = s.successes
    return out


def inference_payload(setting: str, body: dict) -> dict:
    if setting not in inference.SETTINGS:
        raise UnknownTagError(f"unknown inference setting {setting!r}", field="setting")
    samples = tuple(_sample_from_dict(s) for s in body.get("samples", []))
    cfg_dict = body.get("config", {}) or {}
    config = inference.TestConfig(
        alpha=cfg_dict.get("alpha", 0.05),
        h0_value=cfg_dict.get("h0_value"),
        alternative=cfg_dict.get("alternative", "two_sided"),
        sigma_known=cfg_dict.get("sigma_known"),
        sigma2_known=cfg_dict.get("sigma2_known"),
        equal_variances=bool(cfg_dict.get("equal_variances", False)),
        pooled_se=bool(cfg_dict.get("pooled_se", False)),
    )
    req = inference.InferenceRequest(setting=setting, samples=samples, config=config)
    res = inference.run_test(req)
    fam = res.statistic_family
    ci = res.ci
    return {
        "setting": setting,
        "summary_stats": [_stats_dict(s) for s in res.summary_stats],
        "diff_stats": _stats_dict(res.diff_stats),
        "ci": {
            "lower": None if math.isinf(ci.lower) else ci.lower,
            "upper": None if math.isinf(ci.upper) else ci.upper,
            "lower_display": fmt(ci.lower),
            "upper_display": fmt(ci.upper),
            "level": ci.level,
            "sidedness": ci.sidedness,
        },
        "statistic": _num(res.statistic),
        "statistic_family": {
            "kind": fam.kind,
            "label": fam.label(),
            "df": fam.df,
            "df1": fam.df1,
            "df2": fam.df2,
        },
        "critical_values": [_num(c) for c in res.critical_values],
        "p_value": _num_p(res.p_value),
        "decision": res.decision,
        "h0_value": _num(res.h0_value),
        "estimate": _num(res.estimate),
        "std_error": _num(res.std_error),
        "warnings": list(res.warnings),
        "interpretation": res.interpretation,
        "narrative": res.narrative.to_dict(),
        "plot": _plot(res.plot),
    }


def _regression_input(body: dict) -> regression.RegressionInput:
    x = body.get("x")
    y = body.get("y")
    if isinstance(x, str):
        x = parse_numeric_list(x)
    if isinstance(y, str):
        y = parse_numeric_list(y)
    if x is None or y is None:
        raise StatsError("regression needs both x and y", field="x")
    _check_obs_cap(len(x))
    _check_obs_cap(len(y))
    return regression.RegressionInput(
        x=tuple(x),
        y=tuple(y),
        x_label=body.get("x_label", "x"),
        y_label=body.get("y_label", "y"),
        confidence_level=body.get("confidence_level", 0.95),
        include_band=bool(body.get("include_band", True)),
    )


def regression_payload(body: dict) -> dict:
    inp = _regression_input(body)
    f = regression.fit(inp)
    doc = regression.derivation(inp, f)
    table = regression.summary_table(f)

    band = None
    if inp.include_band and not f.degenerate:
        b = regression.confidence_band(inp, f)
        band = {
            "grid": b.grid,
            "fit": b.fit,
            "lower": b.lower,
            "upper": b.upper,
            "level": b.level,
        }
    diag = None
    if not f.degenerate:
        d = regression.diagnostics(inp, f)
        diag = {
            "residuals_vs_fitted": [[a, b_] for a, b_ in d.residuals_vs_fitted],
            "qq_points": [[a, b_] for a, b_ in d.qq_points],
            "scale_location": [[a, b_] for a, b_ in d.scale_location],
            "leverage": d.leverage,
            "cooks_distance": d.cooks_distance,
            "standardized_residuals": d.standardized_residuals,
        }
    return {
        "fit": {
            "n": f.n,
            "beta0": _num(f.beta0),
            "beta1": _num(f.beta1),
            "se_beta0": _num(f.se_beta0),
            "se_beta1": _num(f.se_beta1),
            "t0": _num(f.t0),
            "t1": _num(f.t1),
            "p0": None if f.p0 is None else _num_p(f.p0),
            "p1": None if f.p1 is None else _num_p(f.p1),
            "sigma_hat": _num(f.sigma_hat),
            "df_resid": f.df_resid,
            "r_squared": _num(f.r_squared),
            "adj_r_squared": _num(f.adj_r_squared),
            "x_mean": _num(f.x_mean),
            "y_mean": _num(f.y_mean),
            "fitted": list(f.fitted),
            "residuals": list(f.residuals),
            "degenerate": f.degenerate,
        },
        "derivation": doc.to_dict(),
        "table": table,
        "band": band,
        "diagnostics": diag,
        "interpretation": regression.interpret_fit(f, inp.x_label, inp.y_label),
    }


def report_html(body: dict) -> str:
    reg_body = body.get("regression")
    if reg_body is None:
        raise StatsError("report request needs a 'regression' payload", field="regression")
    inp = _regression_input(reg_body)
    req = ReportRequest(regression=inp, include_steps=bool(body.get("include_steps", True)))
    return regression_report(req)


# ---------------------------------------------------------------------------
# FastAPI application
# ---------------------------------------------------------------------------


class QueryModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    kind: Literal["lower_tail", "upper_tail", "interval"]
    x: float | None = None
    a: float | None = None
    b: float | None = None


class ProbabilityBody(BaseModel):
    model_config = ConfigDict(extra="forbid")
    distribution: str
    params: dict[str, float]
    query: QueryModel


class SampleModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    kind: Literal["raw", "mean_summary", "proportion_summary", "variance_summary"]
    observations: list[float] | None = None
    text: str | None = None
    n: int | None = None
    mean: float | None = None
    variance: float | None = None
    sd: float | None = None
    successes: int | None = None


class ConfigModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    alpha: float = 0.05
    h0_value: float | None = None
    alternative: Literal["two_sided", "greater", "less"] = "two_sided"
    sigma_known: float | None = None
    sigma2_known: float | None = None
    equal_variances: bool = False
    pooled_se: bool = False


class InferenceBody(BaseModel):
    model_config = ConfigDict(extra="forbid")
    samples: list[SampleModel]
    config: ConfigModel = ConfigModel()


class RegressionBody(BaseModel):
    model_config = ConfigDict(extra="forbid")
    x: list[float] | str
    y: list[float] | str
    x_label: str = "x"
    y_label: str = "y"
    confidence_level: float = 0.95
    include_band: bool = True


class ReportBody(BaseModel):
    model_config = ConfigDict(extra="forbid")
    regression: RegressionBody
    include_steps: bool = True


def _error_response(exc: StatsError) -> JSONResponse:
    status = 422
    if isinstance(exc, UnknownTagError):
        status = 404
    elif isinstance(exc, PayloadTooLarge):
        status = 413
    body = {"error": {"code": exc.code, "message": exc.message, "field": exc.field}}
    return JSONResponse(status_code=status, content=body)


def create_app() -> FastAPI:
    app = FastAPI(title="statsteps", version=__version__, docs_url=None, redoc_url=None)

    origins = os.environ.get("STATSTEPS_ALLOWED_ORIGINS", "")
    if origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[o.strip() for o in origins.split(",") if o.strip()],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    max_body = int(os.environ.get("STATSTEPS_MAX_BODY_BYTES", DEFAULT_MAX_BODY_BYTES))

    @app.middleware("http")
    async def guard_and_log(request: Request, call_next):
        start = time.perf_counter()
        length = request.headers.get("content-length")
        if length is not None and length.isdigit() and int(length) > max_body:
            response = JSONResponse(
                status_code=413,
                content={
                    "error": {
                        "code": "payload_too_large",
                        "message": f"request body over {max_body} bytes",
                        "field": None,
                    }
                },
            )
        else:
            response = await call_next(request)
        log.info(
            json.dumps(
                {
                    "method": request.method,
                    "path": request.url.path,
                    "status": response.status_code,
                    "duration_ms": round((time.perf_counter() - start) * 1000, 2),
                }
            )
        )
        return response

    @app.exception_handler(StatsError)
    async def stats_error_handler(request: Request, exc: StatsError):
        return _error_response(exc)

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        errors = exc.errors()
        field = None
        message = "invalid request payload"
        if errors:
            loc = errors[0].get("loc", ())
            field = ".".join(str(p) for p in loc if p != "body") or None
            message = f"{errors[0].get('msg', message)}"
        return JSONResponse(
            status_code=422,
            content={"error": {"code": "schema_error", "message": message, "field": field}},
        )

    @app.get("/api/v1/health")
    async def health():
        return health_payload()

    @app.get("/api/v1/distributions")
    async def get_catalog():
        return catalog_payload()

    @app.post("/api/v1/probability")
    async def post_probability(body: ProbabilityBody):
        return probability_payload(
            body.distribution, body.params, body.query.model_dump(exclude_none=True)
        )

    @app.get("/api/v1/inference/settings")
    async def get_settings():
        return settings_payload()

    @app.post("/api/v1/inference/{setting}")
    async def post_inference(setting: str, body: InferenceBody):
        return inference_payload(setting, body.model_dump())

    @app.post("/api/v1/regression")
    async def post_regression(body: RegressionBody):
        return regression_payload(body.model_dump())

    @app.post("/api/v1/regression/report")
    async def post_report(body: ReportBody):
        return HTMLResponse(content=report_html(body.model_dump()))

    return app


app = create_app()


def serve():  # pragma: no cover - thin wrapper around uvicorn
    import uvicorn

    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stdout)
    uvicorn.run(
        "statsteps.service:app",
        host=os.environ.get("STATSTEPS_HOST", "127.0.0.1"),
        port=int(os.environ.get("STATSTEPS_PORT", "8000")),
        log_level="info",
    )


if __name__ == "__main__":  # pragma: no cover
    serve()
