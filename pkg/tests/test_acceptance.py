"""Acceptance criteria P1-P10.

Each test prints one PASS/FAIL line (run with `pytest -s` to see them all)
and enforces its stated runtime bound.  Heavier randomized counts live
here; the per-module suites carry smaller smoke versions.
"""

import contextlib
import json
import math
import time

import numpy as np
import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from statsteps import distributions as dist
from statsteps import inference as inf
from statsteps import regression as reg
from statsteps import service
from statsteps.cli import main as cli_main
from statsteps.distributions import ProbabilityQuery
from statsteps.service import app

import canonical
import oracles
from test_inference import in_rejection_region, random_request, run_or_none
from test_regression import grid_refine_oracle, lstsq_oracle, random_input


@contextlib.contextmanager
def criterion(name: str, budget_s: float | None = None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"{name}: FAIL ({time.perf_counter() - start:.2f} s)")
        raise
    elapsed = time.perf_counter() - start
    bound = f", budget {budget_s:.0f} s" if budget_s else ""
    print(f"{name}: PASS ({elapsed:.2f} s{bound})")
    if budget_s is not None:
        assert elapsed < budget_s, f"{name} exceeded runtime budget: {elapsed:.2f}s"


def test_p1_paper_worked_value():
    """Normal(0,1) lower tail at 1 displays 0.8413; warm runtime < 1 ms."""
    spec = dist.Normal(mu=0.0, sigma=1.0)
    query = ProbabilityQuery.lower_tail(1.0)
    result = dist.probability(spec, query)  # warm-up (imports, caches)
    assert result.display_value == "0.8413"
    with criterion("P1 (paper value 0.8413, < 1 ms warm)"):
        best = math.inf
        for _ in range(20):
            t0 = time.perf_counter()
            result = dist.probability(spec, query)
            best = min(best, time.perf_counter() - t0)
        assert result.display_value == "0.8413"
        assert best < 1e-3, f"probability() took {best * 1e3:.3f} ms"


def test_p2_discrete_oracle_suite():
    """cdf == brute-force pmf summation (1e-10) on 50 random sets each."""
    rng = np.random.default_rng(202)
    with criterion("P2 (discrete brute-force oracle)", budget_s=30.0):
        for tag in oracles.DISCRETE_TAGS:
            for _ in range(50):
                spec = oracles.random_spec(tag, rng)
                for u in (0.03, 0.25, 0.5, 0.75, 0.97):
                    x = dist.quantile(spec, u)
                    brute = oracles.brute_force_discrete_cdf(spec, x)
                    assert abs(dist.cdf(spec, x) - brute) <= 1e-10, (tag, spec, x)


def test_p3_continuous_oracle_suite():
    """cdf(b)-cdf(a) vs adaptive quadrature (1e-8); quantile round trip 1e-9."""
    rng = np.random.default_rng(303)
    with criterion("P3 (continuous quadrature + round trip)", budget_s=120.0):
        for tag in oracles.CONTINUOUS_TAGS:
            for _ in range(50):
                spec = oracles.random_spec(tag, rng)
                u1, u2 = np.sort(rng.uniform(0.02, 0.98, size=2))
                a, b = dist.quantile(spec, float(u1)), dist.quantile(spec, float(u2))
                got = dist.cdf(spec, b) - dist.cdf(spec, a)
                assert abs(got - oracles.quad_between(spec, a, b)) <= 1e-8, (tag, spec)
                for p in (0.005, 0.3, 0.9):
                    err = abs(dist.cdf(spec, dist.quantile(spec, p)) - p)
                    assert err <= 1e-9, (tag, spec, p)


def test_p4_moment_monte_carlo():
    """10^6 inversion samples per finite-moment spec, within 5 SE of moments()."""
    rng = np.random.default_rng(404)
    n = 10**6
    with criterion("P4 (moment Monte Carlo, 10^6 draws/spec)", budget_s=300.0):
        for spec in oracles.MOMENT_SPECS:
            m = dist.moments(spec)
            xs = oracles.inversion_sample(spec, rng.random(n))
            mean = float(np.mean(xs))
            se_mean = float(np.std(xs, ddof=1)) / math.sqrt(n)
            assert abs(mean - m.mean) <= 5 * se_mean, (spec.tag, mean, m.mean, se_mean)
            var = float(np.var(xs, ddof=1))
            centered = xs - mean
            m4 = float(np.mean(centered**4))
            se_var = math.sqrt(max(m4 - var**2, 1e-300) / n)
            assert abs(var - m.variance) <= 5 * se_var, (spec.tag, var, m.variance, se_var)


def test_p5_inference_triple_agreement():
    """10,000 randomized requests: p < alpha <=> rejection region <=> decision,
    plus exact raw/summary equivalence."""
    rng = np.random.default_rng(505)
    with criterion("P5 (triple agreement, 10,000 requests)", budget_s=60.0):
        checked = 0
        equiv_checked = 0
        while checked < 10_000:
            req = random_request(rng)
            res = run_or_none(req)
            if res is None:
                continue
            checked += 1
            reject = res.decision == "reject"
            assert (res.p_value < req.config.alpha) == reject
            assert in_rejection_region(res) == reject
            # raw/summary equivalence on a subsample of raw-sample requests
            if equiv_checked < 1_000 and all(
                isinstance(s, inf.RawSample) for s in req.samples
            ) and req.setting != "two_means_paired":
                summarized = []
                for stats in res.summary_stats:
                    if stats.kind == "mean":
                        summarized.append(
                            inf.MeanSummary(n=stats.n, mean=stats.mean, variance=stats.variance)
                        )
                    elif stats.kind == "proportion":
                        summarized.append(
                            inf.ProportionSummary(n=stats.n, successes=stats.successes)
                        )
                    else:
                        summarized.append(
                            inf.VarianceSummary(n=stats.n, variance=stats.variance)
                        )
                twin = inf.run_test(
                    inf.InferenceRequest(
                        setting=req.setting, samples=tuple(summarized), config=req.config
                    )
                )
                assert twin.statistic == res.statistic
                assert twin.p_value == res.p_value
                assert twin.ci.lower == res.ci.lower and twin.ci.upper == res.ci.upper
                assert twin.critical_values == res.critical_values
                assert twin.decision == res.decision
                equiv_checked += 1
        assert equiv_checked >= 1_000


def test_p6_ci_test_duality():
    """Two-sided one_mean / one_proportion / one_variance / two_variances:
    H0 outside the CI <=> Reject, 2,000 randomized cases each."""
    rng = np.random.default_rng(606)
    with criterion("P6 (CI/test duality, 4 x 2,000 cases)"):
        for setting in ("one_mean", "one_proportion", "one_variance", "two_variances"):
            done = 0
            while done < 2_000:
                req = random_request(rng, setting=setting, two_sided_only=True)
                res = run_or_none(req)
                if res is None:
                    continue
                done += 1
                outside = res.h0_value < res.ci.lower or res.h0_value > res.ci.upper
                assert outside == (res.decision == "reject"), (setting, res)


def test_p7_regression_oracle():
    """100 random fits vs least-squares oracle (1e-8), invariances, trace."""
    rng = np.random.default_rng(707)
    with criterion("P7 (regression oracle + invariances)"):
        for _ in range(100):
            inp = random_input(rng)
            f = reg.fit(inp)
            b0, b1 = lstsq_oracle(inp)
            assert abs(f.beta0 - b0) <= 1e-8 * max(1.0, abs(b0))
            assert abs(f.beta1 - b1) <= 1e-8 * max(1.0, abs(b1))
            # shift: beta0 moves by c, slope/residuals unchanged
            c = 3.25
            shifted = reg.fit(
                reg.RegressionInput(x=inp.x, y=tuple(v + c for v in inp.y))
            )
            assert math.isclose(shifted.beta1, f.beta1, rel_tol=1e-10, abs_tol=1e-10)
            assert math.isclose(shifted.beta0, f.beta0 + c, rel_tol=1e-10, abs_tol=1e-9)
            assert np.allclose(shifted.residuals, f.residuals, atol=1e-9)
            # scale x: slope scales inversely, fitted unchanged
            scaled = reg.fit(
                reg.RegressionInput(x=tuple(2.0 * v for v in inp.x), y=inp.y)
            )
            assert scaled.beta1 == f.beta1 / 2.0
            assert np.allclose(scaled.fitted, f.fitted, atol=1e-10)
            if not f.degenerate:
                diag = reg.diagnostics(inp, f)
                assert abs(math.fsum(diag.leverage) - 2.0) <= 1e-9


def test_p8_derived_fixture():
    """x=(1,2,3,4), y=(2,3,5,4) gives slope 0.8 and intercept 1.5 exactly,
    re-verified against both oracles before the frozen comparison."""
    with criterion("P8 (golden fixture 0.8 / 1.5)"):
        inp = reg.RegressionInput(x=(1.0, 2.0, 3.0, 4.0), y=(2.0, 3.0, 5.0, 4.0))
        b0_g, b1_g = grid_refine_oracle(inp)
        assert math.isclose(b1_g, 0.8, abs_tol=1e-6)
        assert math.isclose(b0_g, 1.5, abs_tol=1e-6)
        b0_l, b1_l = lstsq_oracle(inp)
        assert math.isclose(b1_l, 0.8, abs_tol=1e-12)
        assert math.isclose(b0_l, 1.5, abs_tol=1e-12)
        f = reg.fit(inp)
        assert f.beta1 == 0.8 and f.beta0 == 1.5


def test_p9_narrative_structure():
    """Golden-pinned documents for every setting and distribution; reports
    byte-deterministic."""
    from conftest import GOLDEN_DIR
    from statsteps.narrative.report import ReportRequest, regression_report

    with criterion("P9 (narrative goldens + determinism)"):
        for setting, body in canonical.INFERENCE_CASES.items():
            payload = service.inference_payload(setting, body)
            doc = payload["narrative"]
            titles = [s["title"] for s in doc["sections"]]
            assert titles == ["Data", "Confidence interval", "Hypothesis test", "Interpretation"]
            assert len(doc["sections"][2]["steps"]) == 4
            golden = json.loads((GOLDEN_DIR / f"test_doc_{setting}.json").read_text())
            assert doc == golden, setting
        for tag, params, query in canonical.DISTRIBUTION_CASES:
            payload = service.probability_payload(tag, params, query)
            doc = payload["derivation"]
            assert [s["title"] for s in doc["sections"]] == ["Solution", "Details"]
            golden = json.loads((GOLDEN_DIR / f"dist_doc_{tag}.json").read_text())
            assert doc == golden, tag
        case = canonical.REGRESSION_CASE
        req = ReportRequest(
            regression=reg.RegressionInput(
                x=tuple(case["x"]), y=tuple(case["y"]),
                x_label=case["x_label"], y_label=case["y_label"],
            )
        )
        assert regression_report(req).encode() == regression_report(req).encode()


# ---------------------------------------------------------------------------
# P10: API contract, fuzz, CLI parity
# ---------------------------------------------------------------------------

FUZZ_PATHS = [
    "/api/v1/probability",
    "/api/v1/inference/one_mean",
    "/api/v1/inference/two_variances",
    "/api/v1/inference/bogus_setting",
    "/api/v1/regression",
    "/api/v1/regression/report",
]

_FUZZ_CHARS = list("abzXY019_.,;-e ")


def _rand_string(rng):
    k = int(rng.integers(0, 12))
    return "".join(str(rng.choice(_FUZZ_CHARS)) for _ in range(k))


def _rand_value(rng, depth=0):
    t = int(rng.integers(0, 8 if depth < 2 else 5))
    if t == 0:
        return float(rng.normal() * 10.0 ** int(rng.integers(-6, 12)))
    if t == 1:
        return int(rng.integers(-(10**12), 10**12))
    if t == 2:
        return _rand_string(rng)
    if t == 3:
        return bool(rng.integers(0, 2))
    if t == 4:
        return None
    if t == 5:
        return [_rand_value(rng, depth + 1) for _ in range(int(rng.integers(0, 4)))]
    if t == 6:
        return {_rand_string(rng): _rand_value(rng, depth + 1) for _ in range(int(rng.integers(0, 4)))}
    return str(rng.choice(["nan", "inf", "-inf", "1e999", "null"]))


def fuzz_payload(rng):
    base = int(rng.integers(0, 5))
    if base == 0:
        return {
            "distribution": str(rng.choice(["normal", "beta", "poisson", "bogus", ""])),
            "params": {
                str(rng.choice(["mu", "var", "sd", "alpha", "beta", "lambda", "junk"])): _rand_value(rng, 2)
                for _ in range(int(rng.integers(0, 4)))
            },
            "query": _rand_value(rng, 1)
            if rng.random() < 0.5
            else {"kind": str(rng.choice(["lower_tail", "upper_tail", "interval", "wat"])),
                  "x": _rand_value(rng, 2), "a": _rand_value(rng, 2), "b": _rand_value(rng, 2)},
        }
    if base == 1:
        return {
            "samples": [
                {"kind": str(rng.choice(["raw", "mean_summary", "proportion_summary",
                                         "variance_summary", "junk"])),
                 "observations": _rand_value(rng, 1),
                 "n": _rand_value(rng, 2), "mean": _rand_value(rng, 2),
                 "variance": _rand_value(rng, 2), "successes": _rand_value(rng, 2)}
                for _ in range(int(rng.integers(0, 3)))
            ],
            "config": {"alpha": _rand_value(rng, 2), "h0_value": _rand_value(rng, 2),
                       "alternative": str(rng.choice(["two_sided", "greater", "less", "wat"]))},
        }
    if base == 2:
        return {"x": _rand_value(rng, 1), "y": _rand_value(rng, 1),
                "x_label": _rand_string(rng), "confidence_level": _rand_value(rng, 2)}
    if base == 3:
        return {"regression": _rand_value(rng, 1), "include_steps": _rand_value(rng, 2)}
    return _rand_value(rng, 0)


def _sanitize(v):
    """Keep fuzz payloads JSON-encodable (no inf/nan floats)."""
    if isinstance(v, float) and not math.isfinite(v):
        return 1e308
    if isinstance(v, dict):
        return {k: _sanitize(u) for k, u in v.items()}
    if isinstance(v, list):
        return [_sanitize(u) for u in v]
    return v


def test_p10_api_contract_fuzz_and_cli_parity():
    client = TestClient(app, raise_server_exceptions=True)
    runner = CliRunner()
    rng = np.random.default_rng(1010)
    with criterion("P10 (API round trips, 10,000 fuzz, CLI parity x20)"):
        # schema-validated round trips for every endpoint
        assert client.get("/api/v1/health").status_code == 200
        assert len(client.get("/api/v1/distributions").json()["distributions"]) == 18
        assert len(client.get("/api/v1/inference/settings").json()["settings"]) == 7
        for tag, params, query in canonical.DISTRIBUTION_CASES:
            r = client.post("/api/v1/probability",
                            json={"distribution": tag, "params": params, "query": query})
            assert r.status_code == 200, (tag, r.text)
        for setting, body in canonical.INFERENCE_CASES.items():
            r = client.post(f"/api/v1/inference/{setting}", json=body)
            assert r.status_code == 200, (setting, r.text)
        assert client.post("/api/v1/regression", json=canonical.REGRESSION_CASE).status_code == 200
        r = client.post("/api/v1/regression/report",
                        json={"regression": canonical.REGRESSION_CASE, "include_steps": False})
        assert r.status_code == 200 and r.text.startswith("<!DOCTYPE html>")

        # 10,000 fuzzed payloads: never a crash, always a mapped status
        for i in range(10_000):
            path = FUZZ_PATHS[int(rng.integers(0, len(FUZZ_PATHS)))]
            payload = _sanitize(fuzz_payload(rng))
            r = client.post(path, json=payload)
            assert r.status_code in (200, 404, 413, 422), (path, r.status_code, payload)

        # CLI JSON parity on the 20 canonical inputs
        assert len(canonical.CLI_PARITY_CASES) == 20
        for args, (kind, spec) in canonical.CLI_PARITY_CASES:
            res = runner.invoke(cli_main, args)
            assert res.exit_code == 0, (args, res.output)
            cli_payload = json.loads(res.output)
            if kind == "probability":
                direct = service.probability_payload(*spec)
            elif kind == "inference":
                direct = service.inference_payload(*spec)
            else:
                direct = service.regression_payload(dict(spec))
            assert cli_payload == json.loads(json.dumps(direct)), args
