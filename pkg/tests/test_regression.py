"""Regression: textbook-formula fit against independent oracles, the
invariance/orthogonality properties, band and diagnostics checks."""

import math

import numpy as np
import pytest

from statsteps import regression as reg
from statsteps.errors import DegenerateDataError, InputError

FIXTURE = reg.RegressionInput(x=(1.0, 2.0, 3.0, 4.0), y=(2.0, 3.0, 5.0, 4.0))


def random_input(rng, n=None):
    n = n or int(rng.integers(3, 50))
    x = rng.uniform(-10, 10, size=n)
    while len(set(x)) < 2:
        x = rng.uniform(-10, 10, size=n)
    y = rng.uniform(-10, 10, size=n)
    return reg.RegressionInput(x=tuple(x), y=tuple(y))


def lstsq_oracle(inp):
    """Least-squares fit through numpy's QR path (independent of the formula)."""
    A = np.column_stack([np.ones(len(inp.x)), np.asarray(inp.x)])
    coef, *_ = np.linalg.lstsq(A, np.asarray(inp.y), rcond=None)
    return float(coef[0]), float(coef[1])


def grid_refine_oracle(inp, bracket=(-1e3, 1e3)):
    """Golden-section minimizer of the profiled sum of squared errors.

    For a fixed slope the optimal intercept is the mean of y - b1*x, so the
    search is one-dimensional.  Function-value comparisons limit the
    attainable slope accuracy to about sqrt(machine eps) ~ 1e-8.
    """
    x = np.asarray(inp.x)
    y = np.asarray(inp.y)

    def profile_sse(b1):
        r = y - b1 * x
        return float(np.sum((r - r.mean()) ** 2))

    lo, hi = bracket
    phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - phi * (hi - lo)
    d = lo + phi * (hi - lo)
    fc, fd = profile_sse(c), profile_sse(d)
    for _ in range(200):
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - phi * (hi - lo)
            fc = profile_sse(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + phi * (hi - lo)
            fd = profile_sse(d)
    b1 = 0.5 * (lo + hi)
    b0 = float((y - b1 * x).mean())
    return b0, b1


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def test_length_mismatch_rejected():
    with pytest.raises(InputError):
        reg.validate(reg.RegressionInput(x=(1.0, 2.0), y=(1.0, 2.0, 3.0)))


def test_degenerate_x_rejected():
    with pytest.raises(InputError):
        reg.validate(reg.RegressionInput(x=(2.0, 2.0, 2.0), y=(1.0, 2.0, 3.0)))


def test_minimum_size():
    with pytest.raises(InputError):
        reg.validate(reg.RegressionInput(x=(1.0, 2.0), y=(1.0, 2.0)))


def test_nonfinite_rejected():
    with pytest.raises(InputError):
        reg.validate(reg.RegressionInput(x=(1.0, 2.0, math.inf), y=(1.0, 2.0, 3.0)))


def test_valid_input_passes():
    inp = reg.RegressionInput(x=(1.0, 2.0, 3.0), y=(1.0, 2.0, 3.0))
    assert reg.validate(inp) is inp


# ---------------------------------------------------------------------------
# fit
# ---------------------------------------------------------------------------


def test_fixture_slope_intercept():
    """4-point fixture, frozen after grid-search and lstsq verification."""
    b0_g, b1_g = grid_refine_oracle(FIXTURE)
    assert math.isclose(b1_g, 0.8, abs_tol=1e-6) and math.isclose(b0_g, 1.5, abs_tol=1e-6)
    b0_l, b1_l = lstsq_oracle(FIXTURE)
    assert math.isclose(b1_l, 0.8, abs_tol=1e-12) and math.isclose(b0_l, 1.5, abs_tol=1e-12)
    f = reg.fit(FIXTURE)
    assert f.beta1 == 0.8
    assert f.beta0 == 1.5


def test_perfect_line_degenerate_flag():
    f = reg.fit(reg.RegressionInput(x=(1.0, 2.0, 3.0), y=(2.0, 4.0, 6.0)))
    assert (f.beta1, f.beta0) == (2.0, 0.0)
    assert f.r_squared == 1.0
    assert f.sigma_hat == 0.0
    assert f.degenerate
    assert f.se_beta1 is None and f.t1 is None and f.p1 is None


def test_intercept_identity(rng):
    for _ in range(50):
        f = reg.fit(random_input(rng))
        assert f.beta0 == f.y_mean - f.beta1 * f.x_mean


def test_fit_matches_lstsq_oracle(rng):
    for _ in range(100):
        inp = random_input(rng)
        f = reg.fit(inp)
        b0, b1 = lstsq_oracle(inp)
        assert abs(f.beta0 - b0) <= 1e-8 * max(1.0, abs(b0))
        assert abs(f.beta1 - b1) <= 1e-8 * max(1.0, abs(b1))


def test_fitted_plus_residuals_equal_y():
    f = reg.fit(FIXTURE)
    assert all(fi + e == yi for fi, e, yi in zip(f.fitted, f.residuals, FIXTURE.y))


def test_residual_orthogonality(rng):
    for _ in range(50):
        inp = random_input(rng)
        f = reg.fit(inp)
        scale = f.n * (1.0 + max(abs(v) for v in inp.y))
        assert abs(math.fsum(f.residuals)) <= 1e-9 * scale
        xscale = scale * (1.0 + max(abs(v) for v in inp.x))
        assert abs(math.fsum(e * xi for e, xi in zip(f.residuals, inp.x))) <= 1e-9 * xscale


def test_r_squared_equals_squared_correlation(rng):
    for _ in range(50):
        inp = random_input(rng)
        f = reg.fit(inp)
        r = np.corrcoef(inp.x, inp.y)[0, 1]
        assert abs(f.r_squared - r * r) <= 1e-12


def test_adjusted_r_squared_identity(rng):
    f = reg.fit(random_input(rng, n=17))
    expected = 1 - (1 - f.r_squared) * (17 - 1) / (17 - 2)
    assert math.isclose(f.adj_r_squared, expected, rel_tol=1e-14)


def test_slope_t_equals_anova_f(rng):
    """t1^2 equals the regression F statistic sum((yhat - ybar)^2)/sigma^2."""
    for _ in range(30):
        inp = random_input(rng)
        f = reg.fit(inp)
        if f.degenerate:
            continue
        ssr = math.fsum((fi - f.y_mean) ** 2 for fi in f.fitted)
        F = ssr / f.sigma_hat**2
        assert math.isclose(f.t1**2, F, rel_tol=1e-10, abs_tol=1e-10)


def test_p_value_incomplete_beta_oracle():
    """Two-sided slope p cross-checked against the incomplete-beta identity."""
    from scipy import special

    f = reg.fit(FIXTURE)
    df = f.df_resid
    t = abs(f.t1)
    expected = special.betainc(df / 2.0, 0.5, df / (df + t * t))
    assert math.isclose(f.p1, expected, rel_tol=1e-12)


def test_shift_invariance_exact():
    """Data chosen so every intermediate is a dyadic rational: the shift
    identity then holds bit for bit."""
    x = (1.0, 3.0, 5.0, 7.0)  # xbar = 4, sxx = 20
    y = (1.0, 4.0, 2.0, 5.0)  # ybar = 3, slope = 10/20 = 0.5 exactly
    c = 8.0
    f1 = reg.fit(reg.RegressionInput(x=x, y=y))
    assert (f1.beta1, f1.beta0) == (0.5, 1.0)
    f2 = reg.fit(reg.RegressionInput(x=x, y=tuple(v + c for v in y)))
    assert f2.beta1 == f1.beta1
    assert f2.beta0 == f1.beta0 + c
    assert f2.residuals == f1.residuals
    assert f2.r_squared == f1.r_squared


def test_shift_invariance_tolerance(rng):
    inp = random_input(rng)
    c = 3.7
    f1 = reg.fit(inp)
    f2 = reg.fit(reg.RegressionInput(x=inp.x, y=tuple(v + c for v in inp.y)))
    assert math.isclose(f2.beta1, f1.beta1, rel_tol=1e-10, abs_tol=1e-10)
    assert math.isclose(f2.beta0, f1.beta0 + c, rel_tol=1e-10, abs_tol=1e-10)
    assert np.allclose(f2.residuals, f1.residuals, atol=1e-9)


def test_scale_invariance():
    x = (1.0, 2.0, 3.0, 6.0)
    y = (2.0, 6.0, 3.0, 5.0)
    f1 = reg.fit(reg.RegressionInput(x=x, y=y))
    f2 = reg.fit(reg.RegressionInput(x=tuple(2.0 * v for v in x), y=y))
    assert f2.beta1 == f1.beta1 / 2.0  # dyadic scale: exact
    assert np.allclose(f2.fitted, f1.fitted, atol=1e-10)
    f3 = reg.fit(reg.RegressionInput(x=tuple(3.0 * v for v in x), y=y))
    assert math.isclose(f3.beta1, f1.beta1 / 3.0, rel_tol=1e-10)
    assert np.allclose(f3.fitted, f1.fitted, atol=1e-10)


# ---------------------------------------------------------------------------
# derivation document
# ---------------------------------------------------------------------------


def test_derivation_four_steps():
    f = reg.fit(FIXTURE)
    doc = reg.derivation(FIXTURE, f)
    assert len(doc.sections) == 1
    assert len(doc.sections[0].steps) == 4


def test_derivation_numerator_brute_force():
    f = reg.fit(FIXTURE)
    doc = reg.derivation(FIXTURE, f)
    step3 = doc.sections[0].steps[2]
    n = len(FIXTURE.x)
    xbar = sum(FIXTURE.x) / n
    ybar = sum(FIXTURE.y) / n
    brute = sum(a * b for a, b in zip(FIXTURE.x, FIXTURE.y)) - n * xbar * ybar
    assert math.isclose(step3.values["num"], brute, rel_tol=1e-12)


def test_derivation_display_four_decimals():
    f = reg.fit(FIXTURE)
    doc = reg.derivation(FIXTURE, f)
    assert "0.8000" in doc.sections[0].steps[2].display
    assert "1.5000" in doc.sections[0].steps[3].display


# ---------------------------------------------------------------------------
# summary table
# ---------------------------------------------------------------------------


def test_summary_table_shape():
    table = reg.summary_table(reg.fit(FIXTURE))
    assert [r["term"] for r in table["rows"]] == ["intercept", "slope"]
    slope = table["rows"][1]
    assert math.isclose(slope["t"], slope["estimate"] / slope["std_error"], rel_tol=1e-12)
    assert not table["degenerate"]


def test_summary_table_degenerate_flags():
    table = reg.summary_table(
        reg.fit(reg.RegressionInput(x=(1.0, 2.0, 3.0), y=(2.0, 4.0, 6.0)))
    )
    assert table["degenerate"]
    assert table["rows"][1]["p"] is None


# ---------------------------------------------------------------------------
# confidence band
# ---------------------------------------------------------------------------


def test_band_half_width_at_center():
    from statsteps import distributions as dist

    f = reg.fit(FIXTURE)
    band = reg.confidence_band(FIXTURE, f)
    t = dist.quantile(dist.StudentT(df=float(f.df_resid)), 0.975)
    expected = t * f.sigma_hat / math.sqrt(f.n)
    idx = min(
        range(len(band.grid)), key=lambda i: abs(band.grid[i] - f.x_mean)
    )
    half = (band.upper[idx] - band.lower[idx]) / 2
    # the 128-point grid lands near, not exactly at, x_mean
    assert abs(half - expected) <= expected * 0.01
    by_formula = t * f.sigma_hat * math.sqrt(
        1 / f.n + (band.grid[idx] - f.x_mean) ** 2 / f.sxx
    )
    assert math.isclose(half, by_formula, rel_tol=1e-12)


def test_band_widens_away_from_mean():
    f = reg.fit(FIXTURE)
    band = reg.confidence_band(FIXTURE, f)
    widths = [u - l for u, l in zip(band.upper, band.lower)]
    center = min(range(len(band.grid)), key=lambda i: abs(band.grid[i] - f.x_mean))
    assert all(widths[i] >= widths[i + 1] - 1e-12 for i in range(center))
    assert all(widths[i] <= widths[i + 1] + 1e-12 for i in range(center, len(widths) - 1))
    assert all(l <= c <= u for l, c, u in zip(band.lower, band.fit, band.upper))


def test_band_pointwise_formula(rng):
    from statsteps import distributions as dist

    inp = random_input(rng, n=12)
    f = reg.fit(inp)
    band = reg.confidence_band(inp, f)
    t = dist.quantile(dist.StudentT(df=float(f.df_resid)), 0.975)
    for i in (0, 40, 90, 127):
        x0 = band.grid[i]
        half = t * f.sigma_hat * math.sqrt(1 / f.n + (x0 - f.x_mean) ** 2 / f.sxx)
        assert math.isclose(band.upper[i] - band.fit[i], half, rel_tol=1e-10)
    assert len(band.grid) == 128
    assert band.grid[0] == min(inp.x) and band.grid[-1] == max(inp.x)


def test_band_degenerate_error():
    perfect = reg.RegressionInput(x=(1.0, 2.0, 3.0), y=(2.0, 4.0, 6.0))
    with pytest.raises(DegenerateDataError):
        reg.confidence_band(perfect, reg.fit(perfect))


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------


def test_leverage_trace_is_two(rng):
    for _ in range(30):
        inp = random_input(rng)
        f = reg.fit(inp)
        if f.degenerate:
            continue
        diag = reg.diagnostics(inp, f)
        assert abs(math.fsum(diag.leverage) - 2.0) <= 1e-9
        assert all(1.0 / f.n - 1e-12 <= h <= 1.0 + 1e-12 for h in diag.leverage)


def test_leverage_equally_spaced_four_points():
    inp = reg.RegressionInput(x=(1.0, 2.0, 3.0, 4.0), y=(2.0, 3.0, 5.0, 4.0))
    diag = reg.diagnostics(inp, reg.fit(inp))
    assert np.allclose(diag.leverage, [0.7, 0.3, 0.3, 0.7], atol=1e-12)


def test_isolated_point_has_max_leverage():
    inp = reg.RegressionInput(x=(1.0, 1.0, 1.0, 10.0), y=(2.0, 2.5, 1.5, 4.0))
    diag = reg.diagnostics(inp, reg.fit(inp))
    assert max(diag.leverage) == diag.leverage[3]


def test_leverage_one_flagged():
    # x = (0, 0, 1): the isolated design point has h = 1 exactly
    inp = reg.RegressionInput(x=(0.0, 0.0, 1.0), y=(1.0, 2.0, 5.0))
    f = reg.fit(inp)
    diag = reg.diagnostics(inp, f)
    assert math.isclose(diag.leverage[2], 1.0, abs_tol=1e-12)
    assert diag.standardized_residuals[2] is None
    assert diag.cooks_distance[2] is None


def test_standardized_residuals_and_cooks(rng):
    inp = random_input(rng, n=15)
    f = reg.fit(inp)
    diag = reg.diagnostics(inp, f)
    for e, h, r, d in zip(
        f.residuals, diag.leverage, diag.standardized_residuals, diag.cooks_distance
    ):
        assert math.isclose(r, e / (f.sigma_hat * math.sqrt(1 - h)), rel_tol=1e-12)
        assert math.isclose(d, r * r * h / (2 * (1 - h)), rel_tol=1e-12)


def test_qq_positions():
    from statsteps import distributions as dist

    inp = reg.RegressionInput(x=(1.0, 2.0, 3.0, 4.0, 5.0), y=(2.1, 2.9, 4.2, 3.8, 5.1))
    f = reg.fit(inp)
    diag = reg.diagnostics(inp, f)
    n = len(diag.qq_points)
    normal = dist.Normal(mu=0.0, sigma=1.0)
    for i, (theo, samp) in enumerate(diag.qq_points):
        assert math.isclose(theo, dist.quantile(normal, (i + 0.5) / n), rel_tol=1e-12)
    sample_side = [s for _, s in diag.qq_points]
    assert sample_side == sorted(sample_side)


def test_diagnostics_degenerate_error():
    perfect = reg.RegressionInput(x=(1.0, 2.0, 3.0), y=(2.0, 4.0, 6.0))
    with pytest.raises(DegenerateDataError):
        reg.diagnostics(perfect, reg.fit(perfect))


# ---------------------------------------------------------------------------
# interpretation
# ---------------------------------------------------------------------------


def test_interpret_labels_and_branches():
    f = reg.fit(FIXTURE)
    text = reg.interpret_fit(f, "hours", "score")
    assert "hours" in text and "score" in text
    assert "no evidence" in text  # p1 = 0.2 for the fixture


def test_interpret_significant_branch(rng):
    x = tuple(range(1, 13))
    y = tuple(2.0 * v + float(e) for v, e in zip(x, rng.normal(0, 0.4, size=12)))
    f = reg.fit(reg.RegressionInput(x=x, y=y))
    assert f.p1 < 0.05
    text = reg.interpret_fit(f, "dose", "response")
    assert "significantly different from zero" in text


def test_interpret_degenerate_wording():
    f = reg.fit(reg.RegressionInput(x=(1.0, 2.0, 3.0), y=(2.0, 4.0, 6.0)))
    text = reg.interpret_fit(f, "x", "y")
    assert "exactly" in text
