"""Self-contained HTML report for a regression analysis.

The report embeds: the data table, summary statistics, the step-by-step
derivation (optional), the coefficient table, a plain-language
interpretation, server-rendered SVG charts (scatter + fit + optional
band, and the four diagnostic panels), and a machine-readable replay
payload holding the exact request.  Formulas are embedded as TeX and
typeset client-side.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from jinja2 import Environment
from markupsafe import Markup

from ..display import fmt, fmt_p

SVG_W, SVG_H = 460, 300
MARGIN = 42


@dataclass(frozen=True)
class ReportRequest:
    regression: object  # regression.RegressionInput
    include_steps: bool = True


def replay_payload_json(req: ReportRequest) -> str:
    """Canonical serialization of the request, embedded verbatim in the report."""
    reg = req.regression
    payload = {
        "x": list(reg.x),
        "y": list(reg.y),
        "x_label": reg.x_label,
        "y_label": reg.y_label,
        "confidence_level": reg.confidence_level,
        "include_band": reg.include_band,
        "include_steps": req.include_steps,
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# tiny SVG plotting
# ---------------------------------------------------------------------------


def _scale(lo: float, hi: float, length: float):
    span = hi - lo
    if span == 0.0:
        span = 1.0
        lo -= 0.5
    pad = 0.06 * span
    lo -= pad
    span += 2 * pad

    def to_px(v: float) -> float:
        return MARGIN + (v - lo) / span * (length - 2 * MARGIN)

    return to_px


def _fmt_px(v: float) -> str:
    return f"{v:.2f}"


def _svg_chart(title, xs, ys, *, line=None, band=None, hline=None, idline=False) -> str:
    """Scatter chart with optional fitted line, band polygon and guides."""
    all_x = list(xs) + ([p[0] for p in line] if line else [])
    all_y = list(ys) + ([p[1] for p in line] if line else [])
    if band:
        all_x += [p[0] for p in band]
        all_y += [p[1] for p in band]
    if hline is not None:
        all_y.append(hline)
    sx = _scale(min(all_x), max(all_x), SVG_W)
    sy = _scale(min(all_y), max(all_y), SVG_H)

    def pt(x, y):
        return f"{_fmt_px(sx(x))},{_fmt_px(SVG_H - sy(y))}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_W} {SVG_H}" '
        f'width="{SVG_W}" height="{SVG_H}" role="img">',
        f'<title>{title}</title>',
        f'<rect x="0" y="0" width="{SVG_W}" height="{SVG_H}" fill="white"/>',
        f'<text x="{SVG_W / 2}" y="16" text-anchor="middle" font-size="13" '
        f'font-family="sans-serif">{title}</text>',
    ]
    if band:
        path = " ".join(pt(x, y) for x, y in band)
        parts.append(f'<polygon points="{path}" fill="#9ecae1" fill-opacity="0.45"/>')
    if hline is not None:
        parts.append(
            f'<line x1="{_fmt_px(sx(min(all_x)))}" y1="{_fmt_px(SVG_H - sy(hline))}" '
            f'x2="{_fmt_px(sx(max(all_x)))}" y2="{_fmt_px(SVG_H - sy(hline))}" '
            f'stroke="#999" stroke-dasharray="4 3"/>'
        )
    if idline:
        lo = max(min(all_x), min(all_y))
        hi = min(max(all_x), max(all_y))
        if lo < hi:
            parts.append(
                f'<line x1="{_fmt_px(sx(lo))}" y1="{_fmt_px(SVG_H - sy(lo))}" '
                f'x2="{_fmt_px(sx(hi))}" y2="{_fmt_px(SVG_H - sy(hi))}" '
                f'stroke="#999" stroke-dasharray="4 3"/>'
            )
    if line:
        path = "M " + " L ".join(pt(x, y) for x, y in line)
        parts.append(f'<path d="{path}" fill="none" stroke="#d62728" stroke-width="2"/>')
    for x, y in zip(xs, ys):
        parts.append(f'<circle cx="{_fmt_px(sx(x))}" cy="{_fmt_px(SVG_H - sy(y))}" r="3.2" '
                     f'fill="#1f77b4" fill-opacity="0.85"/>')
    # axis frame
    parts.append(
        f'<rect x="{MARGIN}" y="{MARGIN / 2}" width="{SVG_W - 2 * MARGIN}" '
        f'height="{SVG_H - 1.5 * MARGIN}" fill="none" stroke="#444" stroke-width="0.8"/>'
    )
    parts.append("</svg>")
    return "".join(parts)


# ---------------------------------------------------------------------------
# report assembly
# ---------------------------------------------------------------------------

_TEMPLATE = Environment(autoescape=True).from_string(
    """<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>Simple linear regression report</title>
<script>
MathJax = {tex: {inlineMath: [['\\\\(', '\\\\)']], displayMath: [['\\\\[', '\\\\]']]}};
</script>
<script async src="https://cdn.jsdelivr.net/npm/mathjax@3/es5/tex-chtml.js"></script>
<style>
body { font-family: Georgia, serif; margin: 2em auto; max-width: 60em; color: #222; }
h1 { font-size: 1.5em; } h2 { font-size: 1.15em; margin-top: 1.6em; }
table { border-collapse: collapse; margin: 0.8em 0; }
th, td { border: 1px solid #bbb; padding: 0.3em 0.8em; text-align: right; }
th { background: #f0f0f0; }
.charts { display: flex; flex-wrap: wrap; gap: 1em; }
.note { color: #555; font-style: italic; }
.step { margin: 0.6em 0; }
</style>
</head>
<body>
<h1>Simple linear regression: {{ y_label }} on {{ x_label }}</h1>

<h2>Data</h2>
<table>
<tr><th>#</th><th>{{ x_label }}</th><th>{{ y_label }}</th></tr>
{% for i, xv, yv in data_rows %}<tr><td>{{ i }}</td><td>{{ xv }}</td><td>{{ yv }}</td></tr>
{% endfor %}</table>

<h2>Summary statistics</h2>
<p>\\( n = {{ n }}, \\quad \\bar{x} = {{ x_mean }}, \\quad \\bar{y} = {{ y_mean }} \\)</p>

{% if steps %}
<h2>Step-by-step derivation</h2>
{% for s in steps %}<div class="step">\\[ {{ s }} \\]</div>
{% endfor %}
{% endif %}

<h2>Coefficients</h2>
<table>
<tr><th>term</th><th>estimate</th><th>std. error</th><th>t</th><th>p-value</th></tr>
{% for row in coef_rows %}<tr><td>{{ row.term }}</td><td>{{ row.estimate }}</td>
<td>{{ row.se }}</td><td>{{ row.t }}</td><td>{{ row.p }}</td></tr>
{% endfor %}</table>
<p>Residual standard error: {{ sigma_hat }} on {{ df_resid }} degrees of freedom.
R&sup2; = {{ r2 }}, adjusted R&sup2; = {{ adj_r2 }}.</p>

<h2>Fitted model</h2>
<div class="charts">{{ main_chart }}</div>

<h2>Interpretation</h2>
<p>{{ interpretation }}</p>

<h2>Assumption diagnostics</h2>
{% if diag_charts %}
<div class="charts">{% for c in diag_charts %}{{ c }}{% endfor %}</div>
{% else %}
<p class="note">{{ diag_note }}</p>
{% endif %}

<script type="application/json" id="replay-payload">{{ replay }}</script>
</body>
</html>
"""
)


def regression_report(req: ReportRequest) -> str:
    """Render the full analysis of ``req.regression`` as standalone HTML."""
    from .. import regression as reg

    inp = req.regression
    f = reg.fit(inp)
    table = reg.summary_table(f)
    interpretation = reg.interpret_fit(f, inp.x_label, inp.y_label)

    steps = None
    if req.include_steps:
        doc = reg.derivation(inp, f)
        steps = [step.display for step in doc.sections[0].steps]

    line = [(min(inp.x), f.beta0 + f.beta1 * min(inp.x)), (max(inp.x), f.beta0 + f.beta1 * max(inp.x))]
    band_poly = None
    if inp.include_band and not f.degenerate:
        band = reg.confidence_band(inp, f)
        band_poly = list(zip(band.grid, band.upper)) + list(zip(band.grid, band.lower))[::-1]
    main_chart = _svg_chart(
        f"{inp.y_label} vs {inp.x_label}", inp.x, inp.y, line=line, band=band_poly
    )

    diag_charts = []
    diag_note = ""
    if f.degenerate:
        diag_note = (
            "The data lie exactly on the fitted line, so residual-based "
            "diagnostics are not available."
        )
    else:
        diag = reg.diagnostics(inp, f)
        std = [r if r is not None else 0.0 for r in diag.standardized_residuals]
        diag_charts = [
            _svg_chart(
                "Residuals vs fitted",
                [p[0] for p in diag.residuals_vs_fitted],
                [p[1] for p in diag.residuals_vs_fitted],
                hline=0.0,
            ),
            _svg_chart(
                "Normal Q-Q",
                [p[0] for p in diag.qq_points],
                [p[1] for p in diag.qq_points],
                idline=True,
            ),
            _svg_chart(
                "Scale-location",
                [p[0] for p in diag.scale_location],
                [p[1] for p in diag.scale_location],
            ),
            _svg_chart("Residuals vs leverage", diag.leverage, std, hline=0.0),
        ]

    def cell(v, pfmt=False):
        if v is None:
            return "—"
        return fmt_p(v) if pfmt else fmt(v)

    coef_rows = [
        {
            "term": row["term"],
            "estimate": fmt(row["estimate"]),
            "se": cell(row["std_error"]),
            "t": cell(row["t"]),
            "p": cell(row["p"], pfmt=True),
        }
        for row in table["rows"]
    ]

    replay = replay_payload_json(req).replace("</", "<\\/")
    html = _TEMPLATE.render(
        x_label=inp.x_label,
        y_label=inp.y_label,
        data_rows=[(i + 1, fmt(xv), fmt(yv)) for i, (xv, yv) in enumerate(zip(inp.x, inp.y))],
        n=f.n,
        x_mean=fmt(f.x_mean),
        y_mean=fmt(f.y_mean),
        steps=steps,
        coef_rows=coef_rows,
        sigma_hat=fmt(f.sigma_hat),
        df_resid=f.df_resid,
        r2=fmt(f.r_squared),
        adj_r2=fmt(f.adj_r_squared),
        main_chart=Markup(main_chart),
        interpretation=interpretation,
        diag_charts=[Markup(c) for c in diag_charts],
        diag_note=diag_note,
        replay=Markup(replay),
    )
    return html
