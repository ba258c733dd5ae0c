"""Command-line interface: the same engine for scripting and grading.

Three subcommands mirror the HTTP API one-to-one (`prob`, `test`,
`regress`); JSON mode prints exactly the service payload.  Exit codes:
0 success, 2 validation error, 3 I/O error.
"""

from __future__ import annotations

import json
import sys

import click

from . import service
from .errors import StatsError
from .narrative.document import tex_to_text

MODES = ("text", "json", "tex")


def _fail(message: str, code: int = 2):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _print_document(doc: dict, mode: str):
    for section in doc["sections"]:
        click.echo(section["title"])
        click.echo("-" * len(section["title"]))
        numbered = len(section["steps"]) > 1
        for i, step in enumerate(section["steps"], start=1):
            disp = step["display"]
            if mode == "text" and step["kind"] == "math":
                disp = tex_to_text(disp)
            prefix = f"  {i}. " if numbered else "  "
            click.echo(prefix + disp)
        click.echo("")


@click.group()
def main():
    """statsteps: probabilities, inference and regression with derivations."""


@main.command("prob")
@click.argument("distribution")
@click.option("--param", "params", multiple=True, help="name=value, repeatable")
@click.option("--lower", type=float, default=None, help="P(X <= x)")
@click.option("--upper", type=float, default=None, help="P(X > x)")
@click.option("--between", nargs=2, type=float, default=None, help="P(a <= X <= b)")
@click.option("--mode", type=click.Choice(MODES), default="text", show_default=True)
def prob_command(distribution, params, lower, upper, between, mode):
    """Tail probability for DISTRIBUTION (see `statsteps prob --help`)."""
    given = [q for q in (lower, upper, between) if q is not None]
    if len(given) != 1:
        _fail("give exactly one of --lower, --upper or --between")
    param_dict = {}
    for item in params:
        if "=" not in item:
            _fail(f"--param needs name=value, got {item!r}")
        name, _, raw = item.partition("=")
        try:
            param_dict[name.strip()] = float(raw)
        except ValueError:
            _fail(f"parameter {name.strip()!r} is not a number: {raw!r}")
    if lower is not None:
        query = {"kind": "lower_tail", "x": lower}
    elif upper is not None:
        query = {"kind": "upper_tail", "x": upper}
    else:
        query = {"kind": "interval", "a": between[0], "b": between[1]}

    try:
        payload = service.probability_payload(distribution, param_dict, query)
    except StatsError as exc:
        _fail(exc.message)

    if mode == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=False))
        return
    click.echo(f"P = {payload['probability']['display']}"
               f"   (full precision: {payload['probability']['value']!r})")
    m = payload["moments"]
    def _mm(entry):
        return "undefined" if entry is None else entry["display"]
    click.echo(f"E(X) = {_mm(m['mean'])}, SD(X) = {_mm(m['sd'])}, Var(X) = {_mm(m['variance'])}")
    click.echo("")
    _print_document(payload["derivation"], mode)


@main.command("test")
@click.argument("setting")
@click.option("--data", default=None, help="raw sample 1, comma-separated")
@click.option("--data2", default=None, help="raw sample 2, comma-separated")
@click.option("--n", "--n1", "n1", type=int, default=None, help="sample 1 size")
@click.option("--mean", "--mean1", "mean1", type=float, default=None)
@click.option("--var", "--var1", "var1", type=float, default=None)
@click.option("--sd", "--sd1", "sd1", type=float, default=None)
@click.option("--successes", "--successes1", "successes1", type=int, default=None)
@click.option("--n2", type=int, default=None, help="sample 2 size")
@click.option("--mean2", type=float, default=None)
@click.option("--var2", type=float, default=None)
@click.option("--sd2", type=float, default=None)
@click.option("--successes2", type=int, default=None)
@click.option("--alpha", type=float, default=0.05, show_default=True)
@click.option("--h0", type=float, default=None, help="null value (per-setting default)")
@click.option("--alt", type=click.Choice(["two", "greater", "less"]), default="two",
              show_default=True)
@click.option("--sigma", type=float, default=None, help="known sigma (z variants)")
@click.option("--sigma2", type=float, default=None, help="known sigma of sample 2")
@click.option("--equal-var", is_flag=True, help="pool the two sample variances")
@click.option("--pooled", is_flag=True, help="pooled SE for the two-proportion z")
@click.option("--mode", type=click.Choice(MODES), default="text", show_default=True)
def test_command(setting, data, data2, n1, mean1, var1, sd1, successes1,
                 n2, mean2, var2, sd2, successes2, alpha, h0, alt,
                 sigma, sigma2, equal_var, pooled, mode):
    """Confidence interval and hypothesis test for SETTING."""
    kind = _summary_kind(setting)

    def build_sample(raw_text, n, mean, var, sd, successes):
        if raw_text is not None:
            return {"kind": "raw", "observations": service.parse_numeric_list(raw_text)}
        if n is None:
            return None
        if kind == "mean":
            return {"kind": "mean_summary", "n": n, "mean": mean, "variance": var, "sd": sd}
        if kind == "proportion":
            return {"kind": "proportion_summary", "n": n, "successes": successes}
        return {"kind": "variance_summary", "n": n, "variance": var}

    try:
        samples = []
        s1 = build_sample(data, n1, mean1, var1, sd1, successes1)
        if s1 is not None:
            samples.append(s1)
        s2 = build_sample(data2, n2, mean2, var2, sd2, successes2)
        if s2 is not None:
            samples.append(s2)
        if not samples:
            _fail("no sample given: use --data or the summary flags")
        body = {
            "samples": samples,
            "config": {
                "alpha": alpha,
                "h0_value": h0,
                "alternative": {"two": "two_sided", "greater": "greater", "less": "less"}[alt],
                "sigma_known": sigma,
                "sigma2_known": sigma2,
                "equal_variances": equal_var,
                "pooled_se": pooled,
            },
        }
        payload = service.inference_payload(setting, body)
    except StatsError as exc:
        _fail(exc.message)

    if mode == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=False))
        return
    for warning in payload["warnings"]:
        click.echo(f"warning: {warning}", err=True)
    _print_document(payload["narrative"], mode)
    click.echo(f"decision: {payload['decision']}   "
               f"(statistic {payload['statistic']['display']}, "
               f"p-value {payload['p_value']['display']})")


def _summary_kind(setting: str) -> str:
    if setting in ("one_proportion", "two_proportions"):
        return "proportion"
    if setting in ("one_variance", "two_variances"):
        return "variance"
    return "mean"


@main.command("regress")
@click.option("--x", "x_text", required=True, help="predictor values, comma-separated")
@click.option("--y", "y_text", required=True, help="response values, comma-separated")
@click.option("--labels", default=None, help="axis labels as 'xlabel,ylabel'")
@click.option("--level", type=float, default=0.95, show_default=True,
              help="confidence level for the band")
@click.option("--no-band", is_flag=True, help="skip the confidence band")
@click.option("--report", "report_path", default=None,
              help="also write the HTML report to this path")
@click.option("--no-steps", is_flag=True, help="omit derivation steps from the report")
@click.option("--mode", type=click.Choice(MODES), default="text", show_default=True)
def regress_command(x_text, y_text, labels, level, no_band, report_path, no_steps, mode):
    """Simple linear regression of y on x."""
    x_label, y_label = "x", "y"
    if labels:
        parts = [p.strip() for p in labels.split(",")]
        if len(parts) != 2 or not all(parts):
            _fail("--labels needs the form 'xlabel,ylabel'")
        x_label, y_label = parts
    body = {
        "x": x_text,
        "y": y_text,
        "x_label": x_label,
        "y_label": y_label,
        "confidence_level": level,
        "include_band": not no_band,
    }
    try:
        payload = service.regression_payload(body)
    except StatsError as exc:
        _fail(exc.message)

    if report_path:
        try:
            html = service.report_html(
                {"regression": body, "include_steps": not no_steps}
            )
            with open(report_path, "w", encoding="utf-8") as fh:
                fh.write(html)
        except StatsError as exc:
            _fail(exc.message)
        except OSError as exc:
            _fail(f"cannot write report: {exc}", code=3)

    if mode == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=False))
        return
    _print_document(payload["derivation"], mode)
    click.echo("Coefficients")
    click.echo("------------")
    for row in payload["table"]["rows"]:
        se = row["std_error"]
        t = row["t"]
        p = row["p"]
        def show(v):
            return "-" if v is None else f"{v:.4f}"
        click.echo(f"  {row['term']:<10} estimate {show(row['estimate'])}"
                   f"  se {show(se)}  t {show(t)}  p {show(p)}")
    click.echo(f"  sigma_hat {payload['table']['sigma_hat']:.4f}"
               f"  df {payload['table']['df_resid']}"
               f"  R^2 {payload['table']['r_squared']:.4f}"
               f"  adj R^2 {payload['table']['adj_r_squared']:.4f}")
    click.echo("")
    click.echo(payload["interpretation"])
    if report_path:
        click.echo(f"report written to {report_path}")


@main.command("serve")
def serve_command():
    """Run the HTTP API (honours the STATSTEPS_* environment variables)."""
    service.serve()


if __name__ == "__main__":
    main()
