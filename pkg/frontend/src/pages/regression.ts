/**
 * Statistics 202 page: paste x/y, label the axes, and read the full
 * regression analysis: data table (CSV export), summary statistics,
 * derivation, coefficient table, interactive plot with optional band,
 * interpretation, collapsible diagnostics, and the report download.
 */

import { ApiError, StatClient } from "../api";
import { scatterFit, smallScatter } from "../charts";
import { buildCsv, downloadText } from "../csv";
import { clear, clearErrors, el, labeled, showFieldError } from "../dom";
import { documentNode, typeset } from "../math";
import type { RegressionResponse } from "../types";
import type { Page } from "./distributions";

/** Split entered text into tokens without interpreting them numerically,
 * so the table and CSV reproduce the input exactly. */
export function splitEntries(text: string): string[] {
  return text
    .trim()
    .split(/[,;\n]/)
    .map((token) => token.trim())
    .filter((token) => token.length > 0);
}

export function regressionPage(client: StatClient): Page {
  const root = el("div", { className: "page page-regression" });
  const form = el("form", { className: "sidebar" });
  const results = el("div", { className: "results" });
  const errorBox = el("div", { className: "error-box", hidden: true });
  root.append(form, errorBox, results);

  const xInput = el("textarea", {
    name: "x", rows: 3, "data-field": "x", placeholder: "1, 2, 3, 4",
  });
  const yInput = el("textarea", {
    name: "y", rows: 3, "data-field": "y", placeholder: "2, 3, 5, 4",
  });
  const xLabel = el("input", { type: "text", name: "x-label", value: "x" });
  const yLabel = el("input", { type: "text", name: "y-label", value: "y" });
  const bandToggle = el("input", { type: "checkbox", name: "band", className: "band-toggle", checked: true });
  const stepsToggle = el("input", { type: "checkbox", name: "steps", className: "steps-toggle", checked: true });
  const submit = el("button", { type: "submit", className: "fit-model" }, "Fit model");
  const reportButton = el("button", { type: "button", className: "download-report" },
    "Download report");

  form.append(
    labeled("x values (comma-separated)", xInput),
    labeled("y values (comma-separated)", yInput),
    labeled("x axis label", xLabel),
    labeled("y axis label", yLabel),
    labeled("show confidence band", bandToggle),
    submit,
    el("div", { className: "report-controls" },
      labeled("include derivation steps in report", stepsToggle),
      reportButton,
    ),
  );

  function requestBody(): Record<string, unknown> {
    return {
      x: xInput.value,
      y: yInput.value,
      x_label: xLabel.value || "x",
      y_label: yLabel.value || "y",
      confidence_level: 0.95,
      include_band: bandToggle.checked,
    };
  }

  function dataTable(): HTMLElement {
    const xs = splitEntries(xInput.value);
    const ys = splitEntries(yInput.value);
    const rows = xs.map((x, i) => [String(i + 1), x, ys[i] ?? ""]);
    const table = el("table", { className: "data-table" });
    const header = el("tr", {},
      el("th", {}, "#"), el("th", {}, xLabel.value || "x"), el("th", {}, yLabel.value || "y"));
    table.append(header);
    for (const row of rows) {
      table.append(el("tr", {}, ...row.map((cell) => el("td", {}, cell))));
    }
    const exportButton = el("button", { type: "button", className: "export-csv" }, "Export CSV");
    exportButton.addEventListener("click", () => {
      const csv = buildCsv([ "#", xLabel.value || "x", yLabel.value || "y"], rows);
      downloadText("data.csv", csv);
    });
    return el("section", { className: "data-section" },
      el("h3", {}, "Data"), table, exportButton);
  }

  function coefficientTable(payload: RegressionResponse): HTMLElement {
    const fit = payload.fit;
    const display = (entry: { display: string } | null) => (entry ? entry.display : "—");
    const table = el("table", { className: "coef-table" },
      el("tr", {},
        el("th", {}, "term"), el("th", {}, "estimate"), el("th", {}, "std. error"),
        el("th", {}, "t"), el("th", {}, "p-value")),
      el("tr", {},
        el("td", {}, "intercept"), el("td", {}, fit.beta0.display),
        el("td", {}, display(fit.se_beta0)), el("td", {}, display(fit.t0)),
        el("td", {}, display(fit.p0))),
      el("tr", {},
        el("td", {}, "slope"), el("td", {}, fit.beta1.display),
        el("td", {}, display(fit.se_beta1)), el("td", {}, display(fit.t1)),
        el("td", {}, display(fit.p1))),
    );
    const note = el("p", { className: "fit-stats" },
      `σ̂ = ${fit.sigma_hat.display} on ${fit.df_resid} df; `
      + `R² = ${fit.r_squared.display}, adjusted R² = ${fit.adj_r_squared.display}`);
    return el("section", { className: "coefficients" },
      el("h3", {}, "Coefficients"), table, note);
  }

  function mainPlot(payload: RegressionResponse): HTMLElement {
    const xs = splitEntries(xInput.value).map(Number);
    const ys = splitEntries(yInput.value).map(Number);
    const labels = xs.map((x, i) => `(${x}, ${ys[i]})`);
    // the fitted line comes from the server's fitted values
    const order = xs.map((_v, i) => i).sort((a, b) => xs[a] - xs[b]);
    const line = {
      x: order.map((i) => xs[i]),
      y: order.map((i) => payload.fit.fitted[i]),
    };
    const band = payload.band && bandToggle.checked
      ? { grid: payload.band.grid, lower: payload.band.lower, upper: payload.band.upper }
      : null;
    const section = el("section", { className: "fit-plot" }, el("h3", {}, "Fitted model"));
    section.append(scatterFit({ x: xs, y: ys, labels }, line, band));
    return section;
  }

  function diagnosticsPanel(payload: RegressionResponse): HTMLElement {
    const panel = el("details", { className: "diagnostics" },
      el("summary", {}, "Assumption diagnostics"));
    if (!payload.diagnostics) {
      panel.append(el("p", {}, "Perfect fit: residual diagnostics are not available."));
      return panel;
    }
    const d = payload.diagnostics;
    const leveragePairs: [number, number][] = d.leverage.map((h, i) => [
      h,
      d.standardized_residuals[i] ?? 0,
    ]);
    panel.append(
      smallScatter(d.residuals_vs_fitted, "Residuals vs fitted", { zeroLine: true }),
      smallScatter(d.qq_points, "Normal Q-Q", { identityLine: true }),
      smallScatter(d.scale_location, "Scale-location"),
      smallScatter(leveragePairs, "Residuals vs leverage", { zeroLine: true }),
    );
    return panel;
  }

  async function fitModel(): Promise<void> {
    clearErrors(root);
    try {
      const payload = await client.regression(requestBody());
      clear(results);
      const summary = el("p", { className: "summary-stats" },
        `n = ${payload.fit.n}, `
        + `x̄ = ${payload.fit.x_mean.display}, `
        + `ȳ = ${payload.fit.y_mean.display}`);
      results.append(
        dataTable(),
        el("section", { className: "summary" }, el("h3", {}, "Summary statistics"), summary),
        el("section", { className: "derivation-section" },
          documentNode(payload.derivation, true)),
        coefficientTable(payload),
        mainPlot(payload),
        el("section", { className: "interpretation" },
          el("h3", {}, "Interpretation"),
          el("p", {}, payload.interpretation)),
        diagnosticsPanel(payload),
      );
      await typeset(results);
    } catch (error) {
      if (error instanceof ApiError) {
        showFieldError(root, error.field, error.message);
      } else {
        showFieldError(root, null, String(error));
      }
    }
  }

  async function downloadReport(): Promise<void> {
    clearErrors(root);
    try {
      const html = await client.regressionReport({
        regression: requestBody(),
        include_steps: stepsToggle.checked,
      });
      downloadText("regression-report.html", html, "text/html");
    } catch (error) {
      if (error instanceof ApiError) {
        showFieldError(root, error.field, error.message);
      } else {
        showFieldError(root, null, String(error));
      }
    }
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void fitModel();
  });
  reportButton.addEventListener("click", () => void downloadReport());

  return { root, ready: Promise.resolve() };
}
