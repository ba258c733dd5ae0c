/**
 * Statistics 101 page: pick one of the 18 distributions, enter its
 * parameters and a tail query, and read the Solution / Plot / Details
 * blocks computed by the server.
 */

import { ApiError, StatClient } from "../api";
import { distributionPlot } from "../charts";
import { clear, clearErrors, el, labeled, showFieldError } from "../dom";
import { documentNode, typeset } from "../math";
import type { Catalog, CatalogEntry } from "../types";

export interface Page {
  root: HTMLElement;
  ready: Promise<void>;
}

const DEFAULTS: Record<string, Record<string, number>> = {
  normal: { mu: 0, var: 1 },
  beta: { alpha: 2, beta: 3 },
  binomial: { n: 10, p: 0.5 },
  cauchy: { location: 0, scale: 1 },
  chi_square: { df: 4 },
  exponential: { rate: 1 },
  fisher: { df1: 5, df2: 7 },
  gamma: { shape: 2, rate: 1 },
  geometric_trials: { p: 0.5 },
  geometric_failures: { p: 0.5 },
  hypergeometric: { population: 50, successes: 20, draws: 10 },
  logistic: { location: 0, scale: 1 },
  log_normal: { mu_log: 0, sigma_log: 1 },
  negative_binomial_size_prob: { size: 5, prob: 0.5 },
  negative_binomial_mean_size: { mu: 4, size: 2 },
  poisson: { lambda: 2 },
  student_t: { df: 7 },
  weibull: { shape: 1.5, scale: 1 },
};

export function distributionPage(client: StatClient): Page {
  const root = el("div", { className: "page page-distributions" });
  const form = el("form", { className: "sidebar" });
  const results = el("div", { className: "results" });
  const errorBox = el("div", { className: "error-box", hidden: true });
  root.append(form, errorBox, results);

  const select = el("select", { className: "distribution-select", "data-field": "distribution" });
  const paramsBox = el("div", { className: "params" });
  const queryKind = el("select", { className: "query-kind" },
    el("option", { value: "lower_tail" }, "Lower tail: P(X ≤ x)"),
    el("option", { value: "upper_tail" }, "Upper tail: P(X > x)"),
    el("option", { value: "interval" }, "Interval: P(a ≤ X ≤ b)"),
  );
  const boundsBox = el("div", { className: "bounds" });
  const submit = el("button", { type: "submit", className: "compute" }, "Compute");
  form.append(
    labeled("Distribution", select),
    paramsBox,
    labeled("Probability type", queryKind),
    boundsBox,
    submit,
  );

  let catalog: Catalog = { distributions: [] };

  function currentEntry(): CatalogEntry | undefined {
    return catalog.distributions.find((entry) => entry.tag === select.value);
  }

  function renderParams(): void {
    clear(paramsBox);
    const entry = currentEntry();
    if (!entry) return;
    const defaults = DEFAULTS[entry.tag] ?? {};
    for (const param of entry.params) {
      const input = el("input", {
        type: "number",
        step: "any",
        name: `param-${param.name}`,
        "data-field": param.name,
        value: defaults[param.name] ?? "",
        title: `${param.description} (${param.constraint})`,
      });
      paramsBox.append(labeled(`${param.name} — ${param.description}`, input));
    }
    paramsBox.append(el("p", { className: "support" }, `support: ${entry.support}`));
  }

  function renderBounds(): void {
    clear(boundsBox);
    if (queryKind.value === "interval") {
      boundsBox.append(
        labeled("a", el("input", { type: "number", step: "any", name: "bound-a", "data-field": "query", value: "0" })),
        labeled("b", el("input", { type: "number", step: "any", name: "bound-b", "data-field": "query", value: "1" })),
      );
    } else {
      boundsBox.append(
        labeled("x", el("input", { type: "number", step: "any", name: "bound-x", "data-field": "query.x", value: "1" })),
      );
    }
  }

  function readNumber(name: string): number {
    const input = form.querySelector<HTMLInputElement>(`input[name="${name}"]`);
    return input ? Number(input.value) : NaN;
  }

  async function compute(): Promise<void> {
    clearErrors(root);
    const entry = currentEntry();
    if (!entry) return;
    const params: Record<string, number> = {};
    for (const param of entry.params) {
      params[param.name] = readNumber(`param-${param.name}`);
    }
    const kind = queryKind.value;
    const query: Record<string, unknown> =
      kind === "interval"
        ? { kind, a: readNumber("bound-a"), b: readNumber("bound-b") }
        : { kind, x: readNumber("bound-x") };
    try {
      const payload = await client.probability(entry.tag, params, query);
      clear(results);
      const solution = el("section", { className: "solution" }, el("h2", {}, "Solution"));
      const details = el("section", { className: "details" }, el("h2", {}, "Details"));
      const doc = payload.derivation;
      for (const section of doc.sections) {
        const target = section.title === "Solution" ? solution : details;
        target.append(documentNode({ sections: [section] }));
      }
      const plotSection = el("section", { className: "plot" }, el("h2", {}, "Plot"));
      plotSection.append(distributionPlot(payload.plot));
      const headline = el("p", { className: "probability-value" },
        `P = ${payload.probability.display}`);
      results.append(solution, headline, plotSection, details);
      await typeset(results);
    } catch (error) {
      if (error instanceof ApiError) {
        showFieldError(root, error.field, error.message);
      } else {
        showFieldError(root, null, String(error));
      }
    }
  }

  select.addEventListener("change", () => {
    renderParams();
    clear(results); // stale results never survive a distribution switch
    clearErrors(root);
  });
  queryKind.addEventListener("change", renderBounds);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void compute();
  });

  const ready = client.catalog().then((cat) => {
    catalog = cat;
    clear(select);
    for (const entry of cat.distributions) {
      select.append(el("option", { value: entry.tag }, entry.name));
    }
    select.value = "normal";
    renderParams();
    renderBounds();
  });

  return { root, ready };
}
