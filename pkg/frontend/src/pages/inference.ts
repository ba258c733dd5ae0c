/**
 * Statistics 201 page: the seven inference settings with raw/summary
 * input, the alpha slider (0.01 to 0.20, default 0.05), null value and
 * alternative, rendering the four-section narrative and the
 * rejection-region plot.
 */

import { ApiError, StatClient } from "../api";
import { distributionPlot } from "../charts";
import { clear, clearErrors, el, labeled, showFieldError } from "../dom";
import { documentNode, typeset } from "../math";
import type { InferenceResponse, SettingDescriptor } from "../types";
import type { Page } from "./distributions";

export const ALPHA_MIN = 0.01;
export const ALPHA_MAX = 0.2;
export const ALPHA_DEFAULT = 0.05;

function summaryKind(setting: string): "mean" | "proportion" | "variance" {
  if (setting.includes("proportion")) return "proportion";
  if (setting.includes("variance")) return "variance";
  return "mean";
}

export function inferencePage(client: StatClient): Page {
  const root = el("div", { className: "page page-inference" });
  const form = el("form", { className: "sidebar" });
  const results = el("div", { className: "results" });
  const errorBox = el("div", { className: "error-box", hidden: true });
  root.append(form, errorBox, results);

  const settingSelect = el("select", { className: "setting-select", "data-field": "setting" });
  const samplesBox = el("div", { className: "samples" });

  const alphaValue = el("span", { className: "alpha-value" }, ALPHA_DEFAULT.toFixed(2));
  const alphaSlider = el("input", {
    type: "range",
    className: "alpha-slider",
    min: String(ALPHA_MIN),
    max: String(ALPHA_MAX),
    step: "0.01",
    value: String(ALPHA_DEFAULT),
    "data-field": "alpha",
  });
  alphaSlider.addEventListener("input", () => {
    // the range input enforces the bounds; clamp defensively anyway
    const v = Math.min(ALPHA_MAX, Math.max(ALPHA_MIN, Number(alphaSlider.value)));
    alphaSlider.value = String(v);
    alphaValue.textContent = v.toFixed(2);
  });

  const h0Input = el("input", {
    type: "number", step: "any", name: "h0", "data-field": "h0_value", value: "0",
  });
  const altSelect = el("select", { name: "alternative", "data-field": "alternative" },
    el("option", { value: "two_sided" }, "two-sided (≠)"),
    el("option", { value: "greater" }, "greater (>)"),
    el("option", { value: "less" }, "less (<)"),
  );
  const optionsBox = el("div", { className: "setting-options" });
  const submit = el("button", { type: "submit", className: "run-test" }, "Run");

  form.append(
    labeled("Inference setting", settingSelect),
    samplesBox,
    el("div", { className: "field alpha-field" },
      el("span", {}, "significance level α"),
      alphaSlider,
      alphaValue,
    ),
    labeled("null value H₀", h0Input),
    labeled("alternative H₁", altSelect),
    optionsBox,
    submit,
  );

  let settings: SettingDescriptor[] = [];
  let lastResponse: InferenceResponse | null = null;

  function descriptor(): SettingDescriptor | undefined {
    return settings.find((s) => s.tag === settingSelect.value);
  }

  function sampleEditor(index: number, desc: SettingDescriptor): HTMLElement {
    const kind = summaryKind(desc.tag);
    const rawOnly = !desc.sample_kinds.some((k) => k.endsWith("summary"));
    const box = el("fieldset", { className: "sample-editor", "data-sample": String(index) },
      el("legend", {}, desc.samples > 1 ? `Sample ${index + 1}` : "Sample"));

    const modeToggle = el("select", { className: "sample-mode" },
      el("option", { value: "raw" }, "raw data"),
      el("option", { value: "summary" }, "summary statistics"),
    );
    const body = el("div", { className: "sample-body" });

    function renderBody(): void {
      clear(body);
      if (modeToggle.value === "raw") {
        body.append(labeled(
          "observations (comma-separated)",
          el("textarea", {
            name: `raw-${index}`, rows: 3, "data-field": "observations",
            placeholder: "1.2, 3.4, 5.6",
          }),
        ));
        return;
      }
      // summary fields, prefilled from the last run's server-computed stats
      const stats = lastResponse?.summary_stats?.[index];
      const preset = (value: number | undefined | null) =>
        value === undefined || value === null ? "" : String(value);
      if (kind === "mean") {
        body.append(
          labeled("n", el("input", { type: "number", name: `n-${index}`, "data-field": "n", value: preset(stats?.n) })),
          labeled("mean", el("input", { type: "number", step: "any", name: `mean-${index}`, "data-field": "mean", value: preset(stats?.mean?.value) })),
          labeled("variance", el("input", { type: "number", step: "any", name: `var-${index}`, "data-field": "variance", value: preset(stats?.variance?.value) })),
        );
      } else if (kind === "proportion") {
        body.append(
          labeled("n", el("input", { type: "number", name: `n-${index}`, "data-field": "n", value: preset(stats?.n) })),
          labeled("successes", el("input", { type: "number", name: `successes-${index}`, "data-field": "successes", value: preset(stats?.successes) })),
        );
      } else {
        body.append(
          labeled("n", el("input", { type: "number", name: `n-${index}`, "data-field": "n", value: preset(stats?.n) })),
          labeled("variance", el("input", { type: "number", step: "any", name: `var-${index}`, "data-field": "variance", value: preset(stats?.variance?.value) })),
        );
      }
    }

    if (rawOnly) {
      modeToggle.value = "raw";
      modeToggle.disabled = true;
    }
    modeToggle.addEventListener("change", renderBody);
    box.append(labeled("input mode", modeToggle), body);
    renderBody();
    return box;
  }

  function renderOptions(desc: SettingDescriptor): void {
    clear(optionsBox);
    if (desc.options.includes("sigma_known")) {
      optionsBox.append(labeled(
        "known σ (optional, switches to z)",
        el("input", { type: "number", step: "any", name: "sigma", "data-field": "sigma_known" }),
      ));
    }
    if (desc.options.includes("sigma2_known")) {
      optionsBox.append(labeled(
        "known σ₂ (with known σ)",
        el("input", { type: "number", step: "any", name: "sigma2", "data-field": "sigma2_known" }),
      ));
    }
    if (desc.options.includes("equal_variances")) {
      optionsBox.append(labeled(
        "assume equal variances (pooled t)",
        el("input", { type: "checkbox", name: "equal-var", className: "equal-var" }),
      ));
    }
    if (desc.options.includes("pooled_se")) {
      optionsBox.append(labeled(
        "use pooled standard error",
        el("input", { type: "checkbox", name: "pooled", className: "pooled-se" }),
      ));
    }
  }

  function renderSetting(): void {
    const desc = descriptor();
    if (!desc) return;
    clear(samplesBox);
    for (let i = 0; i < desc.samples; i += 1) {
      samplesBox.append(sampleEditor(i, desc));
    }
    renderOptions(desc);
    clear(results);
    clearErrors(root);
  }

  function readSample(index: number, desc: SettingDescriptor): unknown {
    const mode = samplesBox.querySelectorAll<HTMLSelectElement>(".sample-mode")[index].value;
    if (mode === "raw") {
      const text = (form.querySelector(`[name="raw-${index}"]`) as HTMLTextAreaElement).value;
      return { kind: "raw", text };
    }
    const num = (name: string) => {
      const node = form.querySelector<HTMLInputElement>(`[name="${name}-${index}"]`);
      return node && node.value !== "" ? Number(node.value) : null;
    };
    const kind = summaryKind(desc.tag);
    if (kind === "mean") {
      return { kind: "mean_summary", n: num("n"), mean: num("mean"), variance: num("var") };
    }
    if (kind === "proportion") {
      return { kind: "proportion_summary", n: num("n"), successes: num("successes") };
    }
    return { kind: "variance_summary", n: num("n"), variance: num("var") };
  }

  async function run(): Promise<void> {
    clearErrors(root);
    const desc = descriptor();
    if (!desc) return;
    const optional = (name: string) => {
      const node = form.querySelector<HTMLInputElement>(`[name="${name}"]`);
      return node && node.value !== "" ? Number(node.value) : null;
    };
    const body = {
      samples: Array.from({ length: desc.samples }, (_v, i) => readSample(i, desc)),
      config: {
        alpha: Number(alphaSlider.value),
        h0_value: h0Input.value === "" ? null : Number(h0Input.value),
        alternative: altSelect.value,
        sigma_known: optional("sigma"),
        sigma2_known: optional("sigma2"),
        equal_variances:
          form.querySelector<HTMLInputElement>('[name="equal-var"]')?.checked ?? false,
        pooled_se: form.querySelector<HTMLInputElement>('[name="pooled"]')?.checked ?? false,
      },
    };
    try {
      const payload = await client.runInference(desc.tag, body);
      lastResponse = payload;
      clear(results);
      for (const warning of payload.warnings) {
        results.append(el("p", { className: "warning" }, warning));
      }
      results.append(documentNode(payload.narrative, true));
      const plotSection = el("section", { className: "rejection-plot" },
        el("h3", {}, `Rejection region (${payload.statistic_family.label})`));
      plotSection.append(distributionPlot(payload.plot));
      results.append(
        plotSection,
        el("p", { className: "decision" },
          `decision: ${payload.decision === "reject" ? "reject H₀" : "do not reject H₀"} `
          + `(statistic ${payload.statistic.display}, p-value ${payload.p_value.display})`),
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

  settingSelect.addEventListener("change", renderSetting);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void run();
  });

  const ready = client.inferenceSettings().then((payload) => {
    settings = payload.settings;
    clear(settingSelect);
    for (const desc of settings) {
      settingSelect.append(el("option", { value: desc.tag }, desc.name));
    }
    settingSelect.value = "one_mean";
    renderSetting();
  });

  return { root, ready };
}
