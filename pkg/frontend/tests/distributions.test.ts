import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { StatClient } from "../src/api";
import { distributionPage } from "../src/pages/distributions";
import { MockApi, installMockApi, flush } from "./helpers";

describe("distribution page", () => {
  let mock: MockApi;

  beforeEach(() => {
    mock = installMockApi();
    document.body.innerHTML = "";
  });

  afterEach(() => mock.restore());

  async function mounted() {
    const page = distributionPage(new StatClient());
    document.body.append(page.root);
    await page.ready;
    return page;
  }

  it("lists all 18 distributions and defaults to normal", async () => {
    const page = await mounted();
    const select = page.root.querySelector<HTMLSelectElement>(".distribution-select")!;
    expect(select.options.length).toBe(18);
    expect(select.value).toBe("normal");
  });

  it("renders mu and var inputs for the normal distribution", async () => {
    const page = await mounted();
    expect(page.root.querySelector('input[name="param-mu"]')).toBeTruthy();
    expect(page.root.querySelector('input[name="param-var"]')).toBeTruthy();
  });

  it("swaps parameter inputs when the distribution changes", async () => {
    const page = await mounted();
    const select = page.root.querySelector<HTMLSelectElement>(".distribution-select")!;
    select.value = "binomial";
    select.dispatchEvent(new Event("change"));
    expect(page.root.querySelector('input[name="param-n"]')).toBeTruthy();
    expect(page.root.querySelector('input[name="param-p"]')).toBeTruthy();
    expect(page.root.querySelector('input[name="param-mu"]')).toBeNull();
  });

  it("renders Solution, Plot and Details for the default normal query", async () => {
    const page = await mounted();
    page.root.querySelector("form")!.dispatchEvent(new Event("submit"));
    await flush();
    const text = page.root.textContent ?? "";
    expect(text).toContain("0.8413");
    expect(page.root.querySelector(".solution")).toBeTruthy();
    expect(page.root.querySelector(".details")).toBeTruthy();
    expect(page.root.querySelector(".plot svg")).toBeTruthy();
    // shaded region present on the plot
    expect(page.root.querySelector(".plot svg .shaded")).toBeTruthy();
    // the TeX arrives verbatim from the payload
    expect(text).toContain("X \\sim \\mathcal{N}");
  });

  it("sends exactly the entered parameters to the server", async () => {
    const page = await mounted();
    page.root.querySelector("form")!.dispatchEvent(new Event("submit"));
    await flush();
    const post = mock.requests.find((r) => r.url.endsWith("/probability"));
    expect(post).toBeTruthy();
    expect(post!.body).toEqual({
      distribution: "normal",
      params: { mu: 0, var: 1 },
      query: { kind: "lower_tail", x: 1 },
    });
  });

  it("clears stale results when switching distribution", async () => {
    const page = await mounted();
    page.root.querySelector("form")!.dispatchEvent(new Event("submit"));
    await flush();
    expect(page.root.querySelector(".solution")).toBeTruthy();
    const select = page.root.querySelector<HTMLSelectElement>(".distribution-select")!;
    select.value = "poisson";
    select.dispatchEvent(new Event("change"));
    expect(page.root.querySelector(".solution")).toBeNull();
  });

  it("switches to interval bounds when the query kind changes", async () => {
    const page = await mounted();
    const kind = page.root.querySelector<HTMLSelectElement>(".query-kind")!;
    kind.value = "interval";
    kind.dispatchEvent(new Event("change"));
    expect(page.root.querySelector('input[name="bound-a"]')).toBeTruthy();
    expect(page.root.querySelector('input[name="bound-b"]')).toBeTruthy();
    expect(page.root.querySelector('input[name="bound-x"]')).toBeNull();
  });

  it("shows inline field errors from the API", async () => {
    mock.restore();
    mock = installMockApi((url) =>
      url.endsWith("/probability")
        ? {
            status: 422,
            payload: { error: { code: "domain_error", message: "var must be > 0", field: "var" } },
          }
        : null,
    );
    const page = await mounted();
    page.root.querySelector("form")!.dispatchEvent(new Event("submit"));
    await flush();
    const box = page.root.querySelector<HTMLElement>(".error-box")!;
    expect(box.hidden).toBe(false);
    expect(box.textContent).toContain("var must be > 0");
    expect(page.root.querySelector('[data-field="var"]')!.classList.contains("input-error"))
      .toBe(true);
  });
});
