/** Single-page shell: three routes mirroring the three course levels. */

import { StatClient } from "./api";
import { el, clear } from "./dom";
import { distributionPage, Page } from "./pages/distributions";
import { inferencePage } from "./pages/inference";
import { regressionPage } from "./pages/regression";

const ROUTES: Record<string, { title: string; build: (client: StatClient) => Page }> = {
  "#/distributions": { title: "101 · Distributions", build: distributionPage },
  "#/inference": { title: "201 · Inference", build: inferencePage },
  "#/regression": { title: "202 · Regression", build: regressionPage },
};

export function mountApp(root: HTMLElement, client = new StatClient()): void {
  const nav = el("nav", { className: "topnav" },
    el("span", { className: "brand" }, "statsteps"),
    ...Object.entries(ROUTES).map(([hash, route]) =>
      el("a", { href: hash }, route.title)),
  );
  const outlet = el("main", { className: "outlet" });
  root.append(nav, outlet);

  function render(): void {
    const hash = Object.prototype.hasOwnProperty.call(ROUTES, location.hash)
      ? location.hash
      : "#/distributions";
    for (const link of nav.querySelectorAll("a")) {
      link.classList.toggle("active", link.getAttribute("href") === hash);
    }
    clear(outlet);
    outlet.append(ROUTES[hash].build(client).root);
  }

  window.addEventListener("hashchange", render);
  render();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  mountApp(document.getElementById("app") as HTMLElement);
}
