import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { StatClient } from "../src/api";
import { mountApp } from "../src/main";
import { MockApi, installMockApi, flush } from "./helpers";

describe("app shell", () => {
  let mock: MockApi;

  beforeEach(() => {
    mock = installMockApi();
    document.body.innerHTML = "";
    location.hash = "";
  });

  afterEach(() => mock.restore());

  it("renders the nav with the three course routes", () => {
    mountApp(document.body, new StatClient());
    const links = [...document.querySelectorAll(".topnav a")].map((a) =>
      a.getAttribute("href"),
    );
    expect(links).toEqual(["#/distributions", "#/inference", "#/regression"]);
  });

  it("defaults to the distributions page", async () => {
    mountApp(document.body, new StatClient());
    await flush();
    expect(document.querySelector(".page-distributions")).toBeTruthy();
  });

  it("switches pages on hash change", async () => {
    mountApp(document.body, new StatClient());
    location.hash = "#/regression";
    window.dispatchEvent(new Event("hashchange"));
    await flush();
    expect(document.querySelector(".page-regression")).toBeTruthy();
    expect(document.querySelector(".page-distributions")).toBeNull();
    location.hash = "#/inference";
    window.dispatchEvent(new Event("hashchange"));
    await flush();
    expect(document.querySelector(".page-inference")).toBeTruthy();
  });
});
