/** Mock fetch serving the frozen engine fixtures; records every request so
 * tests can assert the UI computed nothing itself. */

import { readFileSync } from "node:fs";
import { join } from "node:path";

const FIXTURES = join(__dirname, "fixtures");

export function fixture(name: string): unknown {
  return JSON.parse(readFileSync(join(FIXTURES, `${name}.json`), "utf-8"));
}

export interface RecordedRequest {
  url: string;
  method: string;
  body: unknown;
}

export interface MockApi {
  requests: RecordedRequest[];
  restore: () => void;
}

type Responder = (url: string, body: unknown) => { status: number; payload: unknown } | null;

export function installMockApi(extra: Responder | null = null): MockApi {
  const requests: RecordedRequest[] = [];
  const original = globalThis.fetch;

  globalThis.fetch = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    requests.push({ url, method, body });

    const custom = extra?.(url, body);
    if (custom) {
      return jsonResponse(custom.status, custom.payload);
    }
    if (url.endsWith("/api/v1/distributions")) {
      return jsonResponse(200, fixture("catalog"));
    }
    if (url.endsWith("/api/v1/inference/settings")) {
      return jsonResponse(200, fixture("settings"));
    }
    if (url.endsWith("/api/v1/probability")) {
      return jsonResponse(200, fixture("probability_normal"));
    }
    if (url.includes("/api/v1/inference/")) {
      return jsonResponse(200, fixture("inference_one_mean"));
    }
    if (url.endsWith("/api/v1/regression")) {
      return jsonResponse(200, fixture("regression_4pt"));
    }
    if (url.endsWith("/api/v1/regression/report")) {
      return new Response("<!DOCTYPE html><html><body>report</body></html>", {
        status: 200,
        headers: { "Content-Type": "text/html" },
      });
    }
    return jsonResponse(404, { error: { code: "unknown", message: "no route", field: null } });
  }) as typeof fetch;

  return {
    requests,
    restore: () => {
      globalThis.fetch = original;
    },
  };
}

function jsonResponse(status: number, payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
