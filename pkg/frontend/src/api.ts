/**
 * Typed client for the statsteps JSON API. Every number shown in the UI
 * originates from these payloads; the client never computes statistics.
 */

import type {
  Catalog,
  InferenceResponse,
  ProbabilityResponse,
  RegressionResponse,
  SettingsResponse,
} from "./types";

export class ApiError extends Error {
  code: string;
  field: string | null;
  status: number;

  constructor(status: number, code: string, message: string, field: string | null) {
    super(message);
    this.status = status;
    this.code = code;
    this.field = field;
  }
}

async function throwApiError(response: Response): Promise<never> {
  let code = "http_error";
  let message = `request failed with status ${response.status}`;
  let field: string | null = null;
  try {
    const body = await response.json();
    if (body && body.error) {
      code = body.error.code ?? code;
      message = body.error.message ?? message;
      field = body.error.field ?? null;
    }
  } catch {
    // non-JSON error body; keep the generic message
  }
  throw new ApiError(response.status, code, message, field);
}

export class StatClient {
  constructor(readonly baseUrl: string = "") {}

  private async getJson<T>(path: string): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`);
    if (!response.ok) await throwApiError(response);
    return (await response.json()) as T;
  }

  private async postJson<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) await throwApiError(response);
    return (await response.json()) as T;
  }

  health(): Promise<{ name: string; version: string }> {
    return this.getJson("/api/v1/health");
  }

  catalog(): Promise<Catalog> {
    return this.getJson("/api/v1/distributions");
  }

  probability(
    distribution: string,
    params: Record<string, number>,
    query: Record<string, unknown>,
  ): Promise<ProbabilityResponse> {
    return this.postJson("/api/v1/probability", { distribution, params, query });
  }

  inferenceSettings(): Promise<SettingsResponse> {
    return this.getJson("/api/v1/inference/settings");
  }

  runInference(setting: string, body: unknown): Promise<InferenceResponse> {
    return this.postJson(`/api/v1/inference/${setting}`, body);
  }

  regression(body: unknown): Promise<RegressionResponse> {
    return this.postJson("/api/v1/regression", body);
  }

  async regressionReport(body: unknown): Promise<string> {
    const response = await fetch(`${this.baseUrl}/api/v1/regression/report`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) await throwApiError(response);
    return response.text();
  }
}
