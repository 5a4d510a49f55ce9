// HTTP client for the analysis API. Thin: one method per route, typed
// payloads, API errors rethrown as ApiRequestError with the server's code.

import type {
  AnalysisDoc,
  ApiErrorDoc,
  CatalogEntryDoc,
  DeltaDoc,
  MetricRecordDoc,
  ModelDoc,
  ValidationReportDoc,
} from "./types.js";

export class ApiRequestError extends Error {
  readonly status: number;
  readonly code: string;
  readonly span?: { line: number; column: number };
  readonly report?: ValidationReportDoc;

  constructor(status: number, code: string, detail: string,
              span?: { line: number; column: number },
              report?: ValidationReportDoc) {
    super(detail);
    this.status = status;
    this.code = code;
    this.span = span;
    this.report = report;
  }
}

export interface PutModelResponse {
  revision: number;
  report: ValidationReportDoc;
  stored: boolean;
}

export interface GetModelResponse {
  revision: number;
  model: ModelDoc | null;
  text: string | null;
}

async function parseBody(response: Response): Promise<unknown> {
  const text = await response.text();
  return text ? JSON.parse(text) : {};
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async request(method: string, path: string, body?: unknown): Promise<unknown> {
    const response = await fetch(this.base + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = (await parseBody(response)) as Record<string, unknown>;
    if (!response.ok) {
      const error = payload["error"] as ApiErrorDoc | undefined;
      throw new ApiRequestError(
        response.status,
        error?.code ?? "HTTP_ERROR",
        error?.detail ?? `request failed with status ${response.status}`,
        error?.span,
        payload["report"] as ValidationReportDoc | undefined,
      );
    }
    return payload;
  }

  async health(): Promise<boolean> {
    const body = (await this.request("GET", "/api/health")) as { status: string };
    return body.status === "ok";
  }

  async createSession(): Promise<string> {
    const body = (await this.request("GET", "/api/session")) as { session_id: string };
    return body.session_id;
  }

  async getModel(sessionId: string): Promise<GetModelResponse> {
    return (await this.request("GET", `/api/session/${sessionId}/model`)) as GetModelResponse;
  }

  async putModelText(sessionId: string, text: string,
                     expectedRevision: number): Promise<PutModelResponse> {
    return (await this.request("PUT", `/api/session/${sessionId}/model`, {
      text,
      expected_revision: expectedRevision,
    })) as PutModelResponse;
  }

  async putModelDoc(sessionId: string, model: ModelDoc,
                    expectedRevision: number): Promise<PutModelResponse> {
    return (await this.request("PUT", `/api/session/${sessionId}/model`, {
      model,
      expected_revision: expectedRevision,
    })) as PutModelResponse;
  }

  async analyze(sessionId: string): Promise<AnalysisDoc> {
    const body = (await this.request(
      "POST", `/api/session/${sessionId}/analyze`)) as { result: AnalysisDoc };
    return body.result;
  }

  async whatif(sessionId: string, path: string[], pair: [string, string],
               value: string): Promise<DeltaDoc> {
    const body = (await this.request("POST", `/api/session/${sessionId}/whatif`, {
      node: path,
      pair,
      value,
    })) as { delta: DeltaDoc };
    return body.delta;
  }

  async getMetrics(sessionId: string): Promise<MetricRecordDoc[]> {
    const body = (await this.request(
      "GET", `/api/session/${sessionId}/metrics`)) as { metrics: MetricRecordDoc[] };
    return body.metrics;
  }

  async putMetrics(sessionId: string, metrics: MetricRecordDoc[],
                   expectedRevision: number): Promise<number> {
    const body = (await this.request("PUT", `/api/session/${sessionId}/metrics`, {
      metrics,
      expected_revision: expectedRevision,
    })) as { revision: number };
    return body.revision;
  }

  async catalog(filter?: { dimension?: string; category?: string; keyword?: string }):
      Promise<CatalogEntryDoc[]> {
    const params = new URLSearchParams();
    if (filter?.dimension) params.set("dimension", filter.dimension);
    if (filter?.category) params.set("category", filter.category);
    if (filter?.keyword) params.set("keyword", filter.keyword);
    const query = params.toString();
    const body = (await this.request(
      "GET", `/api/catalog${query ? "?" + query : ""}`)) as { entries: CatalogEntryDoc[] };
    return body.entries;
  }
}
