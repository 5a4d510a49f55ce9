// HTTP client for the analysis API. Thin: one method per route, typed
// payloads, API errors rethrown as ApiRequestError with the server's code.
export class ApiRequestError extends Error {
    constructor(status, code, detail, span, report) {
        super(detail);
        this.status = status;
        this.code = code;
        this.span = span;
        this.report = report;
    }
}
async function parseBody(response) {
    const text = await response.text();
    return text ? JSON.parse(text) : {};
}
export class ApiClient {
    constructor(base = "") {
        this.base = base;
    }
    async request(method, path, body) {
        const response = await fetch(this.base + path, {
            method,
            headers: body === undefined ? undefined : { "Content-Type": "application/json" },
            body: body === undefined ? undefined : JSON.stringify(body),
        });
        const payload = (await parseBody(response));
        if (!response.ok) {
            const error = payload["error"];
            throw new ApiRequestError(response.status, error?.code ?? "HTTP_ERROR", error?.detail ?? `request failed with status ${response.status}`, error?.span, payload["report"]);
        }
        return payload;
    }
    async health() {
        const body = (await this.request("GET", "/api/health"));
        return body.status === "ok";
    }
    async createSession() {
        const body = (await this.request("GET", "/api/session"));
        return body.session_id;
    }
    async getModel(sessionId) {
        return (await this.request("GET", `/api/session/${sessionId}/model`));
    }
    async putModelText(sessionId, text, expectedRevision) {
        return (await this.request("PUT", `/api/session/${sessionId}/model`, {
            text,
            expected_revision: expectedRevision,
        }));
    }
    async putModelDoc(sessionId, model, expectedRevision) {
        return (await this.request("PUT", `/api/session/${sessionId}/model`, {
            model,
            expected_revision: expectedRevision,
        }));
    }
    async analyze(sessionId) {
        const body = (await this.request("POST", `/api/session/${sessionId}/analyze`));
        return body.result;
    }
    async whatif(sessionId, path, pair, value) {
        const body = (await this.request("POST", `/api/session/${sessionId}/whatif`, {
            node: path,
            pair,
            value,
        }));
        return body.delta;
    }
    async getMetrics(sessionId) {
        const body = (await this.request("GET", `/api/session/${sessionId}/metrics`));
        return body.metrics;
    }
    async putMetrics(sessionId, metrics, expectedRevision) {
        const body = (await this.request("PUT", `/api/session/${sessionId}/metrics`, {
            metrics,
            expected_revision: expectedRevision,
        }));
        return body.revision;
    }
    async catalog(filter) {
        const params = new URLSearchParams();
        if (filter?.dimension)
            params.set("dimension", filter.dimension);
        if (filter?.category)
            params.set("category", filter.category);
        if (filter?.keyword)
            params.set("keyword", filter.keyword);
        const query = params.toString();
        const body = (await this.request("GET", `/api/catalog${query ? "?" + query : ""}`));
        return body.entries;
    }
}
