import type {
    Bindings,
    ImpactReport,
    InferResponse,
    ModelDocument,
    PlanReport,
    ServiceError,
    WhatifResponse,
} from "./types.js";

export class ApiError extends Error {
    readonly code: string;
    readonly status: number;

    constructor(status: number, body: ServiceError | null) {
        super(body?.message ?? `request failed with status ${status}`);
        this.code = body?.code ?? "transport_error";
        this.status = status;
    }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
    private readonly base: string;
    private readonly fetchImpl: FetchLike;

    constructor(base = "", fetchImpl: FetchLike = (u, i) => fetch(u, i)) {
        this.base = base.replace(/\/$/, "");
        this.fetchImpl = fetchImpl;
    }

    private async request<T>(path: string, body?: unknown): Promise<T> {
        const init: RequestInit =
            body === undefined
                ? {}
                : {
                      method: "POST",
                      headers: { "content-type": "application/json" },
                      body: JSON.stringify(body),
                  };
        const res = await this.fetchImpl(this.base + path, init);
        if (!res.ok) {
            let parsed: ServiceError | null = null;
            try {
                parsed = (await res.json()) as ServiceError;
            } catch {
                // non-JSON error body; keep the status-based message
            }
            throw new ApiError(res.status, parsed);
        }
        return (await res.json()) as T;
    }

    model(): Promise<ModelDocument> {
        return this.request<ModelDocument>("/api/model");
    }

    infer(evidence: Bindings, query: string): Promise<InferResponse> {
        return this.request<InferResponse>("/api/infer", { evidence, query });
    }

    impact(target: { variable: string; state: string }, evidence: Bindings): Promise<ImpactReport> {
        return this.request<ImpactReport>("/api/impact", { target, evidence });
    }

    plan(profile: Bindings): Promise<PlanReport> {
        return this.request<PlanReport>("/api/plan", { profile });
    }

    whatif(profile: Bindings, scenarios: Bindings[]): Promise<WhatifResponse> {
        return this.request<WhatifResponse>("/api/whatif", { profile, scenarios });
    }
}

/**
 * Monotonic revision counter guarding against out-of-order responses.
 * Every input change takes a new revision; a response is applied only if
 * its revision is still the newest, so slow responses never overwrite
 * results for fresher inputs.
 */
export class RevisionGate {
    private current = 0;

    next(): number {
        return ++this.current;
    }

    isCurrent(revision: number): boolean {
        return revision === this.current;
    }
}
