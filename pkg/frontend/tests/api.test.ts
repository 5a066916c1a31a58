import { describe, expect, it } from "vitest";

import { ApiClient, ApiError, RevisionGate } from "../src/api";
import type { InferResponse } from "../src/types";

function jsonResponse(body: unknown, status = 200): Response {
    return new Response(JSON.stringify(body), {
        status,
        headers: { "content-type": "application/json" },
    });
}

describe("ApiClient", () => {
    it("posts evidence and parses the marginal", async () => {
        const seen: { url?: string; body?: string } = {};
        const client = new ApiClient("", async (url, init) => {
            seen.url = url;
            seen.body = init?.body as string;
            return jsonResponse({ RecL: { approved: 0.578194, rejected: 0.421806 } });
        });
        const dist = await client.infer({ "AG": "A" }, "RecL");
        expect(seen.url).toBe("/api/infer");
        expect(JSON.parse(seen.body!)).toEqual({ evidence: { AG: "A" }, query: "RecL" });
        expect(dist.RecL.approved).toBe(0.578194);
    });

    it("surfaces service error bodies with their code", async () => {
        const client = new ApiClient("", async () =>
            jsonResponse(
                { code: "impossible_evidence", message: "evidence has probability 0" },
                422,
            ),
        );
        const err = await client
            .whatif({}, [{ NumC: "many" }])
            .then(() => null, (e) => e as ApiError);
        expect(err).toBeInstanceOf(ApiError);
        expect(err!.code).toBe("impossible_evidence");
        expect(err!.status).toBe(422);
        expect(err!.message).toContain("probability 0");
    });

    it("falls back to a status message when the error body is not JSON", async () => {
        const client = new ApiClient("", async () => new Response("boom", { status: 500 }));
        const err = await client.model().then(() => null, (e) => e as ApiError);
        expect(err!.code).toBe("transport_error");
        expect(err!.message).toContain("500");
    });
});

describe("RevisionGate", () => {
    it("drops stale responses when a newer request started later", async () => {
        const gate = new RevisionGate();
        const applied: string[] = [];
        let releaseSlow!: () => void;
        const slowBody = new Promise<void>((resolve) => (releaseSlow = resolve));

        const client = new ApiClient("", async (_url, init) => {
            const request = JSON.parse(init?.body as string) as { query: string };
            if (request.query === "slow") await slowBody;
            return jsonResponse({ [request.query]: { t: 1.0 } });
        });

        const run = async (query: string) => {
            const revision = gate.next();
            const response = await client.infer({}, query);
            if (!gate.isCurrent(revision)) return;
            applied.push(Object.keys(response)[0]);
        };

        const slow = run("slow"); // starts first, finishes last
        const fast = run("fast");
        await fast;
        releaseSlow();
        await slow;

        expect(applied).toEqual(["fast"]);
    });

    it("revisions are strictly increasing and only the newest is current", () => {
        const gate = new RevisionGate();
        const a = gate.next();
        const b = gate.next();
        expect(b).toBeGreaterThan(a);
        expect(gate.isCurrent(a)).toBe(false);
        expect(gate.isCurrent(b)).toBe(true);
    });
});
