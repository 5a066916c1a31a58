import { readFileSync } from "node:fs";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { prob } from "../src/format";
import {
    renderImpactBars,
    renderPlanBody,
    renderProfileForm,
    renderScenarioCard,
    renderScenarioCards,
    renderTargetPicker,
} from "../src/render";
import type {
    ImpactReport,
    ModelDocument,
    PlanReport,
    WhatifResponse,
} from "../src/types";

const FIXTURES = join(__dirname, "fixtures");

function raw(name: string): string {
    return readFileSync(join(FIXTURES, name), "utf8");
}

function fixture<T>(name: string): T {
    return JSON.parse(raw(name)) as T;
}

/** every 6-decimal literal in a recorded response body */
function wireNumbers(text: string): string[] {
    return [...text.matchAll(/-?\d+\.\d{6}/g)].map((m) => m[0]);
}

describe("profile form", () => {
    const model = fixture<ModelDocument>("model.json");

    it("renders one selector per profile variable, in model order", () => {
        const html = renderProfileForm(model, {});
        const vars = [...html.matchAll(/data-var="([^"]+)"/g)].map((m) => m[1]);
        expect(vars).toEqual(["AG", "S", "A", "NumC", "RBG", "Pub"]);
    });

    it("puts unknown first, then states in model order", () => {
        const html = renderProfileForm(model, {});
        const agBlock = html.split("data-var=")[1];
        const options = [...agBlock.matchAll(/<option value="([^"]+)"/g)].map((m) => m[1]);
        expect(options.slice(0, 4)).toEqual(["unknown", "A", "B", "C"]);
    });

    it("marks the bound state selected", () => {
        const html = renderProfileForm(model, { AG: "B" });
        expect(html).toContain('<option value="B" selected>');
    });
});

describe("impact bars", () => {
    it("keeps the service's entry order and its exact numbers", () => {
        for (const name of ["impact_recl.json", "impact_satisfaction.json"]) {
            const report = fixture<ImpactReport>(name);
            const html = renderImpactBars(report);
            const order = [...html.matchAll(/data-influencer="([^"]+)"/g)].map((m) => m[1]);
            expect(order).toEqual(report.entries.map((e) => e.influencer));
            expect(html).toContain(prob(report.baseline));
            for (const entry of report.entries) {
                expect(html).toContain(prob(entry.level));
            }
        }
    });

    it("renders every displayed level byte-identically to the wire format", () => {
        const text = raw("impact_recl.json");
        const report = JSON.parse(text) as ImpactReport;
        const html = renderImpactBars(report);
        const levels = [...text.matchAll(/"level":(-?\d+\.\d{6})/g)].map((m) => m[1]);
        expect(levels.length).toBe(report.entries.length);
        for (const literal of levels) {
            expect(html).toContain(`>${literal}<`);
        }
    });

    it("passes infinite levels through as-is", () => {
        const report: ImpactReport = {
            target: { variable: "X", state: "t" },
            baseline: 0.5,
            entries: [
                {
                    influencer: "Y",
                    level: "-Infinity",
                    achieving_state: "f",
                    magnitude: "Infinity",
                    mutual_information: 0.1,
                },
            ],
        };
        const html = renderImpactBars(report);
        expect(html).toContain("-Infinity");
        expect(html).toContain('class="impact-bar neg"');
    });

    it("default target picker selects RecL=approved", () => {
        const html = renderTargetPicker({ variable: "RecL", state: "approved" });
        expect(html).toContain('value="RecL=approved" selected');
    });
});

describe("scenario cards", () => {
    const whatif = fixture<WhatifResponse>("whatif_courses.json");

    it("every displayed number is wire-exact, and the headline fields all appear", () => {
        const html = renderScenarioCards(whatif);
        const wire = new Set(wireNumbers(raw("whatif_courses.json")));
        for (const shown of wireNumbers(html)) {
            expect(wire.has(shown), `${shown} not in the recorded response`).toBe(true);
        }
        for (const outcome of whatif.scenarios) {
            const r = outcome.report!;
            expect(html).toContain(prob(r.success_score));
            expect(html).toContain(prob(r.outcomes["RecL"]["approved"]));
            expect(html).toContain(prob(r.outcomes["Satisfaction"]["high"]));
            for (const p of Object.values(r.outcomes["G"])) {
                expect(html).toContain(prob(p));
            }
        }
    });

    it("a scenario duplicating the bare profile renders like the baseline plan", () => {
        const duplicate = whatif.scenarios.find(
            (s) => Object.keys(s.scenario).length === 0,
        );
        expect(duplicate).toBeDefined();
        // same profile queried through /api/plan directly
        const baseline = fixture<PlanReport>("plan_profile_b.json");
        expect(renderPlanBody(duplicate!.report!)).toBe(renderPlanBody(baseline));
    });

    it("empty profile + empty scenario equals the unconditional plan", () => {
        const viaWhatif = fixture<WhatifResponse>("whatif_empty_profile.json");
        const viaPlan = fixture<PlanReport>("plan_empty.json");
        expect(renderPlanBody(viaWhatif.scenarios[0].report!)).toBe(
            renderPlanBody(viaPlan),
        );
    });

    it("unconditional plan marginals equal the infer endpoint's marginals", () => {
        const plan = fixture<PlanReport>("plan_empty.json");
        const infer = fixture<Record<string, Record<string, number>>>("infer_recl.json");
        expect(plan.outcomes["RecL"]).toEqual(infer["RecL"]);
    });

    it("impossible scenarios get a dedicated card state", () => {
        const html = renderScenarioCard({
            scenario: { NumC: "many" },
            impossible: true,
        });
        expect(html).toContain("impossible scenario");
        expect(html).toContain('class="card impossible"');
    });
});

describe("wire-format restoration", () => {
    it("prob() reproduces every recorded 6-decimal literal after JSON.parse", () => {
        for (const name of [
            "infer_ag.json",
            "impact_recl.json",
            "plan_empty.json",
            "plan_strong.json",
            "whatif_courses.json",
        ]) {
            const text = raw(name);
            const literals = wireNumbers(text);
            expect(literals.length).toBeGreaterThan(0);
            for (const literal of literals) {
                expect(prob(Number(literal))).toBe(literal);
            }
        }
    });
});
