/** Pure HTML renderers. Every probability shown comes straight from a
 * service response field via `prob`; these functions add markup, not math.
 */

import { IMPACT_TARGETS, PROFILE_VARIABLES, UNKNOWN } from "./constants.js";
import { barWidthPct, escapeHtml, prob } from "./format.js";
import type {
    Bindings,
    ImpactReport,
    ModelDocument,
    PlanReport,
    ScenarioOutcome,
    WhatifResponse,
} from "./types.js";

export function renderProfileForm(model: ModelDocument, profile: Bindings): string {
    const profileVars = model.variables.filter((v) =>
        (PROFILE_VARIABLES as readonly string[]).includes(v.name),
    );
    return profileVars
        .map((variable) => {
            const options = [UNKNOWN, ...variable.states]
                .map((state) => {
                    const bound = profile[variable.name] ?? UNKNOWN;
                    const sel = state === bound ? " selected" : "";
                    return `<option value="${escapeHtml(state)}"${sel}>${escapeHtml(state)}</option>`;
                })
                .join("");
            return `
              <label class="field">
                <span>${escapeHtml(variable.name)}</span>
                <select data-var="${escapeHtml(variable.name)}">${options}</select>
              </label>`;
        })
        .join("");
}

export function renderTargetPicker(current: { variable: string; state: string }): string {
    return IMPACT_TARGETS.map((t) => {
        const value = `${t.variable}=${t.state}`;
        const sel = t.variable === current.variable && t.state === current.state ? " selected" : "";
        return `<option value="${value}"${sel}>${value}</option>`;
    }).join("");
}

export function renderImpactBars(report: ImpactReport): string {
    const magnitudes = report.entries.map((e) =>
        typeof e.magnitude === "number" ? e.magnitude : 0,
    );
    const scale = Math.max(...magnitudes, 1e-12);
    const bars = report.entries
        .map((e) => {
            const negative = typeof e.level === "string" ? e.level.startsWith("-") : e.level < 0;
            const width = barWidthPct(e.magnitude, scale);
            return `
              <div class="impact-row" data-influencer="${escapeHtml(e.influencer)}">
                <span class="impact-name">${escapeHtml(e.influencer)}</span>
                <span class="impact-bar ${negative ? "neg" : "pos"}" style="width:${width}%"></span>
                <span class="impact-level">${prob(e.level)}</span>
                <span class="impact-state">at ${escapeHtml(e.achieving_state)}</span>
              </div>`;
        })
        .join("");
    return `
      <p class="baseline">baseline P(${escapeHtml(report.target.variable)}=${escapeHtml(
          report.target.state,
      )}) = <b>${prob(report.baseline)}</b></p>
      ${bars}`;
}

function scenarioLabel(scenario: Bindings): string {
    const parts = Object.entries(scenario).map(([k, v]) => `${k}=${v}`);
    return parts.length ? parts.join(", ") : "as entered";
}

export function renderPlanBody(report: PlanReport): string {
    const grades = Object.entries(report.outcomes["G"] ?? {})
        .map(([state, p]) => `<span class="grade">G=${escapeHtml(state)}: ${prob(p)}</span>`)
        .join(" ");
    return `
      <div class="plan-grades">${grades}</div>
      <div class="plan-headline">
        <span>P(RecL=approved) <b>${prob(report.outcomes["RecL"]?.["approved"] ?? 0)}</b></span>
        <span>P(Satisfaction=high) <b>${prob(report.outcomes["Satisfaction"]?.["high"] ?? 0)}</b></span>
        <span>success score <b>${prob(report.success_score)}</b></span>
      </div>`;
}

export function renderScenarioCard(outcome: ScenarioOutcome): string {
    const label = escapeHtml(scenarioLabel(outcome.scenario));
    if (outcome.impossible || !outcome.report) {
        return `
          <article class="card impossible" data-scenario="${label}">
            <h3>${label}</h3>
            <p class="impossible-note">impossible scenario</p>
          </article>`;
    }
    return `
      <article class="card" data-scenario="${label}">
        <h3>${label}</h3>
        ${renderPlanBody(outcome.report)}
      </article>`;
}

export function renderScenarioCards(response: WhatifResponse): string {
    return response.scenarios.map(renderScenarioCard).join("");
}

export function renderErrorPanel(message: string): string {
    return `
      <div class="error-panel">
        <p>${escapeHtml(message)}</p>
        <button type="button" data-action="retry">retry</button>
      </div>`;
}
