import { ApiClient, ApiError, RevisionGate } from "./api.js";
import { SCENARIO_VARIABLES, UNKNOWN } from "./constants.js";
import {
    renderErrorPanel,
    renderImpactBars,
    renderProfileForm,
    renderScenarioCards,
    renderTargetPicker,
} from "./render.js";
import { decodeState, encodeState, type UiState } from "./state.js";
import type { Bindings, ModelDocument } from "./types.js";

const api = new ApiClient();
const gate = new RevisionGate();

let model: ModelDocument | null = null;
let state: UiState = decodeState(window.location.search);

function el(id: string): HTMLElement {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing #${id}`);
    return node;
}

function syncUrl(): void {
    const query = encodeState(state);
    window.history.replaceState(null, "", `${window.location.pathname}?${query}`);
}

function readProfileForm(): Bindings {
    const profile: Bindings = {};
    el("profile-form")
        .querySelectorAll<HTMLSelectElement>("select[data-var]")
        .forEach((select) => {
            if (select.value !== UNKNOWN) {
                profile[select.dataset.var as string] = select.value;
            }
        });
    return profile;
}

function scenarioEditor(): string {
    const stateOptions = (name: string): string => {
        const variable = model?.variables.find((v) => v.name === name);
        return [UNKNOWN, ...(variable?.states ?? [])]
            .map((s) => `<option value="${s}">${s}</option>`)
            .join("");
    };
    return state.scenarios
        .map(
            (scenario, index) => `
          <fieldset class="scenario" data-index="${index}">
            ${SCENARIO_VARIABLES.map(
                (name) => `
              <label>${name}
                <select data-scenario-var="${name}" data-index="${index}">
                  ${stateOptions(name)}
                </select>
              </label>`,
            ).join("")}
            <button type="button" data-action="drop" data-index="${index}">remove</button>
          </fieldset>`,
        )
        .join("");
}

function applyScenarioSelections(): void {
    el("scenario-list")
        .querySelectorAll<HTMLSelectElement>("select[data-scenario-var]")
        .forEach((select) => {
            const index = Number(select.dataset.index);
            const name = select.dataset.scenarioVar as string;
            const bound = state.scenarios[index]?.[name];
            select.value = bound ?? UNKNOWN;
        });
}

async function refresh(): Promise<void> {
    syncUrl();
    const revision = gate.next();
    el("status").textContent = "querying…";
    try {
        const [whatif, impact] = await Promise.all([
            api.whatif(state.profile, state.scenarios),
            api.impact(state.target, state.profile),
        ]);
        if (!gate.isCurrent(revision)) return; // stale; newer inputs in flight
        el("cards").innerHTML = renderScenarioCards(whatif);
        el("impact").innerHTML = renderImpactBars(impact);
        el("status").textContent = "";
    } catch (err) {
        if (!gate.isCurrent(revision)) return;
        const message = err instanceof ApiError ? err.message : "service unreachable";
        el("cards").innerHTML = renderErrorPanel(message);
        el("status").textContent = "";
    }
}

function wire(): void {
    el("profile-form").addEventListener("change", () => {
        state.profile = readProfileForm();
        void refresh();
    });
    el("target-picker").addEventListener("change", (event) => {
        const [variable, stateName] = (event.target as HTMLSelectElement).value.split("=", 2);
        state.target = { variable, state: stateName };
        void refresh();
    });
    el("scenario-list").addEventListener("change", (event) => {
        const select = event.target as HTMLSelectElement;
        const index = Number(select.dataset.index);
        const name = select.dataset.scenarioVar;
        if (!name || Number.isNaN(index)) return;
        const scenario = { ...state.scenarios[index] };
        if (select.value === UNKNOWN) delete scenario[name];
        else scenario[name] = select.value;
        state.scenarios[index] = scenario;
        void refresh();
    });
    el("scenario-list").addEventListener("click", (event) => {
        const button = (event.target as HTMLElement).closest("button[data-action=drop]");
        if (!button) return;
        state.scenarios.splice(Number((button as HTMLElement).dataset.index), 1);
        if (state.scenarios.length === 0) state.scenarios = [{}];
        el("scenario-list").innerHTML = scenarioEditor();
        applyScenarioSelections();
        void refresh();
    });
    el("add-scenario").addEventListener("click", () => {
        state.scenarios.push({});
        el("scenario-list").innerHTML = scenarioEditor();
        applyScenarioSelections();
        void refresh();
    });
    el("cards").addEventListener("click", (event) => {
        if ((event.target as HTMLElement).closest("button[data-action=retry]")) {
            void boot();
        }
    });
}

async function boot(): Promise<void> {
    try {
        model = await api.model();
    } catch {
        el("cards").innerHTML = renderErrorPanel("could not load the model");
        return;
    }
    el("profile-form").innerHTML = renderProfileForm(model, state.profile);
    el("target-picker").innerHTML = renderTargetPicker(state.target);
    el("scenario-list").innerHTML = scenarioEditor();
    applyScenarioSelections();
    await refresh();
}

wire();
void boot();
