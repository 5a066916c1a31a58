/** Scenario state lives in the URL query string so sessions are shareable. */

import { IMPACT_TARGETS, PROFILE_VARIABLES, SCENARIO_VARIABLES } from "./constants.js";
import type { Bindings } from "./types.js";

export interface UiState {
    profile: Bindings;
    scenarios: Bindings[];
    target: { variable: string; state: string };
}

export function defaultState(): UiState {
    return { profile: {}, scenarios: [{}], target: { ...IMPACT_TARGETS[0] } };
}

export function encodeState(state: UiState): string {
    const params = new URLSearchParams();
    for (const name of PROFILE_VARIABLES) {
        if (state.profile[name]) params.set(name, state.profile[name]);
    }
    const scenarios = state.scenarios
        .map((s) =>
            (SCENARIO_VARIABLES as readonly string[])
                .filter((v) => s[v])
                .map((v) => `${v}=${s[v]}`)
                .join(","),
        )
        .join(";");
    if (scenarios !== "") params.set("scenarios", scenarios);
    params.set("target", `${state.target.variable}=${state.target.state}`);
    return params.toString();
}

export function decodeState(query: string): UiState {
    const params = new URLSearchParams(query);
    const state = defaultState();
    for (const name of PROFILE_VARIABLES) {
        const value = params.get(name);
        if (value) state.profile[name] = value;
    }
    const scenarios = params.get("scenarios");
    if (scenarios !== null) {
        state.scenarios = scenarios.split(";").map((chunk) => {
            const bindings: Bindings = {};
            for (const piece of chunk.split(",")) {
                const [name, value] = piece.split("=", 2);
                if (
                    value &&
                    (SCENARIO_VARIABLES as readonly string[]).includes(name)
                ) {
                    bindings[name] = value;
                }
            }
            return bindings;
        });
        if (state.scenarios.length === 0) state.scenarios = [{}];
    }
    const target = params.get("target");
    if (target) {
        const [variable, stateName] = target.split("=", 2);
        const known = IMPACT_TARGETS.find(
            (t) => t.variable === variable && t.state === stateName,
        );
        if (known) state.target = { ...known };
    }
    return state;
}
