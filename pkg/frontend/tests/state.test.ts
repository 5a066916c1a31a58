import { describe, expect, it } from "vitest";

import { decodeState, defaultState, encodeState } from "../src/state";

describe("URL state", () => {
    it("defaults to empty profile, one empty scenario, RecL=approved target", () => {
        const state = defaultState();
        expect(state.profile).toEqual({});
        expect(state.scenarios).toEqual([{}]);
        expect(state.target).toEqual({ variable: "RecL", state: "approved" });
    });

    it("round-trips through the query string", () => {
        const state = {
            profile: { AG: "B", RBG: "yes" },
            scenarios: [{ NumC: "few" }, { NumC: "many", A: "high" }, {}],
            target: { variable: "Satisfaction", state: "high" },
        };
        expect(decodeState(encodeState(state))).toEqual(state);
    });

    it("ignores unknown variables and unknown targets", () => {
        const state = decodeState("AG=B&Bogus=x&target=Nope=whatever");
        expect(state.profile).toEqual({ AG: "B" });
        expect(state.target).toEqual({ variable: "RecL", state: "approved" });
    });

    it("scenario overrides outside NumC/A are dropped on decode", () => {
        const state = decodeState("scenarios=NumC%3Dfew%2CG%3DA");
        expect(state.scenarios).toEqual([{ NumC: "few" }]);
    });
});
