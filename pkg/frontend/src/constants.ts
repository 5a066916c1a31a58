/** Fixed vocabulary of the curriculum advisory model. */

export const PROFILE_VARIABLES = ["AG", "S", "A", "NumC", "RBG", "Pub"] as const;
export const OUTCOME_VARIABLES = ["G", "RecL", "Satisfaction"] as const;
export const SCENARIO_VARIABLES = ["NumC", "A"] as const;

/** selectable impact targets; the first is the default */
export const IMPACT_TARGETS = [
    { variable: "RecL", state: "approved" },
    { variable: "Satisfaction", state: "high" },
    { variable: "G", state: "A" },
] as const;

export const UNKNOWN = "unknown";
