/** Shapes of the curriculum service's JSON responses. */

export type Bindings = Record<string, string>;

export interface ModelVariable {
    name: string;
    states: string[];
}

export interface ModelDocument {
    name?: string;
    variables: ModelVariable[];
}

export type Marginal = Record<string, number>;

export interface InferResponse {
    [query: string]: Marginal;
}

export interface ImpactEntry {
    influencer: string;
    /** signed log-odds swing; "Infinity"/"-Infinity" when the swing saturates */
    level: number | string;
    achieving_state: string;
    magnitude: number | string;
    mutual_information: number;
}

export interface ImpactReport {
    target: { variable: string; state: string };
    baseline: number;
    entries: ImpactEntry[];
}

export interface PlanReport {
    profile: Bindings;
    outcomes: Record<string, Marginal>;
    success_score: number;
}

export interface ScenarioOutcome {
    scenario: Bindings;
    report?: PlanReport;
    impossible?: boolean;
}

export interface WhatifResponse {
    scenarios: ScenarioOutcome[];
}

export interface ServiceError {
    code: string;
    message: string;
    locus?: string;
}
