"""The bundled 9-variable curriculum advisory model and plan evaluation.

Variables: AG (last-term average grade), S (student state), A (activity),
NumC (course load), RBG (research background), Pub (publications) feed the
current-term grade G; RBG also drives Pub; G and Pub drive the recommendation
letter RecL; G and RecL drive Satisfaction.

The bundled CPT values are illustrative: they were fitted once to a scripted
synthetic cohort (shipped alongside the model) and frozen. Only the AG prior
row is a published reference value. See models/curriculum.default.notes.md.
"""

from dataclasses import dataclass
from importlib import resources

from .errors import ImpossibleEvidenceError, UnknownSymbolError, UsageError
from .inference import evidence_likelihood, posterior_marginal
from .model_io import load_model

PROFILE_VARIABLES = ("AG", "S", "A", "NumC", "RBG", "Pub")
OUTCOME_VARIABLES = ("G", "RecL", "Satisfaction")
SCENARIO_VARIABLES = ("NumC", "A")

DEFAULT_WEIGHTS = {"G": 1.0 / 3.0, "RecL": 1.0 / 3.0, "Satisfaction": 1.0 / 3.0}

_MODEL_RESOURCE = "curriculum.default.json"
_COHORT_RESOURCE = "synthetic_cohort.csv"


def default_model_document():
    return (resources.files("curriculum_bn") / "models" / _MODEL_RESOURCE).read_text(
        encoding="utf-8"
    )


def synthetic_cohort_csv():
    return (resources.files("curriculum_bn") / "data" / _COHORT_RESOURCE).read_text(
        encoding="utf-8"
    )


def build_default_model():
    """Load the bundled curriculum network (validated at load time)."""
    return load_model(default_model_document())


def check_profile(net, profile):
    """A profile is Evidence restricted to the six background variables."""
    for name in profile:
        if name in OUTCOME_VARIABLES:
            raise UsageError(f"{name!r} is an outcome and cannot be in a profile")
        if name not in PROFILE_VARIABLES:
            raise UnknownSymbolError(f"{name!r} is not a profile variable")
    net.check_evidence(profile)


@dataclass(frozen=True)
class PlanReport:
    profile: dict
    outcomes: dict  # outcome variable -> Distribution
    success_score: float

    def as_jsonable(self):
        return {
            "profile": dict(self.profile),
            "outcomes": {
                name: dist.as_mapping() for name, dist in self.outcomes.items()
            },
            "success_score": self.success_score,
        }


def _check_weights(weights):
    if set(weights) != set(OUTCOME_VARIABLES):
        raise UsageError(f"weights must cover exactly {OUTCOME_VARIABLES}")
    if any(w < 0 for w in weights.values()):
        raise UsageError("weights must be non-negative")
    if abs(sum(weights.values()) - 1.0) > 1e-9:
        raise UsageError("weights must sum to 1")


def evaluate_plan(net, profile, weights=None):
    """Posterior outcome distributions for a profile plus a success score.

    score = w_G * P(G=A) + w_RecL * P(RecL=approved) + w_Sat * P(Satisfaction=high)
    """
    weights = dict(DEFAULT_WEIGHTS if weights is None else weights)
    _check_weights(weights)
    check_profile(net, profile)
    if evidence_likelihood(net, profile) <= 0.0:
        raise ImpossibleEvidenceError("profile has probability zero under the model")
    outcomes = {
        name: posterior_marginal(net, profile, name) for name in OUTCOME_VARIABLES
    }
    score = (
        weights["G"] * outcomes["G"]["A"]
        + weights["RecL"] * outcomes["RecL"]["approved"]
        + weights["Satisfaction"] * outcomes["Satisfaction"]["high"]
    )
    return PlanReport(dict(profile), outcomes, score)


@dataclass(frozen=True)
class ScenarioOutcome:
    scenario: dict
    report: object  # PlanReport, or None when the scenario is impossible
    impossible: bool = False

    def as_jsonable(self):
        body = {"scenario": dict(self.scenario)}
        if self.impossible:
            body["impossible"] = True
        else:
            body["report"] = self.report.as_jsonable()
        return body


def compare_plans(net, profile, scenario_overrides, weights=None):
    """Evaluate what-if overrides of the decision variables (NumC, A).

    Each override replaces/extends the profile's bindings for NumC and A
    only. Results are sorted by success score descending; impossible
    scenarios are reported per-scenario rather than failing the batch.
    Ties keep scenario input order.
    """
    check_profile(net, profile)
    results = []
    for position, override in enumerate(scenario_overrides):
        for name in override:
            if name not in SCENARIO_VARIABLES:
                raise UsageError(
                    f"scenario overrides may only bind {SCENARIO_VARIABLES}, got {name!r}"
                )
        merged = dict(profile)
        merged.update(override)
        try:
            report = evaluate_plan(net, merged, weights=weights)
        except ImpossibleEvidenceError:
            results.append((position, ScenarioOutcome(dict(override), None, True)))
            continue
        results.append((position, ScenarioOutcome(dict(override), report)))
    results.sort(
        key=lambda item: (
            -(item[1].report.success_score if not item[1].impossible else -1.0),
            item[0],
        )
    )
    return [outcome for _, outcome in results]
