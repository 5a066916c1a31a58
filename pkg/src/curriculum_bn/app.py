"""Request handlers shared by the CLI and the HTTP service.

Both front ends call the same handler for the same operation and render the
result with the same fixed-precision JSON emitter, which is what guarantees
CLI/service parity byte for byte.
"""

from .curriculum import compare_plans, evaluate_plan
from .errors import ParseError, UsageError
from .impact import TargetSpec, impact_ranking
from .inference import (
    evidence_likelihood,
    joint_probability,
    map_assignment,
    posterior_marginal,
)
from .learning import FitReport, RecordSet, forward_sample, mle_fit
from .model_io import model_to_dict, save_model
from .network import validate_network


def parse_bindings(text):
    """Parse "Var=state,Var2=state2" into a mapping; empty/blank -> {}."""
    bindings = {}
    if text is None or text.strip() == "":
        return bindings
    for piece in text.split(","):
        if "=" not in piece:
            raise ParseError(f"expected Var=state, got {piece!r}")
        name, state = piece.split("=", 1)
        name, state = name.strip(), state.strip()
        if not name or not state:
            raise ParseError(f"expected Var=state, got {piece!r}")
        if name in bindings:
            raise ParseError(f"variable {name!r} bound twice")
        bindings[name] = state
    return bindings


def parse_target(text):
    pair = parse_bindings(text)
    if len(pair) != 1:
        raise ParseError("target must be a single Var=state pair")
    [(variable, state)] = pair.items()
    return TargetSpec(variable, state)


def check_str_mapping(obj, what):
    if not isinstance(obj, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in obj.items()
    ):
        raise ParseError(f"{what} must be an object of string-to-string bindings")
    return obj


def handle_validate(net_or_violations):
    violations = validate_network(net_or_violations)
    return {"valid": not violations, "violations": [str(v) for v in violations]}


def handle_infer(net, evidence, query):
    dist = posterior_marginal(net, evidence, query)
    return {query: dist.as_mapping()}


def handle_map(net, evidence, query_vars):
    result = map_assignment(net, evidence, set(query_vars))
    ordered = {v.name: result.assignment[v.name] for v in net.variables if v.name in result.assignment}
    return {"assignment": ordered, "probability": result.probability}


def handle_joint(net, assignment):
    return {"probability": joint_probability(net, assignment)}


def handle_likelihood(net, evidence):
    return {"probability": evidence_likelihood(net, evidence)}


def handle_impact(net, target, evidence):
    return impact_ranking(net, target, evidence).as_jsonable()


def handle_plan(net, profile, weights=None):
    return evaluate_plan(net, profile, weights=weights).as_jsonable()


def handle_whatif(net, profile, scenarios, weights=None):
    outcomes = compare_plans(net, profile, scenarios, weights=weights)
    return {"scenarios": [o.as_jsonable() for o in outcomes]}


def handle_learn(structure_net, data_csv, smoothing):
    report = FitReport()
    data = RecordSet.from_csv(data_csv)
    fitted = mle_fit(structure_net.structure, data, smoothing=smoothing, report=report)
    return model_to_dict(fitted), report


def handle_sample(net, n, seed):
    records = forward_sample(net, n, seed)
    return records


def parse_weights(text):
    if text is None or text.strip() == "":
        return None
    raw = parse_bindings(text)
    try:
        return {k: float(v) for k, v in raw.items()}
    except ValueError:
        raise ParseError("weights must be numbers, e.g. G=0.5,RecL=0.25,Satisfaction=0.25")


def model_document(net):
    return save_model(net)
