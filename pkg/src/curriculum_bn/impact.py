"""Impact levels: how strongly each variable moves a target outcome state.

The impact of an influencer on a target state, given evidence, is the largest
(by absolute value, sign preserved) log-odds swing of the target obtained by
conditioning the influencer on one of its states:

    swing(x) = logit P(target | e, influencer=x) - logit P(target | e)

A ranking over all eligible influencers is the toolkit's analogue of a
per-variable effectiveness bar chart. A conditional mutual information column
(nats) is included as a swing-independent cross-check.
"""

from dataclasses import dataclass
import math

import networkx as nx

from .errors import DegenerateBaselineError, ImpossibleEvidenceError, UsageError
from .inference import posterior_marginal


@dataclass(frozen=True)
class TargetSpec:
    variable: str
    state: str


@dataclass(frozen=True)
class ImpactEntry:
    influencer: str
    level: float
    achieving_state: str
    magnitude: float
    mutual_information: float


@dataclass(frozen=True)
class ImpactReport:
    target: TargetSpec
    baseline: float
    entries: tuple

    def as_jsonable(self):
        return {
            "target": {"variable": self.target.variable, "state": self.target.state},
            "baseline": self.baseline,
            "entries": [
                {
                    "influencer": e.influencer,
                    "level": e.level,
                    "achieving_state": e.achieving_state,
                    "magnitude": e.magnitude,
                    "mutual_information": e.mutual_information,
                }
                for e in self.entries
            ],
        }


def _logit(p):
    return math.log(p / (1.0 - p))


def _check_target(net, target):
    net.variable(target.variable).state_index(target.state)


def impact_level(net, target, influencer, evidence):
    """(signed level, achieving state) for one influencer.

    States of the influencer that are impossible under the evidence are
    skipped; if every state is impossible that is an evidence error.
    """
    _check_target(net, target)
    net.check_evidence(evidence)
    if influencer == target.variable:
        raise UsageError("influencer equals the target variable")
    if influencer in evidence or target.variable in evidence:
        raise UsageError("influencer/target must not be bound in evidence")
    baseline = posterior_marginal(net, evidence, target.variable)[target.state]
    if baseline <= 0.0 or baseline >= 1.0:
        raise DegenerateBaselineError(
            f"baseline P({target.variable}={target.state}) is {baseline:g}"
        )
    base_logit = _logit(baseline)
    infl = net.variable(influencer)
    infl_post = posterior_marginal(net, evidence, influencer)
    best = None
    for x, px in zip(infl.states, infl_post.probabilities):
        if px <= 0.0:
            continue
        extended = dict(evidence)
        extended[influencer] = x
        p = posterior_marginal(net, extended, target.variable)[target.state]
        if p <= 0.0:
            swing = -math.inf
        elif p >= 1.0:
            swing = math.inf
        else:
            swing = _logit(p) - base_logit
        if best is None or abs(swing) > abs(best[0]):
            best = (swing, x)
    if best is None:
        raise ImpossibleEvidenceError(
            f"every state of {influencer!r} is impossible under the evidence"
        )
    return best


def conditional_mutual_information(net, target, influencer, evidence):
    """I(influencer; target variable | evidence) in nats."""
    infl_post = posterior_marginal(net, evidence, influencer)
    target_post = posterior_marginal(net, evidence, target.variable)
    total = 0.0
    for x, px in zip(net.variable(influencer).states, infl_post.probabilities):
        if px <= 0.0:
            continue
        extended = dict(evidence)
        extended[influencer] = x
        cond = posterior_marginal(net, extended, target.variable)
        for ps_given_x, ps in zip(cond.probabilities, target_post.probabilities):
            joint = px * ps_given_x
            if joint > 0.0 and ps > 0.0:
                total += joint * math.log(ps_given_x / ps)
    return max(total, 0.0)


def impact_ranking(net, target, evidence):
    """One entry per non-target, non-evidence variable, |level| descending.

    Ties keep variable declaration order (the sort is stable).
    """
    _check_target(net, target)
    net.check_evidence(evidence)
    if target.variable in evidence:
        raise UsageError("target variable must not be bound in evidence")
    baseline = posterior_marginal(net, evidence, target.variable)[target.state]
    if baseline <= 0.0 or baseline >= 1.0:
        raise DegenerateBaselineError(
            f"baseline P({target.variable}={target.state}) is {baseline:g}"
        )
    entries = []
    for v in net.variables:
        if v.name == target.variable or v.name in evidence:
            continue
        level, state = impact_level(net, target, v.name, evidence)
        mi = conditional_mutual_information(net, target, v.name, evidence)
        entries.append(ImpactEntry(v.name, level, state, abs(level), mi))
    entries.sort(key=lambda e: -e.magnitude)
    return ImpactReport(target, baseline, tuple(entries))


def d_separated(structure, a, b, given):
    """Graphical conditional-independence test on the DAG."""
    if a == b:
        raise UsageError("d-separation needs two distinct variables")
    for name in [a, b, *given]:
        structure.variable(name)
    if a in given or b in given:
        raise UsageError("endpoints must not be in the conditioning set")
    graph = nx.DiGraph()
    graph.add_nodes_from(structure.variable_names)
    graph.add_edges_from(structure.edges)
    return nx.is_d_separator(graph, {a}, {b}, set(given))
