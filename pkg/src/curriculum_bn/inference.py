"""Exact inference over discrete Bayesian networks.

Production path: variable elimination with a min-degree elimination order
(ties broken by declaration order). A brute-force enumeration oracle
(`enumerate_joint` / `JointTable`) computes the same quantities independently
and is used for self-verification; it never shares code with the VE path.
"""

from dataclasses import dataclass
import itertools
import math

import numpy as np

from .errors import (
    ImpossibleEvidenceError,
    SizeLimitError,
    UsageError,
)
from .network import topological_order

DEFAULT_CELL_CAP = 10**7
MAP_QUERY_CAP = 10**5

# scores this close (relatively) count as tied; the earlier candidate in
# tie-break order wins, so 1-ulp elimination noise cannot flip an argmax
ARGMAX_REL_TOL = 1e-9


def _beats(score, best):
    return score > best and not math.isclose(score, best, rel_tol=ARGMAX_REL_TOL)


@dataclass(frozen=True)
class Distribution:
    variable: str
    states: tuple
    probabilities: tuple

    def as_mapping(self):
        return dict(zip(self.states, self.probabilities))

    def __getitem__(self, state):
        return self.probabilities[self.states.index(state)]


@dataclass(frozen=True)
class MapResult:
    assignment: dict
    probability: float  # normalized posterior of the assignment given evidence


# ---------------------------------------------------------------------------
# chain rule and enumeration oracle


def joint_probability(net, assignment):
    """Chain-rule product of one CPT entry per variable under a full assignment."""
    net.check_assignment(assignment)
    product = 1.0
    for v in net.variables:
        cpt = net.cpts[v.name]
        row = cpt.rows[net.parent_config_index(v.name, assignment)]
        product *= row[v.state_index(assignment[v.name])]
    return product


class JointTable:
    """Full joint over all variables, mixed-radix indexed in topological order.

    The cells are filled one `joint_probability` call at a time, which keeps
    this an independent oracle for the variable-elimination path. Query
    helpers reduce the table with plain numpy masking/summing.
    """

    def __init__(self, order, states, array):
        self.order = list(order)
        self.states = {v: tuple(s) for v, s in states.items()}
        self.array = array  # ndarray, one axis per variable in `order`

    @property
    def cells(self):
        return self.array.size

    def total(self):
        return float(math.fsum(self.array.ravel().tolist()))

    def _mask_sum(self, evidence):
        view = self.array
        for axis, name in enumerate(self.order):
            if name in evidence:
                idx = self.states[name].index(evidence[name])
                view = np.take(view, [idx], axis=axis)
        return view

    def likelihood(self, evidence):
        return float(self._mask_sum(evidence).sum())

    def marginal(self, evidence, query):
        axis = self.order.index(query)
        view = self._mask_sum(evidence)
        other = tuple(a for a in range(view.ndim) if a != axis)
        raw = view.sum(axis=other)
        z = raw.sum()
        if z <= 0.0:
            raise ImpossibleEvidenceError("evidence has probability zero")
        return Distribution(query, self.states[query], tuple(float(x) for x in raw / z))

    def map_scores(self, evidence, query_vars):
        """P(q, e) for every assignment of query_vars, in declaration order."""
        qvars = [v for v in self.order if v in query_vars]
        scores = {}
        for combo in itertools.product(*(self.states[q] for q in qvars)):
            ext = dict(evidence)
            ext.update(zip(qvars, combo))
            scores[combo] = self.likelihood(ext)
        return qvars, scores


def enumerate_joint(net, cell_cap=DEFAULT_CELL_CAP):
    """Brute-force joint table; every cell is a `joint_probability` call."""
    order = topological_order(net.structure)
    states = {v.name: v.states for v in net.variables}
    shape = tuple(len(states[name]) for name in order)
    cells = 1
    for n in shape:
        cells *= n
    if cells > cell_cap:
        raise SizeLimitError(f"joint table would need {cells} cells (cap {cell_cap})")
    array = np.empty(shape, dtype=float)
    for idx in itertools.product(*(range(n) for n in shape)):
        assignment = {name: states[name][i] for name, i in zip(order, idx)}
        array[idx] = joint_probability(net, assignment)
    return JointTable(order, states, array)


# ---------------------------------------------------------------------------
# variable elimination


class _Factor:
    __slots__ = ("vars", "array")

    def __init__(self, vars_, array):
        self.vars = tuple(vars_)
        self.array = array


def _cpt_factor(net, name, evidence):
    v = net.variable(name)
    cpt = net.cpts[name]
    shape = tuple(len(net.variable(p).states) for p in cpt.parents) + (len(v.states),)
    array = np.asarray(cpt.rows, dtype=float).reshape(shape)
    vars_ = list(cpt.parents) + [name]
    # slice out observed axes
    keep_vars, index = [], []
    for var in vars_:
        if var in evidence:
            index.append(net.variable(var).state_index(evidence[var]))
        else:
            keep_vars.append(var)
            index.append(slice(None))
    return _Factor(keep_vars, array[tuple(index)])


def _multiply(factors, out_vars):
    result = np.ones(())
    result_vars = ()
    for f in factors:
        # align both operands on the union of their axes
        union = list(result_vars) + [v for v in f.vars if v not in result_vars]
        a = _expand(result, result_vars, union)
        b = _expand(f.array, f.vars, union)
        result = a * b
        result_vars = tuple(union)
    if out_vars is not None:
        want = [v for v in out_vars if v in result_vars]
        perm = [result_vars.index(v) for v in want]
        result = np.transpose(result, perm) if perm else result
        result_vars = tuple(want)
    return _Factor(result_vars, result)


def _expand(array, vars_, union):
    """Reshape/transpose `array` (axes = vars_) to broadcast over `union`."""
    if not vars_:
        return array.reshape((1,) * len(union))
    order = sorted(range(len(vars_)), key=lambda i: union.index(vars_[i]))
    arr = np.transpose(array, order)
    shape = [arr.shape[order.index(vars_.index(u))] if u in vars_ else 1 for u in union]
    return arr.reshape(shape)


def _min_degree_order(net, vars_to_eliminate, factor_vars):
    """Min-degree over the interaction graph; ties by declaration order."""
    neighbors = {v: set() for v in vars_to_eliminate}
    cliques = [set(fv) for fv in factor_vars]
    for clique in cliques:
        for v in clique:
            if v in neighbors:
                neighbors[v].update(x for x in clique if x != v)
    declaration = {v.name: i for i, v in enumerate(net.variables)}
    order = []
    remaining = set(vars_to_eliminate)
    while remaining:
        pick = min(
            remaining,
            key=lambda v: (len(neighbors[v] & remaining), declaration[v]),
        )
        order.append(pick)
        remaining.discard(pick)
        nbrs = neighbors[pick] & remaining
        for a in nbrs:
            neighbors[a].update(nbrs - {a})
            neighbors[a].discard(pick)
    return order


def _eliminate(net, evidence, keep):
    """Sum out all variables not in `keep` and not observed; returns a factor
    over `keep` whose entries are unnormalized P(keep assignment, evidence)."""
    factors = [_cpt_factor(net, v.name, evidence) for v in net.variables]
    hidden = [
        v.name
        for v in net.variables
        if v.name not in evidence and v.name not in keep
    ]
    for target in _min_degree_order(net, hidden, [f.vars for f in factors]):
        touching = [f for f in factors if target in f.vars]
        rest = [f for f in factors if target not in f.vars]
        product = _multiply(touching, None)
        axis = product.vars.index(target)
        summed = product.array.sum(axis=axis)
        vars_ = tuple(v for v in product.vars if v != target)
        factors = rest + [_Factor(vars_, summed)]
    return _multiply(factors, keep)


def evidence_likelihood(net, evidence):
    """P(evidence) by summing out every unobserved variable. Empty evidence -> 1."""
    net.check_evidence(evidence)
    result = _eliminate(net, evidence, ())
    return float(result.array.reshape(()))


def posterior_marginal(net, evidence, query):
    """P(query | evidence) as a Distribution over the query variable's states."""
    net.check_evidence(evidence)
    var = net.variable(query)
    if query in evidence:
        one_hot = tuple(1.0 if s == evidence[query] else 0.0 for s in var.states)
        return Distribution(query, var.states, one_hot)
    factor = _eliminate(net, evidence, (query,))
    raw = factor.array
    z = float(raw.sum())
    if z <= 0.0:
        raise ImpossibleEvidenceError("evidence has probability zero")
    return Distribution(query, var.states, tuple(float(x) for x in raw / z))


def _query_assignments(net, query_vars):
    """Query assignments in tie-break order: variables topologically, states
    in declaration order; first-encountered maximum wins."""
    order = [v for v in topological_order(net.structure) if v in query_vars]
    state_lists = [net.variable(v).states for v in order]
    count = 1
    for s in state_lists:
        count *= len(s)
    if count > MAP_QUERY_CAP:
        raise SizeLimitError(f"{count} query assignments exceed cap {MAP_QUERY_CAP}")
    for combo in itertools.product(*state_lists):
        yield dict(zip(order, combo))


def _check_map_args(net, evidence, query_vars):
    net.check_evidence(evidence)
    if not query_vars:
        raise UsageError("query variable set is empty")
    for q in query_vars:
        net.variable(q)
        if q in evidence:
            raise UsageError(f"query variable {q!r} is bound in evidence")


def map_assignment(net, evidence, query_vars):
    """Most probable joint assignment of query_vars given evidence.

    Maximizes the unnormalized P(assignment, evidence); the reported
    probability is the normalized posterior of the winner.
    """
    _check_map_args(net, evidence, query_vars)
    z = evidence_likelihood(net, evidence)
    if z <= 0.0:
        raise ImpossibleEvidenceError("evidence has probability zero")
    best, best_score = None, -1.0
    for candidate in _query_assignments(net, query_vars):
        ext = dict(evidence)
        ext.update(candidate)
        score = evidence_likelihood(net, ext)
        if best is None or _beats(score, best_score):
            best, best_score = candidate, score
    return MapResult(best, best_score / z)


def ml_assignment(net, evidence, query_vars):
    """Assignment of query_vars maximizing the likelihood P(evidence | assignment).

    Candidates with zero marginal probability are skipped. The reported
    probability is the normalized posterior of the winner, as for MAP.
    """
    _check_map_args(net, evidence, query_vars)
    z = evidence_likelihood(net, evidence)
    if z <= 0.0:
        raise ImpossibleEvidenceError("evidence has probability zero")
    best, best_like, best_joint = None, -1.0, 0.0
    for candidate in _query_assignments(net, query_vars):
        prior = evidence_likelihood(net, candidate)
        if prior <= 0.0:
            continue
        ext = dict(evidence)
        ext.update(candidate)
        joint = evidence_likelihood(net, ext)
        likelihood = joint / prior
        if best is None or _beats(likelihood, best_like):
            best, best_like, best_joint = candidate, likelihood, joint
    if best is None:
        raise ImpossibleEvidenceError("every hypothesis assignment has probability zero")
    return MapResult(best, best_joint / z)
