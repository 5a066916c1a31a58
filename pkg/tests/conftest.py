import itertools

import numpy as np
import pytest

from curriculum_bn import (
    BayesianNetwork,
    Cpt,
    NetworkStructure,
    Variable,
    build_default_model,
)
from curriculum_bn.network import normalize_row


def two_node_net(p_x=0.6, p_y_given_t=0.9, p_y_given_f=0.2):
    """X -> Y, both binary with states (t, f)."""
    structure = NetworkStructure(
        (Variable("X", ("t", "f")), Variable("Y", ("t", "f"))), (("X", "Y"),)
    )
    cpts = [
        Cpt("X", (), ((p_x, 1 - p_x),)),
        Cpt("Y", ("X",), ((p_y_given_t, 1 - p_y_given_t), (p_y_given_f, 1 - p_y_given_f))),
    ]
    return BayesianNetwork(structure, cpts)


def random_network(rng, max_vars=6, max_states=4, max_parents=3, min_entry=0.02):
    """Random valid network; entries bounded away from 0 so logits stay finite."""
    n = int(rng.integers(3, max_vars + 1))
    variables = tuple(
        Variable(f"V{i}", tuple(f"s{j}" for j in range(int(rng.integers(2, max_states + 1)))))
        for i in range(n)
    )
    edges = []
    for i in range(1, n):
        k = int(rng.integers(0, min(i, max_parents) + 1))
        for p in rng.choice(i, size=k, replace=False):
            edges.append((f"V{int(p)}", f"V{i}"))
    structure = NetworkStructure(variables, tuple(edges))
    cpts = []
    for v in variables:
        parents = tuple(structure.parents_of(v.name))
        n_rows = 1
        for p in parents:
            n_rows *= len(structure.variable(p).states)
        rows = []
        for _ in range(n_rows):
            raw = rng.random(len(v.states)) + min_entry * len(v.states)
            rows.append(normalize_row(tuple(raw / raw.sum())))
        cpts.append(Cpt(v.name, parents, tuple(rows)))
    return BayesianNetwork(structure, cpts, name="random")


def random_evidence(rng, net, max_bound=None):
    names = [v.name for v in net.variables]
    limit = len(names) - 1 if max_bound is None else max_bound
    k = int(rng.integers(0, limit + 1))
    bound = rng.choice(len(names), size=k, replace=False)
    evidence = {}
    for i in bound:
        v = net.variables[int(i)]
        evidence[v.name] = v.states[int(rng.integers(len(v.states)))]
    return evidence


def all_assignments(net):
    names = [v.name for v in net.variables]
    for combo in itertools.product(*(v.states for v in net.variables)):
        yield dict(zip(names, combo))


@pytest.fixture(scope="session")
def curriculum():
    return build_default_model()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
