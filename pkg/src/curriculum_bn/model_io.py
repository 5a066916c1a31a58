"""Model document format: UTF-8 JSON.

Top level: ``name`` (string), ``variables`` (array of ``{name, states}``),
``cpts`` (array of ``{child, parents, rows}``). Edges are implied by the
``parents`` lists. Row order is mixed-radix over the parents in declared order
(last parent fastest); column order is the child's state order. Unknown fields
are rejected.
"""

import json

from .errors import ModelValidationError, ParseError, SchemaError
from .network import (
    BayesianNetwork,
    Cpt,
    NetworkStructure,
    Variable,
    normalize_row,
    validate_network,
)

_TOP_FIELDS = {"name", "variables", "cpts"}
_VAR_FIELDS = {"name", "states"}
_CPT_FIELDS = {"child", "parents", "rows"}


def _require(obj, fields, locus):
    if not isinstance(obj, dict):
        raise SchemaError(f"expected an object at {locus}", locus=locus)
    unknown = set(obj) - fields
    if unknown:
        raise SchemaError(f"unknown fields {sorted(unknown)} at {locus}", locus=locus)
    missing = fields - set(obj)
    if missing:
        raise SchemaError(f"missing fields {sorted(missing)} at {locus}", locus=locus)


def load_model(document):
    """Parse, validate, and normalize a model document into a BayesianNetwork."""
    try:
        raw = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc

    _require(raw, _TOP_FIELDS, "top level")
    if not isinstance(raw["name"], str):
        raise SchemaError("'name' must be a string", locus="name")
    if not isinstance(raw["variables"], list) or not isinstance(raw["cpts"], list):
        raise SchemaError("'variables' and 'cpts' must be arrays")

    variables = []
    for i, v in enumerate(raw["variables"]):
        locus = f"variables[{i}]"
        _require(v, _VAR_FIELDS, locus)
        if not isinstance(v["name"], str) or not isinstance(v["states"], list):
            raise SchemaError("variable needs string name and array states", locus=locus)
        if not all(isinstance(s, str) for s in v["states"]):
            raise SchemaError("states must be strings", locus=locus)
        variables.append(Variable(v["name"], tuple(v["states"])))
    declared = {v.name for v in variables}

    cpts, edges = [], []
    for i, c in enumerate(raw["cpts"]):
        locus = f"cpts[{i}]"
        _require(c, _CPT_FIELDS, locus)
        child, parents, rows = c["child"], c["parents"], c["rows"]
        if any(prev.child == child for prev in cpts):
            raise SchemaError(f"duplicate CPT for {child!r}", locus=locus)
        if child not in declared:
            raise SchemaError(f"CPT child {child!r} is not a declared variable", locus=locus)
        for p in parents:
            if p not in declared:
                raise SchemaError(
                    f"CPT for {child!r} names undeclared parent {p!r}", locus=locus
                )
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise SchemaError("rows must be an array of arrays", locus=locus)
        for r in rows:
            if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in r):
                raise SchemaError("row entries must be numbers", locus=locus)
        cpts.append(Cpt(child, tuple(parents), tuple(tuple(float(x) for x in r) for r in rows)))
        edges.extend((p, child) for p in parents)

    net = BayesianNetwork(NetworkStructure(tuple(variables), tuple(edges)), cpts, name=raw["name"])
    violations = validate_network(net)
    if violations:
        raise ModelValidationError(violations)

    # rows passed tolerance; renormalize so inference identities are exact
    normalized = [
        Cpt(c.child, c.parents, tuple(normalize_row(r) for r in c.rows)) for c in cpts
    ]
    return BayesianNetwork(net.structure, normalized, name=raw["name"])


def model_to_dict(net):
    return {
        "name": net.name,
        "variables": [{"name": v.name, "states": list(v.states)} for v in net.variables],
        "cpts": [
            {
                "child": v.name,
                "parents": list(net.cpts[v.name].parents),
                "rows": [list(r) for r in net.cpts[v.name].rows],
            }
            for v in net.variables
        ],
    }


def save_model(net):
    """Serialize to the canonical document form (2-space indent, repr floats)."""
    return json.dumps(model_to_dict(net), indent=2) + "\n"


def load_model_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return load_model(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read model file {path}: {exc}") from exc
