"""Command-line interface.

Successful commands print a single JSON document on stdout; diagnostics go to
stderr. Exit codes: 0 success, 1 usage error, 2 model/validation error,
3 impossible evidence or degenerate baseline, 4 size limit.
"""

import argparse
import json
import sys

from . import app
from .curriculum import build_default_model
from .errors import EngineError
from .model_io import load_model_file
from .render import render_json

_EXIT_BY_CODE = {
    "usage_error": 1,
    "parse_error": 2,
    "schema_error": 2,
    "validation_error": 2,
    "unknown_symbol": 2,
    "impossible_evidence": 3,
    "degenerate_baseline": 3,
    "size_limit": 4,
}


def _load(path):
    if path is None:
        return build_default_model()
    return load_model_file(path)


def _emit(body, precision):
    sys.stdout.write(render_json(body, precision) + "\n")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curriculum-bn",
        description="Discrete Bayesian network engine and curriculum advisor",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--precision", type=int, default=6, choices=range(1, 18),
                       metavar="N", help="decimal places for probabilities (1-17)")
        return p

    p = add("validate", help="check a model document against every invariant")
    p.add_argument("model", help="path to a model JSON document")

    p = add("infer", help="posterior marginal of one variable given evidence")
    p.add_argument("--model")
    p.add_argument("--evidence", default="")
    p.add_argument("--query", required=True)

    p = add("map", help="most probable assignment of a variable set")
    p.add_argument("--model")
    p.add_argument("--evidence", default="")
    p.add_argument("--vars", required=True, help="comma-separated query variables")

    p = add("joint", help="chain-rule probability of a full assignment")
    p.add_argument("--model")
    p.add_argument("--assignment", required=True)

    p = add("likelihood", help="probability of the evidence")
    p.add_argument("--model")
    p.add_argument("--evidence", default="")

    p = add("learn", help="fit CPTs for a structure from a CSV of records")
    p.add_argument("--structure", required=True, help="model document supplying variables/edges")
    p.add_argument("--data", required=True, help="CSV record file")
    p.add_argument("--smoothing", type=float, default=1.0)

    p = add("sample", help="draw records by ancestral sampling")
    p.add_argument("--model")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="output CSV path")

    p = add("impact", help="rank influencer variables for a target state")
    p.add_argument("--model")
    p.add_argument("--target", required=True, help="Var=state")
    p.add_argument("--evidence", default="")

    p = add("plan", help="evaluate a student profile (optionally what-if scenarios)")
    p.add_argument("--model")
    p.add_argument("--profile", default="")
    p.add_argument("--scenarios", help="semicolon-separated override lists, e.g. 'NumC=few;NumC=many'")
    p.add_argument("--weights", help="success-score weights, e.g. G=0.5,RecL=0.25,Satisfaction=0.25")

    p = add("model", help="print the canonical model document")
    p.add_argument("--model")

    p = add("serve", help="run the HTTP service")
    p.add_argument("--model")
    p.add_argument("--addr", default="127.0.0.1:8000")

    return parser


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0

    try:
        if args.command == "validate":
            net = _load_unchecked(args.model)
            body = app.handle_validate(net)
            _emit(body, args.precision)
            return 0 if body["valid"] else 2

        if args.command == "infer":
            _emit(app.handle_infer(_load(args.model), app.parse_bindings(args.evidence),
                                   args.query), args.precision)
        elif args.command == "map":
            query_vars = [v.strip() for v in args.vars.split(",") if v.strip()]
            _emit(app.handle_map(_load(args.model), app.parse_bindings(args.evidence),
                                 query_vars), args.precision)
        elif args.command == "joint":
            _emit(app.handle_joint(_load(args.model), app.parse_bindings(args.assignment)),
                  args.precision)
        elif args.command == "likelihood":
            _emit(app.handle_likelihood(_load(args.model), app.parse_bindings(args.evidence)),
                  args.precision)
        elif args.command == "learn":
            structure_net = load_model_file(args.structure)
            with open(args.data, encoding="utf-8") as fh:
                csv_text = fh.read()
            body, report = app.handle_learn(structure_net, csv_text, args.smoothing)
            if report.unseen_configs:
                print(f"warning: {len(report.unseen_configs)} unseen parent "
                      f"configurations left uniform", file=sys.stderr)
            sys.stdout.write(json.dumps(body, indent=2) + "\n")
        elif args.command == "sample":
            records = app.handle_sample(_load(args.model), args.n, args.seed)
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(records.to_csv())
            _emit({"rows": len(records), "path": args.out}, args.precision)
        elif args.command == "impact":
            _emit(app.handle_impact(_load(args.model), app.parse_target(args.target),
                                    app.parse_bindings(args.evidence)), args.precision)
        elif args.command == "plan":
            net = _load(args.model)
            profile = app.parse_bindings(args.profile)
            weights = app.parse_weights(args.weights)
            if args.scenarios is None:
                _emit(app.handle_plan(net, profile, weights=weights), args.precision)
            else:
                scenarios = [app.parse_bindings(s) for s in args.scenarios.split(";")]
                _emit(app.handle_whatif(net, profile, scenarios, weights=weights),
                      args.precision)
        elif args.command == "model":
            sys.stdout.write(app.model_document(_load(args.model)))
        elif args.command == "serve":
            from .service import run_service

            host, _, port = args.addr.rpartition(":")
            run_service(_load(args.model), host or "127.0.0.1", int(port))
        return 0
    except EngineError as exc:
        body = {"code": exc.code, "message": str(exc)}
        if getattr(exc, "locus", None):
            body["locus"] = exc.locus
        print(json.dumps(body), file=sys.stderr)
        return _EXIT_BY_CODE.get(exc.code, 1)


def _load_unchecked(path):
    """Load for `validate`: parse/schema errors still raise, but invariant
    violations are returned as report data instead of failing the load."""
    from .errors import ModelValidationError
    from .model_io import load_model

    try:
        return load_model_file(path)
    except ModelValidationError:
        # reparse without validation to report violations as data
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        return _parse_lenient(text)


def _parse_lenient(text):
    import json as _json

    from .model_io import _CPT_FIELDS, _TOP_FIELDS, _VAR_FIELDS, _require
    from .network import BayesianNetwork, Cpt, NetworkStructure, Variable

    raw = _json.loads(text)
    _require(raw, _TOP_FIELDS, "top level")
    variables = tuple(Variable(v["name"], tuple(v["states"])) for v in raw["variables"])
    cpts = [Cpt(c["child"], tuple(c["parents"]), tuple(tuple(r) for r in c["rows"]))
            for c in raw["cpts"]]
    edges = tuple((p, c.child) for c in cpts for p in c.parents)
    return BayesianNetwork(NetworkStructure(variables, edges), cpts,
                           name=raw.get("name", "candidate"))


def main():
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
