"""HTTP service: stateless, read-only over a model fixed at startup.

Endpoints mirror the CLI subcommands and produce byte-identical JSON bodies
for identical inputs. Errors map to: 400 malformed/unknown-symbol requests,
422 impossible evidence or degenerate baseline, 413 size limit.
"""

import json
import pathlib

from fastapi import FastAPI, Request, Response
from fastapi.staticfiles import StaticFiles

from . import app as handlers
from .errors import EngineError
from .impact import TargetSpec

_STATUS_BY_CODE = {
    "parse_error": 400,
    "schema_error": 400,
    "validation_error": 400,
    "unknown_symbol": 400,
    "usage_error": 400,
    "impossible_evidence": 422,
    "degenerate_baseline": 422,
    "size_limit": 413,
}

PRECISION = 6


def _json_response(body, status=200):
    from .render import render_json

    return Response(
        content=render_json(body, PRECISION),
        status_code=status,
        media_type="application/json",
    )


def _error_response(exc):
    body = {"code": exc.code, "message": str(exc)}
    if getattr(exc, "locus", None):
        body["locus"] = exc.locus
    return Response(
        content=json.dumps(body),
        status_code=_STATUS_BY_CODE.get(exc.code, 400),
        media_type="application/json",
    )


def create_app(net, ui_dir=None):
    api = FastAPI(title="curriculum-bn", docs_url=None, redoc_url=None)

    @api.exception_handler(EngineError)
    async def engine_error_handler(_request, exc):
        return _error_response(exc)

    @api.get("/api/model")
    async def get_model():
        return Response(
            content=handlers.model_document(net), media_type="application/json"
        )

    async def read_json(request):
        from .errors import ParseError

        try:
            body = await request.json()
        except Exception as exc:
            raise ParseError(f"malformed JSON request: {exc}") from exc
        if not isinstance(body, dict):
            raise ParseError("request body must be a JSON object")
        return body

    @api.post("/api/infer")
    async def post_infer(request: Request):
        body = await read_json(request)
        evidence = handlers.check_str_mapping(body.get("evidence", {}), "evidence")
        query = body.get("query")
        if not isinstance(query, str):
            from .errors import ParseError

            raise ParseError("'query' must be a variable name")
        return _json_response(handlers.handle_infer(net, evidence, query))

    @api.post("/api/map")
    async def post_map(request: Request):
        body = await read_json(request)
        evidence = handlers.check_str_mapping(body.get("evidence", {}), "evidence")
        qvars = body.get("query_vars", [])
        if not isinstance(qvars, list) or not all(isinstance(q, str) for q in qvars):
            from .errors import ParseError

            raise ParseError("'query_vars' must be an array of variable names")
        return _json_response(handlers.handle_map(net, evidence, qvars))

    @api.post("/api/joint")
    async def post_joint(request: Request):
        body = await read_json(request)
        assignment = handlers.check_str_mapping(body.get("assignment", {}), "assignment")
        return _json_response(handlers.handle_joint(net, assignment))

    @api.post("/api/impact")
    async def post_impact(request: Request):
        body = await read_json(request)
        evidence = handlers.check_str_mapping(body.get("evidence", {}), "evidence")
        target = body.get("target", {})
        if (
            not isinstance(target, dict)
            or not isinstance(target.get("variable"), str)
            or not isinstance(target.get("state"), str)
        ):
            from .errors import ParseError

            raise ParseError("'target' must be {variable, state}")
        spec = TargetSpec(target["variable"], target["state"])
        return _json_response(handlers.handle_impact(net, spec, evidence))

    @api.post("/api/plan")
    async def post_plan(request: Request):
        body = await read_json(request)
        profile = handlers.check_str_mapping(body.get("profile", {}), "profile")
        weights = body.get("weights")
        return _json_response(handlers.handle_plan(net, profile, weights=weights))

    @api.post("/api/whatif")
    async def post_whatif(request: Request):
        body = await read_json(request)
        profile = handlers.check_str_mapping(body.get("profile", {}), "profile")
        scenarios = body.get("scenarios", [])
        if not isinstance(scenarios, list):
            from .errors import ParseError

            raise ParseError("'scenarios' must be an array of override objects")
        scenarios = [
            handlers.check_str_mapping(s, "scenario override") for s in scenarios
        ]
        weights = body.get("weights")
        return _json_response(
            handlers.handle_whatif(net, profile, scenarios, weights=weights)
        )

    if ui_dir is None:
        candidate = pathlib.Path(__file__).resolve().parents[2] / "frontend" / "dist"
        ui_dir = candidate if candidate.is_dir() else None
    if ui_dir is not None and pathlib.Path(ui_dir).is_dir():
        api.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return api


def run_service(net, host, port):
    import uvicorn

    uvicorn.run(create_app(net), host=host, port=port, log_level="warning")
