"""HTTP facade over a loaded workspace.

The workspace is immutable after load; every endpoint is a pure read, and
what-if capacity overrides live entirely in the request body. Responses are
rendered with the same canonical serializer as the CLI's JSON output, so
bodies are byte-identical for identical parameters.
"""
from __future__ import annotations

import json

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .persistence import Workspace, canonical_dumps
from .projection import Horizon
from .validation import InvalidCapacityError, ModelError
from . import reports

_JSON = "application/json"


def _json_response(payload: dict, status: int = 200) -> Response:
    return Response(content=canonical_dumps(payload), status_code=status,
                    media_type=_JSON)


def _error(status: int, message: str, violations: list | None = None) -> Response:
    return _json_response(
        {"error": message, "violations": violations or []}, status)


async def _read_body(request: Request) -> dict | Response:
    ctype = request.headers.get("content-type", "")
    if not ctype.split(";")[0].strip() == _JSON:
        return _error(415, f"content-type must be {_JSON}")
    raw = await request.body()
    try:
        body = json.loads(raw or b"{}")
    except json.JSONDecodeError as e:
        return _error(400, f"malformed JSON: {e.msg} at line {e.lineno} column {e.colno}")
    if not isinstance(body, dict):
        return _error(400, "request body must be a JSON object")
    return body


def create_app(ws: Workspace, cors_origins: list[str] | None = None,
               static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="teamfit", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def guarded(fn):
        async def handler(request: Request) -> Response:
            body = {}
            if request.method == "POST":
                body = await _read_body(request)
                if isinstance(body, Response):
                    return body
            try:
                return _json_response(fn(body, request.path_params))
            except InvalidCapacityError as e:
                return _error(400, "invalid capacity",
                              [v.as_dict() for v in e.report.violations])
            except ModelError as e:
                msg = str(e)
                status = 404 if msg.startswith("unknown") else 400
                return _error(status, msg)
            except (KeyError, TypeError, ValueError) as e:
                return _error(400, f"bad request: {e}")
        return handler

    def horizon_of(body: dict) -> Horizon:
        return Horizon(float(body.get("horizon", 0.0)))

    app.add_api_route("/api/v1/workspace", guarded(
        lambda body, pp: reports.workspace_summary(ws)), methods=["GET"])

    app.add_api_route("/api/v1/profiles", guarded(
        lambda body, pp: {"profiles": [p.id for p in ws.population]}),
        methods=["GET"])

    app.add_api_route("/api/v1/profiles/{profile_id}", guarded(
        lambda body, pp: reports.profile_report(ws, pp["profile_id"])),
        methods=["GET"])

    app.add_api_route("/api/v1/capacities/{name}/shapley", guarded(
        lambda body, pp: reports.shapley_report(ws, pp["name"])),
        methods=["GET"])

    def score(body, pp):
        cap, name = reports.resolve_capacity(ws, body)
        return reports.score_report(ws, cap, horizon_of(body), capacity_name=name)

    def rank(body, pp):
        cap, name = reports.resolve_capacity(ws, body)
        return reports.rank_report(ws, cap, horizon_of(body),
                                   top=body.get("top"), capacity_name=name)

    def classify(body, pp):
        return reports.classify_report(
            ws, body["model"], horizon_of(body),
            minorities=bool(body.get("minorities", False)))

    def gap(body, pp):
        h = Horizon(float(body["horizon"])) if "horizon" in body else None
        return reports.gap_report(ws, body["model"], body["class"],
                                  body["profile"], h)

    def team(body, pp):
        cap, name = reports.resolve_capacity(ws, body)
        return reports.team_report(
            ws, cap, int(body["k"]), horizon_of(body),
            combine=body.get("combine", "coverage"),
            method=body.get("method", "auto"), capacity_name=name)

    def device_coverage(body, pp):
        return reports.device_report(
            ws, body["device"], horizon_of(body),
            min_coverage=body.get("min_coverage"))

    def whatif(body, pp):
        return reports.whatif_report(ws, body)

    for path, fn in [("/api/v1/score", score), ("/api/v1/rank", rank),
                     ("/api/v1/classify", classify), ("/api/v1/gap", gap),
                     ("/api/v1/team", team),
                     ("/api/v1/device-coverage", device_coverage),
                     ("/api/v1/whatif", whatif)]:
        app.add_api_route(path, guarded(fn), methods=["POST"])

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def run_server(ws: Workspace, host: str, port: int,
               cors_origins: list[str] | None = None,
               static_dir: str | None = None) -> None:
    import uvicorn
    app = create_app(ws, cors_origins=cors_origins, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port)
