"""HTTP API over the engine: session-scoped model storage, analysis,
what-if, metric evidence, and catalog access.

Sessions live in memory; one analyst, desk scale. Mutations carry an
optional expected revision and are rejected with 409 on mismatch so two
browser tabs cannot silently clobber each other. What-if never touches the
stored model.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .catalog import MetricRecord, attach_metrics, catalog_entries
from .errors import AhpError
from .format import ParseError, parse_model, serialize_model
from .model import DecisionModel, validate_model
from .synthesis import evaluate, whatif
from .wire import (catalog_entry_to_dict, delta_to_dict, metric_record_from_dict,
                   metric_record_to_dict, model_from_dict, model_to_dict,
                   parse_issues_to_dicts, ratio_from_wire, report_to_dict,
                   result_to_dict)

# Engine error code -> HTTP status for request-scoped failures.
_ERROR_STATUS = {
    "UNKNOWN_PATH": 404,
    "UNKNOWN_PAIR": 404,
    "BAD_VALUE": 400,
    "UNKNOWN_ATTRIBUTE": 422,
    "UNKNOWN_ALTERNATIVE": 422,
    "INVALID_MODEL": 422,
}


class ApiError(Exception):
    def __init__(self, status: int, code: str, detail: str, span=None):
        super().__init__(detail)
        self.status = status
        self.code = code
        self.detail = detail
        self.span = span

    def payload(self) -> dict:
        error = {"status": self.status, "code": self.code, "detail": self.detail}
        if self.span is not None:
            error["span"] = {"line": self.span.line, "column": self.span.column}
        return {"error": error}


@dataclass
class SessionState:
    session_id: str
    model: DecisionModel | None = None
    revision: int = 0
    metrics: list[MetricRecord] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    def __init__(self) -> None:
        self._sessions: dict[str, SessionState] = {}
        self._lock = threading.Lock()

    def create(self) -> SessionState:
        session = SessionState(session_id=uuid.uuid4().hex)
        with self._lock:
            self._sessions[session.session_id] = session
        return session

    def get(self, session_id: str) -> SessionState:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise ApiError(404, "UNKNOWN_SESSION", f"no session {session_id!r}")
        return session


def _require_model(session: SessionState) -> DecisionModel:
    if session.model is None:
        raise ApiError(409, "NO_MODEL", "session holds no model yet")
    return session.model


def _check_revision(session: SessionState, expected) -> None:
    if expected is None:
        return
    if not isinstance(expected, int) or isinstance(expected, bool):
        raise ApiError(400, "BAD_REQUEST", "expected_revision must be an integer")
    if expected != session.revision:
        raise ApiError(409, "REVISION_MISMATCH",
                       f"expected revision {expected}, session is at {session.revision}")


def create_app(ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="ahpq", docs_url=None, redoc_url=None)
    store = SessionStore()

    @app.exception_handler(ApiError)
    async def handle_api_error(_request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content=exc.payload())

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.get("/api/session")
    def create_session():
        session = store.create()
        return {"session_id": session.session_id, "revision": session.revision}

    @app.get("/api/session/{session_id}/model")
    def get_model(session_id: str):
        session = store.get(session_id)
        if session.model is None:
            return {"revision": 0, "model": None, "text": None}
        return {"revision": session.revision,
                "model": model_to_dict(session.model),
                "text": serialize_model(session.model)}

    @app.put("/api/session/{session_id}/model")
    async def put_model(session_id: str, request: Request):
        session = store.get(session_id)
        body = await _json_body(request)
        expected = body.get("expected_revision")
        if "text" in body and body["text"] is not None:
            if not isinstance(body["text"], str):
                raise ApiError(400, "BAD_REQUEST", "text must be a string")
            try:
                model = parse_model(body["text"])
            except ParseError as exc:
                raise ApiError(400, exc.kind, exc.message, span=exc.span) from None
        elif "model" in body and body["model"] is not None:
            try:
                model = model_from_dict(body["model"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ApiError(400, "BAD_REQUEST",
                               f"malformed structured model: {exc}") from None
        else:
            raise ApiError(400, "BAD_REQUEST",
                           "body must carry 'text' (model file) or 'model' (structured)")
        report = validate_model(model)
        with session.lock:
            _check_revision(session, expected)
            payload = {
                "report": report_to_dict(report),
                "parse_warnings": parse_issues_to_dicts(model.parse_warnings),
                "stored": report.ok,
            }
            if not report.ok:
                payload["revision"] = session.revision
                return JSONResponse(status_code=422, content=payload)
            session.model = model
            session.revision += 1
            payload["revision"] = session.revision
            return payload

    @app.post("/api/session/{session_id}/analyze")
    def analyze(session_id: str):
        session = store.get(session_id)
        model = _require_model(session)
        result = _run_engine(lambda: evaluate(model))
        return {"revision": session.revision, "result": result_to_dict(result)}

    @app.post("/api/session/{session_id}/whatif")
    async def whatif_route(session_id: str, request: Request):
        session = store.get(session_id)
        model = _require_model(session)
        body = await _json_body(request)
        raw_path = body.get("node") or body.get("path")
        if isinstance(raw_path, str):
            path = tuple(seg for seg in raw_path.split("/") if seg)
        elif isinstance(raw_path, list):
            path = tuple(str(seg) for seg in raw_path)
        else:
            raise ApiError(400, "BAD_REQUEST", "node must be a path string or list")
        pair = body.get("pair")
        if not isinstance(pair, list) or len(pair) != 2:
            raise ApiError(400, "BAD_REQUEST", "pair must be a two-name list")
        try:
            value = ratio_from_wire(body.get("value"))
        except ValueError as exc:
            raise ApiError(400, "BAD_VALUE", str(exc)) from None
        delta = _run_engine(lambda: whatif(model, path, (str(pair[0]), str(pair[1])),
                                           value))
        return {"revision": session.revision, "delta": delta_to_dict(delta)}

    @app.get("/api/session/{session_id}/metrics")
    def get_metrics(session_id: str):
        session = store.get(session_id)
        return {"revision": session.revision,
                "metrics": [metric_record_to_dict(r) for r in session.metrics]}

    @app.put("/api/session/{session_id}/metrics")
    async def put_metrics(session_id: str, request: Request):
        session = store.get(session_id)
        model = _require_model(session)
        body = await _json_body(request)
        raw_records = body.get("metrics")
        if not isinstance(raw_records, list):
            raise ApiError(400, "BAD_REQUEST", "metrics must be a list of records")
        try:
            records = [metric_record_from_dict(r) for r in raw_records]
        except (KeyError, TypeError, ValueError) as exc:
            raise ApiError(400, "BAD_REQUEST", f"malformed metric record: {exc}") from None
        _run_engine(lambda: attach_metrics(model, records))  # validation only
        with session.lock:
            _check_revision(session, body.get("expected_revision"))
            session.metrics = records
            session.revision += 1
            return {"revision": session.revision,
                    "metrics": [metric_record_to_dict(r) for r in records]}

    @app.get("/api/catalog")
    def catalog(request: Request):
        allowed = {"dimension", "category", "keyword"}
        unknown = set(request.query_params) - allowed
        if unknown:
            raise ApiError(400, "BAD_REQUEST",
                           f"unknown filter key(s): {sorted(unknown)}")
        params = request.query_params
        try:
            entries = catalog_entries(
                dimension=params.get("dimension"),
                category=params.get("category"),
                keyword=params.get("keyword"),
            )
        except ValueError as exc:
            raise ApiError(400, "BAD_REQUEST", str(exc)) from None
        return {"entries": [catalog_entry_to_dict(e) for e in entries]}

    if ui_dir:
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception:
        raise ApiError(400, "BAD_REQUEST", "body must be JSON") from None
    if not isinstance(body, dict):
        raise ApiError(400, "BAD_REQUEST", "body must be a JSON object")
    return body


def _run_engine(call):
    try:
        return call()
    except AhpError as exc:
        status = _ERROR_STATUS.get(exc.code, 400)
        raise ApiError(status, exc.code, str(exc)) from None
