"""Local HTTP service over resolution sessions.

Sessions live in process memory behind unguessable token ids; every mutation
of a session is serialized by a per-session lock. Errors use a uniform
``{"error": code, "detail": text}`` envelope.
"""

from __future__ import annotations

import secrets
import threading

from fastapi import FastAPI
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from .lambda_graph import export_graph
from .model import DuplicateRuleIdError, ProgramSyntaxError
from .session import (
    BadChoiceIndexError,
    EmptyHistoryError,
    InvalidTargetError,
    Session,
    StaleExtensionError,
)


class SessionStore:
    """Thread-safe in-memory session registry."""

    def __init__(self):
        self._items: dict[str, tuple[Session, threading.Lock]] = {}
        self._guard = threading.Lock()

    def add(self, session: Session) -> str:
        sid = secrets.token_urlsafe(16)
        with self._guard:
            self._items[sid] = (session, threading.Lock())
        return sid

    def get(self, sid: str) -> tuple[Session, threading.Lock]:
        with self._guard:
            return self._items[sid]

    def ids(self) -> list[str]:
        with self._guard:
            return list(self._items)


class NewSessionBody(BaseModel):
    program: str
    cover: int | None = None
    clique_cover: int | None = None


class ChoiceBody(BaseModel):
    extension: str
    targets: list[str]


def _error(status: int, code: str, detail: str) -> JSONResponse:
    return JSONResponse({"error": code, "detail": detail}, status_code=status)


def create_app(store: SessionStore | None = None, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="elpmend")
    store = store if store is not None else SessionStore()
    app.state.store = store

    def lookup(sid: str) -> tuple[Session, threading.Lock] | JSONResponse:
        try:
            return store.get(sid)
        except KeyError:
            return _error(404, "unknown_session", f"no session {sid}")

    @app.get("/health")
    def health() -> PlainTextResponse:
        return PlainTextResponse("ok")

    @app.post("/sessions")
    def create_session(body: NewSessionBody):
        try:
            session = Session(
                body.program,
                cover_choice="auto" if body.cover is None else body.cover,
                clique_choice="auto" if body.clique_cover is None else body.clique_cover,
            )
        except (ProgramSyntaxError, DuplicateRuleIdError) as exc:
            return _error(400, "parse_error", str(exc))
        except BadChoiceIndexError as exc:
            return _error(400, "bad_cover", str(exc))
        sid = store.add(session)
        payload = {"id": sid, "state": session.state_payload()}
        if session.status == "blocked":
            payload.update({"error": "blocked", "detail": "every conflict is unresolvable"})
            return JSONResponse(payload, status_code=422)
        return JSONResponse(payload, status_code=201)

    @app.get("/sessions/{sid}")
    def get_session(sid: str):
        found = lookup(sid)
        if isinstance(found, JSONResponse):
            return found
        session, lock = found
        with lock:
            return {"id": sid, "state": session.state_payload()}

    @app.get("/sessions/{sid}/graph")
    def get_graph(sid: str, format: str = "json"):
        found = lookup(sid)
        if isinstance(found, JSONResponse):
            return found
        session, lock = found
        if format not in ("json", "dot"):
            return _error(400, "unknown_format", format)
        with lock:
            if format == "dot":
                return PlainTextResponse(export_graph(session.graph, "dot"))
            return JSONResponse(session.state_payload()["graph"])

    @app.get("/sessions/{sid}/program")
    def get_program(sid: str):
        found = lookup(sid)
        if isinstance(found, JSONResponse):
            return found
        session, lock = found
        with lock:
            return PlainTextResponse(session.state_payload()["program"])

    @app.post("/sessions/{sid}/choices")
    def post_choice(sid: str, body: ChoiceBody):
        found = lookup(sid)
        if isinstance(found, JSONResponse):
            return found
        session, lock = found
        with lock:
            try:
                result = session.choose(body.extension, body.targets)
            except InvalidTargetError as exc:
                return _error(409, "invalid_target", str(exc))
            except StaleExtensionError as exc:
                return _error(409, "stale_extension", str(exc))
            return {
                "state": session.state_payload(),
                "resolved_now": [list(pair) for pair in result.resolved_now],
            }

    @app.post("/sessions/{sid}/undo")
    def post_undo(sid: str):
        found = lookup(sid)
        if isinstance(found, JSONResponse):
            return found
        session, lock = found
        with lock:
            try:
                session.undo()
            except EmptyHistoryError as exc:
                return _error(409, "empty_history", str(exc))
            return {"state": session.state_payload()}

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app
