"""Read-only REST service over a built knowledge graph.

Every response is a JSON envelope — ``{"status": "ok", "payload": ...}`` or
``{"status": "error", "error_code": ..., "message": ...}`` — except the bulk
dump, which is served as plain text.  The graph is immutable, so handlers
share it freely without locks.
"""

from __future__ import annotations

import logging
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from scholargraph.citetext import SentimentLexicon
from scholargraph.errors import (
    EntityNotFoundError,
    KindError,
    NotFoundError,
    ScholarGraphError,
    UnsupportedQueryError,
)
from scholargraph.graph import KnowledgeGraph
from scholargraph.nlq import QueryCatalog, answer_nlq
from scholargraph.profiles import (
    author_profile,
    keyword_search,
    paper_profile,
    venue_profile,
)
from scholargraph.storage import dump_text

log = logging.getLogger(__name__)

_SEARCH_KINDS = ("author", "paper", "venue")


def _ok(payload) -> JSONResponse:
    return JSONResponse({"status": "ok", "payload": payload})


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        {"status": "error", "error_code": code, "message": message},
        status_code=status,
    )


def _map_error(exc: ScholarGraphError) -> JSONResponse:
    if isinstance(exc, UnsupportedQueryError):
        return _error(422, "unsupported_query", str(exc))
    if isinstance(exc, (NotFoundError, EntityNotFoundError, KindError)):
        return _error(404, "not_found", str(exc))
    log.exception("internal error handling request")
    return _error(500, "internal_error", str(exc))


def create_app(
    g: KnowledgeGraph,
    catalog: Optional[QueryCatalog] = None,
    lexicon: Optional[SentimentLexicon] = None,
    static_dir: Optional[str] = None,
) -> FastAPI:
    """Build the API application around one immutable graph."""
    app = FastAPI(title="scholargraph", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(Exception)
    async def _unhandled(request: Request, exc: Exception):
        log.exception("unhandled error for %s", request.url.path)
        return _error(500, "internal_error", "internal server error")

    @app.get("/api/nlq")
    def nlq(q: Optional[str] = None):
        if q is None or not q.strip():
            return _error(400, "bad_request", "missing or empty query parameter 'q'")
        try:
            answer = answer_nlq(g, q, catalog=catalog, lexicon=lexicon)
        except ScholarGraphError as exc:
            return _map_error(exc)
        return _ok(answer.to_dict())

    @app.get("/api/search")
    def search(q: Optional[str] = None, kind: Optional[str] = None):
        if q is None or not q.strip():
            return _error(400, "bad_request", "missing or empty query parameter 'q'")
        if kind is not None and kind not in _SEARCH_KINDS:
            return _error(400, "bad_request", f"kind must be one of {', '.join(_SEARCH_KINDS)}")
        try:
            hits = keyword_search(g, q, kind=kind)
        except ScholarGraphError as exc:
            return _map_error(exc)
        return _ok({"query": q, "hits": [h.to_dict() for h in hits]})

    @app.get("/api/paper/{entity_id}")
    def paper(entity_id: str):
        try:
            profile = paper_profile(g, entity_id, lexicon=lexicon)
        except ScholarGraphError as exc:
            return _map_error(exc)
        return _ok(profile.to_dict())

    @app.get("/api/author/{entity_id}")
    def author(entity_id: str):
        try:
            profile = author_profile(g, entity_id)
        except ScholarGraphError as exc:
            return _map_error(exc)
        return _ok(profile.to_dict())

    @app.get("/api/venue/{entity_id}")
    def venue(entity_id: str):
        try:
            profile = venue_profile(g, entity_id)
        except ScholarGraphError as exc:
            return _map_error(exc)
        return _ok(profile.to_dict())

    @app.get("/api/dump")
    def dump():
        return PlainTextResponse(dump_text(g), media_type="text/plain; charset=utf-8")

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def serve(
    g: KnowledgeGraph,
    catalog: Optional[QueryCatalog] = None,
    bind_address: str = "127.0.0.1:8765",
    static_dir: Optional[str] = None,
) -> None:
    """Run the service until interrupted."""
    import uvicorn

    host, _, port = bind_address.rpartition(":")
    if not host or not port.isdigit():
        raise ValueError(f"bind address must look like host:port, got {bind_address!r}")
    app = create_app(g, catalog=catalog, static_dir=static_dir)
    uvicorn.run(app, host=host, port=int(port), log_level="info")
