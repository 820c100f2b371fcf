"""Local HTTP/JSON service exposing the engine to the designer UI and scripts.

Stateless: every request carries a full document.  Responses are rendered
with the same canonical serializer as the CLI, so a TaskDocument yields a
byte-identical MotionDocument over either frontend.  Schema problems map to
400, mathematical failures to 422, both with the machine-readable error
codes in the body.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response

from .documents import (SCHEMA_VERSION, canonical_json, error_document,
                        factorize_document, interpolate_document,
                        sample_document)
from .errors import MotionForgeError, SchemaError


def _json_response(payload, status=200):
    return Response(canonical_json(payload), status_code=status,
                    media_type="application/json")


def _error_response(exc):
    status = 400 if isinstance(exc, SchemaError) else 422
    return _json_response(error_document(exc), status=status)


async def _read_json(request):
    try:
        return await request.json()
    except json.JSONDecodeError as exc:
        raise SchemaError(f"request body is not valid JSON: {exc}") from exc


def create_app():
    app = FastAPI(title="motionforge", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/health")
    def health():
        return _json_response({"schema_version": SCHEMA_VERSION, "status": "ok"})

    @app.post("/api/interpolate")
    async def interpolate(request: Request):
        try:
            doc = await _read_json(request)
            motion_doc, report = interpolate_document(doc)
        except MotionForgeError as exc:
            return _error_response(exc)
        return _json_response({
            "schema_version": SCHEMA_VERSION,
            "motion": motion_doc,
            "report": report,
        })

    @app.post("/api/factorize")
    async def factorize(request: Request):
        try:
            doc = await _read_json(request)
            body = doc.get("motion", doc) if isinstance(doc, dict) else doc
            result = factorize_document(body, with_mechanisms=True)
        except MotionForgeError as exc:
            return _error_response(exc)
        return _json_response(result)

    @app.post("/api/sample")
    async def sample(request: Request):
        try:
            doc = await _read_json(request)
            if not isinstance(doc, dict) or "motion" not in doc:
                raise SchemaError("sample request needs a motion document")
            at = doc.get("at")
            count = doc.get("count")
            t_range = doc.get("range", [0.0, 1.0])
            if at is not None:
                if (not isinstance(at, list) or not at
                        or not all(isinstance(t, (int, float)) for t in at)):
                    raise SchemaError("'at' must be a non-empty number array",
                                      code="BAD_OPTION")
                result = sample_document(doc["motion"], at=at)
            else:
                if not isinstance(count, int) or isinstance(count, bool) or count < 2:
                    raise SchemaError("'count' must be an integer >= 2",
                                      code="BAD_OPTION")
                if (not isinstance(t_range, list) or len(t_range) != 2
                        or not all(isinstance(v, (int, float)) for v in t_range)):
                    raise SchemaError("'range' must be [lo, hi]", code="BAD_OPTION")
                result = sample_document(doc["motion"], count=count,
                                         t_range=(t_range[0], t_range[1]))
        except MotionForgeError as exc:
            return _error_response(exc)
        return _json_response(result)

    return app
