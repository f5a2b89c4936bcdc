import json
import logging
import time
from typing import Any, Dict, Optional

from fastapi import Request, Response
from starlette.middleware.base import BaseHTTPMiddleware

ANALYSIS_METHODS = {"POST"}
VERDICT_FIELDS = ("value", "accepted", "separable", "definable", "aperiodic", "exists", "entails", "size", "omega")
logger = logging.getLogger("app.middleware.request")


class RequestLoggingMiddleware(BaseHTTPMiddleware):
    """Log every analysis request with its status, duration and verdict."""

    async def dispatch(self, request: Request, call_next):  # type: ignore[override]
        if request.method.upper() not in ANALYSIS_METHODS:
            return await call_next(request)

        start_time = time.perf_counter()
        response = await call_next(request)
        body = b"".join([chunk async for chunk in response.body_iterator])
        duration_ms = (time.perf_counter() - start_time) * 1000

        logger.info(
            "%s %s status=%s duration_ms=%.2f verdict=%s",
            request.method,
            request.url.path,
            response.status_code,
            duration_ms,
            self._verdict(body),
        )

        headers = dict(response.headers)
        headers.pop("content-length", None)
        replay = Response(
            content=body,
            status_code=response.status_code,
            headers=headers,
            media_type=response.media_type,
        )
        replay.background = response.background
        return replay

    @staticmethod
    def _verdict(body: bytes) -> Optional[Dict[str, Any]]:
        try:
            document = json.loads(body[:65536]) if body else None
        except (json.JSONDecodeError, UnicodeDecodeError):
            return None
        if not isinstance(document, dict):
            return None
        if "detail" in document:
            return {"detail": document["detail"]}
        return {key: document[key] for key in VERDICT_FIELDS if key in document} or None
