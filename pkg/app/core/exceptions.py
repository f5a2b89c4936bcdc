"""Base error types shared by every analysis module."""

import logging
from contextlib import contextmanager
from typing import Iterator, Optional

from fastapi import HTTPException, status

from app.core.config import settings

logger = logging.getLogger(__name__)


class AnalysisError(Exception):
    """Domain-specific error raised when an input or a pipeline stage is invalid.

    ``status_code`` is the HTTP status the routes answer with; the CLI maps
    every ``AnalysisError`` to exit code 2.
    """

    def __init__(self, message: str, *, status_code: int = 400) -> None:
        super().__init__(message)
        self.message = message
        self.status_code = status_code

    def __str__(self) -> str:
        return self.message


class StateLimitExceeded(AnalysisError):
    """A construction grew beyond the configured state budget."""

    def __init__(self, what: str, limit: int) -> None:
        super().__init__(f"{what} exceeded the state limit of {limit}", status_code=413)
        self.limit = limit


def resolve_limit(max_states: Optional[int]) -> int:
    """Return the effective state budget for a guarded construction."""
    return settings.MAX_STATES if max_states is None else max_states


@contextmanager
def http_errors(action: str) -> Iterator[None]:
    """Translate analysis errors raised inside a route into ``HTTPException``."""
    try:
        yield
    except AnalysisError as exc:
        raise HTTPException(status_code=exc.status_code, detail=exc.message) from exc
    except HTTPException:
        raise
    except Exception as exc:
        logger.exception("Unexpected failure while %s", action)
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail=f"Error {action}: {exc}",
        ) from exc
