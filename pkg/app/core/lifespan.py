import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI

from app.core.config import settings
from app.core.logging import configure_logging

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Lifespan context manager for FastAPI application."""
    configure_logging(settings.LOG_LEVEL)
    logger.info(
        "Starting analysis service (prefix %s, state limit %d)", settings.API_PREFIX, settings.MAX_STATES
    )

    yield

    logger.info("Analysis service stopped")
