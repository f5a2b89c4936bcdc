import logging
from typing import Optional, Union

from app.core.config import settings


def configure_logging(level: Optional[Union[int, str]] = None) -> None:
    """Configure root logging with the project format."""
    resolved = level if level is not None else settings.LOG_LEVEL
    if isinstance(resolved, str):
        resolved = resolved.upper()
    logging.basicConfig(level=resolved, format=settings.LOG_FORMAT, force=True)
