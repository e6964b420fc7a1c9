"""
Structured logging setup.

Logs go to stderr so stdout carries only command results.
"""
import logging
import sys
from typing import Optional

import structlog

from src.core.config import get_settings

_configured = False


def configure_logging(level: Optional[str] = None) -> None:
    """
    Configure structlog for the process.

    Console rendering in development, JSON lines otherwise.
    Safe to call more than once; later calls only change the level.
    """
    global _configured
    settings = get_settings()
    level_name = (level or settings.log_level).upper()

    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.dev.ConsoleRenderer() if settings.app_env == "development"
            else structlog.processors.JSONRenderer()
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            getattr(logging, level_name, logging.WARNING)
        ),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )

    if not _configured:
        structlog.get_logger(__name__).debug(
            "logging_configured",
            app_name=settings.app_name,
            environment=settings.app_env,
            level=level_name
        )
    _configured = True


def ensure_logging() -> None:
    """Apply the default configuration unless the process already chose one."""
    if not structlog.is_configured():
        configure_logging()
