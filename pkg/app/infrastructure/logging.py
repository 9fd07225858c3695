"""
Logging configuration
"""
import logging
import os
import sys
from typing import Optional

import structlog


def _configure_structlog(renderer) -> None:
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


def configure_default_logging() -> None:
    """Route structlog through stdlib logging when nothing else configured it.

    Library callers that never call ``setup_logging`` get the stdlib
    defaults: records below WARNING are dropped and the rest go to
    standard error.
    """
    if structlog.is_configured():
        return
    _configure_structlog(structlog.dev.ConsoleRenderer(colors=False))


def setup_logging(level: str = "WARNING", log_file: Optional[str] = None, json_output: bool = False):
    """Setup application logging.

    Diagnostics always go to standard error; standard output is reserved
    for documents and reports.
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(message)s",
        handlers=handlers,
        force=True,
    )

    _configure_structlog(
        structlog.processors.JSONRenderer()
        if json_output
        else structlog.dev.ConsoleRenderer(colors=False)
    )
