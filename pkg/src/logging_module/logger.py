"""Structured logging configuration for GrayGreed."""

import logging
import sys
from typing import Any, Dict

import structlog


def setup_logging(
    level: str = "WARNING",
    format_type: str = "text",
    output: str = "stderr"
) -> None:
    """Setup structured logging configuration.
    
    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        format_type: Log format (json, text)
        output: Log output destination (stderr, stdout)
    """
    stream = sys.stdout if output == "stdout" else sys.stderr
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format="%(message)s",
        stream=stream,
        force=True,
    )

    processors = [
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
    ]
    
    if format_type == "json":
        processors.append(structlog.processors.JSONRenderer())
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=False))
    
    structlog.configure(
        processors=processors,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def get_logger(name: str = "graygreed") -> structlog.BoundLogger:
    """Get a structured logger instance.
    
    Args:
        name: Logger name
        
    Returns:
        Configured structured logger
    """
    return structlog.get_logger(name)


def log_run_event(
    start: str,
    count: int,
    exhausted: bool,
    last_word: str
) -> Dict[str, Any]:
    """Create the key/value payload logged for a finished greedy run.
    
    Args:
        start: Start word text
        count: Number of listed words
        exhausted: Whether the whole language was listed
        last_word: Final word text
        
    Returns:
        Log fields dictionary
    """
    return {
        "start": start,
        "count": count,
        "exhausted": exhausted,
        "last_word": last_word,
    }


def log_sweep_event(
    language: str,
    size: int,
    generators: int,
    move_order: str,
    workers: int
) -> Dict[str, Any]:
    """Create the key/value payload logged for a brute-force generator sweep.

    Args:
        language: Language label, e.g. ``C_6(1,3)``
        size: Number of start words tried
        generators: Number of exhaustive start words found
        move_order: Candidate scan order used
        workers: Worker processes used

    Returns:
        Log fields dictionary
    """
    return {
        "language": language,
        "size": size,
        "generators": generators,
        "move_order": move_order,
        "workers": workers,
    }
