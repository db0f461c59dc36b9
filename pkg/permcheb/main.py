"""
permcheb - exact generating functions for pattern-avoiding permutations.

Command-line entry point.
"""

import logging
import sys
from collections.abc import Sequence

from permcheb.cli import build_parser, dispatch
from permcheb.config import Settings, get_settings
from permcheb.constants import EXIT_RESOURCE, EXIT_USAGE
from permcheb.errors import (
    IrreducibleExpression,
    OutOfStatedRange,
    ParameterError,
    PatternError,
    ResourceLimitError,
    TruncationError,
    UnsupportedPattern,
)

logger = logging.getLogger(__name__)

# ZeroDivisionError comes from expanding a rational function at a pole
USAGE_ERRORS = (
    PatternError,
    ParameterError,
    UnsupportedPattern,
    OutOfStatedRange,
    TruncationError,
    IrreducibleExpression,
    ZeroDivisionError,
)


def configure_logging(settings: Settings | None = None) -> None:
    """
    Configure logging from settings.

    Output goes to stderr so stdout carries only command results. Debug
    mode adds function names and line numbers.
    """
    settings = settings or get_settings()
    log_level = getattr(logging, settings.log_level.upper(), logging.INFO)

    if settings.debug:
        log_format = "%(asctime)s | %(levelname)-8s | %(name)s:%(funcName)s:%(lineno)d | %(message)s"
    else:
        log_format = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"

    logging.basicConfig(
        level=log_level,
        format=log_format,
        datefmt="%Y-%m-%d %H:%M:%S",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )
    logging.getLogger("asyncio").setLevel(logging.WARNING)
    logger.debug("Logging configured: level=%s, debug=%s", settings.log_level.upper(), settings.debug)


def main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run the command and map failures to exit codes."""
    args = build_parser().parse_args(argv)
    settings = get_settings()
    configure_logging(settings)
    try:
        return dispatch(args, settings=settings)
    except ResourceLimitError as exc:
        print(f"error: {exc} (pass --unsafe-N to override)", file=sys.stderr)
        return EXIT_RESOURCE
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
