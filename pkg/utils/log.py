"""Logging setup for the CLI. Library modules only call logging.getLogger(__name__)."""

import logging
import sys
from typing import Optional

from config import LOG_FORMAT, get_log_level


def setup_logging(level: Optional[str] = None) -> logging.Logger:
    """
    Configure the root logger to write to stderr.

    Args:
        level: Level name; defaults to HYPERDET_LOG_LEVEL or WARNING

    Returns:
        The configured root logger
    """
    level_name = (level or get_log_level()).upper()
    root = logging.getLogger()
    root.setLevel(getattr(logging, level_name, logging.WARNING))

    # Re-running (tests, repeated main() calls) must not stack handlers
    for handler in list(root.handlers):
        if getattr(handler, '_hyperdet', False):
            root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._hyperdet = True
    root.addHandler(handler)
    return root
