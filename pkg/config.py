"""
AltSearch Configuration

Central configuration file for all constants and settings.
Each setting reads its environment variable first, then falls back to the
default below.
"""
import os

# Base directory (for resolving relative paths)
_BASE_DIR = os.path.dirname(os.path.abspath(__file__))

APP_VERSION = "1.0.0"


def _read_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if not value:
        return default
    try:
        return int(value.strip())
    except ValueError:
        return default


# Rule table shipped with the repo (the worked disjunction example)
DEFAULT_RULES_PATH = os.environ.get("ALTSEARCH_RULES") or os.path.join(_BASE_DIR, "rules.yaml")

# Search budget
DEFAULT_MAX_STEPS = _read_int("ALTSEARCH_MAX_STEPS", 1000)

# HTTP server
DEFAULT_PORT = _read_int("ALTSEARCH_PORT", 8000)

# Tree dumps
DUMP_SCHEMA_VERSION = 1

# Logging
LOG_LEVEL = (os.environ.get("ALTSEARCH_LOG_LEVEL") or "INFO").upper()
