"""
Configuration settings for hfs-entangle
"""

import os
from pathlib import Path

from dotenv import load_dotenv  # type: ignore

# Load environment variables from .env file
load_dotenv()

# Application Configuration
APP_NAME = "hfs-entangle"

# Output Configuration
# Default directory for CSV and gnuplot files; --out overrides
OUTPUT_DIR_ENV = "HFS_ENTANGLE_OUT"

# 17 significant digits, scientific
CSV_FLOAT_FORMAT = "%.16e"

# Logging Configuration
LOG_LEVEL_ENV = "HFS_ENTANGLE_LOG_LEVEL"
DEFAULT_LOG_LEVEL = "INFO"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Sweep Configuration
# Series are evaluated concurrently; output bytes do not depend on this
SWEEP_PARALLEL = os.getenv("HFS_ENTANGLE_PARALLEL", "1").lower() not in ("0", "false", "no")


def default_output_dir() -> Path:
    """Output directory from HFS_ENTANGLE_OUT, else the working directory."""
    value = os.getenv(OUTPUT_DIR_ENV)
    return Path(value) if value else Path.cwd()


def log_level() -> str:
    """Log level name from HFS_ENTANGLE_LOG_LEVEL."""
    return os.getenv(LOG_LEVEL_ENV, DEFAULT_LOG_LEVEL).upper()
