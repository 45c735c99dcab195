"""
Unified Configuration Settings.

This module loads all configuration from environment variables (.env file).

Environment variables are loaded from:
- .env file in project root (recommended for local development)
- System environment variables (for CI runs and scripted acceptance runs)
"""

import os
from pathlib import Path
from dotenv import load_dotenv
from typing import Dict, Any

# ============================================================================
# PROJECT PATHS
# ============================================================================

BASE_DIR = Path(__file__).resolve().parent.parent
ENV_PATH = BASE_DIR / ".env"

# Load environment variables from .env file
load_dotenv(dotenv_path=ENV_PATH)


# ============================================================================
# HELPER FUNCTIONS
# ============================================================================


def get_bool_env(key: str, default: str = "false") -> bool:
	"""Convert environment variable to boolean."""
	return os.getenv(key, default).lower() == "true"


def get_int_env(key: str, default: str) -> int:
	"""Convert environment variable to integer."""
	return int(os.getenv(key, default))


# ============================================================================
# ENVIRONMENT & LOGGING
# ============================================================================

ENV = os.getenv("ENV", "dev")
DEBUG = get_bool_env("DEBUG", "false")

LOG_LEVEL = os.getenv("LOG_LEVEL", "DEBUG" if DEBUG else "WARNING").upper()
LOG_FORMAT = os.getenv("LOG_FORMAT", "%(levelname)-8s %(name)s: %(message)s")
LOG_DATEFMT = os.getenv("LOG_DATEFMT", "%Y-%m-%d %H:%M:%S")

# ============================================================================
# CLI OUTPUT
# ============================================================================

OUTPUT_FORMAT = os.getenv("OUTPUT_FORMAT", "table").lower()  # table | json
OUTPUT_FORMATS = ("table", "json")

# ============================================================================
# SEARCH DEFAULTS
# ============================================================================

DEFAULT_X_MAX = get_int_env("DEFAULT_X_MAX", "40")
DEFAULT_Y_MAX = get_int_env("DEFAULT_Y_MAX", "12")
FAMILY_EXPAND_LIMIT = get_int_env("FAMILY_EXPAND_LIMIT", "10")

# ============================================================================
# MORDELL CURVES
# ============================================================================

MORDELL_X_BOUND = get_int_env("MORDELL_X_BOUND", "100000")
MORDELL_TABLE_PATH = Path(
	os.getenv("MORDELL_TABLE_PATH", str(BASE_DIR / "database" / "mordell_curves.txt"))
)

# ============================================================================
# PRIME SIEVE
# ============================================================================

SIEVE_SEGMENT_SIZE = get_int_env("SIEVE_SEGMENT_SIZE", "1000000")
SIEVE_LIMIT = get_int_env("SIEVE_LIMIT", "1000000000")  # per-candidate tests above

# ============================================================================
# TEST RUNS
# ============================================================================

PROPERTY_EXAMPLES = get_int_env("PROPERTY_EXAMPLES", "10000")
SAVE_REPORT_ON_FAILURE = get_bool_env("SAVE_REPORT_ON_FAILURE", "true")
FAILURE_REPORT_DIR = os.getenv("FAILURE_REPORT_DIR", "reports/failures")


# ============================================================================
# CONFIGURATION HELPERS
# ============================================================================


def get_search_defaults() -> Dict[str, int]:
	"""
	Get default brute-force bounds used by the CLI.

	Returns:
		Dictionary with x_max, y_max and family_expand_limit
	"""
	return {
		"x_max": DEFAULT_X_MAX,
		"y_max": DEFAULT_Y_MAX,
		"family_expand_limit": FAMILY_EXPAND_LIMIT,
	}


def get_sieve_config() -> Dict[str, int]:
	"""Get segmented sieve parameters."""
	return {
		"segment_size": SIEVE_SEGMENT_SIZE,
		"limit": SIEVE_LIMIT,
	}


def get_output_format() -> str:
	"""
	Default CLI output format, read from OUTPUT_FORMAT at call time.

	Returns:
		"table" or "json"; unknown values fall back to "table"
	"""
	fmt = os.getenv("OUTPUT_FORMAT", "table").lower()
	return fmt if fmt in OUTPUT_FORMATS else "table"


# ============================================================================
# CONFIGURATION VALIDATION
# ============================================================================


def validate_config() -> Dict[str, Any]:
	"""
	Validate configuration and return status.

	Returns:
		Dictionary with validation results
	"""
	results = {
		"valid": True,
		"errors": [],
		"warnings": [],
	}

	if OUTPUT_FORMAT not in OUTPUT_FORMATS:
		results["errors"].append(f"Invalid output format: {OUTPUT_FORMAT}")
		results["valid"] = False

	for name, value in (
			("DEFAULT_X_MAX", DEFAULT_X_MAX),
			("DEFAULT_Y_MAX", DEFAULT_Y_MAX),
			("FAMILY_EXPAND_LIMIT", FAMILY_EXPAND_LIMIT),
	):
		if value < 0:
			results["errors"].append(f"{name} must be non-negative, got {value}")
			results["valid"] = False

	if MORDELL_X_BOUND < 1 or SIEVE_SEGMENT_SIZE < 1:
		results["errors"].append("MORDELL_X_BOUND and SIEVE_SEGMENT_SIZE must be positive")
		results["valid"] = False

	if not MORDELL_TABLE_PATH.exists():
		results["warnings"].append(f"Curve table not found: {MORDELL_TABLE_PATH}")

	return results


# ============================================================================
# EXPORTS
# ============================================================================

__all__ = [
	# Paths
	"BASE_DIR",
	"ENV_PATH",
	# Environment
	"ENV",
	"DEBUG",
	"LOG_LEVEL",
	"LOG_FORMAT",
	"LOG_DATEFMT",
	# Output
	"OUTPUT_FORMAT",
	"OUTPUT_FORMATS",
	# Search
	"DEFAULT_X_MAX",
	"DEFAULT_Y_MAX",
	"FAMILY_EXPAND_LIMIT",
	# Mordell
	"MORDELL_X_BOUND",
	"MORDELL_TABLE_PATH",
	# Sieve
	"SIEVE_SEGMENT_SIZE",
	"SIEVE_LIMIT",
	# Tests
	"PROPERTY_EXAMPLES",
	"SAVE_REPORT_ON_FAILURE",
	"FAILURE_REPORT_DIR",
	# Helper functions
	"get_search_defaults",
	"get_sieve_config",
	"get_output_format",
	"validate_config",
]
