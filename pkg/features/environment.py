"""
Hooks for the sgdio behave suite.

before_all checks the configuration and publishes the search, sieve and
property-test settings on the context. Each scenario records the inputs
and values it computed in context.artifacts; when a scenario fails, that
record becomes a text report under FAILURE_REPORT_DIR and, if
allure-behave is installed, an Allure attachment.
"""

import os
import sys
import time
import logging
from pathlib import Path
from datetime import datetime

# allure-behave is optional
try:
	import allure
	from allure_commons.types import AttachmentType

	ALLURE_AVAILABLE = True
except ImportError:
	ALLURE_AVAILABLE = False

# Ensure project root is in Python path for imports
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
	sys.path.insert(0, str(project_root))

# Import settings after adding project root to path
from config.settings import (
	DEBUG,
	ENV,
	FAILURE_REPORT_DIR,
	PROPERTY_EXAMPLES,
	SAVE_REPORT_ON_FAILURE,
	get_search_defaults,
	get_sieve_config,
	validate_config,
)

logger = logging.getLogger(__name__)


# ============================================================================
# BEFORE HOOKS
# ============================================================================


def before_all(context):
	"""Fail fast on invalid settings and expose the run-wide defaults."""
	logger.info("Initializing test environment...")

	status = validate_config()
	for warning in status["warnings"]:
		logger.warning(f"Config warning: {warning}")
	if not status["valid"]:
		raise ValueError(f"Invalid configuration: {status['errors']}")

	context.property_examples = PROPERTY_EXAMPLES
	context.search_defaults = get_search_defaults()
	context.sieve_config = get_sieve_config()

	if DEBUG:
		print("\n" + "=" * 60)
		print("DEBUG MODE ENABLED")
		print("=" * 60)
		print(f"   Environment: {ENV}")
		print(f"   Property examples: {PROPERTY_EXAMPLES}")
		print(f"   Search defaults: {context.search_defaults}")
		print(f"   Sieve: {context.sieve_config}")
		print("=" * 60 + "\n")

	logger.info("Test environment ready")


def before_scenario(context, scenario):
	"""Reset the artifact log and start the scenario timer."""
	logger.info(f"Starting scenario: {scenario.name}")
	context.artifacts = []
	context.scenario_started = time.perf_counter()


# ============================================================================
# AFTER HOOKS
# ============================================================================


def after_scenario(context, scenario):
	"""
	Log the scenario duration; on failure, write context.artifacts out.

	Args:
		context: Behave context with artifacts and scenario_started
		scenario: Finished scenario
	"""
	elapsed = time.perf_counter() - getattr(context, "scenario_started", time.perf_counter())
	logger.info(
		f"Scenario '{scenario.name}' completed with status: {scenario.status} "
		f"in {elapsed:.3f}s"
	)

	if scenario.status != "failed":
		return

	report = "\n".join(str(item) for item in getattr(context, "artifacts", []))
	report = f"Scenario: {scenario.name}\nStatus: {scenario.status}\n\n{report}\n"

	if SAVE_REPORT_ON_FAILURE:
		os.makedirs(FAILURE_REPORT_DIR, exist_ok=True)
		timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
		filepath = os.path.join(
			FAILURE_REPORT_DIR, f"{_sanitize_filename(scenario.name)}_{timestamp}.txt"
		)
		try:
			Path(filepath).write_text(report, encoding="utf-8")
			logger.info(f"Failure report saved: {filepath}")
		except OSError as e:
			logger.error(f"Failed to save failure report: {e}")

	if ALLURE_AVAILABLE:
		try:
			allure.attach(
				report,
				name=f"Failure Artifacts - {scenario.name}",
				attachment_type=AttachmentType.TEXT,
			)
		except Exception as e:
			logger.debug(f"Could not attach report to Allure: {e}")


def after_all(context):
	logger.info("Test run finished")

	if DEBUG:
		print("\n" + "=" * 60)
		print("Test execution completed")
		print("=" * 60 + "\n")


# ============================================================================
# HELPER FUNCTIONS
# ============================================================================


def _sanitize_filename(filename: str) -> str:
	"""Scenario name reduced to characters that are safe in a report filename."""
	sanitized = filename.replace(" ", "_").replace("/", "_").replace("\\", "_")
	sanitized = "".join(c for c in sanitized if c.isalnum() or c in "._-")
	return sanitized


# ============================================================================
# EXPORTS
# ============================================================================

__all__ = [
	"before_all",
	"after_all",
	"before_scenario",
	"after_scenario",
]
