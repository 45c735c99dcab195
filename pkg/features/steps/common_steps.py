"""
Step definitions shared by every feature: result and error checks.
"""

from behave import then

from solvers.errors import UnsupportedSpecError, VerificationError
from utils.step_helpers import parse_optional_int


# ============================================================================
# THEN STEPS - Verification
# ============================================================================


@then("the result is {expected}")
def step_result_is(context, expected):
	"""Compare context.result with an integer or "none"."""
	assert context.error is None, f"Unexpected error: {context.error!r}"
	want = parse_optional_int(expected)
	assert context.result == want, f"Expected {want!r}, got {context.result!r}"


@then("a ValueError is raised")
def step_value_error_raised(context):
	assert isinstance(context.error, ValueError), (
		f"Expected ValueError, got error={context.error!r} result={context.result!r}"
	)


@then("an UnsupportedSpecError is raised")
def step_unsupported_raised(context):
	assert isinstance(context.error, UnsupportedSpecError), (
		f"Expected UnsupportedSpecError, got error={context.error!r} result={context.result!r}"
	)


@then("a VerificationError is raised")
def step_verification_error_raised(context):
	assert isinstance(context.error, VerificationError), (
		f"Expected VerificationError, got error={context.error!r} result={context.result!r}"
	)


@then('the error message contains "{text}"')
def step_error_message_contains(context, text):
	assert context.error is not None, "Expected an error, but the call succeeded"
	assert text in str(context.error), f"'{text}' not in error message: {context.error}"


@then("no error is raised")
def step_no_error(context):
	assert context.error is None, f"Unexpected error: {context.error!r}"
