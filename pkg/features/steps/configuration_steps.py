"""
Step definitions for configuration checks.
"""

from behave import then, when

from config.settings import get_search_defaults, get_sieve_config, validate_config


@when("I validate the configuration")
def step_validate_configuration(context):
	context.config_status = validate_config()


@then("the configuration is valid")
def step_configuration_valid(context):
	status = context.config_status
	assert status["valid"], f"Configuration errors: {status['errors']}"
	assert not status["warnings"], f"Configuration warnings: {status['warnings']}"


@then("the search defaults name x_max, y_max and family_expand_limit")
def step_search_defaults(context):
	defaults = get_search_defaults()
	assert set(defaults) == {"x_max", "y_max", "family_expand_limit"}, f"Got {defaults}"
	assert all(value >= 0 for value in defaults.values()), f"Negative default in {defaults}"


@then("the sieve segment size is positive")
def step_sieve_config(context):
	assert get_sieve_config()["segment_size"] > 0
