"""
Step definitions for Mordell curves, the curve tables and the five-power lemmas.
"""

import math
import tempfile
from pathlib import Path

from behave import then, when

from config.settings import MORDELL_TABLE_PATH
from constant import REDUCTION_CURVES
from database.curve_tables import (
	dump_curve_tables,
	load_curve_tables,
	parse_curve_tables,
	save_curve_tables,
)
from solvers.mordell import (
	MordellPoint,
	certify_points,
	get_curve,
	integral_points,
	solve_2_5x_eq_1_plus_square,
	solve_5x_eq_4_plus_square,
)
from utils.step_helpers import capture, parse_tuples


# ============================================================================
# HELPER FUNCTIONS
# ============================================================================


def scan(n, x_bound):
	return integral_points(get_curve(n), x_bound)


def certify(n, x_bound):
	return certify_points(get_curve(n), x_bound)


def naive_points(n, x_bound):
	"""Every (x, y) with |x| <= x_bound, y >= 0 and y^2 = x^3 + n, by math.isqrt."""
	points = []
	for x in range(-x_bound, x_bound + 1):
		value = x**3 + n
		if value >= 0 and math.isqrt(value) ** 2 == value:
			points.append((x, math.isqrt(value)))
	return points


# ============================================================================
# WHEN STEPS - Actions
# ============================================================================


@when("I scan the curve with constant {n} up to |x| <= {x_bound}")
def step_scan_curve(context, n, x_bound):
	context.curve_n = int(n)
	context.points = capture(context, scan, int(n), int(x_bound))


@when("I certify the curve with constant {n} up to |x| <= {x_bound}")
def step_certify_curve(context, n, x_bound):
	context.certificate = capture(context, certify, int(n), int(x_bound))
	context.points = list(context.certificate.points)


@when("I solve the five-power lemma")
def step_solve_five_power(context):
	context.lemma_scale, context.lemma_difference = 1, 4
	capture(context, solve_5x_eq_4_plus_square)


@when("I solve the twice-five-power lemma")
def step_solve_twice_five_power(context):
	context.lemma_scale, context.lemma_difference = 2, 1
	capture(context, solve_2_5x_eq_1_plus_square)


@when("I solve the five-power lemma confirming up to x <= {bound}")
def step_solve_five_power_bounded(context, bound):
	capture(context, solve_5x_eq_4_plus_square, int(bound))


@when('I parse the curve table text "{text}"')
def step_parse_table_text(context, text):
	capture(context, parse_curve_tables, text + "\n")


# ============================================================================
# THEN STEPS - Verification
# ============================================================================


@then("the integral points are {points}")
def step_integral_points(context, points):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	found = [(pt.x, pt.y) for pt in context.points]
	expected = parse_tuples(points)
	assert set(found) == expected, f"Expected {sorted(expected)}, got {found}"
	assert len(found) == len(expected), f"Duplicate points in {found}"


@then("every integral point lies on its curve")
def step_points_on_curve(context):
	for pt in context.points:
		assert pt.y >= 0, f"{pt} has negative y"
		assert pt.y * pt.y == pt.x**3 + context.curve_n, f"{pt} is not on y^2 = x^3 + {context.curve_n}"


@then("the curve with constant {n} has discriminant {discriminant}")
def step_curve_discriminant(context, n, discriminant):
	curve = get_curve(int(n))
	assert curve.discriminant == int(discriminant), f"Got {curve.discriminant}"
	assert curve.discriminant != 0


@then("the certificate matches the shipped table")
def step_certificate_trusted(context):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	assert context.certificate.table_trusted, (
		f"Scan {context.certificate.points} disagrees with the table"
	)


@then("the certificate is not backed by a table")
def step_certificate_untrusted(context):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	assert context.certificate.curve.known_complete_points is None
	assert not context.certificate.table_trusted


@then("scanning the curve with constant {n:d} up to |x| <= {x_bound:d} matches a naive search")
def step_scan_matches_naive(context, n, x_bound):
	found = [(pt.x, pt.y) for pt in scan(n, x_bound)]
	expected = naive_points(n, x_bound)
	assert found == expected, f"Scan {found} != naive {expected}"


@then("the lemma solutions are {solutions}")
def step_lemma_solutions(context, solutions):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	assert set(context.result) == parse_tuples(solutions), f"Got {context.result}"
	assert context.result == sorted(context.result)


@then("every lemma solution maps onto a tabled curve point")
def step_lemma_reduction(context):
	scale, difference = context.lemma_scale, context.lemma_difference
	for x, y in context.result:
		assert scale * 5**x == difference + y * y, f"({x}, {y}) is not a solution"
		r, k = x % 3, x // 3
		n = REDUCTION_CURVES[r]
		point = MordellPoint(scale * 5 ** (k + r), scale * 5**r * y)
		table = get_curve(n).known_complete_points
		assert point in table, f"({x}, {y}) maps to {point}, which is not tabled for n={n}"


@then("parsing and dumping the shipped curve table reproduces it exactly")
def step_table_round_trip(context):
	text = Path(MORDELL_TABLE_PATH).read_text(encoding="ascii")
	assert dump_curve_tables(parse_curve_tables(text)) == text


@then("saving the shipped curve table to a temporary file and loading it gives the same points")
def step_table_save_load(context):
	tables = load_curve_tables()
	with tempfile.TemporaryDirectory() as tmp:
		path = Path(tmp) / "curves.txt"
		save_curve_tables(tables, path)
		assert load_curve_tables(path) == tables
		assert path.read_text(encoding="ascii") == Path(MORDELL_TABLE_PATH).read_text(encoding="ascii")
