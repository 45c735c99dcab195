"""
Step definitions for the command-line interface.
"""

import json
import os
import shlex
from dataclasses import astuple
from unittest.mock import patch

from behave import then, when

from cli import build_parser
from solvers.classical import (
	catalan_search,
	nagell_ljunggren_search,
	solve_px_plus_one_square,
	solve_safe_power_square,
)
from solvers.mordell import (
	certify_points,
	get_curve,
	solve_2_5x_eq_1_plus_square,
	solve_5x_eq_4_plus_square,
)
from solvers.search import EquationSpec, SearchBounds, brute_force
from solvers.theorems import closed_form, cross_check
from utils.primes import enumerate_sg, sg_density_stats, sg_residue_class
from utils.step_helpers import parse_tuples, run_cli


# ============================================================================
# HELPER FUNCTIONS
# ============================================================================


def record_run(context, args, status, out, err):
	context.cli_status, context.cli_out, context.cli_err = status, out, err
	context.artifacts.append(f"$ sgdio {args}\n[exit {status}]\n{out}{err}")


def output_lines(context):
	return [line for line in context.cli_out.splitlines() if line]


def rows(payload):
	return [tuple(int(v) for v in row.values()) for row in payload["rows"]]


def lemma_rows(ns):
	if ns.name == "five-power":
		return solve_5x_eq_4_plus_square(ns.confirm)
	if ns.name == "twice-five-power":
		return solve_2_5x_eq_1_plus_square(ns.confirm)
	if ns.name == "prime-power-plus-one":
		return solve_px_plus_one_square(ns.p)
	return solve_safe_power_square(ns.p, ns.k)


def library_and_cli(ns, payload):
	"""
	The same result twice: from a direct library call and from the CLI payload.

	Args:
		ns: Parsed CLI arguments
		payload: First JSON line printed by the CLI

	Returns:
		(library value, CLI value) in comparable form
	"""
	if ns.command == "solve":
		return closed_form(EquationSpec(ns.alpha, ns.beta, ns.p, ns.k)).to_json(), payload

	if ns.command in ("search", "crosscheck"):
		spec = EquationSpec(ns.alpha, ns.beta, ns.p, ns.k)
		bounds = SearchBounds(ns.xmax, ns.ymax)
		if ns.command == "crosscheck":
			return cross_check(spec, bounds).to_json(), payload
		library = [s.triple for s in brute_force(spec, bounds)]
		cli = [(int(s["x"]), int(s["y"]), int(s["z"])) for s in payload["solutions"]]
		return library, cli

	if ns.command == "sg":
		m = ns.mod.bit_length() - 1
		if ns.stats:
			library = sg_density_stats(ns.limit, m).counts
			return library, {int(r): int(c) for r, c in payload["counts"].items()}
		if ns.residue is None:
			library = [pair.p for pair in enumerate_sg(ns.limit)]
		else:
			library = sg_residue_class(ns.limit, m, ns.residue)
		return library, [int(v) for v in payload["primes"]]

	if ns.command == "mordell":
		certificate = certify_points(get_curve(ns.n), ns.xbound)
		return [(pt.x, pt.y) for pt in certificate.points], rows(payload)

	if ns.command == "catalan":
		found = catalan_search(ns.amax, ns.bmax, ns.xmax, ns.ymax)
		return [astuple(s) for s in found], rows(payload)

	if ns.command == "nl":
		found = nagell_ljunggren_search(ns.xmax, ns.nmax, ns.qmax)
		return [astuple(s) for s in found], rows(payload)

	return [tuple(r) for r in lemma_rows(ns)], rows(payload)


# ============================================================================
# WHEN STEPS - Actions
# ============================================================================


@when('I run the CLI with "{args}" while the search finds nothing')
def step_run_cli_empty_search(context, args):
	with patch("solvers.theorems.brute_force", return_value=[]):
		status, out, err = run_cli(shlex.split(args))
	record_run(context, args, status, out, err)


@when('I run the CLI with "{args}" and OUTPUT_FORMAT set to {fmt}')
def step_run_cli_output_format(context, args, fmt):
	with patch.dict(os.environ, {"OUTPUT_FORMAT": fmt}):
		status, out, err = run_cli(shlex.split(args))
	record_run(context, f"{args}  (OUTPUT_FORMAT={fmt})", status, out, err)


@when('I run the CLI with "{args}"')
def step_run_cli(context, args):
	status, out, err = run_cli(shlex.split(args))
	record_run(context, args, status, out, err)


# ============================================================================
# THEN STEPS - Verification
# ============================================================================


@then("the exit status is {status:d}")
def step_exit_status(context, status):
	assert context.cli_status == status, (
		f"Expected exit {status}, got {context.cli_status}\n"
		f"stdout:\n{context.cli_out}\nstderr:\n{context.cli_err}"
	)


@then('the output contains "{text}"')
def step_output_contains(context, text):
	text = text.replace('\\"', '"')
	assert text in context.cli_out, f"'{text}' not in output:\n{context.cli_out}"


@then('the error output contains "{text}"')
def step_error_output_contains(context, text):
	assert text in context.cli_err, f"'{text}' not in error output:\n{context.cli_err}"


@then("every output line is JSON that re-serializes byte for byte")
def step_json_lines(context):
	lines = output_lines(context)
	assert lines, "No output"
	for line in lines:
		assert json.dumps(json.loads(line), separators=(",", ":")) == line, f"Not canonical: {line}"


@then("the first output line is the library closed form for alpha {alpha:d}, beta {beta:d}, p {p:d} and k {k:d}")
def step_first_line_matches_library(context, alpha, beta, p, k):
	expected = closed_form(EquationSpec(alpha, beta, p, k)).to_json_line()
	first = output_lines(context)[0]
	assert first == expected, f"CLI:\n{first}\nlibrary:\n{expected}"


@then('the JSON output matches a direct library call for "{args}"')
def step_json_matches_library(context, args):
	ns = build_parser().parse_args(shlex.split(args))
	payload = json.loads(output_lines(context)[0])
	library, cli = library_and_cli(ns, payload)
	assert cli == library, f"CLI:\n{cli}\nlibrary:\n{library}"


@then("the JSON solutions are {solutions}")
def step_json_solutions(context, solutions):
	payload = json.loads(output_lines(context)[0])
	found = {(int(s["x"]), int(s["y"]), int(s["z"])) for s in payload["solutions"]}
	assert found == parse_tuples(solutions), f"Got {sorted(found)}"
	assert int(payload["count"]) == len(found)
