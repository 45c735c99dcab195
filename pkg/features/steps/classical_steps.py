"""
Step definitions for the classical exponential Diophantine results.
"""

import math
from dataclasses import astuple

from behave import then, when

from solvers.classical import (
	_fermat_exponent_is_power_of_two,
	_mersenne_exponent_is_prime,
	catalan_search,
	nagell_ljunggren_search,
	repunit_by_division,
	repunit_sum,
	solve_px_plus_one_square,
	solve_safe_power_square,
)
from solvers.search import EquationSpec, SearchBounds, brute_force
from utils.primes import enumerate_sg, is_prime, simple_sieve
from utils.step_helpers import capture, parse_tuples, trial_division_is_prime


# ============================================================================
# HELPER FUNCTIONS
# ============================================================================


def as_tuples(rows):
	"""Dataclass solutions or plain tuples, as plain tuples."""
	return [row if isinstance(row, tuple) else astuple(row) for row in rows]


# ============================================================================
# WHEN STEPS - Actions
# ============================================================================


@when("I search Catalan solutions within {a_max}, {b_max}, {x_max}, {y_max}")
def step_catalan(context, a_max, b_max, x_max, y_max):
	capture(context, catalan_search, int(a_max), int(b_max), int(x_max), int(y_max))


@when("I solve p^x + 1 = y^2 for p {p}")
def step_px_plus_one(context, p):
	capture(context, solve_px_plus_one_square, int(p))


@when("I search Nagell-Ljunggren solutions within {x_max}, {n_max}, {q_max}")
def step_nagell_ljunggren(context, x_max, n_max, q_max):
	capture(context, nagell_ljunggren_search, int(x_max), int(n_max), int(q_max))


@when("I solve the safe-power equation for p {p} and k {k}")
def step_safe_power(context, p, k):
	capture(context, solve_safe_power_square, int(p), int(k))


# ============================================================================
# THEN STEPS - Verification
# ============================================================================


@then("the classical solutions are {solutions}")
def step_classical_solutions(context, solutions):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	found = as_tuples(context.result)
	expected = parse_tuples(solutions)
	assert set(found) == expected, f"Expected {sorted(expected)}, got {found}"
	assert found == sorted(found), f"Solutions are not sorted: {found}"


@then("for every prime below {limit:d} the closed form for p^x + 1 = y^2 matches a scan of x <= {x_max:d}")
def step_px_plus_one_scan(context, limit, x_max):
	for p in simple_sieve(limit - 1).tolist():
		scanned = set()
		for x in range(x_max + 1):
			value = p**x + 1
			if math.isqrt(value) ** 2 == value:
				scanned.add((x, math.isqrt(value)))
		closed = set(solve_px_plus_one_square(p))
		assert closed == scanned, f"p={p}: closed form {closed} vs scan {scanned}"


@then("the repunit sum equals (x^n - 1)/(x - 1) for 2 <= x <= {x_max:d} and 1 <= n <= {n_max:d}")
def step_repunit_forms(context, x_max, n_max):
	for x in range(2, x_max + 1):
		for n in range(1, n_max + 1):
			assert repunit_sum(x, n) == repunit_by_division(x, n), f"x={x}, n={n}"


@then(
	"for every Sophie Germain prime below {limit:d} and 1 <= k <= {k_max:d} "
	"the safe-power closed form matches a search of y <= {y_max:d}"
)
def step_safe_power_search(context, limit, k_max, y_max):
	for pair in enumerate_sg(limit - 1):
		for k in range(1, k_max + 1):
			spec = EquationSpec(0, 0, pair.p, k)
			searched = {(s.y, s.z) for s in brute_force(spec, SearchBounds(0, y_max))}
			closed = set(solve_safe_power_square(pair.p, k))
			assert closed == searched, f"p={pair.p}, k={k}: closed {closed} vs search {searched}"


@then("whenever 2^k - 1 is prime for 1 <= k <= {k_max:d}, k is prime")
def step_mersenne_exponents(context, k_max):
	exponents = []
	for k in range(1, k_max + 1):
		assert _mersenne_exponent_is_prime(k), f"2^{k} - 1 is prime but {k} is not"
		if is_prime(2**k - 1):
			assert trial_division_is_prime(k)
			exponents.append(k)
	assert exponents == [2, 3, 5, 7, 13, 17, 19, 31, 61], f"Mersenne exponents: {exponents}"


@then("whenever 2^k + 1 is prime for 0 <= k <= {k_max:d}, k is zero or a power of two")
def step_fermat_exponents(context, k_max):
	exponents = []
	for k in range(0, k_max + 1):
		assert _fermat_exponent_is_power_of_two(k), f"2^{k} + 1 is prime but {k} is not a power of two"
		if is_prime(2**k + 1):
			exponents.append(k)
	assert exponents == [0, 1, 2, 4, 8, 16], f"Fermat exponents: {exponents}"
