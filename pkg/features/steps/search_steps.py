"""
Step definitions for evaluation, brute-force search and modular obstructions.
"""

import random

from behave import given, then, when

from solvers.search import (
	EquationSpec,
	Parity,
	SearchBounds,
	Verdict,
	brute_force,
	evaluate,
	modular_obstruction,
)
from utils.arith import is_perfect_square
from utils.step_helpers import capture, parse_tuples

SEED = 4181
SMALL_SG_PRIMES = (2, 3, 5, 11, 23, 29, 41, 53, 83, 89, 113)
SIGNS = ((0, 0), (0, 1), (1, 0))


# ============================================================================
# HELPER FUNCTIONS
# ============================================================================


def parse_parity(text):
	return None if text == "any" else Parity(text)


def random_spec(rng):
	alpha, beta = rng.choice(SIGNS)
	return EquationSpec(alpha, beta, rng.choice(SMALL_SG_PRIMES), rng.randint(0, 6))


def admissible(solution, x_parity, y_parity, x_min, y_min):
	return (
		solution.x >= x_min
		and solution.y >= y_min
		and (x_parity is None or x_parity.matches(solution.x))
		and (y_parity is None or y_parity.matches(solution.y))
	)


# ============================================================================
# GIVEN STEPS - Setup/Preconditions
# ============================================================================


@given("the equation with alpha {alpha}, beta {beta}, p {p} and k {k}")
def step_given_equation(context, alpha, beta, p, k):
	context.spec = EquationSpec(int(alpha), int(beta), int(p), int(k))
	context.artifacts.append(f"spec: {context.spec}")


# ============================================================================
# WHEN STEPS - Actions
# ============================================================================


@when("I build the equation with alpha {alpha}, beta {beta}, p {p} and k {k}")
def step_build_equation(context, alpha, beta, p, k):
	capture(context, EquationSpec, int(alpha), int(beta), int(p), int(k))


@when("I evaluate the equation at x {x} and y {y}")
def step_evaluate(context, x, y):
	capture(context, evaluate, context.spec, int(x), int(y))


@when("I search within x <= {x_max} and y <= {y_max}")
def step_search(context, x_max, y_max):
	capture(context, brute_force, context.spec, SearchBounds(int(x_max), int(y_max)))


@when("I check the obstruction modulo {m} with x {x_parity} from {x_min} and y {y_parity} from {y_min}")
def step_check_obstruction(context, m, x_parity, x_min, y_parity, y_min):
	capture(
		context,
		modular_obstruction,
		context.spec,
		int(m),
		parse_parity(x_parity),
		parse_parity(y_parity),
		int(x_min),
		int(y_min),
	)


# ============================================================================
# THEN STEPS - Verification
# ============================================================================


@then("the solutions found are {solutions}")
def step_solutions_found(context, solutions):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	found = [s.triple for s in context.result]
	expected = parse_tuples(solutions)
	assert set(found) == expected, f"Expected {sorted(expected)}, got {found}"
	assert found == sorted(found), f"Solutions are not ordered by (x, y): {found}"


@then("every solution found re-evaluates to its square")
def step_solutions_reevaluate(context):
	for s in context.result:
		value = evaluate(context.spec, s.x, s.y)
		assert value == s.z * s.z, f"{s} evaluates to {value}"
		assert is_perfect_square(value) == s.z and s.z >= 0


@then("searching within larger bounds keeps every earlier solution for {count:d} seeded random equations")
def step_search_monotone(context, count):
	rng = random.Random(SEED)
	for _ in range(count):
		spec = random_spec(rng)
		small = SearchBounds(rng.randint(0, 12), rng.randint(0, 6))
		large = SearchBounds(small.x_max + rng.randint(0, 8), small.y_max + rng.randint(0, 4))
		inner = {s.triple for s in brute_force(spec, small)}
		outer = {s.triple for s in brute_force(spec, large)}
		assert inner <= outer, f"{spec}: {sorted(inner - outer)} lost when bounds grew"
		restricted = {t for t in outer if small.contains(t[0], t[1])}
		assert restricted == inner, f"{spec}: restriction of larger search differs"


@then("searching twice within x <= {x_max:d} and y <= {y_max:d} gives identical results")
def step_search_deterministic(context, x_max, y_max):
	bounds = SearchBounds(x_max, y_max)
	assert brute_force(context.spec, bounds) == brute_force(context.spec, bounds)


@then("the obstruction verdict is {verdict}")
def step_obstruction_verdict(context, verdict):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	assert context.result is Verdict(verdict), f"Expected {verdict}, got {context.result}"


@then(
	"no infeasible verdict on {count:d} seeded random equations is contradicted "
	"by search within x <= {x_max:d} and y <= {y_max:d}"
)
def step_obstruction_soundness(context, count, x_max, y_max):
	rng = random.Random(SEED)
	parities = (None, Parity.EVEN, Parity.ODD)
	infeasible = 0
	for _ in range(count):
		spec = random_spec(rng)
		modulus = rng.choice((3, 4, 5, 7, 8, 9, 11, 13, 16, spec.p, spec.q))
		x_parity, y_parity = rng.choice(parities), rng.choice(parities)
		x_min, y_min = rng.randint(0, 1), rng.randint(0, 1)
		verdict = modular_obstruction(spec, modulus, x_parity, y_parity, x_min, y_min)
		if verdict is Verdict.FEASIBLE:
			continue
		infeasible += 1
		hits = [
			s for s in brute_force(spec, SearchBounds(x_max, y_max))
			if admissible(s, x_parity, y_parity, x_min, y_min)
		]
		assert not hits, (
			f"{spec} declared infeasible mod {modulus} "
			f"(x {x_parity}, y {y_parity}, x >= {x_min}, y >= {y_min}) but {hits[0]} solves it"
		)
	context.artifacts.append(f"{infeasible} of {count} random checks were infeasible")
	assert infeasible > 0, f"None of the {count} random checks was infeasible"
