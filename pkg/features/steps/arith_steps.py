"""
Step definitions for exact integer arithmetic.
"""

import random

from behave import then, when
from hypothesis import assume, settings
from hypothesis import given as for_all
from hypothesis import strategies as st

from utils.arith import (
	euler_criterion,
	exact_root,
	integer_root,
	is_perfect_square,
	isqrt,
	jacobi_symbol,
	legendre_symbol,
	mod_pow,
)
from utils.primes import simple_sieve
from utils.step_helpers import capture, trial_factorization

SEED = 1729
ODD_PRIMES = [int(p) for p in simple_sieve(9999)[1:]]


# ============================================================================
# HELPER FUNCTIONS
# ============================================================================


def property_settings(context):
	"""Hypothesis settings sized by PROPERTY_EXAMPLES."""
	return settings(max_examples=context.property_examples, deadline=None, database=None)


# ============================================================================
# WHEN STEPS - Actions
# ============================================================================


@when("I take the integer square root of {n}")
def step_isqrt(context, n):
	capture(context, isqrt, int(n))


@when("I test whether {n} is a perfect square")
def step_is_perfect_square(context, n):
	capture(context, is_perfect_square, int(n))


@when("I take the integer {k}-th root of {n}")
def step_integer_root(context, k, n):
	capture(context, integer_root, int(n), int(k))


@when("I take the exact {k}-th root of {n}")
def step_exact_root(context, k, n):
	capture(context, exact_root, int(n), int(k))


@when("I compute {base} to the power {exp} modulo {modulus}")
def step_mod_pow(context, base, exp, modulus):
	capture(context, mod_pow, int(base), int(exp), int(modulus))


@when("I compute the Legendre symbol of {a} modulo {p}")
def step_legendre(context, a, p):
	capture(context, legendre_symbol, int(a), int(p))


@when("I compute the Jacobi symbol of {a} over {n}")
def step_jacobi(context, a, n):
	capture(context, jacobi_symbol, int(a), int(n))


# ============================================================================
# THEN STEPS - Properties
# ============================================================================


@then("the integer square root brackets {count:d} seeded random integers below 10^30")
def step_isqrt_sweep(context, count):
	rng = random.Random(SEED)
	for _ in range(count):
		n = rng.randrange(10**30)
		r = isqrt(n)
		assert r * r <= n < (r + 1) * (r + 1), f"isqrt({n}) = {r} is not the floor root"


@then("n squared is a perfect square and n squared plus one is not")
def step_square_property(context):
	@property_settings(context)
	@for_all(st.integers(min_value=1, max_value=10**40))
	def check(n):
		assert is_perfect_square(n * n) == n
		assert is_perfect_square(n * n + 1) is None

	check()


@then("the Legendre symbol matches Euler's criterion for random odd primes below 10000")
def step_euler_criterion(context):
	@property_settings(context)
	@for_all(st.sampled_from(ODD_PRIMES), st.integers(min_value=-10**12, max_value=10**12))
	def check(p, a):
		assert legendre_symbol(a, p) == euler_criterion(a % p, p), f"a={a}, p={p}"

	check()


@then("the Legendre symbol is multiplicative for random odd primes below 10000")
def step_legendre_multiplicative(context):
	@property_settings(context)
	@for_all(
		st.sampled_from(ODD_PRIMES),
		st.integers(min_value=-10**9, max_value=10**9),
		st.integers(min_value=-10**9, max_value=10**9),
	)
	def check(p, a, b):
		assert legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p), (
			f"a={a}, b={b}, p={p}"
		)

	check()


@then("quadratic reciprocity holds for random pairs of distinct odd primes below 10000")
def step_reciprocity(context):
	@property_settings(context)
	@for_all(st.sampled_from(ODD_PRIMES), st.sampled_from(ODD_PRIMES))
	def check(p, q):
		assume(p != q)
		sign = -1 if (p - 1) // 2 * ((q - 1) // 2) % 2 else 1
		assert legendre_symbol(p, q) * legendre_symbol(q, p) == sign, f"p={p}, q={q}"

	check()


@then("the Jacobi symbol matches the factorization for every odd n below 10000")
def step_jacobi_factorization(context):
	rng = random.Random(SEED)
	for n in range(1, 10000, 2):
		factors = trial_factorization(n)
		for _ in range(3):
			a = rng.randint(-10**6, 10**6)
			expected = 1
			for f in factors:
				expected *= euler_criterion(a % f, f)
			assert jacobi_symbol(a, n) == expected, f"({a}/{n}) with factors {factors}"
