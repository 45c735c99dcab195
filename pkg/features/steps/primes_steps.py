"""
Step definitions for primality and Sophie Germain prime enumeration.
"""

from unittest.mock import patch

from behave import then, when

from utils.primes import (
	_sieved_pairs,
	enumerate_sg,
	is_prime,
	is_sophie_germain,
	sg_density_stats,
	sg_residue_class,
)
from utils.step_helpers import capture, parse_ints, trial_division_is_prime


# ============================================================================
# HELPER FUNCTIONS
# ============================================================================


def parse_counts(text):
	"""Parse "1:10, 3:11" into {1: 10, 3: 11}."""
	counts = {}
	for item in text.split(","):
		residue, count = item.split(":")
		counts[int(residue)] = int(count)
	return counts


# ============================================================================
# WHEN STEPS - Actions
# ============================================================================


@when("I test {n} for primality")
def step_test_primality(context, n):
	capture(context, is_prime, int(n))


@when("I test whether {p} is a Sophie Germain prime")
def step_test_sophie_germain(context, p):
	capture(context, is_sophie_germain, int(p))


@when("I enumerate Sophie Germain primes up to {limit}")
def step_enumerate(context, limit):
	context.pairs = capture(context, enumerate_sg, int(limit))


@when("I select Sophie Germain primes up to {limit} congruent to {k} mod 2^{m}")
def step_select_class(context, limit, k, m):
	capture(context, sg_residue_class, int(limit), int(m), int(k))


@when("I count Sophie Germain primes up to {limit} by class mod 2^{m}")
def step_count_classes(context, limit, m):
	context.stats = capture(context, sg_density_stats, int(limit), int(m))


# ============================================================================
# THEN STEPS - Verification
# ============================================================================


@then("the primality verdict is {verdict}")
def step_primality_verdict(context, verdict):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	assert context.result is (verdict == "prime"), f"Expected {verdict}, got {context.result}"


@then("the Sophie Germain primes are {primes}")
def step_sg_primes_are(context, primes):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	found = [pair.p for pair in context.pairs]
	assert found == parse_ints(primes), f"Expected {primes}, got {found}"


@then("every safe prime equals twice its Sophie Germain prime plus one")
def step_safe_primes(context):
	for pair in context.pairs:
		assert pair.q == 2 * pair.p + 1, f"Bad pair {pair}"
		assert is_prime(pair.q), f"{pair.q} is not prime"
	assert context.pairs == sorted(set(context.pairs)), "Enumeration is not strictly increasing"


@then("the selected primes are {primes}")
def step_selected_primes(context, primes):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	assert context.result == parse_ints(primes), f"Expected {primes}, got {context.result}"


@then("the class counts are {counts}")
def step_class_counts(context, counts):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	assert context.stats.counts == parse_counts(counts), (
		f"Expected {counts}, got {context.stats.counts}"
	)


@then("p = 2 is reported separately")
def step_two_separate(context):
	assert context.stats.two_included, "p = 2 should be flagged"
	assert all(r % 2 == 1 for r in context.stats.counts), "Counts must be over odd classes only"


@then("every class count is positive")
def step_counts_positive(context):
	empty = [r for r, c in context.stats.counts.items() if c == 0]
	assert not empty, f"Empty classes: {empty}"


@then("the class counts add up to the odd Sophie Germain primes up to {limit:d}")
def step_counts_total(context, limit):
	odd = [pair.p for pair in enumerate_sg(limit) if pair.p != 2]
	assert context.stats.total == len(odd), f"Total {context.stats.total} != {len(odd)}"


@then("the Sophie Germain primes below {limit:d} match trial division")
def step_sg_trial_division(context, limit):
	found = [pair.p for pair in enumerate_sg(limit - 1)]
	expected = [
		p for p in range(2, limit)
		if trial_division_is_prime(p) and trial_division_is_prime(2 * p + 1)
	]
	missing = sorted(set(expected) - set(found))
	extra = sorted(set(found) - set(expected))
	assert not missing and not extra, f"missing={missing[:10]} extra={extra[:10]}"


@then("is_prime and is_sophie_germain match trial division for every n below {limit:d}")
def step_primality_trial_division(context, limit):
	oracle = [trial_division_is_prime(n) for n in range(2 * limit + 2)]
	prime_mismatches = [n for n in range(limit) if is_prime(n) != oracle[n]]
	sg_mismatches = [
		p for p in range(limit)
		if is_sophie_germain(p) != (oracle[p] and oracle[2 * p + 1])
	]
	assert not prime_mismatches, f"is_prime disagrees at {prime_mismatches[:10]}"
	assert not sg_mismatches, f"is_sophie_germain disagrees at {sg_mismatches[:10]}"


@then("enumerating up to {limit:d} with the sieve ceiling lowered to {ceiling:d} gives the sieved list")
def step_enumerate_above_ceiling(context, limit, ceiling):
	sieved = enumerate_sg(limit)
	with patch("utils.primes.SIEVE_LIMIT", ceiling):
		per_candidate = enumerate_sg(limit)
	above = [pair.p for pair in per_candidate if pair.p > ceiling]
	assert above, f"No primes above the ceiling {ceiling}"
	assert per_candidate == sieved, (
		f"{len(per_candidate)} pairs with ceiling {ceiling} vs {len(sieved)} sieved"
	)


@then("sieving up to {limit:d} in segments of {size:d} matches a single segment")
def step_segmented_sieve(context, limit, size):
	segmented = list(_sieved_pairs(limit, size))
	whole = list(_sieved_pairs(limit, limit + 1))
	assert segmented == whole, f"{len(segmented)} pairs in segments vs {len(whole)} in one pass"


@then("the odd classes mod 2^{m:d} partition the odd Sophie Germain primes up to {limit:d}")
def step_partition(context, m, limit):
	modulus = 2**m
	odd = {pair.p for pair in enumerate_sg(limit) if pair.p != 2}
	seen = set()
	for k in range(1, modulus, 2):
		members = sg_residue_class(limit, m, k)
		assert all(p % modulus == k for p in members), f"Class {k} has a stray member"
		assert not seen & set(members), f"Class {k} overlaps an earlier class"
		seen.update(members)
	assert seen == odd, f"Classes miss {sorted(odd - seen)[:10]}"
