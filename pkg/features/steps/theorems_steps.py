"""
Step definitions for classification, closed forms, families and cross-checks.
"""

import json
from dataclasses import replace

from behave import then, when

from solvers.errors import UnsupportedSpecError
from solvers.search import EquationSpec, SearchBounds, brute_force, evaluate
from solvers.theorems import (
	THEOREMS,
	CrossCheckVerdict,
	FamilyTag,
	PowerTerm,
	SolutionSet,
	classify,
	closed_form,
	cross_check,
	expand_family,
)
from utils.primes import enumerate_sg
from utils.step_helpers import capture, parse_tuples

FAMILIES = {
	family.name: family
	for statement in THEOREMS.values()
	for family in statement.families
}


# ============================================================================
# WHEN STEPS - Actions
# ============================================================================


@when("I classify the equation")
def step_classify(context):
	capture(context, classify, context.spec)


@when("I take the closed form")
def step_closed_form(context):
	capture(context, closed_form, context.spec)


@when("I expand family {name} from n = {n_lo} to n = {n_hi}")
def step_expand_family(context, name, n_lo, n_hi):
	context.family = FAMILIES[name]
	capture(context, expand_family, context.family, int(n_lo), int(n_hi))


@when("I expand a family whose z is off by one from n = {n_lo} to n = {n_hi}")
def step_expand_broken_family(context, n_lo, n_hi):
	family = FAMILIES["A1.1"]
	context.family = replace(family, z=family.z + (PowerTerm(1, 0, 0),), name="broken")
	capture(context, expand_family, context.family, int(n_lo), int(n_hi))


@when("I cross-check within x <= {x_max} and y <= {y_max}")
def step_cross_check(context, x_max, y_max):
	capture(context, cross_check, context.spec, SearchBounds(int(x_max), int(y_max)))


# ============================================================================
# THEN STEPS - Verification
# ============================================================================


@then("the theorem tag is {tag}")
def step_theorem_tag(context, tag):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	assert context.result is FamilyTag(tag), f"Expected {tag}, got {context.result.value}"


@then("every equation with p below {limit:d} and k <= {k_max:d} is classified, and unsupported ones can still be searched")
def step_classification_total(context, limit, k_max):
	for pair in enumerate_sg(limit - 1):
		for alpha, beta in ((0, 0), (0, 1), (1, 0)):
			for k in range(k_max + 1):
				spec = EquationSpec(alpha, beta, pair.p, k)
				tag = classify(spec)
				assert isinstance(tag, FamilyTag), f"{spec} classified as {tag!r}"
				if tag is FamilyTag.UNSUPPORTED:
					try:
						closed_form(spec)
					except UnsupportedSpecError:
						pass
					else:
						raise AssertionError(f"{spec} is unsupported but has a closed form")
					brute_force(spec, SearchBounds(5, 3))
				else:
					assert closed_form(spec).tag is tag


@then("the closed-form solutions are {solutions}")
def step_closed_form_solutions(context, solutions):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	found = [s.triple for s in context.result.solutions()]
	expected = parse_tuples(solutions)
	assert set(found) == expected, f"Expected {sorted(expected)}, got {found}"
	assert len(found) == len(expected), f"Duplicates in {found}"
	assert found == sorted(found, key=lambda t: (t[0], t[1])), f"Not ordered by (x, y): {found}"


@then("every closed-form solution re-evaluates exactly")
def step_closed_form_reevaluates(context):
	for s in context.result.solutions():
		assert evaluate(context.spec, s.x, s.y) == s.z * s.z, f"{s} fails {context.spec.describe()}"


@then("the closed form is marked complete")
def step_closed_form_complete(context):
	assert context.result.complete


@then("the family members are k={k} {solution}")
def step_family_members(context, k, solution):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	members = context.result
	assert [m.triple for m in members] == sorted(parse_tuples(solution)), f"Got {members}"
	assert all(m.k == int(k) for m in members), f"Expected k={k}, got {[m.k for m in members]}"


@then("the family produced {count:d} members with increasing k")
def step_family_count(context, count):
	members = context.result
	assert len(members) == count, f"Expected {count} members, got {len(members)}"
	ks = [m.k for m in members]
	assert ks == sorted(set(ks)), f"k values are not increasing: {ks}"


@then("the cross-check verdict is {verdict}")
def step_cross_check_verdict(context, verdict):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	report = context.result
	assert report.verdict is CrossCheckVerdict(verdict), (
		f"Expected {verdict}: missing={report.missing}, unexpected={report.unexpected}"
	)


@then("the cross-checked solutions are {solutions}")
def step_cross_checked_solutions(context, solutions):
	expected = parse_tuples(solutions)
	closed = {s.triple for s in context.result.closed_form}
	searched = {s.triple for s in context.result.brute_force}
	assert closed == expected, f"Closed form {sorted(closed)} != {sorted(expected)}"
	assert searched == expected, f"Search {sorted(searched)} != {sorted(expected)}"


@then(
	"cross-checks within x <= {x_max:d} and y <= {y_max:d} agree for every {tag} equation "
	"with alpha {alpha:d}, beta {beta:d}, p {p:d} and {k_lo:d} <= k <= {k_hi:d}"
)
def step_cross_check_matrix(context, x_max, y_max, tag, alpha, beta, p, k_lo, k_hi):
	bounds = SearchBounds(x_max, y_max)
	checked = []
	for k in range(k_lo, k_hi + 1):
		spec = EquationSpec(alpha, beta, p, k)
		if classify(spec) is not FamilyTag(tag):
			continue
		report = cross_check(spec, bounds)
		context.artifacts.append(report.to_json())
		assert report.verdict is CrossCheckVerdict.EQUAL, (
			f"{spec}: missing={report.missing}, unexpected={report.unexpected}"
		)
		checked.append(k)
	assert checked, f"No k in [{k_lo}, {k_hi}] is covered by {tag} for p={p}"


@then("the solution set survives a JSON round trip byte for byte")
def step_solution_set_json(context):
	assert context.error is None, f"Unexpected error: {context.error!r}"
	line = context.result.to_json_line()
	restored = SolutionSet.from_json(json.loads(line))
	assert restored.to_json_line() == line, f"{restored.to_json_line()} != {line}"
	assert restored.solutions() == context.result.solutions()
	assert [f.name for f in restored.families] == [f.name for f in context.result.families]
