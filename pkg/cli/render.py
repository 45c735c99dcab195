"""
Table and JSON rendering for CLI results.

JSON output is line-delimited: one compact object per line, integers as
decimal strings, so a line parses and re-serializes byte for byte.
"""

import json
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from solvers.search import EquationSpec, Solution
from solvers.theorems import CrossCheckReport, ParametricFamily, SolutionSet


def json_line(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _spec_json(spec: EquationSpec) -> Dict[str, str]:
    return {"alpha": str(spec.alpha), "beta": str(spec.beta), "p": str(spec.p), "k": str(spec.k)}


def _triples(solutions: Iterable[Solution]) -> str:
    return ", ".join(str(s) for s in solutions) or "none"


# ============================================================================
# SOLVE
# ============================================================================


def render_solution_set(
    solution_set: SolutionSet,
    expansions: Sequence[Tuple[ParametricFamily, int, Solution]],
    fmt: str,
) -> List[str]:
    if fmt == "json":
        lines = [solution_set.to_json_line()]
        for family, n, member in expansions:
            lines.append(json_line({
                "family": family.name,
                "n": str(n),
                "k": str(member.k),
                "x": str(member.x),
                "y": str(member.y),
                "z": str(member.z),
            }))
        return lines

    solutions = solution_set.solutions()
    lines = [
        f"Equation: {solution_set.spec.describe()}",
        f"Theorem: {solution_set.tag.value} ({solution_set.applicability})",
        f"Complete: {'yes' if solution_set.complete else 'no'}",
        f"Solutions ({len(solutions)}):",
    ]
    lines.extend(f"  {s}  [{s.provenance.value}]" for s in solutions)
    if expansions:
        lines.append(f"Family members of theorem {solution_set.tag.value} at every k:")
    current = None
    for family, n, member in expansions:
        if family is not current:
            lines.append(f"Family {family.name}: {family.describe()}")
            current = family
        lines.append(f"  n={n}: k={member.k} {member}")
    return lines


# ============================================================================
# SEARCH / CROSSCHECK
# ============================================================================


def render_search(spec: EquationSpec, x_max: int, y_max: int, solutions: List[Solution], fmt: str) -> List[str]:
    if fmt == "json":
        return [json_line({
            "spec": _spec_json(spec),
            "bounds": {"x_max": str(x_max), "y_max": str(y_max)},
            "count": str(len(solutions)),
            "solutions": [{"x": str(s.x), "y": str(s.y), "z": str(s.z)} for s in solutions],
        })]
    return [
        f"Equation: {spec.describe()}",
        f"Bounds: x <= {x_max}, y <= {y_max}",
        f"Solutions ({len(solutions)}): {_triples(solutions)}",
    ]


def render_cross_check(report: CrossCheckReport, fmt: str) -> List[str]:
    if fmt == "json":
        return [json_line(report.to_json())]
    lines = [
        f"Equation: {report.spec.describe()}",
        f"Bounds: x <= {report.bounds.x_max}, y <= {report.bounds.y_max}",
        f"Closed form: {_triples(report.closed_form)}",
        f"Brute force: {_triples(report.brute_force)}",
        f"Verdict: {report.verdict.value}",
    ]
    if report.missing:
        lines.append(f"  missing from search: {report.missing}")
    if report.unexpected:
        lines.append(f"  not in closed form: {report.unexpected}")
    return lines


# ============================================================================
# PRIMES / CURVES / CLASSICAL
# ============================================================================


def render_int_list(title: str, key: str, values: Sequence[int], extra: Dict[str, Any], fmt: str) -> List[str]:
    if fmt == "json":
        payload = {name: str(value) for name, value in extra.items()}
        payload["count"] = str(len(values))
        payload[key] = [str(v) for v in values]
        return [json_line(payload)]
    shown = ", ".join(str(v) for v in values) or "none"
    return [f"{title} ({len(values)}): {shown}"]


def render_counts(title: str, counts: Dict[int, int], extra: Dict[str, Any], fmt: str) -> List[str]:
    if fmt == "json":
        payload = {name: str(value) for name, value in extra.items()}
        payload["counts"] = {str(r): str(c) for r, c in counts.items()}
        return [json_line(payload)]
    lines = [title]
    lines.extend(f"  {r:>6}: {c}" for r, c in counts.items())
    return lines


def render_tuples(title: str, names: Sequence[str], rows: Sequence[Sequence[int]], fmt: str) -> List[str]:
    if fmt == "json":
        return [json_line({
            "title": title,
            "count": str(len(rows)),
            "rows": [{name: str(v) for name, v in zip(names, row)} for row in rows],
        })]
    header = f"({', '.join(names)})"
    lines = [f"{title} ({len(rows)}): {header}"]
    lines.extend(f"  ({', '.join(str(v) for v in row)})" for row in rows)
    return lines
