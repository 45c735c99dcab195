"""
Closed-form solution sets for the covered equation families.

Each covered (alpha, beta, p, k) is routed to a FamilyTag; the matching
TheoremStatement lists its sporadic solutions and parametric families.
closed_form specializes the statement to the equation's k, expand_family
produces verified family members, and cross_check compares the closed
form with the brute-force oracle.
"""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from solvers.errors import UnsupportedSpecError, VerificationError
from solvers.search import (
    EquationSpec,
    Provenance,
    SearchBounds,
    Solution,
    brute_force,
    evaluate,
)

logger = logging.getLogger(__name__)


# ============================================================================
# DOMAIN TYPES
# ============================================================================


class FamilyTag(str, Enum):
    A1 = "A1"
    A1_K0 = "A1_k0"
    A2 = "A2"
    A3 = "A3"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"
    B4_REMARK = "B4_remark"
    UNSUPPORTED = "unsupported"


class CrossCheckVerdict(str, Enum):
    EQUAL = "equal"
    MISMATCH = "mismatch"


@dataclass(frozen=True)
class AffineForm:
    """a*n + b."""

    a: int
    b: int

    def __call__(self, n: int) -> int:
        return self.a * n + self.b


@dataclass(frozen=True)
class PowerTerm:
    """c * 2^(a*n + b)."""

    c: int
    a: int
    b: int

    def __call__(self, n: int) -> int:
        exponent = self.a * n + self.b
        if exponent < 0:
            raise ValueError(f"Negative exponent {exponent} at n={n}")
        return self.c << exponent


@dataclass(frozen=True)
class ParametricFamily:
    """
    Solutions (k, x, y, z) = (k(n), x(n), y(n), z(n)) for n >= n_min of the
    equation (-1)^alpha p^x + (-1)^beta (2^k (2p+1))^y = z^2.
    """

    alpha: int
    beta: int
    p: int
    k: AffineForm
    x: AffineForm
    y: AffineForm
    z: Tuple[PowerTerm, ...]
    n_min: int = 1
    name: str = field(default="", compare=False)

    def at(self, n: int) -> Tuple[int, int, int, int]:
        return self.k(n), self.x(n), self.y(n), sum(term(n) for term in self.z)

    def n_for_k(self, k: int) -> Optional[int]:
        """The n with k(n) = k, if one exists in the family's domain."""
        if self.k.a == 0:
            return self.n_min if self.k.b == k else None
        n, remainder = divmod(k - self.k.b, self.k.a)
        if remainder or n < self.n_min:
            return None
        return n

    def describe(self) -> str:
        def affine(form):
            if form.a == 0:
                return str(form.b)
            head = "n" if form.a == 1 else f"{form.a}n"
            if form.b == 0:
                return head
            return f"{head}{'+' if form.b > 0 else '-'}{abs(form.b)}"

        z = " + ".join(
            f"{'' if t.c == 1 else f'{t.c}*'}2^({affine(AffineForm(t.a, t.b))})"
            for t in self.z
        )
        return f"(k,x,y,z) = ({affine(self.k)}, {affine(self.x)}, {affine(self.y)}, {z})"


@dataclass(frozen=True)
class SporadicEntry:
    """An isolated solution; p or k of None means it holds for every value."""

    x: int
    y: int
    z: int
    p: Optional[int] = None
    k: Optional[int] = None

    def applies(self, spec: EquationSpec) -> bool:
        return (self.p is None or self.p == spec.p) and (self.k is None or self.k == spec.k)


@dataclass(frozen=True)
class TheoremStatement:
    tag: FamilyTag
    equation: str
    applicability: str
    sporadics: Tuple[SporadicEntry, ...] = ()
    families: Tuple[ParametricFamily, ...] = ()


@dataclass
class SolutionSet:
    """The complete solution set of one spec according to its theorem."""

    spec: EquationSpec
    tag: FamilyTag
    sporadic: List[Solution]
    families: List[ParametricFamily]
    applicability: str
    complete: bool = True

    def solutions(self) -> List[Solution]:
        """Sporadic and family solutions at the equation's k, deduplicated, by (x, y)."""
        found: Dict[Tuple[int, int, int], Solution] = {}
        for solution in self.sporadic:
            found.setdefault(solution.triple, solution)
        for family in self.families:
            n = family.n_for_k(self.spec.k)
            if n is None:
                continue
            _, x, y, z = family.at(n)
            found.setdefault((x, y, z), Solution(x, y, z, self.spec.k, Provenance.FAMILY_EXPANSION))
        return sorted(found.values(), key=lambda s: (s.x, s.y))

    def to_json(self) -> Dict[str, Any]:
        """Documented schema; every integer is a decimal string."""
        return {
            "spec": {
                "alpha": str(self.spec.alpha),
                "beta": str(self.spec.beta),
                "p": str(self.spec.p),
                "k": str(self.spec.k),
            },
            "sporadic": [
                {"x": str(s.x), "y": str(s.y), "z": str(s.z)} for s in self.sporadic
            ],
            "families": [_family_to_json(f) for f in self.families],
            "complete": self.complete,
            "tag": self.tag.value,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "SolutionSet":
        raw = data["spec"]
        spec = EquationSpec(int(raw["alpha"]), int(raw["beta"]), int(raw["p"]), int(raw["k"]))
        tag = FamilyTag(data["tag"])
        statement = THEOREMS.get(tag)
        known = statement.families if statement else ()
        families = []
        for entry in data["families"]:
            family = _family_from_json(spec, entry)
            match = next((f for f in known if f == family), None)
            families.append(match or family)
        return cls(
            spec=spec,
            tag=tag,
            sporadic=[
                Solution(int(s["x"]), int(s["y"]), int(s["z"]), spec.k, Provenance.CLOSED_FORM)
                for s in data["sporadic"]
            ],
            families=families,
            applicability=statement.applicability if statement else "",
            complete=bool(data["complete"]),
        )


@dataclass
class CrossCheckReport:
    spec: EquationSpec
    bounds: SearchBounds
    closed_form: List[Solution]
    brute_force: List[Solution]
    verdict: CrossCheckVerdict
    missing: List[Tuple[int, int, int]] = field(default_factory=list)
    unexpected: List[Tuple[int, int, int]] = field(default_factory=list)

    def to_json(self) -> Dict[str, Any]:
        def triples(items):
            return [[str(v) for v in t] for t in items]

        return {
            "spec": {
                "alpha": str(self.spec.alpha),
                "beta": str(self.spec.beta),
                "p": str(self.spec.p),
                "k": str(self.spec.k),
            },
            "bounds": {"x_max": str(self.bounds.x_max), "y_max": str(self.bounds.y_max)},
            "closed_form": triples(s.triple for s in self.closed_form),
            "brute_force": triples(s.triple for s in self.brute_force),
            "verdict": self.verdict.value,
            "missing": triples(self.missing),
            "unexpected": triples(self.unexpected),
        }


# ============================================================================
# JSON HELPERS
# ============================================================================


def _family_to_json(family: ParametricFamily) -> Dict[str, Any]:
    return {
        "n_min": str(family.n_min),
        "k": [str(family.k.a), str(family.k.b)],
        "x": [str(family.x.a), str(family.x.b)],
        "y": [str(family.y.a), str(family.y.b)],
        "z": [[str(t.c), str(t.a), str(t.b)] for t in family.z],
    }


def _family_from_json(spec: EquationSpec, entry: Dict[str, Any]) -> ParametricFamily:
    def affine(pair):
        return AffineForm(int(pair[0]), int(pair[1]))

    return ParametricFamily(
        alpha=spec.alpha,
        beta=spec.beta,
        p=spec.p,
        k=affine(entry["k"]),
        x=affine(entry["x"]),
        y=affine(entry["y"]),
        z=tuple(PowerTerm(int(c), int(a), int(b)) for c, a, b in entry["z"]),
        n_min=int(entry["n_min"]),
    )


# ============================================================================
# THEOREM REGISTRY
# ============================================================================


def _family(name, alpha, beta, k, x, y, *z) -> ParametricFamily:
    return ParametricFamily(
        alpha=alpha,
        beta=beta,
        p=2,
        k=AffineForm(*k),
        x=AffineForm(*x),
        y=AffineForm(*y),
        z=tuple(PowerTerm(*term) for term in z),
        name=name,
    )


THEOREMS: Dict[FamilyTag, TheoremStatement] = {
    FamilyTag.A1: TheoremStatement(
        tag=FamilyTag.A1,
        equation="2^x + (2^k*5)^y = z^2",
        applicability="p = 2, alpha = beta = 0, k >= 1",
        sporadics=(SporadicEntry(3, 0, 3),),
        families=(
            # (2n, 2n+2, 1, 2^n + 2^(n+1))
            _family("A1.1", 0, 0, (2, 0), (2, 2), (0, 1), (1, 1, 0), (1, 1, 1)),
            # (2n+2, 2n-2, 1, 2^(n-1) + 2^(n+2))
            _family("A1.2", 0, 0, (2, 2), (2, -2), (0, 1), (1, 1, -1), (1, 1, 2)),
        ),
    ),
    FamilyTag.A1_K0: TheoremStatement(
        tag=FamilyTag.A1_K0,
        equation="2^x + 5^y = z^2",
        applicability="p = 2, alpha = beta = 0, k = 0",
        sporadics=(SporadicEntry(2, 1, 3), SporadicEntry(3, 0, 3)),
    ),
    FamilyTag.A2: TheoremStatement(
        tag=FamilyTag.A2,
        equation="2^x - (2^k*5)^y = z^2",
        applicability="p = 2, alpha = 0, beta = 1, k >= 0",
        sporadics=(SporadicEntry(0, 0, 0), SporadicEntry(1, 0, 1)),
    ),
    FamilyTag.A3: TheoremStatement(
        tag=FamilyTag.A3,
        equation="-2^x + (2^k*5)^y = z^2",
        applicability="p = 2, alpha = 1, beta = 0, k >= 0",
        sporadics=(SporadicEntry(0, 0, 0),),
        families=(
            # (n-1, 2n+2, 2, 3*2^(n-1))
            _family("A3.1", 1, 0, (1, -1), (2, 2), (0, 2), (3, 1, -1)),
            # (2n-1, 2n-2, 1, 3*2^(n-1))
            _family("A3.2", 1, 0, (2, -1), (2, -2), (0, 1), (3, 1, -1)),
            # (2n-2, 2n-2, 1, 2^n)
            _family("A3.3", 1, 0, (2, -2), (2, -2), (0, 1), (1, 1, 0)),
            # (2n-2, 2n, 1, 2^(n-1))
            _family("A3.4", 1, 0, (2, -2), (2, 0), (0, 1), (1, 1, -1)),
            # (2n-2, 6n-4, 3, 11*8^(n-1))
            _family("A3.5", 1, 0, (2, -2), (6, -4), (0, 3), (11, 3, -3)),
        ),
    ),
    FamilyTag.B1: TheoremStatement(
        tag=FamilyTag.B1,
        equation="p^x + (2^(2k'+1)*(2p+1))^y = z^2",
        applicability="odd Sophie Germain p = 3, 5 (mod 8), alpha = beta = 0, k odd",
        sporadics=(SporadicEntry(1, 0, 2, p=3), SporadicEntry(0, 1, 15, p=3, k=5)),
    ),
    FamilyTag.B2: TheoremStatement(
        tag=FamilyTag.B2,
        equation="p^x + (2^(2k')*(2p+1))^y = z^2",
        applicability="odd Sophie Germain p = 3 (mod 8), alpha = beta = 0, k even, k >= 2",
        sporadics=(
            SporadicEntry(1, 0, 2, p=3),
            SporadicEntry(6, 1, 29, p=3, k=4),
            SporadicEntry(2, 1, 11, p=3, k=4),
            SporadicEntry(4, 1, 23, p=3, k=6),
        ),
    ),
    FamilyTag.B3: TheoremStatement(
        tag=FamilyTag.B3,
        equation="p^x - (2^k*(2p+1))^y = z^2",
        applicability="odd Sophie Germain p = 3 (mod 4), alpha = 0, beta = 1, k >= 0",
        sporadics=(SporadicEntry(0, 0, 0), SporadicEntry(4, 1, 5, p=3, k=3)),
    ),
    FamilyTag.B4: TheoremStatement(
        tag=FamilyTag.B4,
        equation="-p^x + (2^k*(2p+1))^y = z^2",
        applicability="odd Sophie Germain p = 3 (mod 8), alpha = 1, beta = 0, k >= 1",
        sporadics=(
            SporadicEntry(0, 0, 0),
            SporadicEntry(3, 2, 13, p=3, k=1),
            SporadicEntry(3, 1, 1, p=3, k=2),
            SporadicEntry(1, 1, 5, p=3, k=2),
            SporadicEntry(1, 1, 9, p=11, k=2),
        ),
    ),
    FamilyTag.B4_REMARK: TheoremStatement(
        tag=FamilyTag.B4_REMARK,
        equation="-p^x + (2^k*(2p+1))^y = z^2",
        applicability="odd Sophie Germain p = 1, 5 (mod 8), alpha = 1, beta = 0, k >= 0",
        sporadics=(SporadicEntry(0, 0, 0),),
    ),
}


def theorem_for(tag: FamilyTag) -> TheoremStatement:
    """The theorem statement behind a covered tag."""
    if tag not in THEOREMS:
        raise ValueError(f"No theorem statement for tag {tag.value}")
    return THEOREMS[tag]


# ============================================================================
# OPERATIONS
# ============================================================================


def classify(spec: EquationSpec) -> FamilyTag:
    """Route a spec to the theorem covering it, or UNSUPPORTED."""
    signs = (spec.alpha, spec.beta)

    if spec.p == 2:
        if signs == (0, 0):
            return FamilyTag.A1 if spec.k >= 1 else FamilyTag.A1_K0
        return FamilyTag.A2 if signs == (0, 1) else FamilyTag.A3

    r8 = spec.p % 8
    if signs == (0, 0):
        if spec.k % 2 == 1 and r8 in (3, 5):
            return FamilyTag.B1
        if spec.k % 2 == 0 and spec.k >= 2 and r8 == 3:
            return FamilyTag.B2
        return FamilyTag.UNSUPPORTED
    if signs == (0, 1):
        return FamilyTag.B3 if spec.p % 4 == 3 else FamilyTag.UNSUPPORTED
    if r8 == 3 and spec.k >= 1:
        return FamilyTag.B4
    if r8 in (1, 5):
        return FamilyTag.B4_REMARK
    return FamilyTag.UNSUPPORTED


def unsupported_reason(spec: EquationSpec) -> str:
    """Why classify returned UNSUPPORTED for this spec."""
    signs = (spec.alpha, spec.beta)
    r8 = spec.p % 8
    if signs == (0, 0):
        if spec.k == 0:
            return "k = 0 with odd p reduces to p^x + (2p+1)^y, which no theorem here covers"
        if spec.k % 2 == 1:
            return f"odd k needs p = 3, 5 (mod 8), but p = {r8} (mod 8)"
        return f"even k >= 2 needs p = 3 (mod 8), but p = {r8} (mod 8)"
    if signs == (0, 1):
        return f"beta = 1 with odd p needs p = 3 (mod 4), but p = {spec.p % 4} (mod 4)"
    if r8 == 3:
        return "alpha = 1 with p = 3 (mod 8) needs k >= 1"
    return f"alpha = 1 needs p = 1, 3, 5 (mod 8), but p = {r8} (mod 8)"


def _verify(spec: EquationSpec, x: int, y: int, z: int, origin: str) -> None:
    if evaluate(spec, x, y) != z * z:
        logger.error(f"{origin} ({x}, {y}, {z}) fails {spec.describe()}")
        raise VerificationError(f"{origin} ({x}, {y}, {z}) does not solve {spec.describe()}")


def closed_form(spec: EquationSpec) -> SolutionSet:
    """
    The theorem's solution set specialized to spec.k.

    Raises:
        UnsupportedSpecError: If no theorem applies
        VerificationError: If a listed solution fails exact evaluation
    """
    tag = classify(spec)
    if tag is FamilyTag.UNSUPPORTED:
        raise UnsupportedSpecError(spec, unsupported_reason(spec))

    statement = THEOREMS[tag]
    sporadic = []
    for entry in statement.sporadics:
        if entry.applies(spec):
            _verify(spec, entry.x, entry.y, entry.z, "Sporadic solution")
            sporadic.append(Solution(entry.x, entry.y, entry.z, spec.k, Provenance.CLOSED_FORM))

    families = []
    for family in statement.families:
        n = family.n_for_k(spec.k)
        if n is None:
            continue
        _, x, y, z = family.at(n)
        _verify(spec, x, y, z, f"Family {family.name} at n={n}")
        families.append(family)

    solution_set = SolutionSet(
        spec=spec,
        tag=tag,
        sporadic=sporadic,
        families=families,
        applicability=statement.applicability,
        complete=True,
    )
    logger.info(f"{spec} -> {tag.value}: {len(solution_set.solutions())} solutions")
    return solution_set


def expand_family(family: ParametricFamily, n_lo: int, n_hi: int) -> List[Solution]:
    """
    Concrete members for n in [n_lo, n_hi], each verified exactly.

    Raises:
        ValueError: If n_lo < family.n_min or n_hi < n_lo
        VerificationError: If a member does not solve its equation
    """
    if n_lo < family.n_min:
        raise ValueError(f"n_lo={n_lo} is below the family's n_min={family.n_min}")
    if n_hi < n_lo:
        raise ValueError(f"Empty range: n_lo={n_lo}, n_hi={n_hi}")

    members = []
    for n in range(n_lo, n_hi + 1):
        k, x, y, z = family.at(n)
        if min(k, x, y, z) < 0:
            raise VerificationError(f"Family {family.name} has a negative entry at n={n}")
        spec = EquationSpec(family.alpha, family.beta, family.p, k)
        _verify(spec, x, y, z, f"Family {family.name} at n={n}")
        members.append(Solution(x, y, z, k, Provenance.FAMILY_EXPANSION))
    return members


def cross_check(spec: EquationSpec, bounds: SearchBounds) -> CrossCheckReport:
    """
    Compare the closed form restricted to bounds with brute_force.

    Raises:
        UnsupportedSpecError: If no theorem applies
    """
    closed = [s for s in closed_form(spec).solutions() if bounds.contains(s.x, s.y)]
    searched = brute_force(spec, bounds)

    closed_triples = {s.triple for s in closed}
    searched_triples = {s.triple for s in searched}
    missing = sorted(closed_triples - searched_triples)
    unexpected = sorted(searched_triples - closed_triples)
    verdict = CrossCheckVerdict.EQUAL if not (missing or unexpected) else CrossCheckVerdict.MISMATCH

    if verdict is CrossCheckVerdict.MISMATCH:
        logger.warning(f"Cross-check mismatch for {spec}: missing={missing}, unexpected={unexpected}")
    return CrossCheckReport(spec, bounds, closed, searched, verdict, missing, unexpected)


__all__ = [
    "FamilyTag",
    "CrossCheckVerdict",
    "AffineForm",
    "PowerTerm",
    "ParametricFamily",
    "SporadicEntry",
    "TheoremStatement",
    "SolutionSet",
    "CrossCheckReport",
    "THEOREMS",
    "theorem_for",
    "classify",
    "unsupported_reason",
    "closed_form",
    "expand_family",
    "cross_check",
]
