"""
Brute-force oracle for (-1)^alpha p^x + (-1)^beta (2^k (2p+1))^y = z^2.

The search walks a bounded (x, y) grid, deriving z with an exact square
test, and never iterates z. modular_obstruction mirrors the congruence
arguments of the proofs: it certifies that no exponent pair with given
parities can make the left-hand side a square modulo some m.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, List, Optional, Set, Tuple

from utils.arith import is_perfect_square
from utils.primes import sophie_germain_reason

logger = logging.getLogger(__name__)


# ============================================================================
# DOMAIN TYPES
# ============================================================================


class Provenance(str, Enum):
    SEARCH = "search"
    CLOSED_FORM = "closed-form"
    FAMILY_EXPANSION = "family-expansion"


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"

    def matches(self, e: int) -> bool:
        return e % 2 == (0 if self is Parity.EVEN else 1)


class Verdict(str, Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class EquationSpec:
    """
    One equation (-1)^alpha p^x + (-1)^beta (2^k q)^y = z^2 with q = 2p + 1.

    k is the literal exponent of 2 in the second base.
    """

    alpha: int
    beta: int
    p: int
    k: int

    def __post_init__(self):
        if self.alpha not in (0, 1) or self.beta not in (0, 1):
            raise ValueError(
                f"alpha and beta must be 0 or 1, got alpha={self.alpha}, beta={self.beta}"
            )
        if self.alpha * self.beta != 0:
            raise ValueError("alpha·beta must be 0")
        if self.k < 0:
            raise ValueError(f"k must be non-negative, got {self.k}")
        reason = sophie_germain_reason(self.p)
        if reason:
            raise ValueError(reason)

    @property
    def q(self) -> int:
        return 2 * self.p + 1

    @property
    def base(self) -> int:
        """The second base 2^k (2p + 1)."""
        return (1 << self.k) * self.q

    def describe(self) -> str:
        first = f"-{self.p}^x" if self.alpha else f"{self.p}^x"
        sign = "-" if self.beta else "+"
        return f"{first} {sign} (2^{self.k}*{self.q})^y = z^2"

    def __str__(self) -> str:
        return f"(alpha={self.alpha}, beta={self.beta}, p={self.p}, k={self.k})"


@dataclass(frozen=True)
class SearchBounds:
    x_max: int
    y_max: int

    def __post_init__(self):
        if self.x_max < 0 or self.y_max < 0:
            raise ValueError(
                f"Search bounds must be non-negative, got ({self.x_max}, {self.y_max})"
            )

    def contains(self, x: int, y: int) -> bool:
        return 0 <= x <= self.x_max and 0 <= y <= self.y_max


@dataclass(frozen=True)
class Solution:
    """A non-negative solution (x, y, z) of the equation with exponent k."""

    x: int
    y: int
    z: int
    k: int
    provenance: Provenance = Provenance.SEARCH

    @property
    def triple(self) -> Tuple[int, int, int]:
        return self.x, self.y, self.z

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z})"


# ============================================================================
# EVALUATION AND SEARCH
# ============================================================================


def evaluate(spec: EquationSpec, x: int, y: int) -> int:
    """Exact left-hand side for exponents x, y >= 0."""
    if x < 0 or y < 0:
        raise ValueError(f"Exponents must be non-negative, got ({x}, {y})")
    first = spec.p ** x
    second = spec.base ** y
    return (-first if spec.alpha else first) + (-second if spec.beta else second)


def brute_force(spec: EquationSpec, bounds: SearchBounds) -> List[Solution]:
    """
    Every (x, y, z) with x <= x_max, y <= y_max solving the equation.

    Powers are accumulated along each axis; the result is sorted by (x, y).
    """
    first_sign = -1 if spec.alpha else 1
    second_sign = -1 if spec.beta else 1
    base = spec.base

    second_terms = []
    term = 1
    for _ in range(bounds.y_max + 1):
        second_terms.append(second_sign * term)
        term *= base

    solutions = []
    first = 1
    for x in range(bounds.x_max + 1):
        signed_first = first_sign * first
        for y, second in enumerate(second_terms):
            z = is_perfect_square(signed_first + second)
            if z is not None:
                solutions.append(Solution(x, y, z, spec.k, Provenance.SEARCH))
        first *= spec.p

    logger.debug(
        f"Brute force on {spec} within ({bounds.x_max}, {bounds.y_max}) "
        f"found {len(solutions)} solutions"
    )
    return solutions


# ============================================================================
# MODULAR OBSTRUCTION
# ============================================================================


@lru_cache(maxsize=256)
def square_residues(modulus: int) -> FrozenSet[int]:
    """All squares modulo modulus, zero included."""
    return frozenset(i * i % modulus for i in range(modulus))


def _exponent_residues(
    base: int, modulus: int, parity: Optional[Parity], start: int
) -> Set[int]:
    """
    Residues of base^e mod modulus over every e >= start of the given parity.

    The pair (residue, e mod 2) determines all later pairs, so the walk
    stops at the first repeated pair; at most 2 * modulus steps.
    """
    residues = set()
    seen = set()
    e = start
    r = pow(base, e, modulus)
    while (r, e % 2) not in seen:
        seen.add((r, e % 2))
        if parity is None or parity.matches(e):
            residues.add(r)
        r = r * base % modulus
        e += 1
    return residues


def modular_obstruction(
    spec: EquationSpec,
    modulus: int,
    x_parity: Optional[Parity] = None,
    y_parity: Optional[Parity] = None,
    x_min: int = 0,
    y_min: int = 0,
) -> Verdict:
    """
    Decide whether the left-hand side can be a square modulo modulus.

    Args:
        spec: Equation to test
        modulus: Modulus m >= 2
        x_parity: Restrict x to even or odd values
        y_parity: Restrict y to even or odd values
        x_min: Only consider x >= x_min
        y_min: Only consider y >= y_min

    Returns:
        INFEASIBLE when no admissible (x, y) gives a square residue; this is
        a proof that the equation has no such solutions.
    """
    if modulus < 2:
        raise ValueError(f"Modulus must be at least 2, got {modulus}")
    if x_min < 0 or y_min < 0:
        raise ValueError(f"Exponent minimums must be non-negative, got ({x_min}, {y_min})")

    first_sign = -1 if spec.alpha else 1
    second_sign = -1 if spec.beta else 1
    xs = _exponent_residues(spec.p, modulus, x_parity, x_min)
    ys = _exponent_residues(spec.base, modulus, y_parity, y_min)
    squares = square_residues(modulus)

    for rx in xs:
        for ry in ys:
            if (first_sign * rx + second_sign * ry) % modulus in squares:
                return Verdict.FEASIBLE

    logger.debug(f"{spec} is obstructed modulo {modulus}")
    return Verdict.INFEASIBLE


__all__ = [
    "Provenance",
    "Parity",
    "Verdict",
    "EquationSpec",
    "SearchBounds",
    "Solution",
    "evaluate",
    "brute_force",
    "square_residues",
    "modular_obstruction",
]
