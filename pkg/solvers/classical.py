"""
Classical ingredient equations: Catalan a^x - b^y = 1, p^x + 1 = y^2, the
Nagell-Ljunggren quotient (x^n - 1)/(x - 1) = y^q and
1 + (2^k (2p+1))^y = z^2.

The searches are bounded enumerations; the closed forms encode the
published complete answers.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from utils.arith import exact_root
from utils.primes import is_prime, sophie_germain_reason

logger = logging.getLogger(__name__)


# ============================================================================
# DOMAIN TYPES
# ============================================================================


@dataclass(frozen=True, order=True)
class CatalanSolution:
    a: int
    b: int
    x: int
    y: int

    def __post_init__(self):
        if min(self.a, self.b, self.x, self.y) <= 1:
            raise ValueError(f"All entries must exceed 1: {self}")
        if self.a ** self.x - self.b ** self.y != 1:
            raise ValueError(f"Not a Catalan solution: {self}")


@dataclass(frozen=True, order=True)
class NLSolution:
    x: int
    y: int
    n: int
    q: int

    def __post_init__(self):
        if self.x <= 1 or self.y <= 1 or self.n <= 2 or self.q < 2:
            raise ValueError(f"Out of range Nagell-Ljunggren tuple: {self}")
        if repunit_sum(self.x, self.n) != self.y ** self.q:
            raise ValueError(f"Not a Nagell-Ljunggren solution: {self}")


# ============================================================================
# CATALAN
# ============================================================================


def catalan_search(a_max: int, b_max: int, x_max: int, y_max: int) -> List[CatalanSolution]:
    """
    All a^x - b^y = 1 with 2 <= a <= a_max, 2 <= b <= b_max,
    2 <= x <= x_max, 2 <= y <= y_max.
    """
    if min(a_max, b_max, x_max, y_max) < 2:
        raise ValueError("All Catalan search bounds must be at least 2")

    solutions = []
    for a in range(2, a_max + 1):
        for x in range(2, x_max + 1):
            target = a ** x - 1
            for y in range(2, y_max + 1):
                b = exact_root(target, y)
                if b is not None and 2 <= b <= b_max:
                    solutions.append(CatalanSolution(a, b, x, y))
    logger.info(f"Catalan search found {len(solutions)} solutions")
    return sorted(solutions)


def solve_px_plus_one_square(p: int) -> List[Tuple[int, int]]:
    """
    Non-negative (x, y) with p^x + 1 = y^2 for a prime p.

    Raises:
        ValueError: If p is not prime
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if p == 2:
        return [(3, 3)]
    if p == 3:
        return [(1, 2)]
    return []


# ============================================================================
# NAGELL-LJUNGGREN
# ============================================================================


def repunit_sum(x: int, n: int) -> int:
    """1 + x + ... + x^(n-1), accumulated without division."""
    total, term = 0, 1
    for _ in range(n):
        total += term
        term *= x
    return total


def repunit_by_division(x: int, n: int) -> int:
    """(x^n - 1) / (x - 1) for x > 1, checked to divide exactly."""
    quotient, remainder = divmod(x ** n - 1, x - 1)
    if remainder:
        raise ValueError(f"x-1 does not divide x^n-1 for x={x}, n={n}")
    return quotient


def nagell_ljunggren_search(x_max: int, n_max: int, q_max: int) -> List[NLSolution]:
    """All (x, y, n, q) in range with (x^n - 1)/(x - 1) = y^q, x,y > 1, n > 2, q >= 2."""
    if x_max < 2 or q_max < 2 or n_max < 3:
        raise ValueError("Nagell-Ljunggren bounds need x_max >= 2, n_max >= 3, q_max >= 2")

    solutions = []
    for x in range(2, x_max + 1):
        for n in range(3, n_max + 1):
            value = repunit_sum(x, n)
            for q in range(2, q_max + 1):
                y = exact_root(value, q)
                if y is not None and y > 1:
                    solutions.append(NLSolution(x, y, n, q))
    logger.info(f"Nagell-Ljunggren search found {len(solutions)} solutions")
    return sorted(solutions)


# ============================================================================
# SAFE PRIME POWERS
# ============================================================================


def solve_safe_power_square(p: int, k: int) -> List[Tuple[int, int]]:
    """
    Non-negative (y, z) with 1 + (2^k (2p+1))^y = z^2.

    Args:
        p: Sophie Germain prime
        k: Exponent, at least 1

    Raises:
        ValueError: If k < 1 or p is not a Sophie Germain prime
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    reason = sophie_germain_reason(p)
    if reason:
        raise ValueError(reason)
    if (p, k) == (2, 4):
        return [(1, 9)]
    if (p, k) == (3, 5):
        return [(1, 15)]
    return []


# ============================================================================
# SIDE FACTS
# ============================================================================


def _mersenne_exponent_is_prime(k: int) -> bool:
    """If 2^k - 1 is prime then k is prime."""
    return not is_prime(2 ** k - 1) or is_prime(k)


def _fermat_exponent_is_power_of_two(k: int) -> bool:
    """If 2^k + 1 is prime then k = 0 or k is a power of two."""
    return not is_prime(2 ** k + 1) or k == 0 or k & (k - 1) == 0


__all__ = [
    "CatalanSolution",
    "NLSolution",
    "catalan_search",
    "solve_px_plus_one_square",
    "repunit_sum",
    "repunit_by_division",
    "nagell_ljunggren_search",
    "solve_safe_power_square",
]
