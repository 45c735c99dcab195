"""
Exact integer primitives.

Integer square and k-th roots, perfect-power detection, modular
exponentiation, and the Legendre and Jacobi symbols. Everything works on
Python ints and never touches floating point.
"""

import logging
from typing import Literal, Optional

logger = logging.getLogger(__name__)

SymbolValue = Literal[-1, 0, 1]

_SQUARES_MOD_64 = frozenset(i * i % 64 for i in range(64))
_SQUARES_MOD_63 = frozenset(i * i % 63 for i in range(63))
_SQUARES_MOD_65 = frozenset(i * i % 65 for i in range(65))


# ============================================================================
# ROOTS
# ============================================================================


def isqrt(n: int) -> int:
    """
    Integer square root by Newton iteration.

    Args:
        n: Non-negative integer

    Returns:
        r with r*r <= n < (r+1)*(r+1)

    Raises:
        ValueError: If n is negative
    """
    if n < 0:
        raise ValueError(f"isqrt is undefined for negative input: {n}")
    if n < 2:
        return n

    # Start above the root so the iteration decreases monotonically
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) // 2
        if y >= x:
            break
        x = y

    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


def is_perfect_square(n: int) -> Optional[int]:
    """Return the non-negative root of n when n is a perfect square, else None."""
    if n < 0:
        return None
    if (
        n % 64 not in _SQUARES_MOD_64
        or n % 63 not in _SQUARES_MOD_63
        or n % 65 not in _SQUARES_MOD_65
    ):
        return None
    r = isqrt(n)
    return r if r * r == n else None


def integer_root(n: int, k: int) -> int:
    """
    Floor of the k-th root of n by integer bisection.

    Args:
        n: Non-negative integer
        k: Root degree, at least 1

    Returns:
        Largest r with r**k <= n
    """
    if n < 0:
        raise ValueError(f"integer_root is undefined for negative input: {n}")
    if k < 1:
        raise ValueError(f"Root degree must be at least 1, got {k}")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return isqrt(n)

    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def exact_root(n: int, k: int) -> Optional[int]:
    """Return r when n == r**k for some r >= 0, else None."""
    if n < 0:
        return None
    r = integer_root(n, k)
    return r if r ** k == n else None


# ============================================================================
# MODULAR ARITHMETIC
# ============================================================================


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """
    Compute base**exp mod modulus by square-and-multiply.

    Raises:
        ValueError: If modulus < 1 or exp < 0
    """
    if modulus < 1:
        raise ValueError(f"Modulus must be at least 1, got {modulus}")
    if exp < 0:
        raise ValueError(f"Exponent must be non-negative, got {exp}")
    return pow(base, exp, modulus)


def jacobi_symbol(a: int, n: int) -> SymbolValue:
    """
    Jacobi symbol (a/n) by the binary reciprocity algorithm.

    Args:
        a: Any integer
        n: Odd positive integer

    Returns:
        -1, 0 or +1

    Raises:
        ValueError: If n is even or not positive
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")

    result = 1
    if a < 0:
        a = -a
        # (-1/n) = (-1)^((n-1)/2)
        if n % 4 == 3:
            result = -result
    a %= n

    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n

    return result if n == 1 else 0


def legendre_symbol(a: int, p: int) -> SymbolValue:
    """
    Legendre symbol (a/p) for an odd prime p.

    Raises:
        ValueError: If p is even or composite
    """
    from utils.primes import is_prime

    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"Legendre symbol needs an odd prime, got {p}")
    return jacobi_symbol(a, p)


def euler_criterion(a: int, p: int) -> SymbolValue:
    """Legendre symbol through a^((p-1)/2) mod p; kept as an independent oracle."""
    r = mod_pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


__all__ = [
    "SymbolValue",
    "isqrt",
    "is_perfect_square",
    "integer_root",
    "exact_root",
    "mod_pow",
    "jacobi_symbol",
    "legendre_symbol",
    "euler_criterion",
]
