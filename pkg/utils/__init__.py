"""
Utilities package.

This package contains the exact integer primitives, primality and
Sophie Germain prime enumeration, and helpers shared by the step
definitions.
"""

from . import arith, primes

__all__ = ["arith", "primes"]
