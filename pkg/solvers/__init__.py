"""
Solvers package.

This package contains the brute-force oracle, the Mordell curve tools,
the classical ingredient equations and the closed-form theorems.
"""

from . import classical, mordell, search, theorems

__all__ = ["classical", "mordell", "search", "theorems"]
