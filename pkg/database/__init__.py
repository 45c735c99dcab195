"""
Database package for static tables shipped with the solvers.

This package provides:
- The Mordell curve integral-point table (mordell_curves.txt)
- A loader and writer for its `n x y` line format
"""

from . import curve_tables

__all__ = ['curve_tables']
