"""
Command-line package.

This package contains the argparse front end and its output renderers.
"""

from .commands import build_parser, main

__all__ = ["build_parser", "main"]
