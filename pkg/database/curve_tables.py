"""
Static integral-point tables for Mordell curves y^2 = x^3 + n.

File format: one point per line, three decimal integers `n x y`
separated by single spaces, newline-terminated. Points of one curve are
contiguous. Parsing then dumping a canonical file reproduces it byte for
byte.
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from config.settings import MORDELL_TABLE_PATH

logger = logging.getLogger(__name__)

CurveTables = Dict[int, List[Tuple[int, int]]]

_LINE = re.compile(r"^(-?\d+) (-?\d+) (\d+)$")


def parse_curve_tables(text: str) -> CurveTables:
    """
    Parse table text into {n: [(x, y), ...]} preserving file order.

    Raises:
        ValueError: On a malformed line, with its line number
    """
    tables: CurveTables = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        match = _LINE.match(line)
        if not match:
            raise ValueError(f"Malformed curve table line {lineno}: {line!r}")
        n, x, y = (int(g) for g in match.groups())
        if n == 0:
            raise ValueError(f"Curve constant n must be nonzero (line {lineno})")
        tables.setdefault(n, []).append((x, y))
    return tables


def dump_curve_tables(tables: CurveTables) -> str:
    """Serialize tables back to the `n x y` line format."""
    return "".join(
        f"{n} {x} {y}\n" for n, points in tables.items() for x, y in points
    )


def load_curve_tables(path: Optional[Path] = None) -> CurveTables:
    """
    Load the curve table file.

    Args:
        path: Table file (defaults to MORDELL_TABLE_PATH)

    Returns:
        Mapping from curve constant n to its listed points
    """
    path = Path(path or MORDELL_TABLE_PATH)
    tables = parse_curve_tables(path.read_text(encoding="ascii"))
    logger.debug(f"Loaded {len(tables)} curve tables from {path}")
    return tables


def save_curve_tables(tables: CurveTables, path: Path) -> None:
    """Write tables to path in canonical form."""
    Path(path).write_text(dump_curve_tables(tables), encoding="ascii")
    logger.info(f"Saved {len(tables)} curve tables to {path}")


__all__ = [
    "CurveTables",
    "parse_curve_tables",
    "dump_curve_tables",
    "load_curve_tables",
    "save_curve_tables",
]
