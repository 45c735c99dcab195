"""
Integral points on Mordell curves y^2 = x^3 + n and the two reductions
that solve 5^x = 4 + y^2 and 2*5^x = 1 + y^2 from curve tables.

Completeness beyond the scanned x range is not proved here: curves built
from the shipped table carry the published point lists, and results are
flagged table_trusted only when a bounded scan reproduces that list.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Set, Tuple

from config.settings import MORDELL_X_BOUND
from constant import (
    FIVE_POWER_MINUS_FOUR_SOLUTIONS,
    REDUCTION_CURVES,
    TWICE_FIVE_POWER_MINUS_ONE_SOLUTIONS,
)
from database.curve_tables import load_curve_tables
from solvers.errors import VerificationError
from utils.arith import integer_root, is_perfect_square

logger = logging.getLogger(__name__)


# ============================================================================
# DOMAIN TYPES
# ============================================================================


@dataclass(frozen=True, order=True)
class MordellPoint:
    """Integral point (x, y) with y >= 0; the reflection (x, -y) is implied."""

    x: int
    y: int


@dataclass(frozen=True)
class MordellCurve:
    """The curve y^2 = x^3 + n."""

    n: int
    known_complete_points: Optional[Tuple[MordellPoint, ...]] = None

    def __post_init__(self):
        if self.discriminant == 0:
            raise ValueError("Mordell curve constant n must be nonzero: y^2 = x^3 is singular")

    @property
    def discriminant(self) -> int:
        """-16 * 27 * n^2; nonzero exactly when the curve is smooth."""
        return -16 * 27 * self.n * self.n

    def contains(self, x: int, y: int) -> bool:
        return y * y == x ** 3 + self.n


@dataclass(frozen=True)
class PointCertificate:
    curve: MordellCurve
    points: Tuple[MordellPoint, ...]
    x_bound: int
    table_trusted: bool


# ============================================================================
# CURVE TABLES
# ============================================================================


@lru_cache(maxsize=1)
def load_curves() -> Dict[int, MordellCurve]:
    """
    Build curves from the shipped table, checking every listed point.

    Raises:
        VerificationError: If a table point is not on its curve
    """
    curves = {}
    for n, raw_points in load_curve_tables().items():
        points = tuple(MordellPoint(x, y) for x, y in raw_points)
        curve = MordellCurve(n, points)
        for point in points:
            if not curve.contains(point.x, point.y):
                logger.error(f"Table point {point} is not on y^2 = x^3 + {n}")
                raise VerificationError(f"Table point {point} is not on y^2 = x^3 + {n}")
        curves[n] = curve
    return curves


def get_curve(n: int) -> MordellCurve:
    """Curve y^2 = x^3 + n, with its trusted table when one ships."""
    return load_curves().get(n) or MordellCurve(n)


# ============================================================================
# POINT SEARCH
# ============================================================================


def _smallest_admissible_x(n: int) -> int:
    """Smallest x with x^3 + n >= 0."""
    if n < 0:
        c = integer_root(-n, 3)
        return c if c ** 3 == -n else c + 1
    return -integer_root(n, 3)


def integral_points(curve: MordellCurve, x_bound: int = MORDELL_X_BOUND) -> List[MordellPoint]:
    """
    All integral points with |x| <= x_bound and y >= 0, ascending in x.

    Args:
        curve: Curve to scan
        x_bound: Positive bound on |x|
    """
    if x_bound < 1:
        raise ValueError(f"x_bound must be positive, got {x_bound}")

    points = []
    x = max(-x_bound, _smallest_admissible_x(curve.n))
    while x <= x_bound:
        y = is_perfect_square(x * x * x + curve.n)
        if y is not None:
            points.append(MordellPoint(x, y))
        x += 1

    logger.debug(f"y^2 = x^3 + {curve.n}: {len(points)} points with |x| <= {x_bound}")
    return points


def certify_points(curve: MordellCurve, x_bound: int = MORDELL_X_BOUND) -> PointCertificate:
    """Scan the curve and compare with its trusted table, if any."""
    points = tuple(integral_points(curve, x_bound))
    trusted = False
    if curve.known_complete_points is not None:
        expected = tuple(
            sorted(pt for pt in curve.known_complete_points if abs(pt.x) <= x_bound)
        )
        trusted = points == expected
        if not trusted:
            logger.warning(
                f"Scan of y^2 = x^3 + {curve.n} disagrees with its table: "
                f"{points} vs {expected}"
            )
    return PointCertificate(curve, points, x_bound, trusted)


# ============================================================================
# REDUCTIONS
# ============================================================================


def _five_adic_exponent(value: int) -> Optional[int]:
    """e when value == 5^e, else None."""
    if value < 1:
        return None
    e = 0
    while value % 5 == 0:
        value //= 5
        e += 1
    return e if value == 1 else None


def _reduce_through_curves(scale: int, difference: int) -> Set[Tuple[int, int]]:
    """
    Solve scale * 5^x = difference + y^2 from the reduction curve tables.

    Writing x = 3k + r, the substitution X = scale * 5^(k+r),
    Y = scale * 5^r * y lands on y^2 = x^3 + n for the r-th reduction curve.
    """
    curves = load_curves()
    solutions = set()
    for r, n in enumerate(REDUCTION_CURVES):
        curve = curves.get(n)
        if curve is None or curve.known_complete_points is None:
            raise VerificationError(f"No trusted table for y^2 = x^3 + {n}")
        y_scale = scale * 5 ** r
        for point in curve.known_complete_points:
            if point.x % scale or point.y % y_scale:
                continue
            e = _five_adic_exponent(point.x // scale)
            if e is None or e < r:
                continue
            x = 3 * (e - r) + r
            y = point.y // y_scale
            if scale * 5 ** x != difference + y * y:
                logger.error(f"Point {point} on n={n} maps to non-solution ({x}, {y})")
                raise VerificationError(
                    f"Curve point {point} on n={n} maps to ({x}, {y}), "
                    f"which does not solve {scale}*5^x = {difference} + y^2"
                )
            logger.debug(f"Point {point} on n={n} gives (x, y) = ({x}, {y})")
            solutions.add((x, y))
    return solutions


def _confirm(
    scale: int,
    difference: int,
    derived: Set[Tuple[int, int]],
    expected: Tuple[Tuple[int, int], ...],
    confirm_bound: int,
) -> List[Tuple[int, int]]:
    if confirm_bound < 1:
        raise ValueError(f"confirm_bound must be positive, got {confirm_bound}")
    if derived != set(expected):
        raise VerificationError(
            f"Reduction for {scale}*5^x = {difference} + y^2 produced "
            f"{sorted(derived)}, expected {sorted(expected)}"
        )

    scanned = set()
    for x in range(confirm_bound + 1):
        y = is_perfect_square(scale * 5 ** x - difference)
        if y is not None:
            scanned.add((x, y))
    in_range = {pair for pair in derived if pair[0] <= confirm_bound}
    if scanned != in_range:
        raise VerificationError(
            f"Direct scan to x <= {confirm_bound} found {sorted(scanned)}, "
            f"reduction gives {sorted(in_range)}"
        )
    return sorted(derived)


def solve_5x_eq_4_plus_square(confirm_bound: int = 30) -> List[Tuple[int, int]]:
    """All non-negative (x, y) with 5^x = 4 + y^2."""
    derived = _reduce_through_curves(1, 4)
    return _confirm(1, 4, derived, FIVE_POWER_MINUS_FOUR_SOLUTIONS, confirm_bound)


def solve_2_5x_eq_1_plus_square(confirm_bound: int = 30) -> List[Tuple[int, int]]:
    """All non-negative (x, y) with 2 * 5^x = 1 + y^2."""
    derived = _reduce_through_curves(2, 1)
    return _confirm(2, 1, derived, TWICE_FIVE_POWER_MINUS_ONE_SOLUTIONS, confirm_bound)


__all__ = [
    "MordellPoint",
    "MordellCurve",
    "PointCertificate",
    "load_curves",
    "get_curve",
    "integral_points",
    "certify_points",
    "solve_5x_eq_4_plus_square",
    "solve_2_5x_eq_1_plus_square",
]
