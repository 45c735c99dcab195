"""
Shared constants: CLI exit codes and the published solution lists the
solvers are checked against.
"""

# ============================================================================
# EXIT CODES
# ============================================================================

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_UNSUPPORTED = 2
EXIT_MISMATCH = 3

# ============================================================================
# PUBLISHED SOLUTION LISTS
# ============================================================================

# 5^x = 4 + y^2
FIVE_POWER_MINUS_FOUR_SOLUTIONS = ((1, 1), (3, 11))

# 2 * 5^x = 1 + y^2
TWICE_FIVE_POWER_MINUS_ONE_SOLUTIONS = ((0, 1), (1, 3), (2, 7))

# Curves y^2 = x^3 + n whose integral points the reductions rely on
REDUCTION_CURVES = (-4, -100, -2500)

# Deterministic Miller-Rabin bases, exact for n < 3.3 * 10^24
MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DETERMINISTIC_LIMIT = 3317044064679887385961981

# Extra random rounds above the deterministic limit: 4^-64 = 2^-128
PROBABLE_PRIME_ROUNDS = 64

__all__ = [
    "EXIT_OK",
    "EXIT_INVALID_INPUT",
    "EXIT_UNSUPPORTED",
    "EXIT_MISMATCH",
    "FIVE_POWER_MINUS_FOUR_SOLUTIONS",
    "TWICE_FIVE_POWER_MINUS_ONE_SOLUTIONS",
    "REDUCTION_CURVES",
    "MILLER_RABIN_BASES",
    "DETERMINISTIC_LIMIT",
    "PROBABLE_PRIME_ROUNDS",
]
