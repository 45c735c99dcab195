"""
Primality testing and Sophie Germain prime enumeration.

is_prime is exact below 3.3 * 10^24 (deterministic Miller-Rabin bases,
which covers every 64-bit integer). Above that it is a strong
probable-prime test with 64 extra random bases, so a composite slips
through with probability below 2^-128.

Enumeration uses a numpy segmented sieve up to SIEVE_LIMIT and falls
back to per-candidate testing above it.
"""

import logging
import secrets
from dataclasses import dataclass, field
from typing import Dict, Iterator, List

import numpy as np

from config.settings import SIEVE_LIMIT, SIEVE_SEGMENT_SIZE
from constant import DETERMINISTIC_LIMIT, MILLER_RABIN_BASES, PROBABLE_PRIME_ROUNDS
from utils.arith import isqrt

logger = logging.getLogger(__name__)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


# ============================================================================
# DOMAIN TYPES
# ============================================================================


@dataclass(frozen=True, order=True)
class PrimePair:
    """A Sophie Germain prime p with its safe prime q = 2p + 1."""

    p: int
    q: int

    def __post_init__(self):
        if self.q != 2 * self.p + 1:
            raise ValueError(f"q must equal 2p+1: p={self.p}, q={self.q}")


@dataclass
class ResidueClassStats:
    """Counts of odd Sophie Germain primes p <= limit per residue mod 2^m."""

    modulus: int
    limit: int
    counts: Dict[int, int] = field(default_factory=dict)
    two_included: bool = False  # p = 2 is reported here, never in counts

    @property
    def total(self) -> int:
        return sum(self.counts.values())


# ============================================================================
# PRIMALITY
# ============================================================================


def _strong_probable_prime(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """
    Miller-Rabin primality test.

    Args:
        n: Any integer

    Returns:
        True if n is prime (exact below DETERMINISTIC_LIMIT)
    """
    if n < 2:
        return False
    for sp in _SMALL_PRIMES:
        if n == sp:
            return True
        if n % sp == 0:
            return False

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for a in MILLER_RABIN_BASES:
        if not _strong_probable_prime(n, d, s, a):
            return False
    if n < DETERMINISTIC_LIMIT:
        return True

    for _ in range(PROBABLE_PRIME_ROUNDS):
        a = 2 + secrets.randbelow(n - 3)
        if not _strong_probable_prime(n, d, s, a):
            return False
    return True


def is_sophie_germain(p: int) -> bool:
    """True iff p and 2p + 1 are both prime."""
    return is_prime(p) and is_prime(2 * p + 1)


def sophie_germain_reason(p: int) -> str:
    """Explain why p is not a Sophie Germain prime (empty string when it is)."""
    if not is_prime(p):
        return f"p={p} is not prime"
    if not is_prime(2 * p + 1):
        return f"p={p} is not a Sophie Germain prime: 2p+1={2 * p + 1} is not prime"
    return ""


# ============================================================================
# SIEVE
# ============================================================================


def simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p: limit + 1: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def _segment_flags(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Primality flags for the half-open range [lo, hi); index i is lo + i."""
    flags = np.ones(hi - lo, dtype=bool)
    for p in base:
        p = int(p)
        if p * p >= hi:
            break
        start = max(p * p, ((lo + p - 1) // p) * p)
        flags[start - lo:: p] = False
    for v in range(lo, min(hi, 2)):
        flags[v - lo] = False
    return flags


def _sieved_pairs(limit: int, segment_size: int) -> Iterator[PrimePair]:
    base = simple_sieve(isqrt(2 * limit + 1) + 1)
    lo = 0
    while lo <= limit:
        hi = min(lo + segment_size, limit + 1)
        p_flags = _segment_flags(lo, hi, base)
        # q = 2p + 1 for p in [lo, hi) lands at index 2i + 1 of [2lo, 2hi)
        q_flags = _segment_flags(2 * lo, 2 * hi, base)
        hits = np.flatnonzero(p_flags & q_flags[1::2])
        logger.debug(f"Segment [{lo}, {hi}) produced {hits.size} pairs")
        for i in hits.tolist():
            p = lo + i
            yield PrimePair(p, 2 * p + 1)
        lo = hi


def enumerate_sg(limit: int) -> List[PrimePair]:
    """
    All Sophie Germain primes p <= limit in increasing order.

    Args:
        limit: Upper bound, at least 2

    Returns:
        Ordered list of PrimePair
    """
    if limit < 2:
        raise ValueError(f"limit must be at least 2, got {limit}")

    sieve_top = min(limit, SIEVE_LIMIT)
    pairs = list(_sieved_pairs(sieve_top, SIEVE_SEGMENT_SIZE))

    # Per-candidate tests above the sieve ceiling; p > 3 must be 5 mod 6
    candidate = sieve_top + 1
    while candidate % 6 != 5:
        candidate += 1
    while candidate <= limit:
        if is_sophie_germain(candidate):
            pairs.append(PrimePair(candidate, 2 * candidate + 1))
        candidate += 6

    logger.info(f"Found {len(pairs)} Sophie Germain primes <= {limit}")
    return pairs


def _check_residue_args(m: int, k: int) -> None:
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if k % 2 == 0:
        raise ValueError(f"Residue k must be odd, got {k}")
    if not 1 <= k < 2 ** m:
        raise ValueError(f"Residue k must lie in [1, {2 ** m}), got {k}")


def sg_residue_class(limit: int, m: int, k: int) -> List[int]:
    """Sophie Germain primes p <= limit with p = k (mod 2^m), k odd."""
    _check_residue_args(m, k)
    if limit < 2:
        return []
    modulus = 2 ** m
    return [pair.p for pair in enumerate_sg(limit) if pair.p % modulus == k]


def sg_density_stats(limit: int, m: int) -> ResidueClassStats:
    """
    Count odd Sophie Germain primes p <= limit in each odd class mod 2^m.

    Raw counts only; p = 2 is flagged separately.
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    modulus = 2 ** m
    stats = ResidueClassStats(
        modulus=modulus,
        limit=limit,
        counts={k: 0 for k in range(1, modulus, 2)},
    )
    if limit < 2:
        return stats
    for pair in enumerate_sg(limit):
        if pair.p == 2:
            stats.two_included = True
            continue
        stats.counts[pair.p % modulus] += 1
    return stats


__all__ = [
    "PrimePair",
    "ResidueClassStats",
    "is_prime",
    "is_sophie_germain",
    "sophie_germain_reason",
    "simple_sieve",
    "enumerate_sg",
    "sg_residue_class",
    "sg_density_stats",
]
