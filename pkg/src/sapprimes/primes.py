"""Prime generation and primality testing.

``sieve`` is an odd-only segmented sieve of Eratosthenes on numpy boolean
masks; peak working memory is one segment plus the output array.
``is_prime`` is a deterministic Miller-Rabin test, so queries beyond a sieved
range never need a table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DomainError, ResourceError

__all__ = [
    "PrimeTable",
    "PrimePair",
    "sieve",
    "is_prime",
    "next_prime",
    "iter_primes",
    "consecutive_pairs",
    "MR_DETERMINISTIC_BOUND",
]

# Miller-Rabin with the prime bases 2..37 has no strong pseudoprime below
# this bound (psi_12, Sorenson & Webster 2015).  2**64 is far inside it.
MR_DETERMINISTIC_BOUND = 318_665_857_834_031_151_167_461
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = _MR_BASES + (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

DEFAULT_MEMORY_BUDGET = 1 << 30  # bytes for the output array
_SEGMENT_ODDS = 1 << 20


def is_prime(n: int) -> bool:
    """True iff ``n`` is a prime.

    Exact for every ``n`` below ``MR_DETERMINISTIC_BOUND``; larger inputs raise
    :class:`ResourceError` rather than fall back to a probabilistic answer.
    """
    n = int(n)
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 97 * 97:
        return True
    if n >= MR_DETERMINISTIC_BOUND:
        raise ResourceError(f"{n} is beyond the deterministic primality range")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    n = int(n)
    if n < 2:
        return 2
    c = n + 1 if n % 2 == 0 else n + 2
    while not is_prime(c):
        c += 2
    return c


def _small_sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p::p] = False
    return np.flatnonzero(mask).astype(np.int64)


def _odd_primes_in(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Odd primes in ``[lo, hi)``; ``base`` must hold every prime <= isqrt(hi - 1)."""
    if lo % 2 == 0:
        lo += 1
    if lo < 3:
        lo = 3
    if lo >= hi:
        return np.empty(0, dtype=np.int64)
    count = (hi - lo + 1) // 2
    mask = np.ones(count, dtype=bool)
    top = hi - 1
    for p in base:
        p = int(p)
        if p == 2:
            continue
        pp = p * p
        if pp > top:
            break
        start = max(pp, -(-lo // p) * p)
        if start % 2 == 0:
            start += p
        if start >= hi:
            continue
        mask[(start - lo) // 2::p] = False
    return lo + 2 * np.flatnonzero(mask).astype(np.int64)


def _estimated_prime_bytes(limit: int) -> int:
    # pi(x) < 1.25506 x / ln x for x > 1
    if limit < 17:
        return 8 * 8
    return int(8 * 1.25506 * limit / math.log(limit)) + 8


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """All primes up to ``limit`` as a read-only, strictly increasing int64 array."""

    limit: int
    primes: np.ndarray

    def __post_init__(self):
        self.primes.setflags(write=False)

    def __eq__(self, other):
        if not isinstance(other, PrimeTable):
            return NotImplemented
        return self.limit == other.limit and np.array_equal(self.primes, other.primes)

    __hash__ = None

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self) -> Iterator[int]:
        return (int(p) for p in self.primes)

    def __contains__(self, n) -> bool:
        n = int(n)
        if n < 2 or n > self.limit:
            return False
        i = int(np.searchsorted(self.primes, n))
        return i < len(self.primes) and int(self.primes[i]) == n

    def covers(self, n: int) -> bool:
        return n <= self.limit

    def members(self, values: np.ndarray) -> np.ndarray:
        """Vectorised membership; only meaningful for ``values <= limit``."""
        values = np.asarray(values, dtype=np.int64)
        idx = np.searchsorted(self.primes, values)
        idx = np.minimum(idx, max(len(self.primes) - 1, 0))
        if len(self.primes) == 0:
            return np.zeros(values.shape, dtype=bool)
        return self.primes[idx] == values

    def tolist(self) -> list[int]:
        return [int(p) for p in self.primes]


def sieve(limit: int, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> PrimeTable:
    """Every prime ``<= limit``.

    >>> sieve(10).tolist()
    [2, 3, 5, 7]
    """
    if isinstance(limit, bool) or not isinstance(limit, (int, np.integer)):
        raise TypeError("limit must be an integer")
    limit = int(limit)
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    if _estimated_prime_bytes(limit) > memory_budget:
        raise ResourceError(
            f"sieving to {limit} needs about {_estimated_prime_bytes(limit)} bytes, "
            f"budget is {memory_budget}"
        )
    base = _small_sieve(math.isqrt(limit))
    chunks = [np.array([2], dtype=np.int64)]
    span = 2 * _SEGMENT_ODDS
    lo = 3
    while lo <= limit:
        hi = min(lo + span, limit + 1)
        chunks.append(_odd_primes_in(lo, hi, base))
        lo = hi
    return PrimeTable(limit, np.concatenate(chunks))


def iter_primes(start: int = 2, segment: int = 1 << 16) -> Iterator[int]:
    """Unbounded stream of primes ``>= start``, sieved segment by segment."""
    lo = max(int(start), 2)
    if lo == 2:
        yield 2
        lo = 3
    base = _small_sieve(1024)
    base_top = 1024
    while True:
        hi = lo + 2 * segment
        need = math.isqrt(hi - 1)
        if need > base_top:
            base_top = max(need, 2 * base_top)
            base = _small_sieve(base_top)
        for p in _odd_primes_in(lo, hi, base):
            yield int(p)
        lo = hi


@dataclass(frozen=True, order=True)
class PrimePair:
    """Two consecutive primes, smaller first."""

    p_prev2: int
    p_prev1: int

    def __post_init__(self):
        if not self.p_prev2 < self.p_prev1:
            raise DomainError(f"pair must be increasing, got ({self.p_prev2}, {self.p_prev1})")


def consecutive_pairs(table: PrimeTable, start_min: int = 2) -> Iterator[PrimePair]:
    """Successive ``(p, next p)`` from the table with the smaller member ``>= start_min``."""
    ps = table.primes
    i = int(np.searchsorted(ps, start_min))
    for a, b in zip(ps[i:-1].tolist(), ps[i + 1:].tolist()):
        yield PrimePair(a, b)
