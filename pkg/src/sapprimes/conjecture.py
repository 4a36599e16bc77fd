"""Scanning consecutive primes for a prime near their linear continuation.

For consecutive primes ``a < b`` the degree-1 extrapolation of the prime
sequence is ``M = 2*b - a``.  The claim under test is that a prime sits at
``M - 2`` or ``M + 2``.  Three readings of "near" are supported, see
:class:`WindowMode`.  Pairs whose window holds no prime are misses and are
reported, never dropped.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import pairwise
from typing import Iterator, Sequence

import numpy as np

from .errors import DomainError, ResourceError
from .primes import PrimePair, PrimeTable, is_prime, iter_primes, next_prime

__all__ = [
    "WindowMode",
    "ConjectureRecord",
    "ScanSummary",
    "ScanResult",
    "GapSeries",
    "TwinRecord",
    "DEFAULT_MIN_MIDPOINT",
    "evaluate_window",
    "iter_scan",
    "scan",
    "stream_scan",
    "condition_primes",
    "gap_series",
    "twin_scan",
    "twin_pairs",
    "format_ratio",
]

# Smallest midpoint whose whole window lies above 7: M - 2 > 7.
DEFAULT_MIN_MIDPOINT = 10

_CHUNK = 1 << 15


class WindowMode(enum.Enum):
    """Which integers around the midpoint count as the window."""

    STRICT = "strict"      # M-2, M+2
    ODD3 = "odd3"          # M-2, M, M+2
    INTERVAL = "interval"  # every integer in [M-2, M+2]

    @property
    def offsets(self) -> tuple[int, ...]:
        return _OFFSETS[self]

    def candidates(self, midpoint: int) -> tuple[int, ...]:
        return tuple(midpoint + d for d in self.offsets)

    @classmethod
    def parse(cls, text: str) -> "WindowMode":
        try:
            return cls(text.lower())
        except ValueError:
            names = ", ".join(m.value for m in cls)
            raise DomainError(f"unknown window mode {text!r} (expected one of {names})") from None


_OFFSETS = {
    WindowMode.STRICT: (-2, 2),
    WindowMode.ODD3: (-2, 0, 2),
    WindowMode.INTERVAL: (-2, -1, 0, 1, 2),
}


@dataclass(frozen=True)
class ConjectureRecord:
    pair: PrimePair
    midpoint: int
    mode: WindowMode
    primes_found: tuple[int, ...]

    @property
    def hit(self) -> bool:
        return bool(self.primes_found)

    @property
    def candidates(self) -> tuple[int, ...]:
        return self.mode.candidates(self.midpoint)


def evaluate_window(pair: PrimePair, mode: WindowMode = WindowMode.STRICT) -> ConjectureRecord:
    """Test every candidate of ``mode`` around ``2*p_prev1 - p_prev2``.

    No lower guard is applied here; :func:`scan` filters small midpoints.
    """
    m = 2 * pair.p_prev1 - pair.p_prev2
    found = tuple(c for c in mode.candidates(m) if is_prime(c))
    return ConjectureRecord(pair, m, mode, found)


def _evaluate_chunk(table: PrimeTable, lo: np.ndarray, hi: np.ndarray,
                    mode: WindowMode) -> list[ConjectureRecord]:
    mids = 2 * hi - lo
    offsets = mode.offsets
    cands = mids[:, None] + np.asarray(offsets, dtype=np.int64)[None, :]
    inside = cands <= table.limit
    flags = np.zeros(cands.shape, dtype=bool)
    flags[inside] = table.members(cands[inside])
    # candidates past the sieved range go through Miller-Rabin
    for i, j in zip(*np.nonzero(~inside)):
        flags[i, j] = is_prime(int(cands[i, j]))
    out = []
    for a, b, m, row in zip(lo.tolist(), hi.tolist(), mids.tolist(), flags.tolist()):
        found = tuple(m + d for d, ok in zip(offsets, row) if ok)
        out.append(ConjectureRecord(PrimePair(a, b), m, mode, found))
    return out


def _chunks(table: PrimeTable, min_midpoint: int):
    ps = table.primes
    if len(ps) < 2:
        raise ResourceError(f"table to {table.limit} holds fewer than two primes")
    lo, hi = ps[:-1], ps[1:]
    keep = (2 * hi - lo) >= min_midpoint
    lo, hi = lo[keep], hi[keep]
    for s in range(0, len(lo), _CHUNK):
        yield lo[s:s + _CHUNK], hi[s:s + _CHUNK]


def iter_scan(table: PrimeTable, mode: WindowMode = WindowMode.STRICT,
              min_midpoint: int = DEFAULT_MIN_MIDPOINT, workers: int = 1) -> Iterator[ConjectureRecord]:
    """Records for every consecutive pair of ``table`` with midpoint ``>= min_midpoint``.

    Records arrive ordered by the smaller prime whatever ``workers`` is.
    """
    chunks = _chunks(table, min_midpoint)
    if workers <= 1:
        for lo, hi in chunks:
            yield from _evaluate_chunk(table, lo, hi, mode)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for batch in pool.map(lambda c: _evaluate_chunk(table, c[0], c[1], mode), chunks):
            yield from batch


def format_ratio(num: int, den: int, digits: int = 6) -> str:
    """``num/den`` as a decimal string, rounded half-to-even at ``digits`` places."""
    if den <= 0:
        raise DomainError("denominator must be positive")
    scaled = round(Fraction(num, den) * 10 ** digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


@dataclass(frozen=True)
class ScanSummary:
    mode: WindowMode
    min_midpoint: int
    total_pairs: int
    hits: int
    misses: int
    counterexamples: tuple[PrimePair, ...] = ()

    @property
    def hit_rate(self) -> Fraction | None:
        return Fraction(self.hits, self.total_pairs) if self.total_pairs else None

    @property
    def hit_rate_text(self) -> str | None:
        return format_ratio(self.hits, self.total_pairs) if self.total_pairs else None

    @classmethod
    def from_records(cls, records: Sequence[ConjectureRecord], mode: WindowMode,
                     min_midpoint: int) -> "ScanSummary":
        misses = tuple(r.pair for r in records if not r.hit)
        return cls(mode, min_midpoint, len(records), len(records) - len(misses), len(misses), misses)


@dataclass(frozen=True)
class ScanResult:
    records: tuple[ConjectureRecord, ...]
    summary: ScanSummary

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)


def scan(table: PrimeTable, mode: WindowMode = WindowMode.STRICT,
         min_midpoint: int = DEFAULT_MIN_MIDPOINT, workers: int = 1) -> ScanResult:
    """Scan every consecutive pair in ``table`` and summarise hits and misses."""
    records = tuple(iter_scan(table, mode, min_midpoint, workers))
    return ScanResult(records, ScanSummary.from_records(records, mode, min_midpoint))


def stream_scan(mode: WindowMode = WindowMode.STRICT, min_midpoint: int = DEFAULT_MIN_MIDPOINT,
                start: int = 2) -> Iterator[ConjectureRecord]:
    """Endless scan over consecutive primes from ``start`` on, no table needed."""
    primes = iter_primes(start)
    a = next(primes)
    for b in primes:
        if 2 * b - a >= min_midpoint:
            yield evaluate_window(PrimePair(a, b), mode)
        a = b


def condition_primes(table: PrimeTable, mode: WindowMode = WindowMode.STRICT,
                     min_midpoint: int = DEFAULT_MIN_MIDPOINT, workers: int = 1) -> list[int]:
    """Sorted, deduplicated primes found in any window of the scan.

    Values can exceed ``table.limit`` by up to the last gap plus two.
    """
    if len(table.primes) < 2:
        return []
    found = set()
    for rec in iter_scan(table, mode, min_midpoint, workers):
        found.update(rec.primes_found)
    return sorted(found)


@dataclass(frozen=True)
class GapSeries:
    source_primes: tuple[int, ...]
    diffs: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        src = tuple(int(p) for p in self.source_primes)
        if any(b <= a for a, b in pairwise(src)):
            raise DomainError("gap series needs a strictly increasing list")
        object.__setattr__(self, "source_primes", src)
        object.__setattr__(self, "diffs", tuple(b - a for a, b in pairwise(src)))

    def __len__(self):
        return len(self.diffs)

    def points(self) -> list[tuple[int, int]]:
        """``(index, diff)`` with a 1-based index."""
        return [(i, d) for i, d in enumerate(self.diffs, start=1)]

    def triples(self) -> list[tuple[int, int, int]]:
        """``(index, diff, 0)``: the flat third axis of the 3-D gap plot."""
        return [(i, d, 0) for i, d in enumerate(self.diffs, start=1)]


def gap_series(primes: Sequence[int]) -> GapSeries:
    return GapSeries(tuple(primes))


@dataclass(frozen=True)
class TwinRecord:
    p_small: int
    p_large: int
    difference: int
    condition_satisfied: bool

    @property
    def is_twin(self) -> bool:
        return self.difference == 2

    def triple(self) -> tuple[int, int, int]:
        return (self.p_small, self.p_large, self.difference)


def twin_scan(table: PrimeTable, range_max: int, mode: WindowMode = WindowMode.STRICT,
              range_min: int = 3) -> list[TwinRecord]:
    """One record per prime ``p`` in ``[range_min, range_max]`` paired with its successor.

    ``condition_satisfied`` is the window verdict anchored at ``(p, next p)``.
    It is reported alongside and plays no part in twin-ness.
    """
    if range_max > table.limit:
        raise ResourceError(f"range_max {range_max} exceeds the table limit {table.limit}")
    ps = table.primes
    i = int(np.searchsorted(ps, range_min))
    j = int(np.searchsorted(ps, range_max, side="right"))
    smalls = ps[i:j].tolist()
    out = []
    for k, p in enumerate(smalls, start=i):
        q = int(ps[k + 1]) if k + 1 < len(ps) else next_prime(p)
        verdict = evaluate_window(PrimePair(p, q), mode).hit
        out.append(TwinRecord(p, q, q - p, verdict))
    return out


def twin_pairs(records: Sequence[TwinRecord]) -> list[TwinRecord]:
    return [r for r in records if r.is_twin]
