"""Equal-width histograms on shared edges, and simple summary statistics.

Edges are exact rationals. Bin assignment is done in integer arithmetic, so
a value that sits exactly on an edge always goes to the bin on its right.
The one exception is the upper edge of the last bin, which is closed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError

__all__ = ["Histogram", "SummaryStats", "DistributionComparison", "histogram",
           "summarize", "compare_distributions", "DEFAULT_BINS"]

DEFAULT_BINS = 20


@dataclass(frozen=True)
class Histogram:
    edges: tuple[Fraction, ...]
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != len(self.edges) - 1:
            raise DomainError("counts must have one entry fewer than edges")
        if any(b <= a for a, b in zip(self.edges, self.edges[1:])):
            raise DomainError("edges must be strictly increasing")

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def bin_count(self) -> int:
        return len(self.counts)

    def bins(self):
        """``(lo, hi, count)`` per bin."""
        return list(zip(self.edges, self.edges[1:], self.counts))


def _edges(lo: Fraction, hi: Fraction, bins: int) -> tuple[Fraction, ...]:
    width = (hi - lo) / bins
    return tuple(lo + width * i for i in range(bins)) + (hi,)


def histogram(values: Sequence[int], bin_count: int = DEFAULT_BINS,
              range: tuple | None = None) -> Histogram:
    """Count ``values`` into ``bin_count`` equal-width bins.

    Without ``range`` the bins span ``[min, max + 1]``. Values outside the
    range are not counted.
    """
    if bin_count < 1:
        raise DomainError(f"bin_count must be >= 1, got {bin_count}")
    if range is None:
        if len(values) == 0:
            raise DomainError("cannot derive a range from an empty list")
        lo, hi = Fraction(min(values)), Fraction(max(values) + 1)
    else:
        lo, hi = Fraction(range[0]), Fraction(range[1])
    if hi <= lo:
        raise DomainError(f"empty range [{lo}, {hi}]")
    span = hi - lo
    counts = [0] * bin_count
    if lo.denominator == 1 and hi.denominator == 1 and all(isinstance(v, int) for v in values):
        ilo, ihi, ispan = int(lo), int(hi), int(span)
        for v in values:
            if ilo <= v <= ihi:
                counts[min((v - ilo) * bin_count // ispan, bin_count - 1)] += 1
        return Histogram(_edges(lo, hi, bin_count), tuple(counts))
    for v in values:
        v = Fraction(v)
        if v < lo or v > hi:
            continue
        # floor((v - lo) * bins / span), exact
        k = ((v - lo) * bin_count / span).__floor__()
        counts[min(k, bin_count - 1)] += 1
    return Histogram(_edges(lo, hi, bin_count), tuple(counts))


@dataclass(frozen=True)
class SummaryStats:
    count: int
    min: int
    max: int
    mean: Fraction
    median: Fraction


def summarize(values: Sequence[int]) -> SummaryStats:
    if len(values) == 0:
        raise DomainError("cannot summarise an empty list")
    s = sorted(values)
    n = len(s)
    mid = n // 2
    median = Fraction(s[mid]) if n % 2 else Fraction(s[mid - 1] + s[mid], 2)
    return SummaryStats(n, s[0], s[-1], Fraction(sum(s), n), median)


@dataclass(frozen=True)
class DistributionComparison:
    histogram_condition: Histogram
    histogram_all: Histogram
    stats_condition: SummaryStats
    stats_all: SummaryStats

    @property
    def shared_edges(self) -> bool:
        return self.histogram_condition.edges == self.histogram_all.edges

    @property
    def edges(self) -> tuple[Fraction, ...]:
        return self.histogram_condition.edges


def compare_distributions(condition: Sequence[int], all_primes: Sequence[int],
                          bin_count: int = DEFAULT_BINS) -> DistributionComparison:
    """Histogram both lists on one set of edges spanning their union."""
    if len(condition) == 0 or len(all_primes) == 0:
        raise DomainError("both inputs must be nonempty")
    lo = min(min(condition), min(all_primes))
    hi = max(max(condition), max(all_primes)) + 1
    return DistributionComparison(
        histogram(condition, bin_count, (lo, hi)),
        histogram(all_primes, bin_count, (lo, hi)),
        summarize(condition),
        summarize(all_primes),
    )
