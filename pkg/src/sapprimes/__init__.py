"""Exact binomial-weight extrapolation of polynomial samples, and an empirical
scanner for primes near the linear continuation of consecutive primes."""

from .conjecture import (
    DEFAULT_MIN_MIDPOINT,
    ConjectureRecord,
    GapSeries,
    ScanResult,
    ScanSummary,
    TwinRecord,
    WindowMode,
    condition_primes,
    evaluate_window,
    gap_series,
    iter_scan,
    scan,
    stream_scan,
    twin_pairs,
    twin_scan,
)
from .errors import (
    DomainError,
    DuplicateAbscissaError,
    EmptySamplesError,
    InsufficientSamplesError,
    ResourceError,
    SapPrimesError,
)
from .primes import PrimePair, PrimeTable, consecutive_pairs, is_prime, iter_primes, next_prime, sieve
from .sap import (
    ExtrapolationResult,
    SampleWindow,
    SapCoefficients,
    ShiftIdentityCheck,
    extrapolate_k,
    extrapolate_next,
    extrapolate_next_float,
    forward_difference,
    lagrange_extrapolate,
    sap_coefficients,
    verify_shift_identity,
)
from .stats import DistributionComparison, Histogram, compare_distributions, histogram, summarize

__version__ = "0.1.0"
