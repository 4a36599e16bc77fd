"""Extrapolation of equally spaced polynomial samples by signed binomial weights.

A degree-m polynomial sampled at unit-spaced, consecutive abscissae satisfies

    Y[r] = sum_{q=1}^{m+1} (-1)**(q+1) * C(m+1, q) * Y[r-q]

so the next sample follows from the previous m+1 samples alone, without the
abscissae.  Unit spacing is only a normalisation: any uniform step h gives the
same next value, since the rule depends on the sample order and not on x.

Everything here works on :class:`fractions.Fraction` and Python integers, so
results are exact.  :func:`extrapolate_next_float` is a separate float path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DuplicateAbscissaError, EmptySamplesError, InsufficientSamplesError, DomainError

__all__ = [
    "SapCoefficients",
    "SampleWindow",
    "ExtrapolationResult",
    "ShiftIdentityCheck",
    "sap_coefficients",
    "extrapolate_next",
    "extrapolate_k",
    "extrapolate_next_float",
    "lagrange_extrapolate",
    "verify_shift_identity",
    "forward_difference",
]


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass int, Fraction or a string like '3/4'")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def _check_degree(m: int) -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError(f"degree must be an int, got {type(m).__name__}")
    if m < 0:
        raise DomainError(f"degree must be >= 0, got {m}")
    return m


@dataclass(frozen=True)
class SapCoefficients:
    """Signed weights for a degree-``degree`` rule.

    ``weights[q-1]`` multiplies the q-th sample counted back from the end of
    the window, i.e. ``weights[0]`` goes with the newest sample.
    """

    degree: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != self.degree + 1:
            raise DomainError(
                f"degree {self.degree} needs {self.degree + 1} weights, got {len(self.weights)}"
            )

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]


def sap_coefficients(m: int) -> SapCoefficients:
    """Weights ``(-1)**(q+1) * C(m+1, q)`` for ``q = 1..m+1``.

    >>> sap_coefficients(2).weights
    (3, -3, 1)
    """
    _check_degree(m)
    weights = tuple((-1) ** (q + 1) * math.comb(m + 1, q) for q in range(1, m + 2))
    return SapCoefficients(m, weights)


@dataclass(frozen=True)
class SampleWindow:
    """Consecutive samples, oldest first.

    Only the trailing ``declared_degree + 1`` values are used by the rule.
    """

    values: tuple[Fraction, ...]
    declared_degree: int

    def __init__(self, values: Iterable, declared_degree: int):
        _check_degree(declared_degree)
        vals = tuple(_exact(v) for v in values)
        if len(vals) < declared_degree + 1:
            raise InsufficientSamplesError(
                f"degree {declared_degree} needs at least {declared_degree + 1} samples, "
                f"got {len(vals)}"
            )
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "declared_degree", declared_degree)

    @property
    def trailing(self) -> tuple[Fraction, ...]:
        return self.values[len(self.values) - self.declared_degree - 1:]

    def pushed(self, value) -> "SampleWindow":
        """New window with ``value`` appended and the oldest surplus sample dropped."""
        tail = self.trailing[1:] + (_exact(value),)
        return SampleWindow(tail, self.declared_degree)


@dataclass(frozen=True)
class ExtrapolationResult:
    value: Fraction
    steps_ahead: int = 1


def _apply(weights: Sequence[int], trailing: Sequence[Fraction]) -> Fraction:
    # weights[0] pairs with the newest sample
    total = Fraction(0)
    for w, y in zip(weights, reversed(trailing)):
        total += w * y
    return total


def extrapolate_next(window: SampleWindow) -> ExtrapolationResult:
    """Next sample after ``window`` under the degree-m rule."""
    if not isinstance(window, SampleWindow):
        raise TypeError("extrapolate_next expects a SampleWindow")
    coeffs = sap_coefficients(window.declared_degree)
    return ExtrapolationResult(_apply(coeffs.weights, window.trailing), 1)


def extrapolate_k(window: SampleWindow, k: int) -> list[ExtrapolationResult]:
    """The next ``k`` samples, each fed back into the window before the following step."""
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError("k must be an int")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    weights = sap_coefficients(window.declared_degree).weights
    out = []
    current = window
    for step in range(1, k + 1):
        value = _apply(weights, current.trailing)
        out.append(ExtrapolationResult(value, step))
        current = current.pushed(value)
    return out


def extrapolate_next_float(values: Sequence[float], degree: int) -> float:
    """Float counterpart of :func:`extrapolate_next`.

    Cancellation between the large alternating weights grows quickly with the
    degree; agreement with the exact path is only promised to a relative
    tolerance of 1e-9 for modest degrees and well-scaled inputs.
    """
    _check_degree(degree)
    if len(values) < degree + 1:
        raise InsufficientSamplesError(
            f"degree {degree} needs at least {degree + 1} samples, got {len(values)}"
        )
    weights = sap_coefficients(degree).weights
    tail = values[len(values) - degree - 1:]
    return math.fsum(float(w) * float(y) for w, y in zip(weights, reversed(tail)))


def lagrange_extrapolate(samples: Sequence[tuple], target) -> Fraction:
    """Evaluate the interpolating polynomial through ``samples`` at ``target``.

    Plain Lagrange basis form in exact rationals, O(n**2).  Used as the
    independent check on :func:`extrapolate_next`.
    """
    if not samples:
        raise EmptySamplesError("need at least one (x, y) sample")
    xs = [_exact(x) for x, _ in samples]
    ys = [_exact(y) for _, y in samples]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissaError("abscissae must be pairwise distinct")
    t = _exact(target)
    total = Fraction(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis *= (t - xj) / (xi - xj)
        total += yi * basis
    return total


@dataclass(frozen=True)
class ShiftIdentityCheck:
    holds: bool
    lhs: Fraction
    rhs: Fraction
    n: int
    x: Fraction
    y: Fraction


def verify_shift_identity(n: int, x, y) -> ShiftIdentityCheck:
    """Compare ``(x+y)**n`` with ``sum_q w_q * (x + y - q)**n`` using degree-n weights."""
    _check_degree(n)
    x, y = _exact(x), _exact(y)
    lhs = (x + y) ** n
    weights = sap_coefficients(n).weights
    rhs = sum((w * (x + (y - q)) ** n for q, w in enumerate(weights, start=1)), Fraction(0))
    return ShiftIdentityCheck(lhs == rhs, lhs, rhs, n, x, y)


def forward_difference(values: Sequence, order: int = 1) -> list[Fraction]:
    """The ``order``-th forward difference of ``values``."""
    if order < 0:
        raise DomainError("order must be >= 0")
    cur = [_exact(v) for v in values]
    for _ in range(order):
        cur = [b - a for a, b in zip(cur, cur[1:])]
    return cur
