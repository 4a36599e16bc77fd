import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sapprimes import (DomainError, Histogram, WindowMode, compare_distributions, condition_primes,
                       histogram, sieve, summarize)
from oracles import recount, trial_primes_upto, brute_scan


def test_histogram_examples():
    h = histogram([2, 3, 5, 7], 2, (0, 8))
    assert h.counts == (2, 2) and h.edges == (0, 4, 8) and h.total == 4
    assert histogram([], 3, (0, 9)).counts == (0, 0, 0)


def test_histogram_default_range_and_last_bin_closed():
    h = histogram([1, 2, 3, 4], 3)
    assert h.edges[0] == 1 and h.edges[-1] == 5
    assert h.total == 4
    assert histogram([0, 10], 5, (0, 10)).counts == (1, 0, 0, 0, 1)


def test_histogram_out_of_range_values_are_dropped():
    assert histogram([-1, 0, 5, 11], 2, (0, 10)).counts == (1, 1)


def test_histogram_errors():
    with pytest.raises(DomainError):
        histogram([], 3)
    with pytest.raises(DomainError):
        histogram([1], 0)
    with pytest.raises(DomainError):
        histogram([1], 2, (5, 5))
    with pytest.raises(DomainError):
        Histogram((0, 1), (1, 2))


def test_fractional_edges_are_exact():
    h = histogram(list(range(10)), 3)
    assert h.edges == (0, Fraction(10, 3), Fraction(20, 3), 10)
    assert h.counts == (4, 3, 3)


@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=200), st.integers(1, 40))
def test_conservation_and_recount(values, bins):
    h = histogram(values, bins)
    assert h.total == len(values)
    assert list(h.counts) == recount(values, h.edges)


@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=100), st.integers(1, 10),
       st.randoms())
def test_permutation_invariance(values, bins, rnd):
    shuffled = values[:]
    rnd.shuffle(shuffled)
    assert histogram(shuffled, bins) == histogram(values, bins)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=50), st.integers(1, 10))
def test_rational_and_integer_paths_agree(values, bins):
    assert histogram(values, bins) == histogram([Fraction(v) for v in values], bins)


def test_summarize():
    s = summarize([5, 1, 3, 2])
    assert (s.count, s.min, s.max, s.mean, s.median) == (4, 1, 5, Fraction(11, 4), Fraction(5, 2))
    assert summarize([7]).median == 7
    with pytest.raises(DomainError):
        summarize([])


def test_compare_identical_inputs():
    c = compare_distributions([2, 3, 5], [2, 3, 5], 4)
    assert c.histogram_condition == c.histogram_all
    assert c.shared_edges


def test_compare_disjoint_inputs():
    c = compare_distributions([1, 2, 3], [100, 200], 10)
    for a, b in zip(c.histogram_condition.counts, c.histogram_all.counts):
        assert a == 0 or b == 0
    assert c.edges[0] == 1 and c.edges[-1] == 201


def test_compare_needs_both_sides():
    with pytest.raises(DomainError):
        compare_distributions([], [1], 3)


def test_compare_condition_vs_all_primes_1e4():
    t = sieve(10 ** 4)
    found = condition_primes(t, WindowMode.STRICT)
    c = compare_distributions(found, t.tolist(), 20)
    assert c.shared_edges and c.histogram_condition.bin_count == 20
    assert c.histogram_condition.counts != c.histogram_all.counts
    oracle_found = sorted({p for *_, f in brute_scan(10 ** 4, "strict", 10) for p in f})
    assert list(c.histogram_condition.counts) == recount(oracle_found, c.edges)
    assert list(c.histogram_all.counts) == recount(trial_primes_upto(10 ** 4), c.edges)
