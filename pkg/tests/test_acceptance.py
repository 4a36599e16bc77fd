"""Exit criteria.  One test per criterion; the terminal summary prints a
PASS/FAIL line for each (see conftest.py)."""

import json
import random
import subprocess
import sys
import time

import pytest

from sapprimes import (PrimePair, SampleWindow, WindowMode, condition_primes, extrapolate_next, is_prime,
                       lagrange_extrapolate, sap_coefficients, scan, sieve, twin_pairs, twin_scan,
                       verify_shift_identity)
from sapprimes.cli import RunConfig, render
from oracles import brute_scan, brute_twins, poly_eval, trial_prime, trial_primes_upto

SEED = 20231017


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.criterion("SAP exactness: 1300 random integer polynomials, degrees 0-12, exact, < 5 s")
def test_sap_exactness():
    rng = random.Random(SEED)
    cases = 0
    with Timer() as t:
        for m in range(13):
            for _ in range(100):
                coeffs = [rng.randint(-100, 100) for _ in range(m + 1)]
                x0 = rng.randint(-50, 50)
                window = SampleWindow([poly_eval(coeffs, x0 + i) for i in range(m + 1)], m)
                assert extrapolate_next(window).value == poly_eval(coeffs, x0 + m + 1)
                cases += 1
    assert cases >= 1000
    assert t.elapsed < 5


@pytest.mark.criterion("Lagrange equivalence: degrees 0-10 x 200 cases, exact, < 5 s")
def test_lagrange_equivalence():
    rng = random.Random(SEED + 1)
    with Timer() as t:
        for m in range(11):
            for _ in range(200):
                values = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(m + 1)]
                expected = lagrange_extrapolate(list(enumerate(values)), m + 1)
                assert extrapolate_next(SampleWindow(values, m)).value == expected
    assert t.elapsed < 5


@pytest.mark.criterion("Shift identity: n <= 10, x, y in [-20, 20] exhaustive, < 10 s")
def test_shift_identity_exhaustive():
    checked = 0
    with Timer() as t:
        for n in range(11):
            for x in range(-20, 21):
                for y in range(-20, 21):
                    c = verify_shift_identity(n, x, y)
                    assert c.holds, (n, x, y, c.lhs, c.rhs)
                    checked += 1
    assert checked == 11 * 41 * 41
    assert t.elapsed < 10


@pytest.mark.criterion("Worked-example fidelity: weights [2,-1], [3,-3,1], [4,-6,4,-1]")
def test_worked_examples():
    assert list(sap_coefficients(1)) == [2, -1]
    assert list(sap_coefficients(2)) == [3, -3, 1]
    assert list(sap_coefficients(3)) == [4, -6, 4, -1]


@pytest.mark.criterion("Sieve/oracle agreement: sieve(1e5) vs trial division; is_prime vs sieve to 1e6, < 10 s")
def test_sieve_oracle_agreement():
    with Timer() as t:
        assert sieve(10 ** 5).tolist() == trial_primes_upto(10 ** 5)
        table = sieve(10 ** 6)
        members = set(table.tolist())
        for n in range(10 ** 6 + 1):
            assert is_prime(n) == (n in members), n
    assert t.elapsed < 10


@pytest.mark.criterion("Scan oracle equivalence: limit 1e5, every mode, pair-for-pair, < 30 s")
def test_scan_oracle_equivalence():
    with Timer() as t:
        table = sieve(10 ** 5)
        for mode in WindowMode:
            got = [(r.pair.p_prev2, r.pair.p_prev1, r.midpoint, r.primes_found, r.hit)
                   for r in scan(table, mode)]
            want = [(a, b, m, f, bool(f)) for a, b, m, f in brute_scan(10 ** 5, mode.value, 10)]
            assert got == want, mode
    assert t.elapsed < 30


@pytest.mark.criterion("Counterexample surfacing: scan to 2000 has misses in every mode, incl. (1327, 1361)")
def test_counterexamples():
    table = sieve(2000)
    for mode in WindowMode:
        summary = scan(table, mode).summary
        oracle_misses = [PrimePair(a, b) for a, b, _, f in brute_scan(2000, mode.value, 10) if not f]
        assert summary.misses >= 1
        assert list(summary.counterexamples) == oracle_misses
        assert PrimePair(1327, 1361) in summary.counterexamples
    for c in range(1393, 1398):
        assert not trial_prime(c)


@pytest.mark.criterion("Twin-count oracle: twin pairs below 10 000 equal brute-force enumeration")
def test_twin_count():
    twins = twin_pairs(twin_scan(sieve(10 ** 4), 10 ** 4 - 1))
    assert [(r.p_small, r.p_large) for r in twins] == brute_twins(3, 10 ** 4 - 1)


@pytest.mark.criterion("Histogram conservation: counts sum to input length, edges bit-identical")
def test_histogram_conservation():
    for limit in (100, 2000, 10 ** 4, 10 ** 5):
        table = sieve(limit)
        for mode in WindowMode:
            n_condition = len(condition_primes(table, mode))
            for bins in (1, 7, 20):
                o = json.loads(render(RunConfig("histogram", limit=limit, mode=mode, bins=bins,
                                                output_format="json")))
                assert o["shared_edges"] is True
                assert len(o["edges"]) == bins + 1
                assert sum(o["condition"]["counts"]) == o["condition"]["total"] == n_condition
                assert sum(o["all"]["counts"]) == o["all"]["total"] == len(table)


@pytest.mark.criterion("Determinism: scan --limit 1000000 --mode strict byte-identical across runs and threads; sieve(1e7) < 5 s")
def test_determinism_and_sieve_speed(tmp_path):
    outputs = []
    for threads in ("1", "4"):
        target = tmp_path / f"scan_{threads}.csv"
        subprocess.run([sys.executable, "-m", "sapprimes", "scan", "--limit", "1000000",
                        "--mode", "strict", "--threads", threads, "-o", str(target)], check=True)
        outputs.append(target.read_bytes())
    assert outputs[0] == outputs[1]
    assert outputs[0].startswith(b"p_prev2,p_prev1,midpoint,mode,primes_found,hit\n")
    # header + (pi(1e6) - 1) pairs, minus (2,3), (3,5), (5,7) below the midpoint guard
    assert outputs[0].count(b"\n") == 1 + (78_498 - 1) - 3

    with Timer() as t:
        table = sieve(10 ** 7)
    assert len(table) == 664_579
    assert t.elapsed < 5
