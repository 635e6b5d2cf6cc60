"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` (lines are printed even
without ``-s``).
"""

import math
import os
import subprocess
import sys
import time
from fractions import Fraction

import mpmath
import pytest

from consecpat.bounds import block_upper, lll_lower, mk_upper, suen_finite
from consecpat.enumeration import count_bruteforce, count_dp, rho_estimates
from consecpat.overlap import (double_occurrence_words, enumerate_overlap_sets, forced_suffix,
                               joint_count, overlap_profile, verify_monotone_lemma)
from consecpat.perm import Pattern, all_patterns, is_monotone
from consecpat.series import SeriesSpec, smallest_root
from consecpat.stats import sample_overlap_distribution


@pytest.fixture
def gate(capsys):
    def report(number: int, title: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            status = "PASS" if ok else "FAIL"
            print(f"\n[criterion {number:2d}] {status}  {title}" + (f"  ({detail})" if detail else ""))
        assert ok, f"criterion {number} failed: {detail}"
    return report


def table(sigma, n):
    return count_dp(sigma, n).counts


def test_01_oracle_equivalence(gate):
    start = time.perf_counter()
    bad = []
    for m in (3, 4):
        for sigma in all_patterns(m):
            dp = table(sigma, 9)
            for n in range(10):
                if dp[n] != count_bruteforce(sigma, n):
                    bad.append((sigma.entries, n))
    elapsed = time.perf_counter() - start
    gate(1, "DP equals brute force on S_3 and S_4 for n <= 9",
         not bad and elapsed < 120, f"{len(bad)} mismatches, {elapsed:.1f}s")


def test_02_known_counts(gate):
    ok = (table(Pattern((1, 2, 3)), 5) == (1, 1, 2, 5, 17, 70)
          and table(Pattern((1, 3, 2)), 5)[4:] == (16, 63))
    gate(2, "known counts for 123 and 132", ok)


def test_03_boundary_identities(gate):
    bad = []
    for m in range(1, 7):
        for sigma in all_patterns(m):
            counts = table(sigma, m)
            if any(counts[n] != math.factorial(n) for n in range(m)):
                bad.append(sigma.entries)
            if counts[m] != math.factorial(m) - 1:
                bad.append(sigma.entries)
    gate(3, "alpha_n = n! for n < m and alpha_m = m! - 1, m <= 6", not bad,
         f"{len(bad)} violations")


def test_04_monotone_most_avoided(gate):
    start = time.perf_counter()
    bad = []
    mono = table(Pattern((1, 2, 3)), 12)
    for sigma in all_patterns(3):
        other = table(sigma, 12)
        for n in range(13):
            if mono[n] < other[n]:
                bad.append((sigma.entries, n))
            if not is_monotone(sigma) and n >= 4 and not mono[n] > other[n]:
                bad.append((sigma.entries, n, "strict"))
    mono = table(Pattern((1, 2, 3, 4)), 10)
    for sigma in all_patterns(4):
        other = table(sigma, 10)
        bad.extend((sigma.entries, n) for n in range(11) if mono[n] < other[n])
    elapsed = time.perf_counter() - start
    gate(4, "monotone patterns are most avoided in S_3 (n <= 12) and S_4 (n <= 10)",
         not bad and elapsed < 300, f"{len(bad)} violations, {elapsed:.1f}s")


def test_05_nakamura_least_avoided(gate):
    bad = []
    for m, nak, n_max in ((3, (1, 3, 2), 12), (4, (1, 2, 4, 3), 10)):
        low = table(Pattern(nak), n_max)
        for sigma in all_patterns(m):
            other = table(sigma, n_max)
            bad.extend((sigma.entries, n) for n in range(n_max + 1) if low[n] > other[n])
    gate(5, "132 and 1243 are least avoided in S_3 (n <= 12) and S_4 (n <= 10)", not bad,
         f"{len(bad)} violations")


def test_06_finite_suen(gate):
    n = 10
    checked = 0
    bad = []
    for sigma in all_patterns(4):
        if is_monotone(sigma):
            continue
        chk = suen_finite(sigma, n)
        if not chk.valid:
            continue
        checked += 1
        exact = Fraction(table(sigma, n)[n], math.factorial(n))
        if chk.bound + 1e-12 < float(exact):
            bad.append(sigma.entries)
    gate(6, "finite Suen bound dominates alpha_10 / 10! on non-monotone S_4",
         not bad and checked > 0, f"{checked} patterns with positive coefficient, {len(bad)} failures")


def test_07_lll_sandwich(gate):
    n = 14
    bad = []
    worst = math.inf
    for m in (3, 4):
        low = lll_lower(m)
        for sigma in all_patterns(m):
            rho_hat = rho_estimates(count_dp(sigma, n)).ratio
            worst = min(worst, rho_hat + 1e-2 - low)
            if low > rho_hat + 1e-2:
                bad.append(sigma.entries)
    gate(7, f"local-lemma lower bound below ratio estimate at n={n} (slack 1e-2)", not bad,
         f"min margin {worst:.5f}")


def test_08_series_vs_dp(gate):
    details = []
    ok = True
    for m, tol in ((3, 5e-3), (4, 1e-2)):
        rho = smallest_root(SeriesSpec("monotone_g", m)).rho
        est = rho_estimates(count_dp(Pattern(tuple(range(1, m + 1))), 14)).ratio
        ok &= abs(rho - est) <= tol
        details.append(f"m={m}: series {rho:.6f} vs DP {est:.6f}")
    ok &= abs(smallest_root(SeriesSpec("monotone_g", 3)).rho - 0.8270) < 1e-4
    gate(8, "monotone series root matches DP ratio at n=14", ok, "; ".join(details))


def test_09_lemma_exhaustives(gate):
    ok = all(len(verify_monotone_lemma(m).patterns_with_overlap_at_m_minus_1) == 2
             and verify_monotone_lemma(m).holds for m in range(3, 8))
    words = 0
    for sigma in all_patterns(4):
        for k in overlap_profile(sigma).overlaps:
            forced = forced_suffix(sigma, k)
            for w in double_occurrence_words(sigma, k):
                words += 1
                ok &= all(w[pos - 1] == val for pos, val in forced.items())
    for m in range(2, 6):
        for sigma in all_patterns(m):
            for k in range(1, m):
                jc = joint_count(sigma, k)
                ok &= 0 <= jc.count <= math.comb(2 * (m - k), m - k)
    gate(9, "monotone-only overlap, forced values, joint-count bound", ok,
         f"{words} double-occurrence words checked")


def test_10_random_pattern_statements(gate):
    ok = True
    for m in range(2, 9):
        sets = enumerate_overlap_sets(m)
        ok &= all(sets.n_sizes[k] * math.factorial(k) == math.factorial(m)
                  for k in range(1, m // 2 + 1))
    reports = sample_overlap_distribution(8, 100_000, seed=0)
    ok &= all(r.within_3sigma for r in reports)
    s3 = enumerate_overlap_sets(3)
    ok &= Fraction(s3.m_sizes[1], s3.total) == Fraction(2, 3)
    worst = max(abs(r.fraction - r.target) / r.std_err for r in reports
                if r.kind == "exact" and r.std_err > 0)
    gate(10, "exact N_k census, m=8 sampling within 3 sigma, m=3 fraction 2/3", ok,
         f"largest exact-target deviation {worst:.2f} sigma")


def test_11_spot_values(gate):
    mpmath.mp.dps = 50
    f = mpmath.factorial

    def mk(m, k):
        r = mpmath.mpf(4) ** (m - k) * f(m) / f(2 * m - k)
        return mpmath.exp(-(1 - r * mpmath.exp(mpmath.mpf(4 * (m - 1)) / f(m))) / f(m))

    cases = [
        ("block_upper(3)", block_upper(3), (1 - 1 / f(3)) ** (mpmath.mpf(1) / 3), 0.94104),
        ("lll_lower(3)", lll_lower(3), 1 - mpmath.exp(mpmath.mpf(2) / 6) / 6, 0.76740),
        ("lll_lower(4)", lll_lower(4), 1 - mpmath.exp(mpmath.mpf(3) / 24) / 24, 0.95282),
        ("mk_upper(6,2)", mk_upper(6, 2).value, mk(6, 2), 0.99868),
    ]
    ok = True
    parts = []
    for name, value, independent, quoted in cases:
        ok &= abs(value - float(independent)) <= 1e-4 and abs(value - quoted) <= 1e-4
        parts.append(f"{name}={value:.6f}")
    gate(11, "bound spot values agree with high-precision recomputation", ok, ", ".join(parts))


def test_12_cli_determinism(gate, tmp_path):
    commands = [
        ["sample", "--m", "8", "--samples", "20000", "--seed", "3"],
        ["count", "--pattern", "1342", "--n-max", "13"],
        ["rho", "--m", "5"],
        ["census", "--m", "6"],
    ]
    ok = True
    for args in commands:
        outs = []
        for i in range(2):
            env = dict(os.environ, CONSECPAT_CACHE_DIR=str(tmp_path / f"run{i}"))
            proc = subprocess.run([sys.executable, "-m", "consecpat", *args, "--output", "json"],
                                  capture_output=True, env=env)
            ok &= proc.returncode == 0
            outs.append(proc.stdout)
        ok &= outs[0] == outs[1] and len(outs[0]) > 0
    gate(12, "repeated CLI runs give byte-identical JSON", ok, f"{len(commands)} commands")
